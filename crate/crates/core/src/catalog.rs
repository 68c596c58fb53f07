//! Built-in catalog of representative rings with their expected line
//! profiles, and the batch runner that checks them.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analyse;
use crate::profile::{LineProfile, ProfileCounts, TypeLabel};

const BUILTIN: &str = include_str!("../data/catalog.csv");

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("catalog: {0}")]
    Csv(#[from] csv::Error),
    #[error("catalog entry {expr:?}: {message}")]
    Entry { expr: String, message: String },
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coverage {
    /// Every representative ring of the type is listed.
    Complete,
    /// Only the constructible representatives are listed.
    Partial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub expr: String,
    pub expected: LineProfile,
    /// Table row the entry was transcribed from, e.g. `"row 16/12"`.
    pub source: String,
    pub coverage: Coverage,
}

#[derive(Deserialize)]
struct Record {
    #[serde(rename = "type")]
    type_label: String,
    tot: usize,
    #[serde(rename = "tpI")]
    tp_i: usize,
    #[serde(rename = "oneN")]
    one_n: usize,
    #[serde(rename = "cap2N")]
    cap2n: usize,
    #[serde(rename = "cap3N")]
    cap3n: usize,
    jcb: usize,
    md: usize,
    expr: String,
    coverage: Coverage,
}

/// Reads catalog entries from CSV text (`#` starts a comment line).
pub fn load(text: &str) -> Result<Vec<CatalogEntry>, CatalogError> {
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    reader
        .deserialize::<Record>()
        .map(|record| {
            let r = record?;
            let type_label: TypeLabel =
                r.type_label
                    .parse()
                    .map_err(|message| CatalogError::Entry {
                        expr: r.expr.clone(),
                        message,
                    })?;
            Ok(CatalogEntry {
                source: format!("row {type_label}"),
                expected: LineProfile {
                    type_label,
                    counts: ProfileCounts {
                        tot: r.tot,
                        tp_i: r.tp_i,
                        one_n: r.one_n,
                        cap2n: r.cap2n,
                        cap3n: r.cap3n,
                        jcb: r.jcb,
                        md: r.md,
                    },
                },
                expr: r.expr,
                coverage: r.coverage,
            })
        })
        .collect()
}

/// The built-in catalog, in table order (descending ring order).
pub fn builtin() -> Vec<CatalogEntry> {
    load(BUILTIN).expect("built-in catalog is well formed")
}

/// Inclusive range of ring orders, written `A..B`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OrderRange {
    pub min: usize,
    pub max: usize,
}

impl OrderRange {
    pub fn contains(&self, order: usize) -> bool {
        (self.min..=self.max).contains(&order)
    }
}

impl FromStr for OrderRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once("..")
            .ok_or_else(|| format!("expected A..B, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("{s:?}: {e}"));
        let (min, max) = (parse(a)?, parse(b)?);
        if min > max {
            return Err(format!("empty order range {s:?}"));
        }
        Ok(OrderRange { min, max })
    }
}

impl fmt::Display for OrderRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.min, self.max)
    }
}

#[derive(Debug, Clone)]
pub struct RowReport {
    pub entry: CatalogEntry,
    pub computed: Result<LineProfile, String>,
}

impl RowReport {
    pub fn passed(&self) -> bool {
        self.computed.as_ref() == Ok(&self.entry.expected)
    }
}

#[derive(Debug, Clone)]
pub struct TableReport {
    pub rows: Vec<RowReport>,
    /// Number of distinct computed profiles.
    pub distinct_profiles: usize,
}

impl TableReport {
    pub fn failures(&self) -> usize {
        self.rows.iter().filter(|r| !r.passed()).count()
    }

    pub fn errors(&self) -> usize {
        self.rows.iter().filter(|r| r.computed.is_err()).count()
    }
}

/// Computes the profile of every entry whose ring order lies in `filter`,
/// on `jobs` worker threads. Row order follows `entries` regardless of
/// `jobs`.
pub fn run_table(
    entries: &[CatalogEntry],
    filter: Option<OrderRange>,
    jobs: usize,
) -> Result<TableReport, CatalogError> {
    let selected: Vec<&CatalogEntry> = entries
        .iter()
        .filter(|e| filter.is_none_or(|f| f.contains(e.expected.type_label.order)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()?;
    let rows: Vec<RowReport> = pool.install(|| {
        selected
            .par_iter()
            .map(|entry| RowReport {
                entry: (*entry).clone(),
                computed: analyse(&entry.expr)
                    .map(|a| a.profile)
                    .map_err(|e| e.to_string()),
            })
            .collect()
    });
    let mut distinct: Vec<LineProfile> = rows
        .iter()
        .filter_map(|r| r.computed.as_ref().ok().copied())
        .collect();
    distinct.sort_by_key(|p| (p.type_label, p.counts.as_array()));
    distinct.dedup();
    Ok(TableReport {
        distinct_profiles: distinct.len(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    #[test]
    fn builtin_catalog_shape() {
        let entries = builtin();
        assert_eq!(entries.len(), 84);
        let mut types: Vec<TypeLabel> = entries.iter().map(|e| e.expected.type_label).collect();
        types.dedup();
        assert_eq!(types.len(), 65);
        // descending order
        assert!(types.windows(2).all(|w| w[0].order >= w[1].order));
        let partial: Vec<String> = entries
            .iter()
            .filter(|e| e.coverage == Coverage::Partial)
            .map(|e| e.expected.type_label.to_string())
            .collect::<std::collections::BTreeSet<_>>()
            .into_iter()
            .collect();
        assert_eq!(partial, ["16/12", "16/8", "24/16", "27/9", "8/4"]);
    }

    #[test]
    fn every_entry_round_trips() {
        for e in builtin() {
            let parsed = parse(&e.expr).unwrap();
            assert_eq!(parse(&parsed.render()).unwrap(), parsed, "{}", e.expr);
            assert_eq!(parsed.order(), Some(e.expected.type_label.order as u64));
        }
    }

    #[test]
    fn order_range() {
        let r: OrderRange = "2..9".parse().unwrap();
        assert!(r.contains(2) && r.contains(9) && !r.contains(10));
        assert!("9..2".parse::<OrderRange>().is_err());
        assert!("9".parse::<OrderRange>().is_err());
        assert_eq!(r.to_string(), "2..9");
    }

    #[test]
    fn small_orders_pass() {
        let report = run_table(&builtin(), Some("2..9".parse().unwrap()), 2).unwrap();
        let types: std::collections::BTreeSet<String> = report
            .rows
            .iter()
            .map(|r| r.entry.expected.type_label.to_string())
            .collect();
        assert_eq!(types.len(), 16);
        assert_eq!(report.failures(), 0);
        assert_eq!(report.distinct_profiles, 16);
    }

    #[test]
    fn malformed_rows_are_rejected() {
        let bad =
            "type,tot,tpI,oneN,cap2N,cap3N,jcb,md,expr,coverage\n4-2,6,6,1,0,0,1,3,Z4,complete\n";
        assert!(matches!(load(bad), Err(CatalogError::Entry { .. })));
        let bad = "type,tot,tpI,oneN,cap2N,cap3N,jcb,md,expr,coverage\n4/2,6,6,1,0,0,1,3,Z4,some\n";
        assert!(matches!(load(bad), Err(CatalogError::Csv(_))));
    }
}
