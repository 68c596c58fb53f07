//! Text, CSV, JSON and Markdown renderings of analysis results, plus graph
//! export of the neighbour/distant relation.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::json;

use crate::catalog::TableReport;
use crate::ideal::IdealLattice;
use crate::line::ProjectiveLine;
use crate::profile::{LineProfile, ProfileCounts, TypeLabel};
use crate::ring::FiniteRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Text,
    Markdown,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "text" => Ok(Format::Text),
            "markdown" | "md" => Ok(Format::Markdown),
            _ => Err(format!("unknown format {s:?} (json, csv, text, markdown)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphKind {
    Neighbour,
    Distant,
}

impl FromStr for GraphKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "neighbour" | "neighbor" => Ok(GraphKind::Neighbour),
            "distant" => Ok(GraphKind::Distant),
            _ => Err(format!("unknown graph {s:?} (neighbour, distant)")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    Csv,
}

impl FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dot" => Ok(GraphFormat::Dot),
            "csv" => Ok(GraphFormat::Csv),
            _ => Err(format!("unknown graph format {s:?} (dot, csv)")),
        }
    }
}

/// One output row: a profile (or the error that prevented it) for one
/// expression.
#[derive(Debug, Clone, Serialize)]
pub struct Record {
    #[serde(rename = "typeLabel")]
    pub type_label: TypeLabel,
    pub profile: Option<ProfileCounts>,
    pub expr: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl Record {
    pub fn from_profile(profile: &LineProfile, expr: &str) -> Record {
        Record {
            type_label: profile.type_label,
            profile: Some(profile.counts),
            expr: expr.to_string(),
            pass: None,
            error: None,
        }
    }
}

/// Records for a catalog run; `pass` is filled in only when `check` is set.
pub fn table_records(report: &TableReport, check: bool) -> Vec<Record> {
    report
        .rows
        .iter()
        .map(|row| {
            let (type_label, profile, error) = match &row.computed {
                Ok(p) => (p.type_label, Some(p.counts), None),
                Err(e) => (row.entry.expected.type_label, None, Some(e.clone())),
            };
            Record {
                type_label,
                profile,
                expr: row.entry.expr.clone(),
                pass: check.then(|| row.passed()),
                error,
            }
        })
        .collect()
}

const COLUMNS: [&str; 9] = [
    "typeLabel",
    "tot",
    "tpI",
    "oneN",
    "cap2N",
    "cap3N",
    "jcb",
    "md",
    "expr",
];

fn count_cells(record: &Record) -> Vec<String> {
    match &record.profile {
        Some(c) => c.as_array().iter().map(usize::to_string).collect(),
        None => vec![String::new(); 7],
    }
}

fn status(record: &Record) -> &'static str {
    match record.pass {
        Some(true) => "PASS",
        Some(false) => "FAIL",
        None => "",
    }
}

pub fn records_csv(records: &[Record]) -> String {
    let with_pass = records.iter().any(|r| r.pass.is_some());
    let mut writer = csv::Writer::from_writer(Vec::new());
    let mut header: Vec<&str> = COLUMNS.to_vec();
    if with_pass {
        header.push("pass");
    }
    writer.write_record(&header).expect("in-memory write");
    for r in records {
        let mut row = vec![r.type_label.to_string()];
        row.extend(count_cells(r));
        row.push(r.expr.clone());
        if with_pass {
            row.push(status(r).to_string());
        }
        writer.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn records_json(records: &[Record]) -> String {
    serde_json::to_string_pretty(records).expect("records serialise") + "\n"
}

pub fn records_text(records: &[Record]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:<7} {:>4} {:>4} {:>4} {:>5} {:>5} {:>4} {:>4}  Ring",
        "Type", "Tot", "TpI", "1N", "cap2N", "cap3N", "Jcb", "MD"
    );
    for r in records {
        let c = count_cells(r);
        let _ = write!(
            out,
            "{:<7} {:>4} {:>4} {:>4} {:>5} {:>5} {:>4} {:>4}  {}",
            r.type_label.to_string(),
            c[0],
            c[1],
            c[2],
            c[3],
            c[4],
            c[5],
            c[6],
            r.expr
        );
        if r.pass.is_some() {
            let _ = write!(out, "  {}", status(r));
        }
        if let Some(e) = &r.error {
            let _ = write!(out, "  error: {e}");
        }
        out.push('\n');
    }
    out
}

pub fn records_markdown(records: &[Record]) -> String {
    let with_pass = records.iter().any(|r| r.pass.is_some());
    let mut out = String::from("| Type | Tot | TpI | 1N | ∩2N | ∩3N | Jcb | MD | Ring |");
    out.push_str(if with_pass { " Check |\n" } else { "\n" });
    out.push_str("|---|--:|--:|--:|--:|--:|--:|--:|---|");
    out.push_str(if with_pass { "---|\n" } else { "\n" });
    for r in records {
        let _ = write!(
            out,
            "| {} | {} | `{}` |",
            r.type_label,
            count_cells(r).join(" | "),
            r.expr
        );
        if with_pass {
            let _ = write!(out, " {} |", status(r));
        }
        out.push('\n');
    }
    out
}

pub fn render_records(records: &[Record], format: Format) -> String {
    match format {
        Format::Json => records_json(records),
        Format::Csv => records_csv(records),
        Format::Text => records_text(records),
        Format::Markdown => records_markdown(records),
    }
}

/// One-line summary of a catalog run.
pub fn table_summary(report: &TableReport, check: bool) -> String {
    let mut s = format!(
        "{} entries, {} distinct profiles",
        report.rows.len(),
        report.distinct_profiles
    );
    if check {
        let _ = write!(
            s,
            ", {} passed, {} failed",
            report.rows.len() - report.failures(),
            report.failures()
        );
    } else if report.errors() > 0 {
        let _ = write!(s, ", {} errors", report.errors());
    }
    s
}

fn graph_edges(line: &ProjectiveLine, kind: GraphKind) -> Vec<(usize, usize)> {
    (0..line.len())
        .flat_map(|a| {
            let row = match kind {
                GraphKind::Distant => line.distant_row(a).clone(),
                GraphKind::Neighbour => line.neighbourhood(a),
            };
            row.ones()
                .filter(move |&b| b > a)
                .map(move |b| (a, b))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Undirected DOT graph, nodes labelled by canonical representatives.
pub fn graph_dot(line: &ProjectiveLine, kind: GraphKind) -> String {
    let name = match kind {
        GraphKind::Neighbour => "neighbour",
        GraphKind::Distant => "distant",
    };
    let mut out = format!("graph {name} {{\n");
    for i in 0..line.len() {
        let _ = writeln!(out, "  {i} [label=\"{}\"];", line.label(i));
    }
    for (a, b) in graph_edges(line, kind) {
        let _ = writeln!(out, "  {a} -- {b};");
    }
    out.push_str("}\n");
    out
}

/// Edge list with `source,target` columns holding point labels.
pub fn graph_csv(line: &ProjectiveLine, kind: GraphKind) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["source", "target"])
        .expect("in-memory write");
    for (a, b) in graph_edges(line, kind) {
        writer
            .write_record([line.label(a), line.label(b)])
            .expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn ring_json(ring: &FiniteRing) -> String {
    let labels =
        |es: Vec<crate::Element>| -> Vec<&str> { es.into_iter().map(|e| ring.label(e)).collect() };
    let table =
        |op: fn(&FiniteRing, crate::Element, crate::Element) -> crate::Element| -> Vec<Vec<usize>> {
            ring.elements()
                .map(|a| ring.elements().map(|b| op(ring, a, b).index()).collect())
                .collect()
        };
    let value = json!({
        "order": ring.order(),
        "characteristic": ring.characteristic(),
        "zero": ring.zero().index(),
        "one": ring.one().index(),
        "labels": ring.labels(),
        "units": labels(ring.units()),
        "zeroDivisors": labels(ring.zero_divisors()),
        "add": table(FiniteRing::add),
        "mul": table(FiniteRing::mul),
    });
    serde_json::to_string_pretty(&value).expect("serialisable") + "\n"
}

pub fn ring_text(ring: &FiniteRing) -> String {
    let join = |es: Vec<crate::Element>| -> String {
        es.into_iter()
            .map(|e| ring.label(e))
            .collect::<Vec<_>>()
            .join(", ")
    };
    let mut out = String::new();
    let _ = writeln!(out, "order: {}", ring.order());
    let _ = writeln!(out, "characteristic: {}", ring.characteristic());
    let _ = writeln!(out, "units ({}): {}", ring.unit_count(), join(ring.units()));
    let _ = writeln!(
        out,
        "zero-divisors ({}): {}",
        ring.zero_divisor_count(),
        join(ring.zero_divisors())
    );
    out.push('\n');
    out.push_str(&ring.table_dump());
    out
}

pub fn ideals_json(ring: &FiniteRing, lattice: &IdealLattice) -> String {
    let value = json!({
        "idealCount": lattice.ideals().len(),
        "maximal": lattice.maximal().iter().map(|m| m.labels(ring)).collect::<Vec<_>>(),
        "radical": lattice.radical().labels(ring),
        "local": lattice.is_local(),
    });
    serde_json::to_string_pretty(&value).expect("serialisable") + "\n"
}

pub fn ideals_text(ring: &FiniteRing, lattice: &IdealLattice) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "ideals: {}", lattice.ideals().len());
    let _ = writeln!(out, "maximal ideals: {}", lattice.maximal().len());
    for m in lattice.maximal() {
        let _ = writeln!(out, "  {{{}}}", m.labels(ring).join(", "));
    }
    let _ = writeln!(
        out,
        "Jacobson radical: {{{}}}",
        lattice.radical().labels(ring).join(", ")
    );
    let _ = writeln!(out, "local: {}", lattice.is_local());
    out
}

pub fn line_json(line: &ProjectiveLine) -> String {
    let points: Vec<_> = (0..line.len())
        .map(|i| {
            json!({
                "index": i,
                "label": line.label(i),
                "type": if line.points()[i].is_type_one() { "I" } else { "II" },
                "neighbours": line.neighbourhood(i).ones().collect::<Vec<_>>(),
            })
        })
        .collect();
    let value = json!({
        "points": points,
        "total": line.len(),
        "typeI": line.type_one_count(),
    });
    serde_json::to_string_pretty(&value).expect("serialisable") + "\n"
}

pub fn line_text(line: &ProjectiveLine) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "points: {} (type I: {}, type II: {})",
        line.len(),
        line.type_one_count(),
        line.len() - line.type_one_count()
    );
    for i in 0..line.len() {
        let kind = if line.points()[i].is_type_one() {
            "I"
        } else {
            "II"
        };
        let _ = writeln!(
            out,
            "{i:>4}  {:<2}  {}  |N| = {}",
            kind,
            line.label(i),
            line.neighbourhood(i).count_ones(..)
        );
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analyse;

    #[test]
    fn csv_columns() {
        let a = analyse("GF(2) x GF(3)").unwrap();
        let csv = records_csv(&[Record::from_profile(&a.profile, "GF(2) x GF(3)")]);
        assert_eq!(
            csv,
            "typeLabel,tot,tpI,oneN,cap2N,cap3N,jcb,md,expr\n6/4,12,10,5,2,0,1,3,GF(2) x GF(3)\n"
        );
    }

    #[test]
    fn json_record() {
        let a = analyse("Z4 x Z4").unwrap();
        let json = records_json(&[Record::from_profile(&a.profile, "Z4 x Z4")]);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v[0]["typeLabel"], "16/12");
        assert_eq!(v[0]["profile"]["tot"], 36);
        assert_eq!(v[0]["profile"]["md"], 3);
        assert!(v[0].get("pass").is_none());
    }

    #[test]
    fn dot_export() {
        let a = analyse("Z4").unwrap();
        let dot = graph_dot(&a.line, GraphKind::Neighbour);
        assert!(dot.starts_with("graph neighbour {\n"));
        assert!(dot.contains("  0 [label=\"(1,0)\"];"));
        // three neighbour pairs on the Z4 line
        assert_eq!(dot.matches(" -- ").count(), 3);
        let distant = graph_dot(&a.line, GraphKind::Distant);
        assert_eq!(distant.matches(" -- ").count(), 15 - 3);
    }

    #[test]
    fn edge_csv_quotes_labels() {
        let a = analyse("GF(2) x GF(2)").unwrap();
        let csv = graph_csv(&a.line, GraphKind::Neighbour);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("source,target"));
        assert!(lines.next().unwrap().starts_with("\"(1,0)\","));
        // 9 points, 4 neighbours each
        assert_eq!(csv.lines().count(), 1 + 9 * 4 / 2);
    }

    #[test]
    fn formats_parse() {
        assert_eq!("markdown".parse::<Format>(), Ok(Format::Markdown));
        assert!("xml".parse::<Format>().is_err());
        assert_eq!("distant".parse::<GraphKind>(), Ok(GraphKind::Distant));
        assert_eq!("dot".parse::<GraphFormat>(), Ok(GraphFormat::Dot));
    }
}
