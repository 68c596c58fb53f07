//! The seven-number classification profile of a projective ring line.
//!
//! | field   | meaning                                                       |
//! |---------|---------------------------------------------------------------|
//! | `tot`   | points on the line                                            |
//! | `tp_i`  | points with a unit coordinate                                 |
//! | `one_n` | size of a neighbourhood, the point itself excluded            |
//! | `cap2n` | common neighbours of two distant points                       |
//! | `cap3n` | common neighbours of three pairwise distant points            |
//! | `jcb`   | points of one neighbourhood in no other neighbourhood of a maximum pairwise distant family |
//! | `md`    | size of a maximum pairwise distant family                     |

use std::fmt;
use std::str::FromStr;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::clique::max_clique;
use crate::expr::RingExpr;
use crate::line::ProjectiveLine;

/// Distant pairs sampled when confirming that `cap2n` is homogeneous.
const CAP2_SAMPLES: usize = 50;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProfileError {
    #[error("line is not homogeneous: {0}")]
    Homogeneity(String),
}

/// `A/B`: ring order and number of zero-divisors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TypeLabel {
    pub order: usize,
    pub zero_divisors: usize,
}

impl fmt::Display for TypeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.order, self.zero_divisors)
    }
}

impl FromStr for TypeLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s
            .split_once('/')
            .ok_or_else(|| format!("type label {s:?} is not of the form A/B"))?;
        let parse = |t: &str| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("type label {s:?}: {e}"))
        };
        Ok(TypeLabel {
            order: parse(a)?,
            zero_divisors: parse(b)?,
        })
    }
}

impl Serialize for TypeLabel {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for TypeLabel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ProfileCounts {
    pub tot: usize,
    #[serde(rename = "tpI")]
    pub tp_i: usize,
    #[serde(rename = "oneN")]
    pub one_n: usize,
    #[serde(rename = "cap2N")]
    pub cap2n: usize,
    #[serde(rename = "cap3N")]
    pub cap3n: usize,
    pub jcb: usize,
    pub md: usize,
}

impl ProfileCounts {
    pub fn as_array(&self) -> [usize; 7] {
        [
            self.tot, self.tp_i, self.one_n, self.cap2n, self.cap3n, self.jcb, self.md,
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LineProfile {
    #[serde(rename = "typeLabel")]
    pub type_label: TypeLabel,
    #[serde(rename = "profile")]
    pub counts: ProfileCounts,
}

impl fmt::Display for LineProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = &self.counts;
        write!(
            f,
            "{} ({}, {}, {}, {}, {}, {}, {})",
            self.type_label, c.tot, c.tp_i, c.one_n, c.cap2n, c.cap3n, c.jcb, c.md
        )
    }
}

/// A maximum family of pairwise distant points, preferring one that
/// contains `(1,0)`, `(0,1)` and `(1,1)`.
pub fn max_distant_set(line: &ProjectiveLine) -> Vec<usize> {
    max_clique(line.distant_rows(), &line.reference_triple())
}

fn intersection_count(sets: &[&FixedBitSet]) -> usize {
    let mut acc = sets[0].clone();
    for s in &sets[1..] {
        acc.intersect_with(s);
    }
    acc.count_ones(..)
}

/// Points of `N(family[k])` lying in no other neighbourhood of the family.
fn jacobson_points(neighbourhoods: &[FixedBitSet], family: &[usize], k: usize) -> FixedBitSet {
    let mut unique = neighbourhoods[family[k]].clone();
    for (i, &p) in family.iter().enumerate() {
        if i != k {
            unique.difference_with(&neighbourhoods[p]);
        }
    }
    unique
}

/// Jacobson points of `point`'s neighbourhood relative to a maximum distant
/// family through `point`, if one is given.
pub fn jacobson_points_of(
    line: &ProjectiveLine,
    family: &[usize],
    point: usize,
) -> Option<FixedBitSet> {
    let k = family.iter().position(|&p| p == point)?;
    let neighbourhoods: Vec<FixedBitSet> = (0..line.len()).map(|i| line.neighbourhood(i)).collect();
    Some(jacobson_points(&neighbourhoods, family, k))
}

/// Computes the profile and cross-checks the homogeneity it relies on.
pub fn profile(line: &ProjectiveLine) -> Result<LineProfile, ProfileError> {
    let ring = line.ring();
    let neighbourhoods: Vec<FixedBitSet> = (0..line.len()).map(|i| line.neighbourhood(i)).collect();
    let [u, v, w] = line.reference_triple();

    let one_n = neighbourhoods[u].count_ones(..);
    if let Some(p) = neighbourhoods
        .iter()
        .position(|n| n.count_ones(..) != one_n)
    {
        return Err(ProfileError::Homogeneity(format!(
            "neighbourhood of {} has {} points, of {} has {one_n}",
            line.label(p),
            neighbourhoods[p].count_ones(..),
            line.label(u)
        )));
    }

    let cap2n = intersection_count(&[&neighbourhoods[u], &neighbourhoods[v]]);
    let distant_pairs: Vec<(usize, usize)> = (0..line.len())
        .flat_map(|a| {
            line.distant_row(a)
                .ones()
                .filter(move |&b| b > a)
                .map(move |b| (a, b))
        })
        .collect();
    let samples = CAP2_SAMPLES.min(distant_pairs.len());
    for k in 0..samples {
        let (a, b) = distant_pairs[k * distant_pairs.len() / samples];
        let c = intersection_count(&[&neighbourhoods[a], &neighbourhoods[b]]);
        if c != cap2n {
            return Err(ProfileError::Homogeneity(format!(
                "distant pair {}, {} shares {c} neighbours, reference pair shares {cap2n}",
                line.label(a),
                line.label(b)
            )));
        }
    }

    let cap3n = intersection_count(&[&neighbourhoods[u], &neighbourhoods[v], &neighbourhoods[w]]);

    let family = max_distant_set(line);
    let jcb = jacobson_points(&neighbourhoods, &family, 0).count_ones(..);
    for k in 1..family.len() {
        let j = jacobson_points(&neighbourhoods, &family, k).count_ones(..);
        if j != jcb {
            return Err(ProfileError::Homogeneity(format!(
                "{} has {j} Jacobson points, {} has {jcb}",
                line.label(family[k]),
                line.label(family[0])
            )));
        }
    }

    Ok(LineProfile {
        type_label: TypeLabel {
            order: ring.order(),
            zero_divisors: ring.zero_divisor_count(),
        },
        counts: ProfileCounts {
            tot: line.len(),
            tp_i: line.type_one_count(),
            one_n,
            cap2n,
            cap3n,
            jcb,
            md: family.len(),
        },
    })
}

/// Verifies `cap2n` on every distant pair and `cap3n` on every pairwise
/// distant triple. Cubic in the number of points.
pub fn verify_exhaustively(
    line: &ProjectiveLine,
    profile: &LineProfile,
) -> Result<(), ProfileError> {
    let neighbourhoods: Vec<FixedBitSet> = (0..line.len()).map(|i| line.neighbourhood(i)).collect();
    for a in 0..line.len() {
        for b in line.distant_row(a).ones().filter(|&b| b > a) {
            let mut ab = neighbourhoods[a].clone();
            ab.intersect_with(&neighbourhoods[b]);
            if ab.count_ones(..) != profile.counts.cap2n {
                return Err(ProfileError::Homogeneity(format!(
                    "pair {}, {}",
                    line.label(a),
                    line.label(b)
                )));
            }
            let mut third = line.distant_row(a).clone();
            third.intersect_with(line.distant_row(b));
            for c in third.ones().filter(|&c| c > b) {
                if ab.intersection_count(&neighbourhoods[c]) != profile.counts.cap3n {
                    return Err(ProfileError::Homogeneity(format!(
                        "triple {}, {}, {}",
                        line.label(a),
                        line.label(b),
                        line.label(c)
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Entries sharing one profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileGroup {
    pub profile: LineProfile,
    pub members: Vec<RingExpr>,
}

/// Partitions entries by identical profile; groups appear in order of first
/// occurrence and keep their members in input order.
pub fn group_profiles(entries: &[(RingExpr, LineProfile)]) -> Vec<ProfileGroup> {
    let mut groups: Vec<ProfileGroup> = Vec::new();
    for (expr, profile) in entries {
        match groups.iter_mut().find(|g| g.profile == *profile) {
            Some(g) => g.members.push(expr.clone()),
            None => groups.push(ProfileGroup {
                profile: *profile,
                members: vec![expr.clone()],
            }),
        }
    }
    groups
}
