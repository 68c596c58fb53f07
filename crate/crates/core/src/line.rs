//! The projective line over a finite commutative ring: points as unit
//! orbits of admissible pairs, and the distant/neighbour relation.

use std::collections::HashMap;
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::ideal::principal_ideal;
use crate::ring::{Element, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LineError {
    #[error("type I count {found} differs from |R| + |zero-divisors| = {expected}")]
    CrossCheck { expected: usize, found: usize },
    #[error("unit scaling is not free: {pairs} admissible pairs, {points} orbits, {units} units")]
    OrbitNotFree {
        pairs: usize,
        points: usize,
        units: usize,
    },
}

/// A pair of ring elements `(first, second)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointRep {
    pub first: Element,
    pub second: Element,
}

impl PointRep {
    pub fn new(first: Element, second: Element) -> Self {
        PointRep { first, second }
    }

    pub fn scaled(self, ring: &FiniteRing, unit: Element) -> PointRep {
        PointRep::new(ring.mul(unit, self.first), ring.mul(unit, self.second))
    }

    pub fn display<'a>(&self, ring: &'a FiniteRing) -> PointLabel<'a> {
        PointLabel { rep: *self, ring }
    }
}

pub struct PointLabel<'a> {
    rep: PointRep,
    ring: &'a FiniteRing,
}

impl PointLabel<'_> {
    /// Identity and zero print as `1` and `0` even in products.
    fn coordinate(&self, e: Element) -> &str {
        if e == self.ring.one() {
            "1"
        } else if e == self.ring.zero() {
            "0"
        } else {
            self.ring.label(e)
        }
    }
}

impl fmt::Display for PointLabel<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({},{})",
            self.coordinate(self.rep.first),
            self.coordinate(self.rep.second)
        )
    }
}

/// Brute-force unimodularity test: some `x*first + y*second` is a unit.
///
/// For commutative rings this is equivalent to the pair being the first row
/// of an invertible matrix: if `x*a + y*b = u` then rows `(a, b)` and
/// `(-y, x)` have determinant `u`.
pub fn is_admissible(ring: &FiniteRing, p: PointRep) -> bool {
    ring.elements().any(|x| {
        let xa = ring.mul(x, p.first);
        ring.elements()
            .any(|y| ring.is_unit(ring.add(xa, ring.mul(y, p.second))))
    })
}

/// `first * other.second - second * other.first`
pub fn determinant(ring: &FiniteRing, p: PointRep, q: PointRep) -> Element {
    ring.sub(ring.mul(p.first, q.second), ring.mul(p.second, q.first))
}

/// Neighbour test for two admissible pairs: their determinant is a non-unit.
pub fn is_neighbour(ring: &FiniteRing, p: PointRep, q: PointRep) -> bool {
    !ring.is_unit(determinant(ring, p, q))
}

/// Distinguished member of the unit orbit of an admissible pair: scale the
/// first unit entry to 1, or for two non-unit entries take the orbit member
/// with the smallest `(first, second)` indices.
pub fn canonical(ring: &FiniteRing, p: PointRep) -> PointRep {
    if ring.is_unit(p.first) {
        p.scaled(ring, ring.inverse(p.first).expect("unit"))
    } else if ring.is_unit(p.second) {
        p.scaled(ring, ring.inverse(p.second).expect("unit"))
    } else {
        ring.units()
            .into_iter()
            .map(|u| p.scaled(ring, u))
            .min()
            .expect("1 is a unit")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectivePoint {
    canonical: PointRep,
    type_one: bool,
}

impl ProjectivePoint {
    pub fn canonical(&self) -> PointRep {
        self.canonical
    }

    /// At least one coordinate is a unit.
    pub fn is_type_one(&self) -> bool {
        self.type_one
    }
}

/// Points of the line over a ring together with the packed distant
/// adjacency matrix.
#[derive(Debug, Clone)]
pub struct ProjectiveLine {
    ring: FiniteRing,
    points: Vec<ProjectivePoint>,
    index: HashMap<PointRep, usize>,
    distant: Vec<FixedBitSet>,
}

impl ProjectiveLine {
    /// Enumerates all points of the line over `ring`.
    ///
    /// Order: `(1, b)` by `b`, then `(a, 1)` with `a` a non-unit by `a`,
    /// then type II points by canonical representative.
    pub fn enumerate(ring: FiniteRing) -> Result<ProjectiveLine, LineError> {
        let n = ring.order();
        let units = ring.units();
        // gR for every g; (a, b) is admissible iff 1 - x in bR for some x in aR
        let multiples: Vec<FixedBitSet> = ring
            .elements()
            .map(|g| principal_ideal(&ring, g).members().clone())
            .collect();
        let admissible = |p: PointRep| {
            multiples[p.first.index()].ones().any(|x| {
                multiples[p.second.index()]
                    .contains(ring.sub(ring.one(), Element::from_index(x)).index())
            })
        };

        let mut pairs = 0usize;
        let mut seen = FixedBitSet::with_capacity(n * n);
        let mut reps = Vec::new();
        for a in ring.elements() {
            for b in ring.elements() {
                let p = PointRep::new(a, b);
                if !admissible(p) {
                    continue;
                }
                pairs += 1;
                let c = canonical(&ring, p);
                if !seen.put(c.first.index() * n + c.second.index()) {
                    reps.push(c);
                }
            }
        }
        if pairs != reps.len() * units.len() {
            return Err(LineError::OrbitNotFree {
                pairs,
                points: reps.len(),
                units: units.len(),
            });
        }

        let one = ring.one();
        let sort_key = |p: &PointRep| {
            if p.first == one {
                (0, p.second, Element::from_index(0))
            } else if p.second == one {
                (1, p.first, Element::from_index(0))
            } else {
                (2, p.first, p.second)
            }
        };
        reps.sort_by_key(sort_key);
        let points: Vec<ProjectivePoint> = reps
            .iter()
            .map(|&canonical| ProjectivePoint {
                canonical,
                type_one: ring.is_unit(canonical.first) || ring.is_unit(canonical.second),
            })
            .collect();

        let type_one = points.iter().filter(|p| p.type_one).count();
        let expected = n + ring.zero_divisor_count();
        if type_one != expected {
            return Err(LineError::CrossCheck {
                expected,
                found: type_one,
            });
        }

        let m = points.len();
        let mut distant = vec![FixedBitSet::with_capacity(m); m];
        for i in 0..m {
            for j in i + 1..m {
                if !is_neighbour(&ring, reps[i], reps[j]) {
                    distant[i].insert(j);
                    distant[j].insert(i);
                }
            }
        }
        let index = reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        Ok(ProjectiveLine {
            ring,
            points,
            index,
            distant,
        })
    }

    pub fn ring(&self) -> &FiniteRing {
        &self.ring
    }

    pub fn points(&self) -> &[ProjectivePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn type_one_count(&self) -> usize {
        self.points.iter().filter(|p| p.type_one).count()
    }

    /// Index of the point represented by any admissible pair.
    pub fn index_of(&self, rep: PointRep) -> Option<usize> {
        self.index.get(&canonical(&self.ring, rep)).copied()
    }

    /// Indices of `(1,0)`, `(0,1)` and `(1,1)`.
    pub fn reference_triple(&self) -> [usize; 3] {
        let (zero, one) = (self.ring.zero(), self.ring.one());
        [(one, zero), (zero, one), (one, one)].map(|(a, b)| {
            self.index_of(PointRep::new(a, b))
                .expect("reference points are always on the line")
        })
    }

    /// All `(u*first, u*second)` for units `u`.
    pub fn orbit(&self, point: usize) -> Vec<PointRep> {
        let rep = self.points[point].canonical;
        self.ring
            .units()
            .into_iter()
            .map(|u| rep.scaled(&self.ring, u))
            .collect()
    }

    pub fn is_distant(&self, a: usize, b: usize) -> bool {
        self.distant[a].contains(b)
    }

    /// Row of the distant adjacency matrix.
    pub fn distant_row(&self, point: usize) -> &FixedBitSet {
        &self.distant[point]
    }

    pub fn distant_rows(&self) -> &[FixedBitSet] {
        &self.distant
    }

    /// Points other than `point` that are neighbour to it.
    pub fn neighbourhood(&self, point: usize) -> FixedBitSet {
        let mut n = FixedBitSet::with_capacity(self.len());
        n.insert_range(..);
        n.difference_with(&self.distant[point]);
        n.set(point, false);
        n
    }

    pub fn label(&self, point: usize) -> String {
        self.points[point].canonical.display(&self.ring).to_string()
    }
}
