//! Catalog fixtures, brute-force oracles and whole-catalog property checks
//! shared by the integration test targets.

#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::OnceLock;

use fixedbitset::FixedBitSet;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use ringline::catalog::{self, CatalogEntry};
use ringline::ideal::radical_by_unit_test;
use ringline::line::{determinant, is_neighbour};
use ringline::{
    all_ideals, analyse, Analysis, Element, FiniteRing, PointRep, ProjectiveLine, RingExpr,
};

pub struct Case {
    pub entry: CatalogEntry,
    pub analysis: Analysis,
}

impl Case {
    pub fn name(&self) -> &str {
        &self.entry.expr
    }

    pub fn ring(&self) -> &FiniteRing {
        self.analysis.line.ring()
    }

    pub fn line(&self) -> &ProjectiveLine {
        &self.analysis.line
    }
}

/// Every catalog entry, analysed once per test binary.
pub fn cases() -> &'static [Case] {
    static CASES: OnceLock<Vec<Case>> = OnceLock::new();
    CASES.get_or_init(|| {
        catalog::builtin()
            .into_par_iter()
            .map(|entry| {
                let analysis =
                    analyse(&entry.expr).unwrap_or_else(|e| panic!("{}: {e}", entry.expr));
                Case { entry, analysis }
            })
            .collect()
    })
}

/// Runs `check` on every case and collects the failures.
pub fn for_all(check: impl Fn(&Case) -> Result<(), String> + Sync) -> Result<(), String> {
    let failures: Vec<String> = cases()
        .par_iter()
        .filter_map(|c| check(c).err().map(|e| format!("{}: {e}", c.name())))
        .collect();
    if failures.is_empty() {
        Ok(())
    } else {
        Err(failures.join("; "))
    }
}

fn ensure(ok: bool, message: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(message())
    }
}

// ---- oracles -------------------------------------------------------------

pub fn oracle_is_unit(ring: &FiniteRing, a: Element) -> bool {
    ring.elements().any(|y| ring.mul(a, y) == ring.one())
}

/// `(a, b)` generates the whole ring.
pub fn oracle_is_admissible(ring: &FiniteRing, a: Element, b: Element) -> bool {
    ring.elements().any(|x| {
        ring.elements()
            .any(|y| ring.add(ring.mul(x, a), ring.mul(y, b)) == ring.one())
    })
}

pub fn oracle_point_count(ring: &FiniteRing) -> usize {
    let admissible = ring
        .elements()
        .flat_map(|a| ring.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| oracle_is_admissible(ring, a, b))
        .count();
    let units = ring.elements().filter(|&a| oracle_is_unit(ring, a)).count();
    assert_eq!(admissible % units, 0);
    admissible / units
}

pub fn oracle_neighbour(ring: &FiniteRing, p: PointRep, q: PointRep) -> bool {
    let det = ring.sub(ring.mul(p.first, q.second), ring.mul(p.second, q.first));
    !oracle_is_unit(ring, det)
}

// ---- property checks -----------------------------------------------------

/// Exhaustive commutative-ring axioms over the raw tables.
pub fn ring_axioms(ring: &FiniteRing) -> Result<(), String> {
    let (zero, one) = (ring.zero(), ring.one());
    let els: Vec<Element> = ring.elements().collect();
    for &a in &els {
        ensure(ring.add(a, zero) == a, || format!("{a:?} + 0"))?;
        ensure(ring.mul(a, one) == a, || format!("{a:?} * 1"))?;
        ensure(els.iter().any(|&b| ring.add(a, b) == zero), || {
            format!("{a:?} has no additive inverse")
        })?;
        for &b in &els {
            ensure(ring.add(a, b) == ring.add(b, a), || {
                "+ not commutative".into()
            })?;
            ensure(ring.mul(a, b) == ring.mul(b, a), || {
                "* not commutative".into()
            })?;
            for &c in &els {
                ensure(
                    ring.add(ring.add(a, b), c) == ring.add(a, ring.add(b, c)),
                    || "+ not associative".into(),
                )?;
                ensure(
                    ring.mul(ring.mul(a, b), c) == ring.mul(a, ring.mul(b, c)),
                    || "* not associative".into(),
                )?;
                ensure(
                    ring.mul(a, ring.add(b, c)) == ring.add(ring.mul(a, b), ring.mul(a, c)),
                    || "not distributive".into(),
                )?;
            }
        }
    }
    Ok(())
}

/// Orbits are free, pairwise disjoint and cover every admissible pair.
pub fn orbit_freeness(line: &ProjectiveLine) -> Result<(), String> {
    let ring = line.ring();
    let units = ring.unit_count();
    let mut seen = BTreeSet::new();
    for i in 0..line.len() {
        let orbit: BTreeSet<PointRep> = line.orbit(i).into_iter().collect();
        ensure(orbit.len() == units, || {
            format!(
                "orbit of {} has {} members, {units} units",
                line.label(i),
                orbit.len()
            )
        })?;
        for p in orbit {
            ensure(seen.insert(p), || {
                format!("orbits overlap at {}", line.label(i))
            })?;
        }
    }
    let admissible = ring
        .elements()
        .flat_map(|a| ring.elements().map(move |b| (a, b)))
        .filter(|&(a, b)| oracle_is_admissible(ring, a, b))
        .count();
    ensure(admissible == seen.len(), || {
        format!("{admissible} admissible pairs, orbits cover {}", seen.len())
    })
}

/// Neighbour predicate agrees with the oracle and with the distant matrix
/// for every choice of orbit representatives; exhaustive up to order 9,
/// sampled above.
pub fn representative_independence(line: &ProjectiveLine) -> Result<(), String> {
    let ring = line.ring();
    let n = line.len();
    let check = |a: usize, b: usize, p: PointRep, q: PointRep| {
        let expected = !line.is_distant(a, b);
        ensure(
            is_neighbour(ring, p, q) == expected && oracle_neighbour(ring, p, q) == expected,
            || {
                format!(
                    "{} vs {} disagrees for {p:?}, {q:?}",
                    line.label(a),
                    line.label(b)
                )
            },
        )
    };
    if ring.order() <= 9 {
        let orbits: Vec<Vec<PointRep>> = (0..n).map(|i| line.orbit(i)).collect();
        for a in 0..n {
            for b in 0..n {
                for &p in &orbits[a] {
                    for &q in &orbits[b] {
                        check(a, b, p, q)?;
                    }
                }
            }
        }
    } else {
        let units = ring.units();
        let mut rng = StdRng::seed_from_u64(ring.order() as u64);
        for _ in 0..4000 {
            let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
            let u = units[rng.gen_range(0..units.len())];
            let v = units[rng.gen_range(0..units.len())];
            let p = line.points()[a].canonical().scaled(ring, u);
            let q = line.points()[b].canonical().scaled(ring, v);
            check(a, b, p, q)?;
        }
    }
    Ok(())
}

/// Every point is distant from exactly `tot - 1 - oneN` others.
pub fn distant_regularity(case: &Case) -> Result<(), String> {
    let line = case.line();
    let c = case.analysis.profile.counts;
    let expected = c.tot - 1 - c.one_n;
    for i in 0..line.len() {
        let d = line.distant_row(i).count_ones(..);
        ensure(d == expected, || {
            format!(
                "{} is distant from {d} points, expected {expected}",
                line.label(i)
            )
        })?;
    }
    Ok(())
}

/// For products, the point count and unit count multiply over the factors.
pub fn product_factorization(case: &Case) -> Result<(), String> {
    let RingExpr::Product { factors } = &case.analysis.expr else {
        return Ok(());
    };
    let mut points = 1;
    let mut units = 1;
    for f in factors {
        let ring = FiniteRing::build(f).map_err(|e| e.to_string())?;
        units *= ring.unit_count();
        points *= ProjectiveLine::enumerate(ring)
            .map_err(|e| e.to_string())?
            .len();
    }
    ensure(points == case.line().len(), || {
        format!(
            "factor lines give {points} points, product line has {}",
            case.line().len()
        )
    })?;
    ensure(units == case.ring().unit_count(), || {
        format!(
            "factors give {units} units, product has {}",
            case.ring().unit_count()
        )
    })
}

/// `jcb = oneN - 2 cap2N + cap3N` whenever `md = 3`.
pub fn inclusion_exclusion(case: &Case) -> Result<(), String> {
    let c = case.analysis.profile.counts;
    if c.md != 3 {
        return Ok(());
    }
    let rhs = c.one_n as isize - 2 * c.cap2n as isize + c.cap3n as isize;
    ensure(c.jcb as isize == rhs, || format!("jcb {} != {rhs}", c.jcb))
}

/// Radical by intersection of maximal ideals equals the unit-test radical.
pub fn radical_consistency(ring: &FiniteRing) -> Result<(), String> {
    let lattice = all_ideals(ring).map_err(|e| e.to_string())?;
    let by_units = radical_by_unit_test(ring);
    let mut by_maximal = FixedBitSet::with_capacity(ring.order());
    by_maximal.insert_range(..);
    for m in lattice.maximal() {
        by_maximal.intersect_with(m.members());
    }
    ensure(&by_maximal == by_units.members(), || {
        "radicals differ".into()
    })?;
    ensure(lattice.radical().members() == by_units.members(), || {
        "lattice radical differs".into()
    })
}

/// Type II points occur only over rings with two or more maximal ideals.
pub fn type_two_needs_two_maximal(case: &Case) -> Result<(), String> {
    let lattice = all_ideals(case.ring()).map_err(|e| e.to_string())?;
    let type_two = case.line().len() - case.line().type_one_count();
    ensure(type_two == 0 || lattice.maximal().len() >= 2, || {
        format!("{type_two} type II points with one maximal ideal")
    })
}

/// `md` is one more than the smallest residue field.
pub fn md_from_residue_fields(case: &Case) -> Result<(), String> {
    let lattice = all_ideals(case.ring()).map_err(|e| e.to_string())?;
    let smallest = lattice
        .residue_field_orders(case.ring())
        .into_iter()
        .min()
        .ok_or("no maximal ideals")?;
    let md = case.analysis.profile.counts.md;
    ensure(md == smallest + 1, || {
        format!("md {md}, smallest residue field {smallest}")
    })
}

/// The reflexive neighbour relation is an equivalence relation.
pub fn neighbour_transitive(line: &ProjectiveLine) -> Result<(), String> {
    let ring = line.ring();
    let reps: Vec<PointRep> = line.points().iter().map(|p| p.canonical()).collect();
    let near = |a: usize, b: usize| a == b || !ring.is_unit(determinant(ring, reps[a], reps[b]));
    let n = line.len();
    for a in 0..n {
        for b in (0..n).filter(|&b| near(a, b)) {
            for c in (0..n).filter(|&c| near(b, c)) {
                ensure(near(a, c), || {
                    format!(
                        "{} ~ {} ~ {} but not {0} ~ {2}",
                        line.label(a),
                        line.label(b),
                        line.label(c)
                    )
                })?;
            }
        }
    }
    Ok(())
}

pub fn is_local(ring: &FiniteRing) -> bool {
    all_ideals(ring).expect("ideal lattice").is_local()
}

pub fn is_field(ring: &FiniteRing) -> bool {
    ring.zero_divisor_count() == 1
}
