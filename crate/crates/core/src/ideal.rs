//! Ideals, maximal ideals and the Jacobson radical of a finite ring.

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::ring::{Element, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("Jacobson radical mismatch: intersection of maximal ideals has {by_intersection} elements, unit test gives {by_units}")]
    RadicalMismatch {
        by_intersection: usize,
        by_units: usize,
    },
}

/// An ideal stored as a bitmask over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    members: FixedBitSet,
}

impl Ideal {
    pub fn members(&self) -> &FixedBitSet {
        &self.members
    }

    pub fn contains(&self, e: Element) -> bool {
        self.members.contains(e.index())
    }

    pub fn len(&self) -> usize {
        self.members.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        self.members.ones().map(Element::from_index)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        Ideal { members }
    }

    /// Element labels in index order.
    pub fn labels<'r>(&self, ring: &'r FiniteRing) -> Vec<&'r str> {
        self.elements().map(|e| ring.label(e)).collect()
    }

    /// Checks the ideal axioms against `ring`.
    pub fn is_ideal_of(&self, ring: &FiniteRing) -> bool {
        self.contains(ring.zero())
            && self.elements().all(|a| {
                self.elements().all(|b| self.contains(ring.add(a, b)))
                    && ring.elements().all(|r| self.contains(ring.mul(a, r)))
            })
    }
}

/// Smallest set containing `seed` and closed under addition.
fn additive_closure(ring: &FiniteRing, seed: FixedBitSet) -> FixedBitSet {
    let mut members = seed;
    members.insert(ring.zero().index());
    let mut frontier: Vec<usize> = members.ones().collect();
    while let Some(a) = frontier.pop() {
        let current: Vec<usize> = members.ones().collect();
        for b in current {
            let s = ring
                .add(Element::from_index(a), Element::from_index(b))
                .index();
            if !members.put(s) {
                frontier.push(s);
            }
        }
    }
    members
}

/// The principal ideal `gR`.
pub fn principal_ideal(ring: &FiniteRing, g: Element) -> Ideal {
    let mut seed = FixedBitSet::with_capacity(ring.order());
    for y in ring.elements() {
        seed.insert(ring.mul(g, y).index());
    }
    Ideal {
        members: additive_closure(ring, seed),
    }
}

fn ideal_sum(ring: &FiniteRing, a: &Ideal, b: &Ideal) -> Ideal {
    let mut seed = a.members.clone();
    seed.union_with(&b.members);
    Ideal {
        members: additive_closure(ring, seed),
    }
}

/// All ideals of a ring with the maximal ones and the radical singled out.
#[derive(Debug, Clone)]
pub struct IdealLattice {
    ideals: Vec<Ideal>,
    maximal: Vec<Ideal>,
    radical: Ideal,
}

impl IdealLattice {
    /// Every ideal, ordered by size and then by membership bitmask.
    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn maximal(&self) -> &[Ideal] {
        &self.maximal
    }

    pub fn radical(&self) -> &Ideal {
        &self.radical
    }

    pub fn is_local(&self) -> bool {
        self.maximal.len() == 1
    }

    /// Orders of the residue fields `R/M`, one per maximal ideal.
    pub fn residue_field_orders(&self, ring: &FiniteRing) -> Vec<usize> {
        self.maximal
            .iter()
            .map(|m| ring.order() / m.len())
            .collect()
    }
}

/// Builds the lattice as the closure of the principal ideals under sums.
pub fn all_ideals(ring: &FiniteRing) -> Result<IdealLattice, IdealError> {
    let mut ideals: Vec<Ideal> = Vec::new();
    for g in ring.elements() {
        let p = principal_ideal(ring, g);
        if !ideals.contains(&p) {
            ideals.push(p);
        }
    }
    let mut i = 0;
    while i < ideals.len() {
        for j in 0..i {
            let s = ideal_sum(ring, &ideals[i], &ideals[j]);
            if !ideals.contains(&s) {
                ideals.push(s);
            }
        }
        i += 1;
    }
    ideals.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let one = ring.one();
    let proper: Vec<&Ideal> = ideals.iter().filter(|i| !i.contains(one)).collect();
    let maximal: Vec<Ideal> = proper
        .iter()
        .filter(|m| !proper.iter().any(|o| o.len() > m.len() && m.is_subset(o)))
        .map(|m| (*m).clone())
        .collect();

    let by_intersection = maximal
        .iter()
        .skip(1)
        .fold(maximal[0].clone(), |acc, m| acc.intersection(m));
    let by_units = radical_by_unit_test(ring);
    if by_intersection != by_units {
        return Err(IdealError::RadicalMismatch {
            by_intersection: by_intersection.len(),
            by_units: by_units.len(),
        });
    }
    Ok(IdealLattice {
        ideals,
        maximal,
        radical: by_intersection,
    })
}

/// `{x : 1 - xy is a unit for every y}`
pub fn radical_by_unit_test(ring: &FiniteRing) -> Ideal {
    let mut members = FixedBitSet::with_capacity(ring.order());
    for x in ring.elements() {
        if ring
            .elements()
            .all(|y| ring.is_unit(ring.sub(ring.one(), ring.mul(x, y))))
        {
            members.insert(x.index());
        }
    }
    Ideal { members }
}

/// Whether the non-units of `ring` form an ideal; equivalent to locality.
pub fn zero_divisors_form_ideal(ring: &FiniteRing) -> bool {
    let mut members = FixedBitSet::with_capacity(ring.order());
    for z in ring.zero_divisors() {
        members.insert(z.index());
    }
    Ideal { members }.is_ideal_of(ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn ring(text: &str) -> FiniteRing {
        FiniteRing::build(&parse(text).unwrap()).unwrap()
    }

    fn labelled(ring: &FiniteRing, ideal: &Ideal) -> Vec<String> {
        ideal.labels(ring).into_iter().map(String::from).collect()
    }

    #[test]
    fn principal_ideals() {
        let z4 = ring("Z4");
        let two = z4.element_by_label("2").unwrap();
        assert_eq!(labelled(&z4, &principal_ideal(&z4, two)), ["0", "2"]);
        for text in ["Z4", "GF(9)", "Z2 x Z3"] {
            let r = ring(text);
            assert_eq!(principal_ideal(&r, r.zero()).len(), 1);
            assert_eq!(principal_ideal(&r, r.one()).len(), r.order());
        }
    }

    #[test]
    fn principal_ideal_in_z4_squared() {
        // c = [0,2]: c*y ranges over {[0,0],[0,2]}, already additively closed
        let r = ring("Z4 x Z4");
        let c = r.element_by_label("[0,2]").unwrap();
        assert_eq!(labelled(&r, &principal_ideal(&r, c)), ["[0,0]", "[0,2]"]);
    }

    #[test]
    fn z4_squared_lattice() {
        let r = ring("Z4 x Z4");
        let lattice = all_ideals(&r).unwrap();
        assert_eq!(lattice.maximal().len(), 2);
        assert!(lattice.maximal().iter().all(|m| m.len() == 8));
        // a, c, f, l
        assert_eq!(
            labelled(&r, lattice.radical()),
            ["[0,0]", "[0,2]", "[2,0]", "[2,2]"]
        );
        // Z4 has 3 ideals, so the product has 9
        assert_eq!(lattice.ideals().len(), 9);
        assert!(lattice.ideals().iter().all(|i| i.is_ideal_of(&r)));
        assert!(!lattice.is_local());
    }

    #[test]
    fn fields_have_trivial_radical() {
        for text in ["GF(2)", "GF(4)", "GF(27)", "GF(31)"] {
            let r = ring(text);
            let lattice = all_ideals(&r).unwrap();
            assert_eq!(lattice.ideals().len(), 2);
            assert_eq!(lattice.maximal().len(), 1);
            assert_eq!(lattice.maximal()[0].len(), 1);
            assert_eq!(lattice.radical().len(), 1);
            assert!(lattice.is_local());
        }
    }

    #[test]
    fn locality() {
        for (text, local) in [
            ("Z9", true),
            ("Z27", true),
            ("GF(2) x GF(2)", false),
            ("Z4[x]/(x^2+x+1)", true),
            ("Z6", false),
        ] {
            let r = ring(text);
            let lattice = all_ideals(&r).unwrap();
            assert_eq!(lattice.is_local(), local, "{text}");
            assert_eq!(zero_divisors_form_ideal(&r), local, "{text}");
        }
    }

    #[test]
    fn boolean_square_maximal_ideals() {
        let r = ring("GF(2) x GF(2)");
        let lattice = all_ideals(&r).unwrap();
        let maximal: Vec<Vec<String>> = lattice.maximal().iter().map(|m| labelled(&r, m)).collect();
        assert_eq!(maximal, [["[0,0]", "[0,1]"], ["[0,0]", "[1,0]"]]);
        assert_eq!(lattice.residue_field_orders(&r), [2, 2]);
    }

    #[test]
    fn ideal_lattice_matches_subset_enumeration() {
        // every subset of an order-8 ring, filtered by the ideal axioms
        for text in ["Z8", "GF(2) x Z4", "GF(2)[x]/(x^3)", "GF(2) x GF(4)"] {
            let r = ring(text);
            let mut brute = Vec::new();
            for mask in 0u32..(1 << r.order()) {
                let mut members = FixedBitSet::with_capacity(r.order());
                for i in 0..r.order() {
                    if mask & (1 << i) != 0 {
                        members.insert(i);
                    }
                }
                let candidate = Ideal { members };
                if candidate.is_ideal_of(&r) {
                    brute.push(candidate);
                }
            }
            brute.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
            assert_eq!(all_ideals(&r).unwrap().ideals(), brute.as_slice(), "{text}");
        }
    }
}
