//! Fully tabulated finite commutative rings with unity.

use std::fmt::{self, Write as _};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::expr::RingExpr;
use crate::galois;

/// Default upper bound on the number of ring elements.
pub const DEFAULT_MAX_ORDER: usize = 4096;
/// Hard ceiling imposed by the 16-bit element encoding.
pub const ELEMENT_LIMIT: usize = 1 << 16;
/// Orders up to this size get an exhaustive axiom scan; larger rings are
/// checked on a fixed pseudo-random sample of triples.
const EXHAUSTIVE_AXIOM_ORDER: usize = 256;
const SAMPLED_AXIOM_TRIPLES: usize = 1 << 20;

/// An element of a particular [`FiniteRing`], identified by its index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(u16);

impl Element {
    pub fn from_index(index: usize) -> Self {
        Element(u16::try_from(index).expect("element index exceeds 16 bits"))
    }

    pub fn index(self) -> usize {
        usize::from(self.0)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring of order {order} exceeds the configured bound {max}")]
    Bound { order: u128, max: usize },
    #[error("ring axiom violated: {0}")]
    Validation(String),
    #[error("element {0} is not a unit")]
    NotAUnit(String),
}

#[derive(Debug, Clone, Copy)]
pub struct BuildOptions {
    pub max_order: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            max_order: DEFAULT_MAX_ORDER,
        }
    }
}

/// A finite commutative ring with unity given by its complete addition and
/// multiplication tables.
///
/// Index 0 is always the additive identity. For `Zn`, `GF` and quotient
/// rings index 1 is the multiplicative identity; for products the identity
/// is the all-ones tuple, wherever lexicographic order places it, and is
/// available through [`FiniteRing::one`].
#[derive(Debug, Clone)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
    one: Element,
    labels: Vec<String>,
    inverse: Vec<Option<u16>>,
    characteristic: usize,
}

impl FiniteRing {
    /// Evaluates `expr` with the default order bound.
    pub fn build(expr: &RingExpr) -> Result<FiniteRing, RingError> {
        Self::build_with(expr, &BuildOptions::default())
    }

    pub fn build_with(expr: &RingExpr, options: &BuildOptions) -> Result<FiniteRing, RingError> {
        let max = options.max_order.min(ELEMENT_LIMIT);
        let order = expr_order(expr);
        if order > max as u128 {
            return Err(RingError::Bound {
                order,
                max: options.max_order,
            });
        }
        let ring = construct(expr);
        ring.validate()?;
        Ok(ring)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> Element {
        Element(0)
    }

    pub fn one(&self) -> Element {
        self.one
    }

    pub fn characteristic(&self) -> usize {
        self.characteristic
    }

    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.order).map(Element::from_index)
    }

    #[inline]
    pub fn add(&self, a: Element, b: Element) -> Element {
        Element(self.add[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.mul[a.index() * self.order + b.index()])
    }

    #[inline]
    pub fn neg(&self, a: Element) -> Element {
        Element(self.neg[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn is_unit(&self, e: Element) -> bool {
        self.inverse[e.index()].is_some()
    }

    pub fn label(&self, e: Element) -> &str {
        &self.labels[e.index()]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Looks an element up by its display label.
    pub fn element_by_label(&self, label: &str) -> Option<Element> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(Element::from_index)
    }

    /// The image of the integer `n` under `Z -> R`.
    pub fn from_integer(&self, n: u64) -> Element {
        let n = (n % self.characteristic as u64) as usize;
        (0..n).fold(self.zero(), |acc, _| self.add(acc, self.one))
    }

    pub fn inverse(&self, e: Element) -> Result<Element, RingError> {
        self.inverse[e.index()]
            .map(Element)
            .ok_or_else(|| RingError::NotAUnit(self.label(e).to_string()))
    }

    pub fn units(&self) -> Vec<Element> {
        self.elements().filter(|&e| self.is_unit(e)).collect()
    }

    /// All non-units, 0 included.
    pub fn zero_divisors(&self) -> Vec<Element> {
        self.elements().filter(|&e| !self.is_unit(e)).collect()
    }

    pub fn unit_count(&self) -> usize {
        self.inverse.iter().filter(|i| i.is_some()).count()
    }

    pub fn zero_divisor_count(&self) -> usize {
        self.order - self.unit_count()
    }

    /// Plain-text addition and multiplication grids with a header row and
    /// column of element labels.
    pub fn table_dump(&self) -> String {
        let width = self.labels.iter().map(String::len).max().unwrap_or(1);
        let mut out = String::new();
        for (symbol, table) in [("+", &self.add), ("*", &self.mul)] {
            let _ = write!(out, "{symbol:>width$} |");
            for l in &self.labels {
                let _ = write!(out, " {l:>width$}");
            }
            out.push('\n');
            out.push_str(&"-".repeat(width + 2 + (width + 1) * self.order));
            out.push('\n');
            for a in 0..self.order {
                let _ = write!(out, "{:>width$} |", self.labels[a]);
                for b in 0..self.order {
                    let c = usize::from(table[a * self.order + b]);
                    let _ = write!(out, " {:>width$}", self.labels[c]);
                }
                out.push('\n');
            }
            out.push('\n');
        }
        out
    }

    /// Checks the commutative-ring-with-unity axioms over the tables.
    pub fn validate(&self) -> Result<(), RingError> {
        let n = self.order;
        let fail = |msg: String| Err(RingError::Validation(msg));
        for a in self.elements() {
            if self.add(a, self.zero()) != a {
                return fail(format!(
                    "0 is not an additive identity for {}",
                    self.label(a)
                ));
            }
            if self.mul(a, self.one) != a {
                return fail(format!(
                    "1 is not a multiplicative identity for {}",
                    self.label(a)
                ));
            }
            if self.add(a, self.neg(a)) != self.zero() {
                return fail(format!("{} has no additive inverse", self.label(a)));
            }
            for b in self.elements() {
                if self.add(a, b) != self.add(b, a) || self.mul(a, b) != self.mul(b, a) {
                    return fail(format!(
                        "operations do not commute on ({}, {})",
                        self.label(a),
                        self.label(b)
                    ));
                }
            }
        }
        let check = |a: Element, b: Element, c: Element| -> Result<(), RingError> {
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)) {
                return fail(format!("addition not associative at {a}, {b}, {c}"));
            }
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return fail(format!("multiplication not associative at {a}, {b}, {c}"));
            }
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)) {
                return fail(format!("distributivity fails at {a}, {b}, {c}"));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_AXIOM_ORDER {
            for a in self.elements() {
                for b in self.elements() {
                    for c in self.elements() {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x5eed_0ade);
            for _ in 0..SAMPLED_AXIOM_TRIPLES {
                let [a, b, c] = [(); 3].map(|_| Element::from_index(rng.gen_range(0..n)));
                check(a, b, c)?;
            }
        }
        Ok(())
    }

    fn from_tables(add: Vec<u16>, mul: Vec<u16>, one: Element, labels: Vec<String>) -> Self {
        let order = labels.len();
        let mut neg = vec![0u16; order];
        for a in 0..order {
            if let Some(b) = (0..order).find(|&b| add[a * order + b] == 0) {
                neg[a] = b as u16;
            }
        }
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| mul[a * order + b] == one.0)
                    .map(|b| b as u16)
            })
            .collect();
        let mut characteristic = 1;
        let mut acc = one.0;
        while acc != 0 && characteristic <= order {
            acc = add[usize::from(acc) * order + one.index()];
            characteristic += 1;
        }
        FiniteRing {
            order,
            add,
            mul,
            neg,
            one,
            labels,
            inverse,
            characteristic,
        }
    }
}

fn expr_order(expr: &RingExpr) -> u128 {
    match expr {
        RingExpr::Zn { n } => u128::from(*n),
        RingExpr::Gf { p, k } => u128::from(*p).saturating_pow(*k),
        RingExpr::Quotient { base, modulus } => {
            let d = modulus.degree().unwrap_or(0) as u32;
            expr_order(base).saturating_pow(d)
        }
        RingExpr::Product { factors } => factors
            .iter()
            .fold(1u128, |acc, f| acc.saturating_mul(expr_order(f))),
    }
}

fn construct(expr: &RingExpr) -> FiniteRing {
    match expr {
        RingExpr::Zn { n } => integers_mod(*n as usize),
        RingExpr::Gf { p, k } => galois_field(*p, *k as usize),
        RingExpr::Quotient { base, modulus } => {
            let base = construct(base);
            let coeffs: Vec<Element> = modulus
                .coeffs()
                .iter()
                .map(|&c| base.from_integer(c))
                .collect();
            polynomial_quotient(&base, &coeffs, "x")
        }
        RingExpr::Product { factors } => {
            let rings: Vec<FiniteRing> = factors.iter().map(construct).collect();
            direct_product(&rings)
        }
    }
}

fn integers_mod(n: usize) -> FiniteRing {
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u16);
            mul.push(((a * b) % n) as u16);
        }
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteRing::from_tables(add, mul, Element(1), labels)
}

fn galois_field(p: u64, k: usize) -> FiniteRing {
    let prime = integers_mod(p as usize);
    if k == 1 {
        return prime;
    }
    let modulus: Vec<Element> = galois::smallest_irreducible(p, k)
        .into_iter()
        .map(|c| Element::from_index(c as usize))
        .collect();
    polynomial_quotient(&prime, &modulus, "a")
}

/// `base[symbol]/(modulus)` for a monic `modulus` given by its coefficients
/// in `base`, low degree first. Residues are encoded as `sum c_i * q^i`
/// with `q = |base|`, so index 0 is zero and index 1 the constant 1 when
/// `base` puts its own identity at index 1.
fn polynomial_quotient(base: &FiniteRing, modulus: &[Element], symbol: &str) -> FiniteRing {
    let q = base.order();
    let d = modulus.len() - 1;
    let order = q.pow(d as u32);
    let digits = |mut idx: usize| -> Vec<Element> {
        (0..d)
            .map(|_| {
                let c = Element::from_index(idx % q);
                idx /= q;
                c
            })
            .collect()
    };
    let encode =
        |coeffs: &[Element]| -> usize { coeffs.iter().rev().fold(0, |acc, c| acc * q + c.index()) };
    let residues: Vec<Vec<Element>> = (0..order).map(digits).collect();

    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    let mut prod = vec![base.zero(); 2 * d - 1];
    for a in &residues {
        for b in &residues {
            let sum: Vec<Element> = a.iter().zip(b).map(|(&x, &y)| base.add(x, y)).collect();
            add.push(encode(&sum) as u16);

            prod.iter_mut().for_each(|c| *c = base.zero());
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    prod[i + j] = base.add(prod[i + j], base.mul(x, y));
                }
            }
            // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
            for deg in (d..prod.len()).rev() {
                let lead = prod[deg];
                for (i, &m) in modulus[..d].iter().enumerate() {
                    let slot = deg - d + i;
                    prod[slot] = base.sub(prod[slot], base.mul(lead, m));
                }
                prod[deg] = base.zero();
            }
            mul.push(encode(&prod[..d]) as u16);
        }
    }

    let labels = residues
        .iter()
        .map(|r| polynomial_label(base, r, symbol))
        .collect();
    let one = Element::from_index(encode(
        &std::iter::once(base.one())
            .chain(std::iter::repeat(base.zero()))
            .take(d)
            .collect::<Vec<_>>(),
    ));
    FiniteRing::from_tables(add, mul, one, labels)
}

fn polynomial_label(base: &FiniteRing, coeffs: &[Element], symbol: &str) -> String {
    let mut terms = Vec::new();
    for (deg, &c) in coeffs.iter().enumerate().rev() {
        if c == base.zero() {
            continue;
        }
        let label = base.label(c);
        let coeff = if label.contains(['+', '^']) || (deg > 0 && label.contains(symbol)) {
            format!("({label})")
        } else {
            label.to_string()
        };
        let term = match deg {
            0 => coeff,
            _ => {
                let power = if deg == 1 {
                    symbol.to_string()
                } else {
                    format!("{symbol}^{deg}")
                };
                if c == base.one() {
                    power
                } else {
                    format!("{coeff}{power}")
                }
            }
        };
        terms.push(term);
    }
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// Componentwise product; tuples are indexed lexicographically with the
/// first factor most significant.
fn direct_product(factors: &[FiniteRing]) -> FiniteRing {
    let order: usize = factors.iter().map(FiniteRing::order).product();
    let decode = |mut idx: usize| -> Vec<Element> {
        let mut tuple = vec![Element(0); factors.len()];
        for (slot, f) in factors.iter().enumerate().rev() {
            tuple[slot] = Element::from_index(idx % f.order());
            idx /= f.order();
        }
        tuple
    };
    let encode = |tuple: &[Element]| -> usize {
        tuple
            .iter()
            .zip(factors)
            .fold(0, |acc, (e, f)| acc * f.order() + e.index())
    };
    let tuples: Vec<Vec<Element>> = (0..order).map(decode).collect();
    let mut add = Vec::with_capacity(order * order);
    let mut mul = Vec::with_capacity(order * order);
    let mut scratch = vec![Element(0); factors.len()];
    for a in &tuples {
        for b in &tuples {
            for (i, f) in factors.iter().enumerate() {
                scratch[i] = f.add(a[i], b[i]);
            }
            add.push(encode(&scratch) as u16);
            for (i, f) in factors.iter().enumerate() {
                scratch[i] = f.mul(a[i], b[i]);
            }
            mul.push(encode(&scratch) as u16);
        }
    }
    let labels = tuples
        .iter()
        .map(|t| {
            let parts: Vec<&str> = t.iter().zip(factors).map(|(&e, f)| f.label(e)).collect();
            format!("[{}]", parts.join(","))
        })
        .collect();
    let ones: Vec<Element> = factors.iter().map(FiniteRing::one).collect();
    FiniteRing::from_tables(add, mul, Element::from_index(encode(&ones)), labels)
}
