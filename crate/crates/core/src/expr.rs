//! Abstract syntax for ring-construction expressions and their canonical
//! textual form.

use std::fmt;

use serde::Serialize;

/// A dense univariate polynomial with non-negative integer coefficients,
/// `coeffs[i]` being the coefficient of `x^i`.
///
/// Coefficients are stored already reduced modulo the characteristic of the
/// ring the polynomial lives over, with no zero coefficients above the degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Polynomial {
    coeffs: Vec<u64>,
}

impl Polynomial {
    /// Builds a polynomial from raw coefficients, reducing each modulo
    /// `modulus` and trimming high zero coefficients.
    pub fn reduced(coeffs: &[u64], modulus: u64) -> Self {
        let mut coeffs: Vec<u64> = coeffs.iter().map(|c| c % modulus).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    /// `x^d`
    pub fn monomial(d: usize) -> Self {
        let mut coeffs = vec![0; d + 1];
        coeffs[d] = 1;
        Polynomial { coeffs }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (deg, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (deg, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (d, 1) => write!(f, "x^{d}")?,
                (d, c) => write!(f, "{c}x^{d}")?,
            }
        }
        Ok(())
    }
}

/// A parsed ring-construction expression.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum RingExpr {
    /// Integers modulo `n`.
    Zn { n: u64 },
    /// The Galois field with `p^k` elements.
    Gf { p: u64, k: u32 },
    /// `base[x]/(modulus)` with `base` a `Zn` or `Gf` node and a monic modulus.
    Quotient {
        base: Box<RingExpr>,
        modulus: Polynomial,
    },
    /// Direct product, two or more factors.
    Product { factors: Vec<RingExpr> },
}

impl RingExpr {
    /// Direct product of `factors`, flattening nested products left to right.
    /// A single factor is returned unchanged.
    pub fn product(factors: Vec<RingExpr>) -> RingExpr {
        let mut flat = Vec::with_capacity(factors.len());
        for f in factors {
            match f {
                RingExpr::Product { factors } => flat.extend(factors),
                other => flat.push(other),
            }
        }
        if flat.len() == 1 {
            flat.pop().unwrap()
        } else {
            RingExpr::Product { factors: flat }
        }
    }

    /// Characteristic of a `Zn` or `Gf` node; `None` for the other variants.
    pub fn base_characteristic(&self) -> Option<u64> {
        match self {
            RingExpr::Zn { n } => Some(*n),
            RingExpr::Gf { p, .. } => Some(*p),
            _ => None,
        }
    }

    /// Number of elements of the ring the expression denotes, or `None` on
    /// `u64` overflow.
    pub fn order(&self) -> Option<u64> {
        match self {
            RingExpr::Zn { n } => Some(*n),
            RingExpr::Gf { p, k } => p.checked_pow(*k),
            RingExpr::Quotient { base, modulus } => {
                let d = u32::try_from(modulus.degree()?).ok()?;
                base.order()?.checked_pow(d)
            }
            RingExpr::Product { factors } => factors
                .iter()
                .try_fold(1u64, |acc, f| acc.checked_mul(f.order()?)),
        }
    }

    /// Canonical text; `parse(render(e)) == e` for every flattened expression.
    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for RingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingExpr::Zn { n } => write!(f, "Z{n}"),
            RingExpr::Gf { p, k } => write!(f, "GF({})", p.pow(*k)),
            RingExpr::Quotient { base, modulus } => write!(f, "{base}[x]/({modulus})"),
            RingExpr::Product { factors } => {
                for (i, factor) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" x ")?;
                    }
                    if matches!(factor, RingExpr::Product { .. }) {
                        write!(f, "({factor})")?;
                    } else {
                        write!(f, "{factor}")?;
                    }
                }
                Ok(())
            }
        }
    }
}
