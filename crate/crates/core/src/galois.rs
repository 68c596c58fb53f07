//! Dense polynomials over a prime field `Z_p`, just enough to pick the
//! defining polynomial of `GF(p^k)`.

/// Coefficients low degree first, no trailing zeros. Empty is the zero
/// polynomial.
type Coeffs = Vec<u64>;

fn trim(mut a: Coeffs) -> Coeffs {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, p: u64) -> u64 {
    // p is prime, so a^(p-2) is the inverse
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

/// Remainder of `a` modulo the non-zero polynomial `b` over `Z_p`.
pub fn rem(a: &[u64], b: &[u64], p: u64) -> Coeffs {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = inv_mod(b[db], p);
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr] * lead_inv % p;
        let shift = dr - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + p - factor * bc % p) % p;
        }
        r = trim(r);
    }
    r
}

/// Monic polynomial of degree `degree` whose lower coefficients are the
/// base-`p` digits of `rank`, with the constant term as the most significant
/// digit. Ranks `0..p^degree` enumerate monic polynomials of that degree in
/// lexicographic order of `(c0, c1, ..., c_{degree-1})`.
fn monic_from_rank(mut rank: u64, degree: usize, p: u64) -> Coeffs {
    let mut coeffs = vec![0u64; degree + 1];
    coeffs[degree] = 1;
    for slot in (0..degree).rev() {
        coeffs[slot] = rank % p;
        rank /= p;
    }
    coeffs
}

/// Irreducibility of a monic polynomial over `Z_p`, by trial division
/// against every monic polynomial of degree `1..=deg/2`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let deg = match f.len().checked_sub(1) {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for rank in 0..count {
            let g = monic_from_rank(rank, d, p);
            if rem(&f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The lexicographically smallest (constant term first) monic irreducible
/// polynomial of degree `k` over `Z_p`.
pub fn smallest_irreducible(p: u64, k: usize) -> Coeffs {
    let count = p.pow(k as u32);
    (0..count)
        .map(|rank| monic_from_rank(rank, k, p))
        .find(|f| is_irreducible(f, p))
        .expect("an irreducible polynomial exists in every degree")
}
