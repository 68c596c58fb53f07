//! Recursive-descent parser for the ring-expression language.
//!
//! ```text
//! ring    := product ;
//! product := atom { ("x" | "*") atom } ;
//! atom    := base [ "[x]/(" poly ")" ] | "(" ring ")" ;
//! base    := "Z" integer | "GF(" integer ")" ;
//! poly    := term { "+" term } ;
//! term    := [integer] ["x" ["^" integer]] ;
//! ```
//!
//! Whitespace is insignificant. Inside the parentheses following `[x]/` the
//! letter `x` is the indeterminate; everywhere else it separates factors of a
//! direct product. Products are flattened, and polynomial coefficients are
//! reduced modulo the characteristic of the quotient's base.

use thiserror::Error;

use crate::expr::{Polynomial, RingExpr};

/// Largest exponent accepted in a modulus.
const MAX_EXPONENT: u64 = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: expected {expected}, found {found}")]
    Syntax {
        offset: usize,
        expected: String,
        found: String,
    },
    #[error("{kind} (at offset {offset})")]
    Semantic { offset: usize, kind: SemanticError },
}

impl ParseError {
    /// Character offset into the input where the error was detected.
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. } | ParseError::Semantic { offset, .. } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticError {
    #[error("GF({0}): field order must be a prime power")]
    NotPrimePower(u64),
    #[error("Z{0}: modulus must be at least 2")]
    ModulusTooSmall(u64),
    #[error("quotient base must be Zn or GF(q)")]
    QuotientBase,
    #[error("modulus {0} is not monic after reduction")]
    NonMonic(Polynomial),
    #[error("modulus must have degree at least 1 after reduction")]
    ConstantModulus,
    #[error("integer literal out of range")]
    IntegerOverflow,
    #[error("exponent {0} exceeds {MAX_EXPONENT}")]
    ExponentTooLarge(u64),
}

/// Parses a ring expression.
pub fn parse(text: &str) -> Result<RingExpr, ParseError> {
    let mut parser = Parser {
        chars: text.chars().collect(),
        pos: 0,
    };
    let expr = parser.ring()?;
    parser.skip_ws();
    if parser.pos < parser.chars.len() {
        return Err(parser.syntax("'x', '*' or end of input"));
    }
    Ok(expr)
}

/// Splits `q` into `(p, k)` with `q = p^k` and `p` prime.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..)
        .take_while(|d: &u64| d.saturating_mul(*d) <= q)
        .find(|d| q.is_multiple_of(*d))
        .unwrap_or(q);
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
}

impl Parser {
    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn syntax(&self, expected: &str) -> ParseError {
        let found = match self.chars.get(self.pos) {
            Some(c) => format!("'{c}'"),
            None => "end of input".to_string(),
        };
        ParseError::Syntax {
            offset: self.pos,
            expected: expected.to_string(),
            found,
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.syntax(&format!("'{c}'")))
        }
    }

    fn integer(&mut self) -> Result<(u64, usize), ParseError> {
        self.skip_ws();
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(d) = self.chars.get(self.pos).and_then(|c| c.to_digit(10)) {
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add(u64::from(d)))
                .ok_or(ParseError::Semantic {
                    offset: start,
                    kind: SemanticError::IntegerOverflow,
                })?;
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.syntax("integer"));
        }
        Ok((value, start))
    }

    fn ring(&mut self) -> Result<RingExpr, ParseError> {
        let mut factors = vec![self.atom()?];
        while matches!(self.peek(), Some('x' | '*')) {
            self.pos += 1;
            factors.push(self.atom()?);
        }
        Ok(RingExpr::product(factors))
    }

    fn atom(&mut self) -> Result<RingExpr, ParseError> {
        let base = match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.ring()?;
                self.expect(')')?;
                inner
            }
            Some('Z') => {
                self.pos += 1;
                let (n, at) = self.integer()?;
                if n < 2 {
                    return Err(ParseError::Semantic {
                        offset: at,
                        kind: SemanticError::ModulusTooSmall(n),
                    });
                }
                RingExpr::Zn { n }
            }
            Some('G') => {
                self.pos += 1;
                if self.chars.get(self.pos) != Some(&'F') {
                    return Err(self.syntax("'F'"));
                }
                self.pos += 1;
                self.expect('(')?;
                let (q, at) = self.integer()?;
                self.expect(')')?;
                let (p, k) = prime_power(q).ok_or(ParseError::Semantic {
                    offset: at,
                    kind: SemanticError::NotPrimePower(q),
                })?;
                RingExpr::Gf { p, k }
            }
            _ => return Err(self.syntax("'Z', 'GF(' or '('")),
        };
        if self.peek() == Some('[') {
            let at = self.pos;
            for c in ['[', 'x', ']', '/', '('] {
                self.expect(c)?;
            }
            let characteristic = base.base_characteristic().ok_or(ParseError::Semantic {
                offset: at,
                kind: SemanticError::QuotientBase,
            })?;
            let poly_at = self.pos;
            let modulus = self.poly(characteristic)?;
            self.expect(')')?;
            match modulus.degree() {
                None | Some(0) => {
                    return Err(ParseError::Semantic {
                        offset: poly_at,
                        kind: SemanticError::ConstantModulus,
                    })
                }
                _ if !modulus.is_monic() => {
                    return Err(ParseError::Semantic {
                        offset: poly_at,
                        kind: SemanticError::NonMonic(modulus),
                    })
                }
                _ => {}
            }
            return Ok(RingExpr::Quotient {
                base: Box::new(base),
                modulus,
            });
        }
        Ok(base)
    }

    fn poly(&mut self, characteristic: u64) -> Result<Polynomial, ParseError> {
        let mut coeffs: Vec<u64> = Vec::new();
        loop {
            let (coeff, exp) = self.term()?;
            let exp = exp as usize;
            if coeffs.len() <= exp {
                coeffs.resize(exp + 1, 0);
            }
            let sum = (u128::from(coeffs[exp]) + u128::from(coeff)) % u128::from(characteristic);
            coeffs[exp] = sum as u64;
            if self.peek() == Some('+') {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(Polynomial::reduced(&coeffs, characteristic))
    }

    fn term(&mut self) -> Result<(u64, u64), ParseError> {
        let has_coeff = self.peek().is_some_and(|c| c.is_ascii_digit());
        let coeff = if has_coeff { self.integer()?.0 } else { 1 };
        if self.peek() != Some('x') {
            if !has_coeff {
                return Err(self.syntax("polynomial term"));
            }
            return Ok((coeff, 0));
        }
        self.pos += 1;
        if self.peek() != Some('^') {
            return Ok((coeff, 1));
        }
        self.pos += 1;
        let (exp, at) = self.integer()?;
        if exp > MAX_EXPONENT {
            return Err(ParseError::Semantic {
                offset: at,
                kind: SemanticError::ExponentTooLarge(exp),
            });
        }
        Ok((coeff, exp))
    }
}
