//! Projective lines over small finite commutative rings.
//!
//! Rings are described in a small expression language (`Z4 x Z4`,
//! `GF(3)[x]/(x^3)`, ...), tabulated into a [`FiniteRing`], and the
//! projective line over the ring is enumerated as unit orbits of admissible
//! pairs. Each line is summarised by a [`LineProfile`]: total points, points
//! with a unit coordinate, neighbourhood size, overlaps of two and three
//! neighbourhoods of pairwise distant points, Jacobson points, and the
//! maximum number of pairwise distant points.
//!
//! ```
//! let analysis = ringline::analyse("Z4 x Z4").unwrap();
//! assert_eq!(analysis.profile.counts.as_array(), [36, 28, 19, 8, 0, 3, 3]);
//! ```

pub mod catalog;
pub mod clique;
pub mod expr;
mod galois;
pub mod ideal;
pub mod line;
pub mod parser;
pub mod profile;
pub mod report;
pub mod ring;

use thiserror::Error;

pub use expr::{Polynomial, RingExpr};
pub use ideal::{all_ideals, Ideal, IdealLattice};
pub use line::{PointRep, ProjectiveLine};
pub use parser::parse;
pub use profile::{profile, LineProfile, ProfileCounts, TypeLabel};
pub use ring::{Element, FiniteRing};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] parser::ParseError),
    #[error(transparent)]
    Ring(#[from] ring::RingError),
    #[error(transparent)]
    Ideal(#[from] ideal::IdealError),
    #[error(transparent)]
    Line(#[from] line::LineError),
    #[error(transparent)]
    Profile(#[from] profile::ProfileError),
}

impl Error {
    /// Errors caused by the input text or its size, as opposed to failed
    /// internal cross-checks.
    pub fn is_input_error(&self) -> bool {
        matches!(
            self,
            Error::Parse(_) | Error::Ring(ring::RingError::Bound { .. })
        )
    }
}

/// Parses and builds a ring.
pub fn build_ring(text: &str) -> Result<FiniteRing, Error> {
    Ok(FiniteRing::build(&parse(text)?)?)
}

#[derive(Debug, Clone)]
pub struct Analysis {
    pub expr: RingExpr,
    pub line: ProjectiveLine,
    pub profile: LineProfile,
}

/// Parse, build, enumerate and profile in one go.
pub fn analyse(text: &str) -> Result<Analysis, Error> {
    let expr = parse(text)?;
    let ring = FiniteRing::build(&expr)?;
    let line = ProjectiveLine::enumerate(ring)?;
    let profile = profile::profile(&line)?;
    Ok(Analysis {
        expr,
        line,
        profile,
    })
}
