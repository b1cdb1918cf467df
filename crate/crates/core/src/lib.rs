//! Algebraic-geometry Goppa codes on Edwards curves.
//!
//! Finite fields GF(p^t), Edwards and Weierstrass curves with their group
//! laws and the birational maps between them, explicit Riemann-Roch bases for
//! divisors of the form `P + kO`, and the linear codes built from them.
//!
//! ```
//! use edwards_goppa::{field::Field, curves::EdwardsCurve, goppa::PointPolicy};
//! use edwards_goppa::{artifact::build_code, notation::parse_edwards_points};
//!
//! let curve = EdwardsCurve::new(Field::prime(17)?.from_int(10))?;
//! let t = parse_edwards_points(&curve, "(5,8),(5,9),(6,3),(6,14),(8,5),(8,12),(9,5)")?;
//! let mut code = build_code(&curve, "(2,15)+4O", &PointPolicy::Explicit(t))?;
//! assert_eq!(code.parity_check().row(0), &[7, 3, 1, 13, 9, 1, 0]);
//! assert_eq!(code.compute_exact_distance(1 << 21)?, 3);
//! # Ok::<(), edwards_goppa::Error>(())
//! ```

pub mod artifact;
pub mod birational;
pub mod curves;
pub mod field;
pub mod goppa;
pub mod notation;
pub mod riemann_roch;

use thiserror::Error;

/// Any error raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] field::FieldError),
    #[error(transparent)]
    Curve(#[from] curves::CurveError),
    #[error(transparent)]
    Map(#[from] birational::MapError),
    #[error(transparent)]
    RiemannRoch(#[from] riemann_roch::RrError),
    #[error(transparent)]
    Goppa(#[from] goppa::GoppaError),
    #[error(transparent)]
    Parse(#[from] notation::ParseError),
    #[error("invalid JSON: {0}")]
    Json(String),
}

impl Error {
    /// Name of the underlying error variant, e.g. `"InvalidPoint"`.
    pub fn name(&self) -> &'static str {
        match self {
            Self::Field(e) => e.name(),
            Self::Curve(e) => e.name(),
            Self::Map(e) => e.name(),
            Self::RiemannRoch(e) => e.name(),
            Self::Goppa(e) => e.name(),
            Self::Parse(_) => "ParseError",
            Self::Json(_) => "InvalidJson",
        }
    }
}
