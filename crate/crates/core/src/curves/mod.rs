//! Edwards curves `x^2 + y^2 = 1 + d x^2 y^2` and Weierstrass curves
//! `y^2 = x^3 + a x^2 + b x`, with their group laws.

mod edwards;
mod weierstrass;

pub use edwards::{EdwardsCurve, EdwardsPoint};
pub use weierstrass::{WeierstrassCurve, WeierstrassPoint};

use thiserror::Error;

use crate::field::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("invalid Edwards parameter d = {0}: d(d - 1) must be nonzero")]
    InvalidD(u32),
    #[error("Weierstrass cubic x^3 + {a}x^2 + {b}x has a repeated root")]
    SingularCurve { a: u32, b: u32 },
    #[error("the Edwards curve is incomplete (d is a square)")]
    IncompleteCurve,
    #[error("the singular point {0} cannot enter the group law")]
    SingularPointInput(String),
    #[error("point {0} is not on the curve")]
    PointNotOnCurve(String),
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error(transparent)]
    Field(#[from] FieldError),
}

impl CurveError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::InvalidD(_) => "InvalidD",
            Self::SingularCurve { .. } => "SingularCurve",
            Self::IncompleteCurve => "IncompleteCurve",
            Self::SingularPointInput(_) => "SingularPointInput",
            Self::PointNotOnCurve(_) => "PointNotOnCurve",
            Self::FieldMismatch => "FieldMismatch",
            Self::Field(e) => e.name(),
        }
    }
}
