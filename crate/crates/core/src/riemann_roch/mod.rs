//! Divisors on Edwards curves and explicit Riemann-Roch bases for
//! `L(P + kO)`.
//!
//! A divisor whose support avoids the singular points is reduced to
//! `P + kO` through the group law; the basis of `L(P + kO)` has `k + 1`
//! members drawn from a closed family of rational functions (see
//! [`BasisFunction`]). Evaluation is affine (`Z = 1`).

mod basis;
mod divisor;

pub use basis::{evaluate_basis_function, evaluate_basis_incremental, rr_basis, BasisFunction, PointEvaluator};
pub use divisor::{divisor_class_reduce, Divisor, ReducedDivisor};

use thiserror::Error;

use crate::curves::CurveError;
use crate::field::FieldError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RrError {
    #[error("divisor support contains the singular point {0}")]
    SingularPointInSupport(String),
    #[error("divisor degree {0} is not positive")]
    NonpositiveDegree(i64),
    #[error("{0} is a singular point")]
    SingularPoint(String),
    #[error("k = {0} is negative")]
    NegativeK(i64),
    #[error("basis function {function} is indeterminate at {point}")]
    IndeterminateAt { function: String, point: String },
    #[error(transparent)]
    Curve(#[from] CurveError),
}

impl RrError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::SingularPointInSupport(_) => "SingularPointInSupport",
            Self::NonpositiveDegree(_) => "NonpositiveDegree",
            Self::SingularPoint(_) => "SingularPoint",
            Self::NegativeK(_) => "NegativeK",
            Self::IndeterminateAt { .. } => "IndeterminateAt",
            Self::Curve(e) => e.name(),
        }
    }
}

impl From<FieldError> for RrError {
    fn from(e: FieldError) -> Self {
        Self::Curve(CurveError::Field(e))
    }
}
