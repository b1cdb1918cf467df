//! AG Goppa codes on Edwards curves.
//!
//! For a divisor `D` of degree `k` with `D ~ P + (k-1)O` and evaluation
//! points `T = {P_1, ..., P_n}` outside the support, the generator matrix has
//! entries `G[i][j] = F_i(P_j)` for the basis `F_0, ..., F_(k-1)` of `L(D)`.
//! The code has length `n`, dimension `k` and minimum distance at least `n - k`.

mod distance;
mod matrix;

pub use distance::min_distance_exhaustive;
pub use matrix::Matrix;

use thiserror::Error;

use crate::curves::{EdwardsCurve, EdwardsPoint};
use crate::field::{FieldElement, FieldError};
use crate::riemann_roch::{
    divisor_class_reduce, evaluate_basis_incremental, rr_basis, BasisFunction, Divisor,
    ReducedDivisor, RrError,
};

/// Default cap on the number of messages enumerated by the distance search.
pub const DEFAULT_DISTANCE_BUDGET: u128 = 20_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GoppaError {
    #[error("need {needed} evaluation points, only {available} available")]
    NotEnoughPoints { needed: usize, available: usize },
    #[error("invalid evaluation point {point}: {reason}")]
    InvalidPoint { point: String, reason: String },
    #[error("generator matrix has rank {rank} < {k}")]
    RankDeficient { rank: usize, k: usize },
    #[error("expected a vector of length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("distance search over {} messages exceeds the budget {budget}", .messages.map_or("too many".to_string(), |m| m.to_string()))]
    BudgetExceeded { messages: Option<u128>, budget: u128 },
    #[error("code artifact is inconsistent: {0}")]
    CorruptArtifact(String),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    RiemannRoch(#[from] RrError),
}

impl GoppaError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::NotEnoughPoints { .. } => "NotEnoughPoints",
            Self::InvalidPoint { .. } => "InvalidPoint",
            Self::RankDeficient { .. } => "RankDeficient",
            Self::LengthMismatch { .. } => "LengthMismatch",
            Self::BudgetExceeded { .. } => "BudgetExceeded",
            Self::CorruptArtifact(_) => "CorruptArtifact",
            Self::Field(e) => e.name(),
            Self::RiemannRoch(e) => e.name(),
        }
    }
}

/// How evaluation points are chosen.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PointPolicy {
    /// The first `n` valid points in enumeration order.
    FirstValid(usize),
    /// A user-given list, validated and kept in the given order.
    Explicit(Vec<EdwardsPoint>),
}

/// The reduced divisor and basis a code is built from.
#[derive(Debug, Clone)]
struct Setup {
    reduced: ReducedDivisor,
    basis: Vec<BasisFunction>,
}

fn setup(curve: &EdwardsCurve, divisor: &Divisor) -> Result<Setup, GoppaError> {
    let reduced = divisor_class_reduce(curve, divisor)?;
    let basis = rr_basis(curve, &reduced.point, reduced.k)?;
    Ok(Setup { reduced, basis })
}

/// Why `q` cannot be an evaluation point, if it cannot.
fn rejection(
    curve: &EdwardsCurve,
    divisor: &Divisor,
    setup: &Setup,
    q: &EdwardsPoint,
) -> Result<Option<String>, GoppaError> {
    if !q.is_affine() {
        return Ok(Some("singular point".into()));
    }
    if !curve.contains(q).map_err(RrError::from)? {
        return Ok(Some("not on the curve".into()));
    }
    if divisor.in_support(q) {
        return Ok(Some("in the support of the divisor".into()));
    }
    if *q == setup.reduced.point || *q == curve.identity() {
        return Ok(Some("in the support of the reduced divisor".into()));
    }
    match evaluate_basis_incremental(curve, &setup.basis, q) {
        Ok(_) => Ok(None),
        Err(RrError::IndeterminateAt { function, .. }) => {
            Ok(Some(format!("basis function {function} is indeterminate there")))
        }
        Err(e) => Err(e.into()),
    }
}

fn select_with(
    curve: &EdwardsCurve,
    divisor: &Divisor,
    setup: &Setup,
    policy: &PointPolicy,
) -> Result<Vec<EdwardsPoint>, GoppaError> {
    match policy {
        PointPolicy::FirstValid(n) => {
            let mut out = Vec::with_capacity(*n);
            for q in curve.points().map_err(RrError::from)? {
                if out.len() == *n {
                    break;
                }
                if rejection(curve, divisor, setup, &q)?.is_none() {
                    out.push(q);
                }
            }
            if out.len() < *n || *n == 0 {
                return Err(GoppaError::NotEnoughPoints {
                    needed: (*n).max(1),
                    available: out.len(),
                });
            }
            Ok(out)
        }
        PointPolicy::Explicit(list) => {
            if list.is_empty() {
                return Err(GoppaError::NotEnoughPoints { needed: 1, available: 0 });
            }
            for (i, q) in list.iter().enumerate() {
                if list[..i].contains(q) {
                    return Err(GoppaError::InvalidPoint {
                        point: q.to_string(),
                        reason: "listed twice".into(),
                    });
                }
                if let Some(reason) = rejection(curve, divisor, setup, q)? {
                    return Err(GoppaError::InvalidPoint { point: q.to_string(), reason });
                }
            }
            Ok(list.clone())
        }
    }
}

/// Every point usable for the code of `divisor`, in enumeration order.
pub fn candidate_points(curve: &EdwardsCurve, divisor: &Divisor) -> Result<Vec<EdwardsPoint>, GoppaError> {
    let setup = setup(curve, divisor)?;
    let mut out = Vec::new();
    for q in curve.points().map_err(RrError::from)? {
        if rejection(curve, divisor, &setup, &q)?.is_none() {
            out.push(q);
        }
    }
    Ok(out)
}

/// Evaluation points for the code of `divisor`: distinct affine points outside
/// the support at which every basis function of `L(divisor)` is determinate.
pub fn select_points(
    curve: &EdwardsCurve,
    divisor: &Divisor,
    policy: &PointPolicy,
) -> Result<Vec<EdwardsPoint>, GoppaError> {
    let setup = setup(curve, divisor)?;
    select_with(curve, divisor, &setup, policy)
}

fn generator_with(
    curve: &EdwardsCurve,
    setup: &Setup,
    points: &[EdwardsPoint],
) -> Result<Matrix, GoppaError> {
    let field = curve.field();
    let k = setup.basis.len();
    let mut g = Matrix::zeros(field, k, points.len());
    for (j, q) in points.iter().enumerate() {
        let column = evaluate_basis_incremental(curve, &setup.basis, q)?;
        for (i, v) in column.iter().enumerate() {
            g.set_raw(i, j, v.value());
        }
    }
    Ok(g)
}

/// `G[i][j] = F_i(P_j)`, one row per basis function of the reduced divisor.
pub fn build_generator(
    curve: &EdwardsCurve,
    divisor: &Divisor,
    points: &[EdwardsPoint],
) -> Result<Matrix, GoppaError> {
    let setup = setup(curve, divisor)?;
    select_with(curve, divisor, &setup, &PointPolicy::Explicit(points.to_vec()))?;
    generator_with(curve, &setup, points)
}

/// Gauss-Jordan elimination with column pivoting to `[I_k | M]`.
///
/// Returns `(perm, G_std)` where column `j` of `G_std` comes from column
/// `perm[j]` of the row-reduced `g`.
pub fn standard_form(g: &Matrix) -> Result<(Vec<usize>, Matrix), GoppaError> {
    let mut m = g.clone();
    let (rank, perm) = m.gauss_jordan(true);
    if rank < g.rows() {
        return Err(GoppaError::RankDeficient { rank, k: g.rows() });
    }
    Ok((perm, m))
}

/// `H = [-M^T | I_(n-k)]` for `G_std = [I_k | M]`.
pub fn parity_check(g_std: &Matrix) -> Matrix {
    let field = g_std.field();
    let (k, n) = (g_std.rows(), g_std.cols());
    let mut h = Matrix::zeros(field, n - k, n);
    for i in 0..n - k {
        for j in 0..k {
            h.set_raw(i, j, field.neg_raw(g_std.raw(j, k + i)));
        }
        h.set_raw(i, k + i, 1);
    }
    h
}

/// `n - deg D`, the guaranteed lower bound on the minimum distance.
pub fn designed_distance(divisor: &Divisor, n: usize) -> i64 {
    n as i64 - divisor.degree()
}

/// A constructed code with all of its matrices.
#[derive(Debug, Clone)]
pub struct LinearCode {
    curve: EdwardsCurve,
    divisor: Divisor,
    reduced: ReducedDivisor,
    basis: Vec<BasisFunction>,
    points: Vec<EdwardsPoint>,
    generator: Matrix,
    perm: Vec<usize>,
    standard: Matrix,
    parity: Matrix,
    exact_distance: Option<usize>,
}

impl LinearCode {
    pub fn build(
        curve: &EdwardsCurve,
        divisor: &Divisor,
        policy: &PointPolicy,
    ) -> Result<Self, GoppaError> {
        let setup = setup(curve, divisor)?;
        let points = select_with(curve, divisor, &setup, policy)?;
        let k = setup.basis.len();
        if points.len() < k {
            return Err(GoppaError::NotEnoughPoints {
                needed: k,
                available: points.len(),
            });
        }
        let generator = generator_with(curve, &setup, &points)?;
        let (perm, standard) = standard_form(&generator)?;
        let parity = parity_check(&standard);
        Ok(Self {
            curve: curve.clone(),
            divisor: divisor.clone(),
            reduced: setup.reduced,
            basis: setup.basis,
            points,
            generator,
            perm,
            standard,
            parity,
            exact_distance: None,
        })
    }

    pub fn curve(&self) -> &EdwardsCurve {
        &self.curve
    }

    pub fn divisor(&self) -> &Divisor {
        &self.divisor
    }

    pub fn reduced(&self) -> &ReducedDivisor {
        &self.reduced
    }

    pub fn basis(&self) -> &[BasisFunction] {
        &self.basis
    }

    pub fn points(&self) -> &[EdwardsPoint] {
        &self.points
    }

    pub fn length(&self) -> usize {
        self.points.len()
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// `G` in the order of the evaluation points.
    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn permutation(&self) -> &[usize] {
        &self.perm
    }

    /// `[I_k | M]`, columns in permuted order.
    pub fn standard_generator(&self) -> &Matrix {
        &self.standard
    }

    /// `[-M^T | I_(n-k)]`, columns in permuted order.
    pub fn parity_check(&self) -> &Matrix {
        &self.parity
    }

    pub fn designed_distance(&self) -> i64 {
        designed_distance(&self.divisor, self.length())
    }

    pub fn exact_distance(&self) -> Option<usize> {
        self.exact_distance
    }

    /// Singleton bound `n - k + 1`.
    pub fn singleton_bound(&self) -> usize {
        self.length() - self.dimension() + 1
    }

    pub fn is_mds(&self) -> Option<bool> {
        self.exact_distance.map(|d| d == self.singleton_bound())
    }

    fn check_vector(&self, v: &[FieldElement], expected: usize) -> Result<Vec<u32>, GoppaError> {
        if v.len() != expected {
            return Err(GoppaError::LengthMismatch { expected, got: v.len() });
        }
        let field = self.curve.field();
        v.iter()
            .map(|e| {
                if e.field().same_as(field) {
                    Ok(e.value())
                } else {
                    Err(FieldError::FieldMismatch.into())
                }
            })
            .collect()
    }

    fn lift(&self, raw: Vec<u32>) -> Vec<FieldElement> {
        let field = self.curve.field();
        raw.into_iter()
            .map(|v| field.element(v as u64).expect("in range"))
            .collect()
    }

    /// `c = a G` with the original-order generator.
    pub fn encode(&self, message: &[FieldElement]) -> Result<Vec<FieldElement>, GoppaError> {
        let a = self.check_vector(message, self.dimension())?;
        Ok(self.lift(self.generator.left_mul_vec(&a)))
    }

    /// `H y^T`. The word is given in the original point order; the column
    /// permutation is applied before multiplying.
    pub fn syndrome(&self, word: &[FieldElement]) -> Result<Vec<FieldElement>, GoppaError> {
        let y = self.check_vector(word, self.length())?;
        let permuted: Vec<u32> = self.perm.iter().map(|&j| y[j]).collect();
        Ok(self.lift(self.parity.mul_vec(&permuted)))
    }

    /// Exhaustive minimum distance; at most `budget` messages are enumerated.
    pub fn min_distance_exact(&self, budget: u128) -> Result<usize, GoppaError> {
        let floor = self.designed_distance().max(0) as usize;
        min_distance_exhaustive(&self.generator, floor, budget)
    }

    /// Runs [`Self::min_distance_exact`] and records the result.
    pub fn compute_exact_distance(&mut self, budget: u128) -> Result<usize, GoppaError> {
        let d = self.min_distance_exact(budget)?;
        self.exact_distance = Some(d);
        Ok(d)
    }

    pub(crate) fn set_exact_distance(&mut self, d: Option<usize>) {
        self.exact_distance = d;
    }
}
