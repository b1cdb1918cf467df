use std::fmt;

use super::RrError;
use crate::curves::{CurveError, EdwardsCurve, EdwardsPoint};
use crate::field::FieldElement;

/// One member of the basis of `L(P + kO)`, written in affine coordinates.
///
/// | variant         | index  | function                        |
/// |-----------------|--------|---------------------------------|
/// | `F0`            | 0      | `1`                             |
/// | `F1OPrime`      | 1      | `1/x`                  (P = O') |
/// | `F1H`           | 1      | `(x+1)(y+1)/(xy)`      (P = H)  |
/// | `F1HPrime`      | 1      | `(x-1)(y+1)/(xy)`      (P = H') |
/// | `F1Generic`     | 1      | `x(y+b)/((x-a)(y-1))`  (P = (a,b)) |
/// | `Even(h)`       | 2h     | `1/(y-1)^h`                     |
/// | `Odd(h)`        | 2h + 1 | `(y+1)/(x(y-1)^h)`              |
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum BasisFunction {
    F0,
    F1OPrime,
    F1H,
    F1HPrime,
    F1Generic { a: FieldElement, b: FieldElement },
    Even(u32),
    Odd(u32),
}

impl BasisFunction {
    /// `F_i` for `i >= 2`.
    pub fn of_index(i: u32) -> Self {
        assert!(i >= 2, "F_{i} is not a power-type basis function");
        if i % 2 == 0 {
            Self::Even(i / 2)
        } else {
            Self::Odd(i / 2)
        }
    }

    pub fn index(&self) -> u32 {
        match self {
            Self::F0 => 0,
            Self::F1OPrime | Self::F1H | Self::F1HPrime | Self::F1Generic { .. } => 1,
            Self::Even(h) => 2 * h,
            Self::Odd(h) => 2 * h + 1,
        }
    }
}

impl fmt::Display for BasisFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pow = |h: u32| {
            if h == 1 {
                "(y-1)".to_string()
            } else {
                format!("(y-1)^{h}")
            }
        };
        match self {
            Self::F0 => write!(f, "1"),
            Self::F1OPrime => write!(f, "1/x"),
            Self::F1H => write!(f, "(x+1)(y+1)/(xy)"),
            Self::F1HPrime => write!(f, "(x-1)(y+1)/(xy)"),
            Self::F1Generic { a, b } => {
                let xa = if a.is_zero() { "x".to_string() } else { format!("(x-{a})") };
                let yb = if b.is_zero() { "y".to_string() } else { format!("(y+{b})") };
                write!(f, "x{yb}/({xa}(y-1))")
            }
            Self::Even(h) => write!(f, "1/{}", pow(*h)),
            Self::Odd(h) => write!(f, "(y+1)/(x{})", pow(*h)),
        }
    }
}

impl fmt::Debug for BasisFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}[{}]", self.index(), self)
    }
}

fn affine_on_curve<'a>(
    curve: &EdwardsCurve,
    p: &'a EdwardsPoint,
) -> Result<(&'a FieldElement, &'a FieldElement), RrError> {
    let (x, y) = p.coords().ok_or_else(|| RrError::SingularPoint(p.to_string()))?;
    if !curve.contains(p)? {
        return Err(CurveError::PointNotOnCurve(p.to_string()).into());
    }
    Ok((x, y))
}

/// Basis of `L(P + kO)`: `[F0, F1, F2, ..., Fk]` when `P != O`, and
/// `[F0, F2, ..., F(k+1)]` when `P = O`.
pub fn rr_basis(curve: &EdwardsCurve, p: &EdwardsPoint, k: i64) -> Result<Vec<BasisFunction>, RrError> {
    curve.require_complete()?;
    let (a, b) = affine_on_curve(curve, p)?;
    if k < 0 {
        return Err(RrError::NegativeK(k));
    }
    let k = k as u32;
    let mut out = vec![BasisFunction::F0];
    let top = if *p == curve.identity() {
        k + 1
    } else {
        if k >= 1 {
            out.push(if *p == curve.o_prime() {
                BasisFunction::F1OPrime
            } else if *p == curve.h() {
                BasisFunction::F1H
            } else if *p == curve.h_prime() {
                BasisFunction::F1HPrime
            } else {
                BasisFunction::F1Generic { a: a.clone(), b: b.clone() }
            });
        }
        k
    };
    out.extend((2..=top).map(BasisFunction::of_index));
    Ok(out)
}

fn indeterminate(f: &BasisFunction, x: &FieldElement, y: &FieldElement) -> RrError {
    RrError::IndeterminateAt {
        function: format!("{f:?}"),
        point: format!("({x},{y})"),
    }
}

/// Direct evaluation of one basis function at an affine point.
pub fn evaluate_basis_function(
    curve: &EdwardsCurve,
    f: &BasisFunction,
    q: &EdwardsPoint,
) -> Result<FieldElement, RrError> {
    let (x, y) = affine_on_curve(curve, q)?;
    let field = curve.field();
    let one = field.one();
    let bad = || indeterminate(f, x, y);
    let inv = |v: FieldElement| v.inv().map_err(|_| bad());
    Ok(match f {
        BasisFunction::F0 => one,
        BasisFunction::F1OPrime => inv(x.clone())?,
        BasisFunction::F1H => (x + &one) * (y + &one) * inv(x * y)?,
        BasisFunction::F1HPrime => (x - &one) * (y + &one) * inv(x * y)?,
        BasisFunction::F1Generic { a, b } => x * &(y + b) * inv((x - a) * (y - &one))?,
        BasisFunction::Even(h) => inv(y - &one)?.pow(*h as u64),
        BasisFunction::Odd(h) => {
            let den = inv(x * &(y - &one).pow(*h as u64))?;
            (y + &one) * den
        }
    })
}

/// Evaluates a basis at one point, sharing work between the power-type
/// functions: `F(2h) = F2 F(2h-2)` and `F(2h+1) = ((y+1)/x) F(2h)`.
#[derive(Debug, Clone)]
pub struct PointEvaluator<'a> {
    curve: &'a EdwardsCurve,
    x: FieldElement,
    y: FieldElement,
    ratio: Option<FieldElement>,
}

impl<'a> PointEvaluator<'a> {
    /// Validates `q` and precomputes `(y+1)/x` when `x != 0`.
    pub fn new(curve: &'a EdwardsCurve, q: &EdwardsPoint) -> Result<Self, RrError> {
        let (x, y) = affine_on_curve(curve, q)?;
        let ratio = if x.is_zero() {
            None
        } else {
            Some((y + &curve.field().one()).checked_div(x)?)
        };
        Ok(Self {
            curve,
            x: x.clone(),
            y: y.clone(),
            ratio,
        })
    }

    pub fn point(&self) -> EdwardsPoint {
        EdwardsPoint::affine(self.x.clone(), self.y.clone())
    }

    /// Values of `F2, F3, ..., F(top)`; one multiplication per function after `F2`.
    pub fn powers(&self, top: u32) -> Result<Vec<FieldElement>, RrError> {
        let mut out: Vec<FieldElement> = Vec::with_capacity(top.saturating_sub(1) as usize);
        if top < 2 {
            return Ok(out);
        }
        let f2 = (&self.y - &self.curve.field().one())
            .inv()
            .map_err(|_| indeterminate(&BasisFunction::Even(1), &self.x, &self.y))?;
        out.push(f2.clone());
        for i in 3..=top {
            // out[j] holds F(j + 2)
            let next = if i % 2 == 1 {
                let ratio = self
                    .ratio
                    .as_ref()
                    .ok_or_else(|| indeterminate(&BasisFunction::of_index(i), &self.x, &self.y))?;
                ratio * &out[(i - 3) as usize]
            } else {
                &f2 * &out[(i - 4) as usize]
            };
            out.push(next);
        }
        Ok(out)
    }

    pub fn evaluate(&self, basis: &[BasisFunction]) -> Result<Vec<FieldElement>, RrError> {
        let top = basis.iter().map(BasisFunction::index).max().unwrap_or(0);
        let powers = self.powers(top)?;
        basis
            .iter()
            .map(|f| match f {
                BasisFunction::Even(_) | BasisFunction::Odd(_) => {
                    Ok(powers[(f.index() - 2) as usize].clone())
                }
                _ => evaluate_basis_function(self.curve, f, &self.point()),
            })
            .collect()
    }
}

/// Whole-basis evaluation at `q` through [`PointEvaluator`].
pub fn evaluate_basis_incremental(
    curve: &EdwardsCurve,
    basis: &[BasisFunction],
    q: &EdwardsPoint,
) -> Result<Vec<FieldElement>, RrError> {
    PointEvaluator::new(curve, q)?.evaluate(basis)
}
