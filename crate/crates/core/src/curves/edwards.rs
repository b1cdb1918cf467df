use std::fmt;

use super::CurveError;
use crate::field::{Field, FieldElement};

/// A point of an Edwards curve: affine, or one of the two singular points at
/// infinity `Omega1 = [0:1:0]` and `Omega2 = [0:0:1]`.
///
/// Ordering is lexicographic on the canonical encodings of `(x, y)`, with the
/// singular points last.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdwardsPoint {
    Affine { x: FieldElement, y: FieldElement },
    Omega1,
    Omega2,
}

impl EdwardsPoint {
    pub fn affine(x: FieldElement, y: FieldElement) -> Self {
        Self::Affine { x, y }
    }

    pub fn is_affine(&self) -> bool {
        matches!(self, Self::Affine { .. })
    }

    pub fn coords(&self) -> Option<(&FieldElement, &FieldElement)> {
        match self {
            Self::Affine { x, y } => Some((x, y)),
            _ => None,
        }
    }
}

impl fmt::Display for EdwardsPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Affine { x, y } => write!(f, "({x},{y})"),
            Self::Omega1 => write!(f, "Omega1"),
            Self::Omega2 => write!(f, "Omega2"),
        }
    }
}

impl fmt::Debug for EdwardsPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The curve `x^2 + y^2 = 1 + d x^2 y^2` with `d(d - 1) != 0`.
///
/// The curve is complete when `d` is not a square in the base field; only
/// complete curves admit the group law and point enumeration.
#[derive(Clone, PartialEq, Eq)]
pub struct EdwardsCurve {
    d: FieldElement,
    complete: bool,
}

impl EdwardsCurve {
    pub fn new(d: FieldElement) -> Result<Self, CurveError> {
        if d.is_zero() || d.is_one() {
            return Err(CurveError::InvalidD(d.value()));
        }
        let complete = !d.is_square();
        Ok(Self { d, complete })
    }

    pub fn field(&self) -> &Field {
        self.d.field()
    }

    pub fn d(&self) -> &FieldElement {
        &self.d
    }

    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub(crate) fn require_complete(&self) -> Result<(), CurveError> {
        if self.complete {
            Ok(())
        } else {
            Err(CurveError::IncompleteCurve)
        }
    }

    /// `O = (0, 1)`, the neutral element.
    pub fn identity(&self) -> EdwardsPoint {
        let f = self.field();
        EdwardsPoint::affine(f.zero(), f.one())
    }

    /// `O' = (0, -1)`.
    pub fn o_prime(&self) -> EdwardsPoint {
        let f = self.field();
        EdwardsPoint::affine(f.zero(), -f.one())
    }

    /// `H = (1, 0)`.
    pub fn h(&self) -> EdwardsPoint {
        let f = self.field();
        EdwardsPoint::affine(f.one(), f.zero())
    }

    /// `H' = (-1, 0)`.
    pub fn h_prime(&self) -> EdwardsPoint {
        let f = self.field();
        EdwardsPoint::affine(-f.one(), f.zero())
    }

    /// Affine point with validated coordinates.
    pub fn point(&self, x: FieldElement, y: FieldElement) -> Result<EdwardsPoint, CurveError> {
        let p = EdwardsPoint::affine(x, y);
        if self.contains(&p)? {
            Ok(p)
        } else {
            Err(CurveError::PointNotOnCurve(p.to_string()))
        }
    }

    fn lhs_rhs(&self, x: &FieldElement, y: &FieldElement) -> (FieldElement, FieldElement) {
        let x2 = x.square();
        let y2 = y.square();
        let lhs = &x2 + &y2;
        let rhs = self.field().one() + &self.d * &(&x2 * &y2);
        (lhs, rhs)
    }

    /// Equation check; the singular points are always on the curve.
    pub fn contains(&self, p: &EdwardsPoint) -> Result<bool, CurveError> {
        match p {
            EdwardsPoint::Affine { x, y } => {
                if !x.field().same_as(self.field()) || !y.field().same_as(self.field()) {
                    return Err(CurveError::FieldMismatch);
                }
                let (lhs, rhs) = self.lhs_rhs(x, y);
                Ok(lhs == rhs)
            }
            EdwardsPoint::Omega1 | EdwardsPoint::Omega2 => Ok(true),
        }
    }

    fn group_operand<'a>(
        &self,
        p: &'a EdwardsPoint,
    ) -> Result<(&'a FieldElement, &'a FieldElement), CurveError> {
        match p {
            EdwardsPoint::Affine { x, y } => {
                if !self.contains(p)? {
                    return Err(CurveError::PointNotOnCurve(p.to_string()));
                }
                Ok((x, y))
            }
            _ => Err(CurveError::SingularPointInput(p.to_string())),
        }
    }

    /// Complete Edwards addition:
    /// `x3 = (x1 y2 + y1 x2) / (1 + d x1 x2 y1 y2)`,
    /// `y3 = (y1 y2 - x1 x2) / (1 - d x1 x2 y1 y2)`.
    pub fn add(&self, p: &EdwardsPoint, q: &EdwardsPoint) -> Result<EdwardsPoint, CurveError> {
        self.require_complete()?;
        let (x1, y1) = self.group_operand(p)?;
        let (x2, y2) = self.group_operand(q)?;
        let one = self.field().one();
        let t = &self.d * &(&(x1 * x2) * &(y1 * y2));
        // nonzero for every pair of affine points when d is a non-square
        let x3 = (x1 * y2 + y1 * x2).checked_div(&(&one + &t))?;
        let y3 = (y1 * y2 - x1 * x2).checked_div(&(&one - &t))?;
        Ok(EdwardsPoint::affine(x3, y3))
    }

    /// `(x, y) -> (-x, y)`.
    pub fn neg(&self, p: &EdwardsPoint) -> Result<EdwardsPoint, CurveError> {
        let (x, y) = self.group_operand(p)?;
        Ok(EdwardsPoint::affine(-x, y.clone()))
    }

    /// `n * p` by double-and-add; negative `n` negates first.
    pub fn scalar_mul(&self, n: i64, p: &EdwardsPoint) -> Result<EdwardsPoint, CurveError> {
        self.require_complete()?;
        self.group_operand(p)?;
        let base = if n < 0 { self.neg(p)? } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = self.identity();
        let mut addend = base;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &addend)?;
            }
            k >>= 1;
            if k > 0 {
                addend = self.add(&addend, &addend)?;
            }
        }
        Ok(acc)
    }

    /// Order of `p` in the group; brute force, for small curves.
    pub fn order_of(&self, p: &EdwardsPoint) -> Result<u64, CurveError> {
        let o = self.identity();
        let mut acc = p.clone();
        let mut n = 1;
        while acc != o {
            acc = self.add(&acc, p)?;
            n += 1;
        }
        Ok(n)
    }

    /// All affine points, sorted by `(x, y)` encodings.
    pub fn points(&self) -> Result<Vec<EdwardsPoint>, CurveError> {
        self.require_complete()?;
        let f = self.field();
        let one = f.one();
        let mut out = Vec::new();
        for x in f.elements() {
            let x2 = x.square();
            // 1 - d x^2 vanishes only if d = 1/x^2 is a square
            let y2 = (&one - &x2).checked_div(&(&one - &self.d * &x2))?;
            if let Some((r, s)) = y2.sqrt() {
                out.push(EdwardsPoint::affine(x.clone(), r.clone()));
                if r != s {
                    out.push(EdwardsPoint::affine(x.clone(), s));
                }
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for EdwardsCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "EdwardsCurve {{ x^2 + y^2 = 1 + {}x^2y^2 over {} }}",
            self.d,
            self.field()
        )
    }
}
