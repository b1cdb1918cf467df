use std::fmt;

use super::CurveError;
use crate::field::{Field, FieldElement};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeierstrassPoint {
    Affine { x: FieldElement, y: FieldElement },
    /// The point at infinity `[0:0:1]`.
    Omega,
}

impl WeierstrassPoint {
    pub fn affine(x: FieldElement, y: FieldElement) -> Self {
        Self::Affine { x, y }
    }

    pub fn coords(&self) -> Option<(&FieldElement, &FieldElement)> {
        match self {
            Self::Affine { x, y } => Some((x, y)),
            Self::Omega => None,
        }
    }
}

impl fmt::Display for WeierstrassPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Affine { x, y } => write!(f, "({x},{y})"),
            Self::Omega => write!(f, "Omega"),
        }
    }
}

impl fmt::Debug for WeierstrassPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The smooth curve `y^2 = x^3 + a x^2 + b x`.
#[derive(Clone, PartialEq, Eq)]
pub struct WeierstrassCurve {
    a: FieldElement,
    b: FieldElement,
}

impl WeierstrassCurve {
    pub fn new(a: FieldElement, b: FieldElement) -> Result<Self, CurveError> {
        if !a.field().same_as(b.field()) {
            return Err(CurveError::FieldMismatch);
        }
        let four = a.field().from_int(4);
        let disc = a.square() - &four * &b;
        if b.is_zero() || disc.is_zero() {
            return Err(CurveError::SingularCurve {
                a: a.value(),
                b: b.value(),
            });
        }
        Ok(Self { a, b })
    }

    pub fn field(&self) -> &Field {
        self.a.field()
    }

    pub fn a(&self) -> &FieldElement {
        &self.a
    }

    pub fn b(&self) -> &FieldElement {
        &self.b
    }

    /// Right-hand side `x^3 + a x^2 + b x`.
    pub fn cubic(&self, x: &FieldElement) -> FieldElement {
        x * &(x * &(x + &self.a) + &self.b)
    }

    pub fn point(&self, x: FieldElement, y: FieldElement) -> Result<WeierstrassPoint, CurveError> {
        let p = WeierstrassPoint::affine(x, y);
        self.check(&p)?;
        Ok(p)
    }

    pub fn contains(&self, p: &WeierstrassPoint) -> Result<bool, CurveError> {
        match p {
            WeierstrassPoint::Affine { x, y } => {
                if !x.field().same_as(self.field()) || !y.field().same_as(self.field()) {
                    return Err(CurveError::FieldMismatch);
                }
                Ok(y.square() == self.cubic(x))
            }
            WeierstrassPoint::Omega => Ok(true),
        }
    }

    fn check(&self, p: &WeierstrassPoint) -> Result<(), CurveError> {
        if self.contains(p)? {
            Ok(())
        } else {
            Err(CurveError::PointNotOnCurve(p.to_string()))
        }
    }

    pub fn neg(&self, p: &WeierstrassPoint) -> Result<WeierstrassPoint, CurveError> {
        self.check(p)?;
        Ok(match p {
            WeierstrassPoint::Affine { x, y } => WeierstrassPoint::affine(x.clone(), -y),
            WeierstrassPoint::Omega => WeierstrassPoint::Omega,
        })
    }

    /// Chord-tangent addition with neutral element `Omega`.
    pub fn add(
        &self,
        p: &WeierstrassPoint,
        q: &WeierstrassPoint,
    ) -> Result<WeierstrassPoint, CurveError> {
        self.check(p)?;
        self.check(q)?;
        let (x1, y1, x2, y2) = match (p, q) {
            (WeierstrassPoint::Omega, _) => return Ok(q.clone()),
            (_, WeierstrassPoint::Omega) => return Ok(p.clone()),
            (
                WeierstrassPoint::Affine { x: x1, y: y1 },
                WeierstrassPoint::Affine { x: x2, y: y2 },
            ) => (x1, y1, x2, y2),
        };
        let f = self.field();
        let slope = if x1 == x2 {
            // vertical chord, or tangent at a 2-torsion point
            if (y1 + y2).is_zero() {
                return Ok(WeierstrassPoint::Omega);
            }
            let num = f.from_int(3) * x1.square() + f.from_int(2) * (&self.a * x1) + &self.b;
            num.checked_div(&(f.from_int(2) * y1))?
        } else {
            (y2 - y1).checked_div(&(x2 - x1))?
        };
        let x3 = slope.square() - &self.a - x1 - x2;
        let y3 = &slope * &(x1 - &x3) - y1;
        Ok(WeierstrassPoint::affine(x3, y3))
    }

    pub fn scalar_mul(&self, n: i64, p: &WeierstrassPoint) -> Result<WeierstrassPoint, CurveError> {
        let base = if n < 0 { self.neg(p)? } else { p.clone() };
        self.check(&base)?;
        let mut k = n.unsigned_abs();
        let mut acc = WeierstrassPoint::Omega;
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

    /// `Omega` followed by the affine points sorted by `(x, y)`.
    pub fn points(&self) -> Vec<WeierstrassPoint> {
        let mut out = vec![WeierstrassPoint::Omega];
        for x in self.field().elements() {
            if let Some((r, s)) = self.cubic(&x).sqrt() {
                out.push(WeierstrassPoint::affine(x.clone(), r.clone()));
                if r != s {
                    out.push(WeierstrassPoint::affine(x, s));
                }
            }
        }
        out
    }
}

impl fmt::Debug for WeierstrassCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "WeierstrassCurve {{ y^2 = x^3 + {}x^2 + {}x over {} }}",
            self.a,
            self.b,
            self.field()
        )
    }
}
