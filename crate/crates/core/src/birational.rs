//! The birational maps between a complete Edwards curve and a Weierstrass
//! model `y^2 = x^3 + a x^2 + b x`:
//!
//! ```text
//! alpha(x^, y^) = (x1 (1 + y^)/(1 - y^), y1 (1 + y^)/(x^ (1 - y^)))
//! beta(x, y)    = (y1 x/(x1 y), (x - x1)/(x + x1))
//! ```
//!
//! where `(x1, y1)` is a Weierstrass point with `2 (x1, y1) = (0, 0)`.

use thiserror::Error;

use crate::curves::{CurveError, EdwardsCurve, EdwardsPoint, WeierstrassCurve, WeierstrassPoint};
use crate::field::{FieldElement, FieldError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("alpha is undefined at the singular point {0}")]
    UndefinedAtSingularPoint(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
}

impl MapError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::UndefinedAtSingularPoint(_) => "UndefinedAtSingularPoint",
            Self::Curve(e) => e.name(),
        }
    }
}

impl From<FieldError> for MapError {
    fn from(e: FieldError) -> Self {
        Self::Curve(CurveError::Field(e))
    }
}

/// An Edwards curve together with its Weierstrass model and the base point
/// `(x1, y1)` of the maps.
#[derive(Debug, Clone)]
pub struct BirationalPair {
    edwards: EdwardsCurve,
    weierstrass: WeierstrassCurve,
    x1: FieldElement,
    y1: FieldElement,
    to_omega1: Vec<WeierstrassPoint>,
    to_omega2: Vec<WeierstrassPoint>,
}

/// Points of `w` sent to the singular points by `beta`: the nonzero roots
/// `(t, 0)` of the cubic, and the fiber `(-x1, +-s1)`.
fn exceptional_points(
    w: &WeierstrassCurve,
    x1: &FieldElement,
) -> Result<(Vec<WeierstrassPoint>, Vec<WeierstrassPoint>), FieldError> {
    let f = w.field();
    let two = f.from_int(2);
    let disc = w.a().square() - f.from_int(4) * w.b();
    let mut roots = Vec::new();
    if let Some((r, s)) = disc.sqrt() {
        for root in [r, s] {
            let t = (-w.a() + root).checked_div(&two)?;
            let pt = WeierstrassPoint::affine(t, f.zero());
            if !roots.contains(&pt) {
                roots.push(pt);
            }
        }
    }
    let x = -x1;
    let mut fiber = Vec::new();
    if let Some((r, s)) = w.cubic(&x).sqrt() {
        fiber.push(WeierstrassPoint::affine(x.clone(), r.clone()));
        if r != s {
            fiber.push(WeierstrassPoint::affine(x, s));
        }
    }
    Ok((roots, fiber))
}

impl BirationalPair {
    /// Fixes `x1 = y1 = (1 - d)/4`, `a = (1 + d)/2`, `b = (1 - d)^2/16`.
    pub fn canonical(edwards: &EdwardsCurve) -> Result<Self, MapError> {
        edwards.require_complete()?;
        let f = edwards.field();
        let one = f.one();
        let d = edwards.d();
        let x1 = (&one - d).checked_div(&f.from_int(4))?;
        let a = (&one + d).checked_div(&f.from_int(2))?;
        let b = x1.square();
        let weierstrass = WeierstrassCurve::new(a, b)?;
        let (to_omega1, to_omega2) = exceptional_points(&weierstrass, &x1)?;
        Ok(Self {
            edwards: edwards.clone(),
            weierstrass,
            y1: x1.clone(),
            x1,
            to_omega1,
            to_omega2,
        })
    }

    pub fn edwards(&self) -> &EdwardsCurve {
        &self.edwards
    }

    pub fn weierstrass(&self) -> &WeierstrassCurve {
        &self.weierstrass
    }

    pub fn base_point(&self) -> WeierstrassPoint {
        WeierstrassPoint::affine(self.x1.clone(), self.y1.clone())
    }

    /// Points `(t, 0)`, `t != 0`, mapped to `Omega1`.
    pub fn omega1_fiber(&self) -> &[WeierstrassPoint] {
        &self.to_omega1
    }

    /// Points `(-x1, +-s1)` mapped to `Omega2`.
    pub fn omega2_fiber(&self) -> &[WeierstrassPoint] {
        &self.to_omega2
    }

    pub fn is_exceptional(&self, q: &WeierstrassPoint) -> bool {
        self.to_omega1.contains(q) || self.to_omega2.contains(q)
    }

    pub fn alpha(&self, p: &EdwardsPoint) -> Result<WeierstrassPoint, MapError> {
        let (xh, yh) = match p {
            EdwardsPoint::Affine { x, y } => (x, y),
            _ => return Err(MapError::UndefinedAtSingularPoint(p.to_string())),
        };
        if !self.edwards.contains(p)? {
            return Err(CurveError::PointNotOnCurve(p.to_string()).into());
        }
        let f = self.edwards.field();
        let one = f.one();
        if xh.is_zero() {
            // the only affine points with x^ = 0 are O and O'
            return Ok(if yh.is_one() {
                WeierstrassPoint::Omega
            } else {
                WeierstrassPoint::affine(f.zero(), f.zero())
            });
        }
        let u = (&one + yh).checked_div(&(&one - yh))?;
        let x = &self.x1 * &u;
        let y = (&self.y1 * &u).checked_div(xh)?;
        Ok(WeierstrassPoint::affine(x, y))
    }

    pub fn beta(&self, q: &WeierstrassPoint) -> Result<EdwardsPoint, MapError> {
        if !self.weierstrass.contains(q)? {
            return Err(CurveError::PointNotOnCurve(q.to_string()).into());
        }
        let (x, y) = match q {
            WeierstrassPoint::Omega => return Ok(self.edwards.identity()),
            WeierstrassPoint::Affine { x, y } => (x, y),
        };
        if y.is_zero() {
            return Ok(if x.is_zero() {
                self.edwards.o_prime()
            } else {
                EdwardsPoint::Omega1
            });
        }
        if (x + &self.x1).is_zero() {
            return Ok(EdwardsPoint::Omega2);
        }
        let xh = (&self.y1 * x).checked_div(&(&self.x1 * y))?;
        let yh = (x - &self.x1).checked_div(&(x + &self.x1))?;
        Ok(EdwardsPoint::affine(xh, yh))
    }
}
