// Points hold a `Field` handle whose operation counters are atomics; ordering
// and hashing only look at coordinates, so the counters never affect keys.
#![allow(clippy::mutable_key_type)]

use std::collections::BTreeMap;
use std::fmt;

use super::RrError;
use crate::curves::{CurveError, EdwardsCurve, EdwardsPoint};

/// A finite formal sum `sum n_P P` of Edwards points with nonzero
/// multiplicities. Terms are kept sorted by point.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Divisor {
    terms: BTreeMap<EdwardsPoint, i64>,
}

impl Divisor {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Merges duplicate points and drops zero multiplicities. Every point must
    /// lie on `curve`.
    pub fn new<I>(curve: &EdwardsCurve, terms: I) -> Result<Self, RrError>
    where
        I: IntoIterator<Item = (EdwardsPoint, i64)>,
    {
        let mut out = BTreeMap::new();
        for (p, n) in terms {
            if !curve.contains(&p)? {
                return Err(CurveError::PointNotOnCurve(p.to_string()).into());
            }
            *out.entry(p).or_insert(0) += n;
        }
        out.retain(|_, n| *n != 0);
        Ok(Self { terms: out })
    }

    pub fn point(curve: &EdwardsCurve, p: EdwardsPoint, n: i64) -> Result<Self, RrError> {
        Self::new(curve, [(p, n)])
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support(&self) -> impl Iterator<Item = &EdwardsPoint> {
        self.terms.keys()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&EdwardsPoint, i64)> {
        self.terms.iter().map(|(p, &n)| (p, n))
    }

    pub fn multiplicity(&self, p: &EdwardsPoint) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    pub fn in_support(&self, p: &EdwardsPoint) -> bool {
        self.terms.contains_key(p)
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&n| n > 0)
    }

    /// First singular point in the support, if any.
    pub fn singular_point(&self) -> Option<&EdwardsPoint> {
        self.support().find(|p| !p.is_affine())
    }

    pub fn sum(&self, other: &Divisor) -> Divisor {
        let mut terms = self.terms.clone();
        for (p, &n) in &other.terms {
            *terms.entry(p.clone()).or_insert(0) += n;
        }
        terms.retain(|_, n| *n != 0);
        Divisor { terms }
    }
}

impl fmt::Display for Divisor {
    /// `(x,y)^n + ... + kO`, where `O = (0,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let is_identity = |p: &EdwardsPoint| {
            p.coords()
                .is_some_and(|(x, y)| x.is_zero() && y.is_one())
        };
        let mut parts: Vec<String> = self
            .terms
            .iter()
            .filter(|(p, _)| !is_identity(p))
            .map(|(p, &n)| if n == 1 { p.to_string() } else { format!("{p}^{n}") })
            .collect();
        if let Some((_, &n)) = self.terms.iter().find(|(p, _)| is_identity(p)) {
            parts.push(if n == 1 { "O".to_string() } else { format!("{n}O") });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for Divisor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Divisor({self})")
    }
}

/// The pair `(P, k)` with `D ~ P + kO`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReducedDivisor {
    pub point: EdwardsPoint,
    pub k: i64,
}

impl ReducedDivisor {
    pub fn degree(&self) -> i64 {
        self.k + 1
    }

    /// `P + kO` as a divisor; `(k + 1)O` when `P = O`.
    pub fn to_divisor(&self, curve: &EdwardsCurve) -> Result<Divisor, RrError> {
        Divisor::new(curve, [(self.point.clone(), 1), (curve.identity(), self.k)])
    }
}

/// Reduces `D` of positive degree to `P + kO` with `P = sum n_Q Q` in the
/// group law and `k = deg D - 1`.
pub fn divisor_class_reduce(curve: &EdwardsCurve, d: &Divisor) -> Result<ReducedDivisor, RrError> {
    if let Some(p) = d.singular_point() {
        return Err(RrError::SingularPointInSupport(p.to_string()));
    }
    let deg = d.degree();
    if deg < 1 {
        return Err(RrError::NonpositiveDegree(deg));
    }
    let mut acc = curve.identity();
    for (q, n) in d.terms() {
        let nq = curve.scalar_mul(n, q)?;
        acc = curve.add(&acc, &nq)?;
    }
    Ok(ReducedDivisor { point: acc, k: deg - 1 })
}
