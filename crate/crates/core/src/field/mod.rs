//! Finite fields GF(p^t) for odd primes p.
//!
//! Elements are stored by their canonical integer encoding: the coefficient
//! vector of the residue polynomial read as base-p digits, little-endian.
//! Extension arithmetic works on polynomials modulo a monic irreducible
//! modulus. Every [`Field`] instance carries its own multiplication and
//! inversion counters.

mod poly;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("characteristic 2 is not supported")]
    EvenCharacteristic,
    #[error("modulus {0:?} is not irreducible")]
    NotIrreducible(Vec<u32>),
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("field order {0} exceeds the supported maximum {MAX_ORDER}")]
    FieldTooLarge(u64),
    #[error("element encoding {value} out of range for a field of order {order}")]
    ElementOutOfRange { value: u64, order: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
}

impl FieldError {
    pub fn name(&self) -> &'static str {
        match self {
            Self::NotPrime(_) => "NotPrime",
            Self::EvenCharacteristic => "EvenCharacteristic",
            Self::NotIrreducible(_) => "NotIrreducible",
            Self::InvalidModulus(_) => "InvalidModulus",
            Self::InvalidDegree => "InvalidDegree",
            Self::FieldTooLarge(_) => "FieldTooLarge",
            Self::ElementOutOfRange { .. } => "ElementOutOfRange",
            Self::DivisionByZero => "DivisionByZero",
            Self::FieldMismatch => "FieldMismatch",
        }
    }
}

/// Serializable field descriptor: `{"p": .., "t": .., "modulus": [..]}`.
///
/// For prime fields the modulus is the placeholder `[0, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FieldSpec {
    pub p: u32,
    pub t: u32,
    pub modulus: Vec<u32>,
}

/// Snapshot of a field's operation counters.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OpCounts {
    pub multiplications: u64,
    pub inversions: u64,
}

#[derive(Debug, Default)]
struct Counters {
    multiplications: AtomicU64,
    inversions: AtomicU64,
}

#[derive(Debug)]
struct FieldInner {
    spec: FieldSpec,
    q: u32,
    counters: Counters,
}

/// Shared handle to a validated finite field.
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldInner>,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}

fn check_characteristic(p: u64) -> Result<(), FieldError> {
    if p == 2 {
        return Err(FieldError::EvenCharacteristic);
    }
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    Ok(())
}

fn checked_order(p: u64, t: u32) -> Result<u64, FieldError> {
    let mut q: u64 = 1;
    for _ in 0..t {
        q = q.saturating_mul(p);
        if q > MAX_ORDER {
            return Err(FieldError::FieldTooLarge(q));
        }
    }
    Ok(q)
}

/// Lexicographically smallest monic irreducible polynomial of degree `t >= 2`
/// over GF(p): the constant term varies fastest, then the higher coefficients.
pub fn find_irreducible(p: u32, t: u32) -> Result<Vec<u32>, FieldError> {
    check_characteristic(p as u64)?;
    if t < 2 {
        return Err(FieldError::InvalidDegree);
    }
    let count = checked_order(p as u64, t)? as u32;
    let found = (0..count)
        .map(|m| {
            let mut f: Vec<u32> = (0..t).map(|i| (m / p.pow(i)) % p).collect();
            f.push(1);
            f
        })
        .find(|f| poly::is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree");
    Ok(found)
}

impl Field {
    /// Builds GF(p^t). Without an explicit modulus, an extension field uses
    /// [`find_irreducible`].
    pub fn new(p: u32, t: u32, modulus: Option<Vec<u32>>) -> Result<Self, FieldError> {
        check_characteristic(p as u64)?;
        if t == 0 {
            return Err(FieldError::InvalidDegree);
        }
        let q = checked_order(p as u64, t)? as u32;
        let modulus = match (t, modulus) {
            (1, None) => vec![0, 1],
            (1, Some(m)) => {
                if m != [0, 1] {
                    return Err(FieldError::InvalidModulus(
                        "prime fields take the placeholder modulus [0, 1]".into(),
                    ));
                }
                m
            }
            (_, None) => find_irreducible(p, t)?,
            (_, Some(m)) => {
                if m.len() != t as usize + 1 || m.last() != Some(&1) {
                    return Err(FieldError::InvalidModulus(format!(
                        "expected a monic polynomial of degree {t}, got {m:?}"
                    )));
                }
                if m.iter().any(|&c| c >= p) {
                    return Err(FieldError::InvalidModulus(format!(
                        "coefficients of {m:?} are not reduced mod {p}"
                    )));
                }
                if !poly::is_irreducible(&m, p) {
                    return Err(FieldError::NotIrreducible(m));
                }
                m
            }
        };
        Ok(Self {
            inner: Arc::new(FieldInner {
                spec: FieldSpec { p, t, modulus },
                q,
                counters: Counters::default(),
            }),
        })
    }

    pub fn prime(p: u32) -> Result<Self, FieldError> {
        Self::new(p, 1, None)
    }

    pub fn from_spec(spec: &FieldSpec) -> Result<Self, FieldError> {
        Self::new(spec.p, spec.t, Some(spec.modulus.clone()))
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.inner.spec
    }

    pub fn characteristic(&self) -> u32 {
        self.inner.spec.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.spec.t
    }

    pub fn order(&self) -> u32 {
        self.inner.q
    }

    pub fn zero(&self) -> FieldElement {
        self.raw(0)
    }

    pub fn one(&self) -> FieldElement {
        self.raw(1)
    }

    /// Element from its canonical integer encoding `0 <= value < q`.
    pub fn element(&self, value: u64) -> Result<FieldElement, FieldError> {
        if value >= self.inner.q as u64 {
            return Err(FieldError::ElementOutOfRange {
                value,
                order: self.inner.q as u64,
            });
        }
        Ok(self.raw(value as u32))
    }

    /// Image of an integer under `Z -> GF(q)`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        let p = self.inner.spec.p as i64;
        self.raw(n.rem_euclid(p) as u32)
    }

    /// Element from little-endian coefficients, each reduced mod p.
    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<FieldElement, FieldError> {
        let p = self.inner.spec.p;
        let t = self.inner.spec.t as usize;
        if coeffs.len() > t || coeffs.iter().any(|&c| c >= p) {
            return Err(FieldError::InvalidModulus(format!(
                "{coeffs:?} is not a reduced coefficient vector of length <= {t}"
            )));
        }
        Ok(self.raw(self.encode(coeffs)))
    }

    pub(crate) fn raw(&self, value: u32) -> FieldElement {
        debug_assert!(value < self.inner.q);
        FieldElement {
            field: self.clone(),
            value,
        }
    }

    /// All q elements in canonical encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.inner.q).map(move |v| self.raw(v))
    }

    pub fn op_counts(&self) -> OpCounts {
        let c = &self.inner.counters;
        OpCounts {
            multiplications: c.multiplications.load(AtomicOrdering::Relaxed),
            inversions: c.inversions.load(AtomicOrdering::Relaxed),
        }
    }

    pub fn reset_op_counts(&self) {
        let c = &self.inner.counters;
        c.multiplications.store(0, AtomicOrdering::Relaxed);
        c.inversions.store(0, AtomicOrdering::Relaxed);
    }

    pub fn same_as(&self, other: &Field) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.spec == other.inner.spec
    }

    fn decode(&self, v: u32) -> Vec<u32> {
        let p = self.inner.spec.p;
        let mut out = Vec::with_capacity(self.inner.spec.t as usize);
        let mut v = v;
        while v > 0 {
            out.push(v % p);
            v /= p;
        }
        out
    }

    fn encode(&self, coeffs: &[u32]) -> u32 {
        let p = self.inner.spec.p;
        coeffs.iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    // Uncounted arithmetic on encodings. These are the primitives everything else is
    // built from; the counted wrappers live on FieldElement.

    pub(crate) fn add_raw(&self, a: u32, b: u32) -> u32 {
        let p = self.inner.spec.p;
        if self.inner.spec.t == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let (mut out, mut place) = (0u32, 1u32);
        while a > 0 || b > 0 {
            out += ((a % p + b % p) % p) * place;
            a /= p;
            b /= p;
            place = place.wrapping_mul(p);
        }
        out
    }

    pub(crate) fn neg_raw(&self, a: u32) -> u32 {
        let p = self.inner.spec.p;
        if self.inner.spec.t == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let neg: Vec<u32> = self.decode(a).into_iter().map(|c| (p - c) % p).collect();
        self.encode(&neg)
    }

    pub(crate) fn sub_raw(&self, a: u32, b: u32) -> u32 {
        self.add_raw(a, self.neg_raw(b))
    }

    pub(crate) fn mul_raw(&self, a: u32, b: u32) -> u32 {
        let spec = &self.inner.spec;
        if spec.t == 1 {
            return ((a as u64 * b as u64) % spec.p as u64) as u32;
        }
        let prod = poly::mul_rem(&self.decode(a), &self.decode(b), &spec.modulus, spec.p);
        self.encode(&prod)
    }

    pub(crate) fn inv_raw(&self, a: u32) -> Option<u32> {
        let spec = &self.inner.spec;
        if a == 0 {
            return None;
        }
        if spec.t == 1 {
            return poly::inv_mod(a, spec.p);
        }
        poly::inv_rem(&self.decode(a), &spec.modulus, spec.p).map(|c| self.encode(&c))
    }

    fn count_mul(&self) {
        self.inner
            .counters
            .multiplications
            .fetch_add(1, AtomicOrdering::Relaxed);
    }

    fn count_inv(&self) {
        self.inner
            .counters
            .inversions
            .fetch_add(1, AtomicOrdering::Relaxed);
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({}", self.inner.q)?;
        if self.inner.spec.t > 1 {
            write!(f, "; modulus {:?}", self.inner.spec.modulus)?;
        }
        write!(f, ")")
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let spec = &self.inner.spec;
        if spec.t == 1 {
            write!(f, "GF({})", spec.p)
        } else {
            write!(f, "GF({}^{})", spec.p, spec.t)
        }
    }
}

/// An element of a [`Field`].
///
/// The binary operators panic when the operands come from different fields;
/// the `checked_*` methods report [`FieldError::FieldMismatch`] instead.
#[derive(Clone)]
pub struct FieldElement {
    field: Field,
    value: u32,
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Canonical integer encoding.
    pub fn value(&self) -> u32 {
        self.value
    }

    /// Little-endian coefficients over GF(p), padded to the extension degree.
    pub fn coeffs(&self) -> Vec<u32> {
        let mut c = self.field.decode(self.value);
        c.resize(self.field.degree() as usize, 0);
        c
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn is_one(&self) -> bool {
        self.value == 1
    }

    fn same_field(&self, rhs: &Self) -> Result<(), FieldError> {
        if self.field.same_as(&rhs.field) {
            Ok(())
        } else {
            Err(FieldError::FieldMismatch)
        }
    }

    fn with(&self, value: u32) -> Self {
        self.field.raw(value)
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.with(self.field.add_raw(self.value, rhs.value)))
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        Ok(self.with(self.field.sub_raw(self.value, rhs.value)))
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        self.field.count_mul();
        Ok(self.with(self.field.mul_raw(self.value, rhs.value)))
    }

    /// `self / rhs`, one inversion plus one multiplication.
    pub fn checked_div(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.same_field(rhs)?;
        let inv = rhs.inv()?;
        self.checked_mul(&inv)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self) -> Result<Self, FieldError> {
        let v = self.field.inv_raw(self.value).ok_or(FieldError::DivisionByZero)?;
        self.field.count_inv();
        Ok(self.with(v))
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Square-and-multiply; every step goes through the counted multiplication.
    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.field.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Euler's criterion: `a^((q-1)/2) = 1`, with 0 counted as a square.
    pub fn is_square(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let q = self.field.order() as u64;
        self.pow((q - 1) / 2).is_one()
    }

    /// Both square roots `(r, -r)`, the one with the smaller encoding first.
    pub fn sqrt(&self) -> Option<(Self, Self)> {
        if self.is_zero() {
            return Some((self.clone(), self.clone()));
        }
        if !self.is_square() {
            return None;
        }
        let q = self.field.order() as u64;
        let r = if q % 4 == 3 {
            self.pow((q + 1) / 4)
        } else {
            self.tonelli_shanks()
        };
        debug_assert_eq!(&r.square(), self);
        let s = -&r;
        if r.value <= s.value {
            Some((r, s))
        } else {
            Some((s, r))
        }
    }

    fn tonelli_shanks(&self) -> Self {
        let field = &self.field;
        let q = field.order() as u64;
        let mut s = 0u32;
        let mut m = q - 1;
        while m % 2 == 0 {
            m /= 2;
            s += 1;
        }
        let z = field
            .elements()
            .find(|e| !e.is_square())
            .expect("odd-order fields contain non-squares");
        let mut c = z.pow(m);
        let mut t = self.pow(m);
        let mut r = self.pow(m.div_ceil(2));
        let mut bits = s;
        while !t.is_one() {
            // least i with t^(2^i) = 1
            let mut i = 0;
            let mut t2 = t.clone();
            while !t2.is_one() {
                t2 = t2.square();
                i += 1;
            }
            let mut b = c.clone();
            for _ in 0..(bits - i - 1) {
                b = b.square();
            }
            r = &r * &b;
            c = b.square();
            t = &t * &c;
            bits = i;
        }
        r
    }
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.field.same_as(&other.field)
    }
}

impl Eq for FieldElement {}

impl Hash for FieldElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.value.hash(state);
    }
}

// Ordering is by canonical encoding; elements of different fields are not
// meaningfully comparable.
impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.value.cmp(&other.value)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).expect("operands belong to different fields")
            }
        }
        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }
        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.with(self.field.neg_raw(self.value))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf17() -> Field {
        Field::prime(17).unwrap()
    }

    #[test]
    fn constructs_gf17() {
        let f = gf17();
        assert_eq!(f.order(), 17);
        assert_eq!(f.spec().modulus, vec![0, 1]);
    }

    #[test]
    fn rejects_bad_characteristics() {
        assert_eq!(Field::prime(2).unwrap_err(), FieldError::EvenCharacteristic);
        assert_eq!(Field::prime(15).unwrap_err(), FieldError::NotPrime(15));
        assert_eq!(Field::prime(1).unwrap_err(), FieldError::NotPrime(1));
        assert_eq!(Field::new(3, 0, None).unwrap_err(), FieldError::InvalidDegree);
        assert!(matches!(
            Field::new(1031, 2, None).unwrap_err(),
            FieldError::FieldTooLarge(_)
        ));
    }

    #[test]
    fn gf9_uses_u2_plus_1() {
        let f = Field::new(3, 2, None).unwrap();
        assert_eq!(f.spec().modulus, vec![1, 0, 1]);
        assert_eq!(f.order(), 9);
        assert_eq!(f.elements().count(), 9);
    }

    #[test]
    fn explicit_modulus_is_validated() {
        // u^2 + 2 = (u + 1)(u + 2) over GF(3)
        assert_eq!(
            Field::new(3, 2, Some(vec![2, 0, 1])).unwrap_err(),
            FieldError::NotIrreducible(vec![2, 0, 1])
        );
        assert!(matches!(
            Field::new(3, 2, Some(vec![1, 0, 2])).unwrap_err(),
            FieldError::InvalidModulus(_)
        ));
        assert!(Field::new(3, 2, Some(vec![2, 1, 1])).is_ok());
    }

    #[test]
    fn lexicographic_irreducibles() {
        assert_eq!(find_irreducible(3, 2).unwrap(), vec![1, 0, 1]);
        assert_eq!(find_irreducible(5, 2).unwrap(), vec![2, 0, 1]);
        assert_eq!(find_irreducible(3, 1).unwrap_err(), FieldError::InvalidDegree);
        // x^3 + 2x + 1 is the first root-free monic cubic over GF(3) in scan order
        assert_eq!(find_irreducible(3, 3).unwrap(), vec![1, 2, 0, 1]);
    }

    #[test]
    fn inverses_in_gf17() {
        let f = gf17();
        assert_eq!(f.from_int(4).inv().unwrap().value(), 13);
        assert_eq!(f.from_int(7).inv().unwrap().value(), 5);
        assert_eq!(f.zero().inv().unwrap_err(), FieldError::DivisionByZero);
        assert_eq!(
            f.one().checked_div(&f.zero()).unwrap_err(),
            FieldError::DivisionByZero
        );
    }

    #[test]
    fn mixing_fields_is_an_error() {
        let a = gf17().one();
        let b = Field::prime(13).unwrap().one();
        assert_eq!(a.checked_add(&b).unwrap_err(), FieldError::FieldMismatch);
        assert_eq!(a.checked_mul(&b).unwrap_err(), FieldError::FieldMismatch);
    }

    #[test]
    fn squares_in_gf17() {
        let f = gf17();
        assert!(!f.from_int(10).is_square());
        assert!(f.from_int(13).is_square());
        assert!(f.one().is_square());
        assert!(f.zero().is_square());
        let (r, s) = f.from_int(13).sqrt().unwrap();
        assert_eq!((r.value(), s.value()), (8, 9));
        assert_eq!(f.zero().sqrt().unwrap(), (f.zero(), f.zero()));
        assert!(f.from_int(10).sqrt().is_none());
    }

    #[test]
    fn sqrt_exhaustive_small_fields() {
        // both branches: q = 1 mod 4 (Tonelli-Shanks) and q = 3 mod 4
        for (p, t) in [(17, 1), (13, 1), (7, 1), (11, 1), (3, 2), (5, 2), (3, 3), (7, 2)] {
            let f = Field::new(p, t, None).unwrap();
            let squares: std::collections::HashSet<u32> =
                f.elements().map(|e| e.square().value()).collect();
            for a in f.elements() {
                match a.sqrt() {
                    Some((r, s)) => {
                        assert_eq!(r.square(), a);
                        assert_eq!(s, -&r);
                        assert!(r.value() <= s.value());
                        assert!(squares.contains(&a.value()));
                    }
                    None => assert!(!squares.contains(&a.value())),
                }
            }
        }
    }

    #[test]
    fn euler_census() {
        for (p, t) in [(17, 1), (3, 2), (5, 2), (13, 1), (17, 2)] {
            let f = Field::new(p, t, None).unwrap();
            let q = f.order() as u64;
            let nonzero_squares = f
                .elements()
                .filter(|a| !a.is_zero() && a.is_square())
                .count() as u64;
            assert_eq!(nonzero_squares, (q - 1) / 2);
        }
    }

    #[test]
    fn extension_multiplication_matches_definition() {
        // GF(9) = GF(3)[u]/(u^2+1): u * u = -1 = 2
        let f = Field::new(3, 2, None).unwrap();
        let u = f.from_coeffs(&[0, 1]).unwrap();
        assert_eq!((&u * &u).value(), 2);
        // (1 + u)(1 + 2u) = 1 + 3u + 2u^2 = 1 - 2 = 2 (mod 3)
        let a = f.from_coeffs(&[1, 1]).unwrap();
        let b = f.from_coeffs(&[1, 2]).unwrap();
        assert_eq!((&a * &b).coeffs(), vec![2, 0]);
    }

    #[test]
    fn counters_track_mul_and_inv() {
        let f = gf17();
        let a = f.from_int(3);
        let b = f.from_int(5);
        f.reset_op_counts();
        let _ = &a * &b;
        let _ = &a * &a;
        assert_eq!(f.op_counts().multiplications, 2);
        let _ = a.inv().unwrap();
        assert_eq!(f.op_counts().inversions, 1);
        let _ = &a + &b;
        assert_eq!(f.op_counts().multiplications, 2);
        f.reset_op_counts();
        let _ = a.pow(16);
        let muls = f.op_counts().multiplications;
        assert!((1..=2 * 5).contains(&muls), "pow(16) used {muls} multiplications");
        // counters are per instance
        let g = gf17();
        let _ = g.one() * g.one();
        assert_eq!(f.op_counts().multiplications, muls);
    }

    #[test]
    fn element_range_checked() {
        let f = gf17();
        assert!(f.element(16).is_ok());
        assert_eq!(
            f.element(17).unwrap_err(),
            FieldError::ElementOutOfRange { value: 17, order: 17 }
        );
    }

    #[test]
    fn spec_json_shape() {
        let f = Field::new(3, 2, None).unwrap();
        let json = serde_json::to_string(f.spec()).unwrap();
        assert_eq!(json, r#"{"p":3,"t":2,"modulus":[1,0,1]}"#);
        let back: FieldSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(Field::from_spec(&back).unwrap(), f);
    }
}
