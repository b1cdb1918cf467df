//! Text notation for elements, points and divisors.
//!
//! Elements are canonical integer encodings; a leading `-` negates (so `-1`
//! is `p - 1` in a prime field). Points are `(x,y)`, `O`, `Omega1`, `Omega2`
//! on Edwards curves and `(x,y)` or `Omega` on Weierstrass curves. Divisors
//! follow `(x,y)^m + 2(x,y) - (x,y) + kO`; whitespace is ignored.

use crate::curves::{EdwardsCurve, EdwardsPoint, WeierstrassCurve, WeierstrassPoint};
use crate::field::{Field, FieldElement};
use crate::riemann_roch::Divisor;
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("cannot parse {input:?}: {reason}")]
pub struct ParseError {
    pub input: String,
    pub reason: String,
}

impl ParseError {
    fn new(input: &str, reason: impl Into<String>) -> Self {
        Self {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

fn compact(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

pub fn parse_element(field: &Field, s: &str) -> Result<FieldElement, Error> {
    let s = compact(s);
    let (neg, digits) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.as_str()),
    };
    let v: u64 = digits
        .parse()
        .map_err(|_| ParseError::new(&s, "expected an integer"))?;
    let e = field.element(v)?;
    Ok(if neg { -e } else { e })
}

/// Splits `(x,y)` into its two coordinate strings.
fn coordinates(s: &str) -> Result<(&str, &str), ParseError> {
    let inner = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| ParseError::new(s, "expected (x,y)"))?;
    inner
        .split_once(',')
        .filter(|(_, y)| !y.contains(','))
        .ok_or_else(|| ParseError::new(s, "expected two coordinates"))
}

/// Parses and validates a point on an Edwards curve.
pub fn parse_edwards_point(curve: &EdwardsCurve, s: &str) -> Result<EdwardsPoint, Error> {
    let s = compact(s);
    match s.as_str() {
        "O" => return Ok(curve.identity()),
        "Omega1" => return Ok(EdwardsPoint::Omega1),
        "Omega2" => return Ok(EdwardsPoint::Omega2),
        _ => {}
    }
    let (x, y) = coordinates(&s)?;
    let f = curve.field();
    Ok(curve.point(parse_element(f, x)?, parse_element(f, y)?)?)
}

pub fn parse_weierstrass_point(curve: &WeierstrassCurve, s: &str) -> Result<WeierstrassPoint, Error> {
    let s = compact(s);
    if s == "Omega" {
        return Ok(WeierstrassPoint::Omega);
    }
    let (x, y) = coordinates(&s)?;
    let f = curve.field();
    Ok(curve.point(parse_element(f, x)?, parse_element(f, y)?)?)
}

/// Splits `"(5,8),(5,9), O"` into point strings at top-level commas.
fn split_points(s: &str) -> Result<Vec<String>, ParseError> {
    let s = compact(s);
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if !(0..=1).contains(&depth) {
            return Err(ParseError::new(&s, "unbalanced parentheses"));
        }
        if c == ',' && depth == 0 {
            out.push(std::mem::take(&mut cur));
        } else {
            cur.push(c);
        }
    }
    if depth != 0 {
        return Err(ParseError::new(&s, "unbalanced parentheses"));
    }
    out.push(cur);
    if out.iter().any(String::is_empty) {
        return Err(ParseError::new(&s, "empty entry in point list"));
    }
    Ok(out)
}

pub fn parse_edwards_points(curve: &EdwardsCurve, s: &str) -> Result<Vec<EdwardsPoint>, Error> {
    split_points(s)?
        .iter()
        .map(|p| parse_edwards_point(curve, p))
        .collect()
}

pub fn format_points<P: std::fmt::Display>(points: &[P]) -> String {
    points
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Parses the divisor grammar. Each term is an optional sign, an optional
/// integer coefficient, a point, and an optional `^m` exponent; coefficient
/// and exponent multiply.
pub fn parse_divisor(curve: &EdwardsCurve, s: &str) -> Result<Divisor, Error> {
    let s = compact(s);
    if s.is_empty() {
        return Err(ParseError::new(&s, "empty divisor").into());
    }
    if s == "0" {
        return Ok(Divisor::zero());
    }
    let bytes = s.as_bytes();
    let mut i = 0;
    let mut terms = Vec::new();
    let number = |i: &mut usize| -> Option<i64> {
        let start = *i;
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
        s[start..*i].parse().ok()
    };
    while i < bytes.len() {
        let sign = match bytes[i] {
            b'+' if !terms.is_empty() => {
                i += 1;
                1
            }
            b'-' => {
                i += 1;
                -1
            }
            _ if terms.is_empty() => 1,
            _ => return Err(ParseError::new(&s, format!("expected + or - at offset {i}")).into()),
        };
        let coef = number(&mut i).unwrap_or(1);
        let point_str = if s[i..].starts_with("Omega1") || s[i..].starts_with("Omega2") {
            i += 6;
            &s[i - 6..i]
        } else if s[i..].starts_with('O') {
            i += 1;
            "O"
        } else if s[i..].starts_with('(') {
            let close = s[i..]
                .find(')')
                .ok_or_else(|| ParseError::new(&s, "unclosed parenthesis"))?;
            let p = &s[i..i + close + 1];
            i += close + 1;
            p
        } else {
            return Err(ParseError::new(&s, format!("expected a point at offset {i}")).into());
        };
        let exp = if s[i..].starts_with('^') {
            i += 1;
            let neg = s[i..].starts_with('-');
            if neg {
                i += 1;
            }
            let m = number(&mut i).ok_or_else(|| ParseError::new(&s, "expected an exponent"))?;
            if neg {
                -m
            } else {
                m
            }
        } else {
            1
        };
        let point = match point_str {
            "Omega1" => EdwardsPoint::Omega1,
            "Omega2" => EdwardsPoint::Omega2,
            p => parse_edwards_point(curve, p)?,
        };
        terms.push((point, sign * coef * exp));
    }
    Ok(Divisor::new(curve, terms)?)
}
