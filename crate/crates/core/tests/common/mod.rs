#![allow(dead_code)]

use edwards_goppa::artifact::build_code;
use edwards_goppa::curves::{EdwardsCurve, EdwardsPoint};
use edwards_goppa::field::Field;
use edwards_goppa::goppa::{select_points, GoppaError, LinearCode, PointPolicy};
use edwards_goppa::notation::parse_edwards_points;
use edwards_goppa::riemann_roch::Divisor;
use rand::seq::SliceRandom;
use rand::Rng;

pub const WORKED_POINTS: &str = "(5,8),(5,9),(6,3),(6,14),(8,5),(8,12),(9,5)";

pub const WORKED_G: [[u32; 7]; 5] = [
    [1, 1, 1, 1, 1, 1, 1],
    [16, 5, 5, 4, 1, 11, 4],
    [5, 15, 9, 4, 13, 14, 13],
    [9, 13, 6, 10, 14, 10, 3],
    [8, 4, 13, 16, 16, 9, 16],
];

pub const WORKED_H: [[u32; 7]; 2] = [[7, 3, 1, 13, 9, 1, 0], [2, 12, 9, 12, 15, 0, 1]];

pub fn gf17_curve() -> EdwardsCurve {
    EdwardsCurve::new(Field::prime(17).unwrap().from_int(10)).unwrap()
}

pub fn worked_code() -> LinearCode {
    let c = gf17_curve();
    let t = parse_edwards_points(&c, WORKED_POINTS).unwrap();
    build_code(&c, "(2,15)+4O", &PointPolicy::Explicit(t)).unwrap()
}

/// Complete curve over GF(p) with `d` drawn uniformly from the non-squares.
pub fn random_complete_curve<R: Rng>(rng: &mut R, p: u32) -> EdwardsCurve {
    let f = Field::prime(p).unwrap();
    let nonsquares: Vec<_> = f.elements().filter(|e| !e.is_zero() && !e.is_square()).collect();
    EdwardsCurve::new(nonsquares.choose(rng).unwrap().clone()).unwrap()
}

/// Points usable as evaluation points for the code of `divisor`.
pub fn valid_points(curve: &EdwardsCurve, divisor: &Divisor) -> Vec<EdwardsPoint> {
    curve
        .points()
        .unwrap()
        .into_iter()
        .filter(|q| select_points(curve, divisor, &PointPolicy::Explicit(vec![q.clone()])).is_ok())
        .collect()
}

/// `P + (delta - 1)O`, optionally padded with the principal divisor
/// `Q + (-Q) - 2O` so that the input is not already reduced.
pub fn random_divisor<R: Rng>(rng: &mut R, curve: &EdwardsCurve, delta: i64) -> Divisor {
    let pts = curve.points().unwrap();
    let p = pts.choose(rng).unwrap().clone();
    let mut d = Divisor::new(curve, [(p, 1), (curve.identity(), delta - 1)]).unwrap();
    if rng.gen_bool(0.5) {
        let q = pts.choose(rng).unwrap().clone();
        let neg = curve.neg(&q).unwrap();
        let pad = Divisor::new(curve, [(q, 1), (neg, 1), (curve.identity(), -2)]).unwrap();
        d = d.sum(&pad);
    }
    d
}

/// A random code over one of `primes` with `n <= max_n` and `q^k <= max_messages`.
/// `None` when the draw has too few valid points or a rank-deficient generator.
pub fn random_code<R: Rng>(
    rng: &mut R,
    primes: &[u32],
    max_n: usize,
    max_messages: u64,
) -> Option<LinearCode> {
    let p = *primes.choose(rng).unwrap();
    let curve = random_complete_curve(rng, p);
    let mut max_delta = 1i64;
    while (p as u64).pow(max_delta as u32 + 1) <= max_messages && (max_delta as usize) < max_n {
        max_delta += 1;
    }
    let delta = rng.gen_range(1..=max_delta);
    let divisor = random_divisor(rng, &curve, delta);
    let mut valid = valid_points(&curve, &divisor);
    if valid.len() < delta as usize {
        return None;
    }
    let n = rng.gen_range(delta as usize..=valid.len().min(max_n));
    valid.shuffle(rng);
    valid.truncate(n);
    match LinearCode::build(&curve, &divisor, &PointPolicy::Explicit(valid)) {
        Ok(code) => Some(code),
        Err(GoppaError::RankDeficient { .. }) => None,
        Err(e) => panic!("unexpected build failure: {e}"),
    }
}
