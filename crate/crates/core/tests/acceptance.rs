//! End-to-end acceptance checks. Runs without the libtest harness and prints
//! one PASS/FAIL line per criterion; exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use edwards_goppa::birational::BirationalPair;
use edwards_goppa::curves::{EdwardsPoint, WeierstrassPoint};
use edwards_goppa::goppa::{build_generator, min_distance_exhaustive};
use edwards_goppa::riemann_roch::{
    evaluate_basis_function, evaluate_basis_incremental, rr_basis, Divisor, PointEvaluator,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// Time limits per criterion. Arithmetic is exact, so there are no numeric tolerances.
const LIMIT_CENSUS: Duration = Duration::from_secs(1);
const LIMIT_GENERATOR: Duration = Duration::from_secs(1);
const LIMIT_PARITY: Duration = Duration::from_secs(1);
const LIMIT_DISTANCE: Duration = Duration::from_secs(30);
const LIMIT_DIMENSION: Duration = Duration::from_secs(30);
const LIMIT_GOPPA_BOUND: Duration = Duration::from_secs(300);
const LIMIT_BIRATIONAL: Duration = Duration::from_secs(10);
const LIMIT_COST: Duration = Duration::from_secs(10);
const LIMIT_C4: Duration = Duration::from_secs(1);

const DIMENSION_INSTANCES: usize = 200;
const GOPPA_BOUND_CODES: usize = 50;
const MAX_MESSAGES: u64 = 1_000_000;
const SEED: u64 = 0x5eed_0017;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn point_census() -> Outcome {
    let c = gf17_curve();
    let expected: Vec<(u32, u32)> = vec![
        (0, 1), (0, 16), (1, 0), (2, 2), (2, 15), (3, 6), (3, 11), (5, 8), (5, 9), (6, 3), (6, 14), (8, 5),
        (8, 12), (9, 5), (9, 12), (11, 3), (11, 14), (12, 8), (12, 9), (14, 6), (14, 11), (15, 2), (15, 15), (16, 0),
    ];
    let got: Vec<(u32, u32)> = c
        .points()
        .map_err(|e| e.to_string())?
        .iter()
        .map(|p| {
            let (x, y) = p.coords().unwrap();
            (x.value(), y.value())
        })
        .collect();
    ensure(got == expected, || format!("enumerated {got:?}"))?;
    Ok(format!("{} points", got.len()))
}

fn golden_generator() -> Outcome {
    let code = worked_code();
    let expected: Vec<Vec<u32>> = WORKED_G.iter().map(|r| r.to_vec()).collect();
    let c = code.curve();
    let g = build_generator(c, code.divisor(), code.points()).map_err(|e| e.to_string())?;
    ensure(g.to_rows() == expected, || format!("G = {:?}", g.to_rows()))?;
    ensure(g.column(4) == [1, 1, 13, 14, 16], || "column at (8,5)".into())?;
    Ok("5x7 G matches".into())
}

fn golden_parity() -> Outcome {
    let code = worked_code();
    let h = code.parity_check();
    let expected: Vec<Vec<u32>> = WORKED_H.iter().map(|r| r.to_vec()).collect();
    ensure(h.to_rows() == expected, || format!("H = {:?}", h.to_rows()))?;
    ensure(code.permutation() == [0, 1, 2, 3, 4, 5, 6], || "non-identity permutation".into())?;
    let product = code.standard_generator().mul(&h.transpose()).map_err(|e| e.to_string())?;
    ensure(product.is_zero(), || "G_std H^T != 0".into())?;
    Ok("H matches, G_std H^T = 0".into())
}

fn distance_and_mds() -> Outcome {
    let code = worked_code();
    // no lower bound: every one of the 17^5 messages is visited
    let d = min_distance_exhaustive(code.generator(), 0, 17u128.pow(5)).map_err(|e| e.to_string())?;
    ensure(d == 3, || format!("d = {d}"))?;
    ensure(code.designed_distance() == 2, || "designed distance".into())?;
    ensure(d == code.singleton_bound(), || "not MDS".into())?;
    Ok(format!("[7,5,{d}] MDS, designed 2"))
}

fn dimension_property() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut done = 0;
    let mut attempts = 0;
    while done < DIMENSION_INSTANCES {
        attempts += 1;
        ensure(attempts < 20 * DIMENSION_INSTANCES, || "too many rejected draws".into())?;
        let p = [5, 13, 17][rng.gen_range(0..3)];
        let curve = random_complete_curve(&mut rng, p);
        let pts = curve.points().unwrap();
        let base = pts.choose(&mut rng).unwrap().clone();
        let mut delta = rng.gen_range(1..=6i64);
        let (divisor, valid) = loop {
            let d = Divisor::new(&curve, [(base.clone(), 1), (curve.identity(), delta - 1)]).unwrap();
            let v = valid_points(&curve, &d);
            if v.len() >= delta as usize + 2 || delta == 1 {
                break (d, v);
            }
            delta -= 1;
        };
        if valid.len() < delta as usize + 2 {
            continue;
        }
        let mut t = valid;
        t.shuffle(&mut rng);
        t.truncate(delta as usize + 2);
        let g = build_generator(&curve, &divisor, &t).map_err(|e| e.to_string())?;
        ensure(g.rows() == delta as usize, || "row count".into())?;
        ensure(g.rank() == delta as usize, || {
            format!("rank {} != {delta} for P = {base} over GF({p})", g.rank())
        })?;
        done += 1;
    }
    Ok(format!("{done} instances, all full rank"))
}

fn goppa_bound() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let mut checked = 0;
    let mut attempts = 0;
    while checked < GOPPA_BOUND_CODES {
        attempts += 1;
        ensure(attempts < 20 * GOPPA_BOUND_CODES, || "too many rejected draws".into())?;
        let Some(code) = random_code(&mut rng, &[5, 13, 17], 10, MAX_MESSAGES) else {
            continue;
        };
        let d = min_distance_exhaustive(code.generator(), 0, MAX_MESSAGES as u128)
            .map_err(|e| e.to_string())?;
        let (n, k) = (code.length(), code.dimension());
        ensure(d as i64 >= code.designed_distance(), || {
            format!("d = {d} below n - deg D = {}", code.designed_distance())
        })?;
        ensure(d <= n - k + 1, || format!("d = {d} above Singleton bound {}", n - k + 1))?;
        checked += 1;
    }
    Ok(format!("{checked} codes, zero violations"))
}

fn birational_correctness() -> Outcome {
    let e = gf17_curve();
    let pair = BirationalPair::canonical(&e).map_err(|err| err.to_string())?;
    let w = pair.weierstrass();
    let mut failures = 0;
    let epts = e.points().unwrap();
    for p in &epts {
        if pair.alpha(p).and_then(|q| pair.beta(&q)).ok().as_ref() != Some(p) {
            failures += 1;
        }
    }
    let wpts = w.points();
    let mut outside = 0;
    for q in wpts.iter().filter(|q| !pair.is_exceptional(q)) {
        outside += 1;
        if pair.beta(q).and_then(|p| pair.alpha(&p)).ok().as_ref() != Some(q) {
            failures += 1;
        }
    }
    let mut pairs = 0;
    for a in &wpts {
        for b in &wpts {
            let lhs = w.add(a, b).map_err(Into::into).and_then(|s| pair.beta(&s));
            let rhs = pair
                .beta(a)
                .and_then(|x| Ok((x, pair.beta(b)?)))
                .and_then(|(x, y)| Ok(e.add(&x, &y)?));
            // pairs touching an exceptional point are not applicable
            if let (Ok(l), Ok(r)) = (lhs, rhs) {
                pairs += 1;
                if l != r {
                    failures += 1;
                }
            }
        }
    }
    ensure(failures == 0, || format!("{failures} failures"))?;
    ensure(pairs == 24 * 24 && outside == 24, || format!("only {pairs} pairs applicable"))?;
    ensure(
        pair.alpha(&e.identity()).ok() == Some(WeierstrassPoint::Omega),
        || "alpha(O)".into(),
    )?;
    Ok(format!("{} + {outside} round trips, {pairs} pairs", epts.len()))
}

fn cost_property() -> Outcome {
    let c = gf17_curve();
    let field = c.field();
    let mut tested = 0;
    for base in c.points().unwrap() {
        let basis = rr_basis(&c, &base, 12).map_err(|e| e.to_string())?;
        let divisor = Divisor::new(&c, [(base.clone(), 1), (c.identity(), 12)]).unwrap();
        for q in valid_points(&c, &divisor) {
            // point validation and the (y+1)/x precomputation happen in new()
            let ev = PointEvaluator::new(&c, &q).map_err(|e| e.to_string())?;
            field.reset_op_counts();
            let top = basis.last().unwrap().index();
            let powers = ev.powers(top).map_err(|e| e.to_string())?;
            let counts = field.op_counts();
            ensure(counts.multiplications <= powers.len() as u64, || {
                format!("{} multiplications for {} functions at {q}", counts.multiplications, powers.len())
            })?;
            ensure(counts.inversions <= 1, || format!("{} inversions", counts.inversions))?;
            let incremental = evaluate_basis_incremental(&c, &basis, &q).map_err(|e| e.to_string())?;
            for (f, v) in basis.iter().zip(&incremental) {
                let direct = evaluate_basis_function(&c, f, &q).map_err(|e| e.to_string())?;
                ensure(&direct == v, || format!("{f} at {q}: {direct} != {v}"))?;
            }
            tested += 1;
        }
    }
    ensure(tested > 0, || "no points tested".into())?;
    Ok(format!("{tested} (divisor, point) cases"))
}

fn c4_structure() -> Outcome {
    let c = gf17_curve();
    let (o, o2, h, h2) = (c.identity(), c.o_prime(), c.h(), c.h_prime());
    let mul = |n: i64, p: &EdwardsPoint| c.scalar_mul(n, p).map_err(|e| e.to_string());
    ensure(mul(2, &h)? == o2, || "2H != O'".into())?;
    ensure(mul(2, &o2)? == o, || "2O' != O".into())?;
    ensure(mul(4, &h)? == o, || "4H != O".into())?;
    let orders: Vec<u64> = [&o, &o2, &h, &h2]
        .iter()
        .map(|p| c.order_of(p).unwrap())
        .collect();
    ensure(orders == [1, 2, 4, 4], || format!("orders {orders:?}"))?;
    Ok("orders (1,2,4,4)".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("1 point census", point_census, LIMIT_CENSUS),
        ("2 golden generator matrix", golden_generator, LIMIT_GENERATOR),
        ("3 golden parity check", golden_parity, LIMIT_PARITY),
        ("4 distance and MDS", distance_and_mds, LIMIT_DISTANCE),
        ("5 dimension of L(D)", dimension_property, LIMIT_DIMENSION),
        ("6 Goppa and Singleton bounds", goppa_bound, LIMIT_GOPPA_BOUND),
        ("7 birational maps", birational_correctness, LIMIT_BIRATIONAL),
        ("8 incremental evaluation cost", cost_property, LIMIT_COST),
        ("9 cyclic subgroup of order 4", c4_structure, LIMIT_C4),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(detail) if elapsed > limit => Err(format!("{detail}, but took {elapsed:.2?} > {limit:?}")),
            other => other,
        };
        match outcome {
            Ok(detail) => println!("PASS criterion {name}: {detail} ({elapsed:.2?})"),
            Err(why) => {
                failed += 1;
                println!("FAIL criterion {name}: {why} ({elapsed:.2?})");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
