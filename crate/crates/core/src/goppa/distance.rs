use super::{GoppaError, Matrix};

/// Minimum Hamming weight over the nonzero codewords of the row space of
/// `generator`, by enumerating all `q^k` messages.
///
/// Messages are visited in odometer order, so each step changes a few message
/// digits and the codeword is updated by adding precomputed row differences.
/// The search stops as soon as a codeword of weight `lower_bound` turns up.
pub fn min_distance_exhaustive(
    generator: &Matrix,
    lower_bound: usize,
    budget: u128,
) -> Result<usize, GoppaError> {
    let field = generator.field();
    let q = field.order() as usize;
    let k = generator.rows();
    let n = generator.cols();
    let total = (q as u128)
        .checked_pow(k as u32)
        .filter(|&t| t <= budget)
        .ok_or(GoppaError::BudgetExceeded {
            messages: (q as u128).checked_pow(k as u32),
            budget,
        })?;
    if k == 0 || n == 0 {
        return Ok(0);
    }

    // step[i][c]: row_i * (c + 1) - row_i * c, i.e. the update when digit i
    // moves from encoding c to encoding c + 1 (mod q)
    let multiples: Vec<Vec<Vec<u32>>> = (0..k)
        .map(|i| {
            (0..q as u32)
                .map(|c| generator.row(i).iter().map(|&g| field.mul_raw(c, g)).collect())
                .collect()
        })
        .collect();
    let step: Vec<Vec<Vec<u32>>> = multiples
        .iter()
        .map(|m| {
            (0..q)
                .map(|c| {
                    let next = &m[(c + 1) % q];
                    next.iter()
                        .zip(&m[c])
                        .map(|(&a, &b)| field.sub_raw(a, b))
                        .collect()
                })
                .collect()
        })
        .collect();

    let add_table: Option<Vec<u32>> = (q <= 1024).then(|| {
        let mut t = vec![0u32; q * q];
        for a in 0..q {
            for b in 0..q {
                t[a * q + b] = field.add_raw(a as u32, b as u32);
            }
        }
        t
    });
    let add = |a: u32, b: u32| match &add_table {
        Some(t) => t[a as usize * q + b as usize],
        None => field.add_raw(a, b),
    };

    let floor = lower_bound.max(1);
    let mut digits = vec![0usize; k];
    let mut word = vec![0u32; n];
    let mut weight = 0usize;
    let mut best = usize::MAX;
    for _ in 1..total {
        // advance the odometer, applying each digit change to the codeword
        let mut i = 0;
        loop {
            let c = digits[i];
            for (w, &s) in word.iter_mut().zip(&step[i][c]) {
                if s != 0 {
                    let was = *w != 0;
                    *w = add(*w, s);
                    let is = *w != 0;
                    if was != is {
                        if is {
                            weight += 1;
                        } else {
                            weight -= 1;
                        }
                    }
                }
            }
            digits[i] = (c + 1) % q;
            if digits[i] != 0 {
                break;
            }
            i += 1;
        }
        if weight < best {
            best = weight;
            if best <= floor {
                break;
            }
        }
    }
    Ok(best)
}
