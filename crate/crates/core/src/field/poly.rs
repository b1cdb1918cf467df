//! Dense polynomials over a prime field GF(p), little-endian coefficient vectors.
//!
//! Only what the extension-field arithmetic and the irreducibility test need.
//! All inputs are assumed reduced mod `p`; outputs are trimmed (no trailing
//! zero coefficients, the zero polynomial is the empty vector).

pub(crate) type Poly = Vec<u32>;

#[inline]
fn mul_mod(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn inv_mod(a: u32, p: u32) -> Option<u32> {
    let (mut r0, mut r1) = (p as i64, a as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(p as i64) as u32)
}

pub(crate) fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

#[cfg(test)]
pub(crate) fn add(a: &[u32], b: &[u32], p: u32) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> Poly {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(0);
            let y = b.get(i).copied().unwrap_or(0);
            (x + p - y) % p
        })
        .collect();
    trim(out)
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    trim(out.into_iter().map(|c| c as u32).collect())
}

/// Euclidean division; `b` must be nonzero.
pub(crate) fn div_rem(a: &[u32], b: &[u32], p: u32) -> (Poly, Poly) {
    let db = degree(b).expect("division by the zero polynomial");
    let lead_inv = inv_mod(b[db], p).expect("leading coefficient is a unit");
    let mut rem: Poly = trim(a.to_vec());
    let mut quot = vec![0u32; rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = degree(&rem) {
        if dr < db {
            break;
        }
        let coef = mul_mod(rem[dr], lead_inv, p);
        let shift = dr - db;
        quot[shift] = coef;
        for (i, &c) in b.iter().enumerate().take(db + 1) {
            let v = mul_mod(coef, c, p);
            rem[shift + i] = (rem[shift + i] + p - v) % p;
        }
        rem = trim(rem);
    }
    (trim(quot), rem)
}

pub(crate) fn rem(a: &[u32], b: &[u32], p: u32) -> Poly {
    div_rem(a, b, p).1
}

pub(crate) fn mul_rem(a: &[u32], b: &[u32], m: &[u32], p: u32) -> Poly {
    rem(&mul(a, b, p), m, p)
}

fn make_monic(a: Poly, p: u32) -> Poly {
    match degree(&a) {
        None => a,
        Some(d) => {
            let li = inv_mod(a[d], p).expect("nonzero leading coefficient");
            a.into_iter().map(|c| mul_mod(c, li, p)).collect()
        }
    }
}

/// Monic gcd.
pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> Poly {
    let (mut x, mut y) = (trim(a.to_vec()), trim(b.to_vec()));
    while !y.is_empty() {
        let r = rem(&x, &y, p);
        x = y;
        y = r;
    }
    make_monic(x, p)
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm, if it exists.
pub(crate) fn inv_rem(a: &[u32], m: &[u32], p: u32) -> Option<Poly> {
    let (mut r0, mut r1) = (trim(m.to_vec()), rem(a, m, p));
    let (mut s0, mut s1): (Poly, Poly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = div_rem(&r0, &r1, p);
        let s2 = sub(&s0, &mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s2;
    }
    // r0 is a nonzero constant when gcd(a, m) = 1
    if degree(&r0) != Some(0) {
        return None;
    }
    let c = inv_mod(r0[0], p)?;
    Some(rem(&s0.into_iter().map(|x| mul_mod(x, c, p)).collect::<Vec<_>>(), m, p))
}

/// `base^exp mod m`, square-and-multiply.
pub(crate) fn pow_rem(base: &[u32], mut exp: u128, m: &[u32], p: u32) -> Poly {
    let mut acc: Poly = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_rem(&acc, &b, m, p);
        }
        b = mul_rem(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut f = 2;
    while f * f <= n {
        if n % f == 0 {
            out.push(f);
            while n % f == 0 {
                n /= f;
            }
        }
        f += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Rabin's irreducibility test for a polynomial of degree `t >= 1` over GF(p):
/// `x^(p^t) = x mod f` and `gcd(x^(p^(t/r)) - x, f) = 1` for each prime `r | t`.
pub(crate) fn is_irreducible(f: &[u32], p: u32) -> bool {
    let f = trim(f.to_vec());
    let t = match degree(&f) {
        None | Some(0) => return false,
        Some(1) => return true,
        Some(t) => t as u32,
    };
    let x: Poly = vec![0, 1];
    // x^(p^j) mod f by repeated p-th powering
    let frob = |j: u32| -> Poly {
        let mut acc = x.clone();
        for _ in 0..j {
            acc = pow_rem(&acc, p as u128, &f, p);
        }
        acc
    };
    if sub(&frob(t), &x, p) != Vec::<u32>::new() {
        return false;
    }
    prime_factors(t).into_iter().all(|r| {
        let h = sub(&frob(t / r), &x, p);
        degree(&gcd(&h, &f, p)) == Some(0)
    })
}

/// Has `f` a root in GF(p)? Brute force; used as an independent check in tests.
#[cfg(test)]
pub(crate) fn has_root(f: &[u32], p: u32) -> bool {
    (0..p).any(|x| {
        f.iter()
            .rev()
            .fold(0u64, |acc, &c| (acc * x as u64 + c as u64) % p as u64)
            == 0
    })
}
