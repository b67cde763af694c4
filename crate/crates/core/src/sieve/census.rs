use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::classify::{classify, ClassifyOptions};
use super::kappa::max_exponent;
use super::Triple;
use crate::error::{Error, Result};
use crate::integer::{gcd3, integer_nth_root};

/// All `(a, b)` that pass the cheap bounds at hypotenuse `c0` and exponent `n`.
///
/// For `n = 1` these are the pairs `a <= b` with `a + b = c0`. For `n > 1` they
/// are the pairs with `n <= a < b < c0 < a + b`, `(a + b)^n <= 2^(n-1) c0^n`
/// and, when `c0 > 2`, `n <= c0/kappa`. Pairs come out sorted by `a`, then `b`.
pub fn enumerate_candidates(c0: &BigInt, n: u32) -> Result<Vec<(BigInt, BigInt)>> {
    if c0 < &BigInt::from(2) {
        return Err(Error::domain(format!("enumerate_candidates needs c0 >= 2, got {c0}")));
    }
    if n == 0 {
        return Err(Error::domain("enumerate_candidates needs n >= 1"));
    }
    if n == 1 {
        let half = c0 / 2;
        let mut out = Vec::new();
        let mut a = BigInt::one();
        while a <= half {
            out.push((a.clone(), c0 - &a));
            a += 1;
        }
        return Ok(out);
    }
    if c0 > &BigInt::from(2) && BigInt::from(n) > max_exponent(c0) {
        return Ok(Vec::new());
    }
    let bound = num_traits::pow(c0.clone(), n as usize) << (n - 1);
    let s_max = integer_nth_root(&bound, n)?.root;
    let floor = BigInt::from(n);
    let mut out = Vec::new();
    let mut s = c0 + 1;
    while s <= s_max {
        // b < c0 forces a > s - c0; a < b forces 2a < s
        let mut a = std::cmp::max(&s - c0 + 1, floor.clone());
        while &a * 2 < s {
            out.push((a.clone(), &s - &a));
            a += 1;
        }
        s += 1;
    }
    out.sort();
    Ok(out)
}

/// The sums `s` with `c < s < 2c` that divide `c^n`.
///
/// These are the only values of `a + b` that can survive the requirement
/// `(a + b) | c^n` for odd `n`.
pub fn residue_sums(c: &BigInt, n: u32) -> Result<Vec<BigInt>> {
    if c < &BigInt::from(3) {
        return Err(Error::domain(format!("residue_sums needs c >= 3, got {c}")));
    }
    if n == 0 {
        return Err(Error::domain("residue_sums needs n >= 1"));
    }
    let exp = BigInt::from(n);
    let mut out = Vec::new();
    let mut s = c + 1;
    let top = c * 2;
    while s < top {
        if c.modpow(&exp, &s).is_zero() {
            out.push(s.clone());
        }
        s += 1;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountOptions {
    /// Count only triples with `gcd(a, b, c) = 1`.
    pub primitive_only: bool,
    /// Count only `c = c_max` instead of every `c <= c_max`.
    pub at_c0_only: bool,
    /// Worker threads; `1` runs sequentially. Results never depend on this.
    pub jobs: usize,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            primitive_only: false,
            at_c0_only: false,
            jobs: 1,
        }
    }
}

fn solutions_at(c: u64, n: u32, primitive_only: bool) -> Result<Vec<Triple>> {
    let c = BigInt::from(c);
    let mut found = Vec::new();
    for (a, b) in enumerate_candidates(&c, n)? {
        if primitive_only && !gcd3(&a, &b, &c).is_one() {
            continue;
        }
        let t = Triple::new(a, b, c.clone(), i64::from(n));
        if classify(&t, ClassifyOptions::default())?.is_solution() {
            found.push(t);
        }
    }
    Ok(found)
}

fn c_range(c_max: u64, at_c0_only: bool) -> std::ops::RangeInclusive<u64> {
    if at_c0_only {
        c_max..=c_max
    } else {
        2..=c_max
    }
}

fn run_with_jobs<T: Send>(jobs: usize, work: impl FnOnce() -> T + Send) -> Result<T> {
    if jobs <= 1 {
        return Ok(work());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::domain(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(work))
}

/// All solutions of `a^n + b^n = c^n` with `c` in the counting range, ordered by `c`, then `a`.
pub fn find_solutions(n: u32, c_max: u64, opts: CountOptions) -> Result<Vec<Triple>> {
    if n == 0 {
        return Err(Error::domain("counting needs n >= 1"));
    }
    if c_max < 2 {
        return Err(Error::domain(format!("counting needs c_max >= 2, got {c_max}")));
    }
    let range = c_range(c_max, opts.at_c0_only);
    let primitive = opts.primitive_only;
    let blocks = run_with_jobs(opts.jobs, move || {
        if opts.jobs <= 1 {
            range.map(|c| solutions_at(c, n, primitive)).collect::<Vec<_>>()
        } else {
            range
                .into_par_iter()
                .map(|c| solutions_at(c, n, primitive))
                .collect::<Vec<_>>()
        }
    })?;
    let mut out = Vec::new();
    for block in blocks {
        out.extend(block?);
    }
    Ok(out)
}

/// `K(n, c_max)`: the number of solutions in the counting range.
pub fn count_solutions(n: u32, c_max: u64, opts: CountOptions) -> Result<u64> {
    Ok(find_solutions(n, c_max, opts)?.len() as u64)
}

/// Smallest `a` over solutions with `c <= c_max`, if there is any solution.
pub fn a_min(n: u32, c_max: u64) -> Result<Option<BigInt>> {
    let all = find_solutions(n, c_max, CountOptions::default())?;
    Ok(all.into_iter().map(|t| t.a).min())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonotonicityReport {
    pub c_max: u64,
    /// `counts[i]` is `K(i + 1, c_max)`.
    pub counts: Vec<u64>,
    pub non_increasing: bool,
}

/// `K(n, c_max)` for `n = 1..=n_max` and whether the sequence never increases.
pub fn monotonicity_report(c_max: u64, n_max: u32, opts: CountOptions) -> Result<MonotonicityReport> {
    let counts = (1..=n_max)
        .map(|n| count_solutions(n, c_max, opts))
        .collect::<Result<Vec<_>>>()?;
    let non_increasing = counts.windows(2).all(|w| w[0] >= w[1]);
    Ok(MonotonicityReport {
        c_max,
        counts,
        non_increasing,
    })
}

/// `(M^2 - m^2, 2mM, M^2 + m^2)` for `n = 2`, `(m, M, m + M)` for `n = 1`.
///
/// For `n = 2` the triple is primitive exactly when `gcd(m, M) = 1` and
/// `m + M` is odd.
pub fn euclid_triple(m: &BigInt, big_m: &BigInt, n: u32) -> Result<Triple> {
    if m <= &BigInt::zero() || big_m <= &BigInt::zero() {
        return Err(Error::domain("generator parameters must be positive"));
    }
    match n {
        1 => Ok(Triple::new(m.clone(), big_m.clone(), m + big_m, 1)),
        2 => {
            if m >= big_m {
                return Err(Error::domain(format!("need m < M, got m = {m}, M = {big_m}")));
            }
            let m2 = m * m;
            let big2 = big_m * big_m;
            Ok(Triple::new(&big2 - &m2, m * big_m * 2, big2 + m2, 2))
        }
        _ => Err(Error::domain(format!("generator is defined for n = 1 or 2, got {n}"))),
    }
}

/// Primitive Pythagorean triples with `c <= c_max`, legs ordered `a < b`, sorted by `c` then `a`.
pub fn primitive_pythagorean_triples(c_max: u64) -> Vec<Triple> {
    let mut out = Vec::new();
    let mut big_m = 2u64;
    while big_m * big_m < c_max {
        for m in 1..big_m {
            let c = big_m * big_m + m * m;
            if c > c_max {
                break;
            }
            if (big_m - m) % 2 == 0 || m.gcd(&big_m) != 1 {
                continue;
            }
            let x = big_m * big_m - m * m;
            let y = 2 * m * big_m;
            out.push(Triple::new(x.min(y), x.max(y), c, 2));
        }
        big_m += 1;
    }
    out.sort_by(|s, t| (&s.c, &s.a).cmp(&(&t.c, &t.a)));
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypotenuseCensus {
    pub total: u64,
    /// Triples whose hypotenuse exceeds the longer leg by one.
    pub adjacent: u64,
}

/// Counts primitive Pythagorean triples with `c <= c_max` and those with `c = b + 1`.
pub fn hypotenuse_adjacent_count(c_max: u64) -> Result<HypotenuseCensus> {
    if c_max < 5 {
        return Err(Error::domain(format!("census needs c_max >= 5, got {c_max}")));
    }
    let triples = primitive_pythagorean_triples(c_max);
    let adjacent = triples
        .iter()
        .filter(|t| &t.c - &t.b == BigInt::one())
        .count() as u64;
    Ok(HypotenuseCensus {
        total: triples.len() as u64,
        adjacent,
    })
}
