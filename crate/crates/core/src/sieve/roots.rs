use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::integer::integer_nth_root;

pub const DEFAULT_ROOT_TOLERANCE: f64 = 1e-6;

/// The positive real `x` with `x^n + b^n = c^n`, to within [`DEFAULT_ROOT_TOLERANCE`].
pub fn real_root(b: &BigInt, c: &BigInt, n: u32) -> Result<f64> {
    real_root_with_tolerance(b, c, n, DEFAULT_ROOT_TOLERANCE)
}

/// Like [`real_root`] with an explicit tolerance.
///
/// The root is bracketed by the integer `n`-th root of `c^n - b^n` and then
/// bisected over dyadic rationals, comparing `mid^n` with the target exactly,
/// so the bracket never loses the root to rounding.
pub fn real_root_with_tolerance(b: &BigInt, c: &BigInt, n: u32, tolerance: f64) -> Result<f64> {
    if !b.is_positive() || b >= c {
        return Err(Error::domain(format!("real_root needs 0 < b < c, got b = {b}, c = {c}")));
    }
    if n == 0 {
        return Err(Error::domain("real_root needs n >= 1"));
    }
    if !(tolerance > 0.0) {
        return Err(Error::domain("tolerance must be positive"));
    }
    let target = num_traits::pow(c.clone(), n as usize) - num_traits::pow(b.clone(), n as usize);
    let bracket = integer_nth_root(&target, n)?;
    if bracket.exact {
        return to_f64(&bracket.root);
    }
    // lo = lo_num / 2^k <= x < (lo_num + 1) / 2^k
    let mut lo_num = bracket.root;
    let mut k = 0u32;
    while 2f64.powi(-(k as i32)) > tolerance {
        k += 1;
        lo_num <<= 1;
        let mid: BigInt = &lo_num + 1u32;
        if num_traits::pow(mid.clone(), n as usize) <= (&target << (k * n)) {
            lo_num = mid;
        }
    }
    let lo = to_f64(&lo_num)?;
    Ok((lo + 0.5) / 2f64.powi(k as i32))
}

fn to_f64(x: &BigInt) -> Result<f64> {
    x.to_f64()
        .filter(|v| v.is_finite())
        .ok_or_else(|| Error::domain("value too large for a float"))
}

/// `n^(1/n) c^((n-1)/n)`, the large-`c` approximation to the root of `x^n + (c-1)^n = c^n`.
pub fn root_magnitude_estimate(c: &BigInt, n: u32) -> Result<f64> {
    if c < &BigInt::from(2) || n == 0 {
        return Err(Error::domain("root_magnitude_estimate needs c >= 2 and n >= 1"));
    }
    let nf = f64::from(n);
    let ln_c = to_f64(c)?.ln();
    Ok((nf.ln() / nf + (nf - 1.0) / nf * ln_c).exp())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn fixtures() {
        let r = real_root(&big(9), &big(10), 7).unwrap();
        assert!((r - 9.11).abs() < 0.01, "{r}");
        assert_eq!(real_root(&big(3), &big(5), 2).unwrap(), 4.0);
        let r3 = real_root(&big(20), &big(21), 3).unwrap();
        assert!((r3 - 10.804).abs() < 1e-3, "{r3}");
        assert!(real_root(&big(5), &big(5), 3).is_err());
        assert!(real_root(&big(0), &big(5), 3).is_err());
    }

    #[test]
    fn agrees_with_float_formula() {
        for c in 3i64..40 {
            for b in 1..c {
                for n in 1u32..10 {
                    let r = real_root(&big(b), &big(c), n).unwrap();
                    let f = ((c as f64).powi(n as i32) - (b as f64).powi(n as i32)).powf(1.0 / n as f64);
                    assert!((r - f).abs() < 2e-6 * f.max(1.0), "b={b} c={c} n={n}: {r} vs {f}");
                }
            }
        }
    }

    #[test]
    fn tolerance_is_honoured() {
        let r = real_root_with_tolerance(&big(20), &big(21), 5, 1e-12).unwrap();
        let f = (21f64.powi(5) - 20f64.powi(5)).powf(0.2);
        assert!((r - f).abs() < 1e-9);
    }

    #[test]
    fn estimate_examples() {
        assert_eq!(root_magnitude_estimate(&big(21), 5).unwrap().trunc(), 15.0);
        // at n = 1 the estimate is exactly the root of x + (c-1) = c
        assert!((root_magnitude_estimate(&big(37), 1).unwrap() - 1.0).abs() < 1e-12);
        let e = root_magnitude_estimate(&big(1000), 3).unwrap();
        assert!((e - 144.22).abs() < 0.01, "{e}");
    }
}
