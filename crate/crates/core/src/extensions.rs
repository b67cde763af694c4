//! Negative exponents, unit-fraction exponents and the normalized rational form.

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integer::{gcd, gcd3, rational_pow, Rational};
use crate::sieve::{direct_check, Triple};

/// Maps a solution `(a, b, c, n)` with `n >= 1` to `(ca, cb, ab, -n)`.
///
/// Dividing `a^n + b^n = c^n` by `(abc)^n` gives `(cb)^-n + (ca)^-n = (ab)^-n`.
/// A primitive input gives a primitive image.
pub fn negate_exponent(t: &Triple) -> Result<Triple> {
    if t.n < 1 {
        return Err(Error::domain(format!("negate_exponent needs n >= 1, got {t}")));
    }
    if !(t.a.is_positive() && t.b.is_positive() && t.c.is_positive()) {
        return Err(Error::domain(format!("negate_exponent needs a, b, c > 0, got {t}")));
    }
    if !direct_check(t) {
        return Err(Error::NotASolution(t.to_string()));
    }
    Ok(Triple::new(&t.c * &t.a, &t.c * &t.b, &t.a * &t.b, -t.n))
}

/// Exact rational test of `a^n + b^n = c^n` for `n < 0`; false for `n >= 0`.
pub fn verify_negative(t: &Triple) -> bool {
    t.n < 0 && direct_check(t)
}

/// Whether `negate_exponent` preserved primitivity for this input.
pub fn preserves_primitivity(t: &Triple) -> Result<bool> {
    let image = negate_exponent(t)?;
    let before = gcd3(&t.a, &t.b, &t.c).is_one();
    let after = gcd3(&image.a, &image.b, &image.c).is_one();
    Ok(!before || after)
}

/// A solution of `A^(1/m) + B^(1/m) = C^(1/m)` built from generators `r, s, t`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RadicalTriple {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub m: u32,
    pub r: BigInt,
    pub s: BigInt,
    pub t: BigInt,
}

impl RadicalTriple {
    /// Checks `A = r s^m`, `B = r t^m`, `C = r (s+t)^m`.
    ///
    /// Both sides of the radical equation then equal `(s + t) r^(1/m)`, so the
    /// polynomial identities are the whole proof; no real root is taken.
    pub fn verify(&self) -> bool {
        let m = self.m as usize;
        self.a == &self.r * num_traits::pow(self.s.clone(), m)
            && self.b == &self.r * num_traits::pow(self.t.clone(), m)
            && self.c == &self.r * num_traits::pow(&self.s + &self.t, m)
    }
}

/// `(r s^m, r t^m, r (s+t)^m)` for coprime positive `s`, `t`.
pub fn inverse_fermat_generate(r: &BigInt, s: &BigInt, t: &BigInt, m: u32) -> Result<RadicalTriple> {
    if !(r.is_positive() && s.is_positive() && t.is_positive()) {
        return Err(Error::domain("generators r, s, t must be positive"));
    }
    if m == 0 {
        return Err(Error::domain("m must be at least 1"));
    }
    if !gcd(s, t).is_one() {
        return Err(Error::domain(format!("generators need gcd(s, t) = 1, got s = {s}, t = {t}")));
    }
    let mu = m as usize;
    Ok(RadicalTriple {
        a: r * num_traits::pow(s.clone(), mu),
        b: r * num_traits::pow(t.clone(), mu),
        c: r * num_traits::pow(s + t, mu),
        m,
        r: r.clone(),
        s: s.clone(),
        t: t.clone(),
    })
}

/// `(x, y) = (a/c, b/c)` on the curve `x^n + y^n = 1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalTriple {
    pub x: Rational,
    pub y: Rational,
    pub n: i64,
}

pub fn normalize(t: &Triple) -> Result<RationalTriple> {
    if !t.c.is_positive() {
        return Err(Error::domain(format!("normalize needs c > 0, got {t}")));
    }
    Ok(RationalTriple {
        x: Rational::new(t.a.clone(), t.c.clone()),
        y: Rational::new(t.b.clone(), t.c.clone()),
        n: t.n,
    })
}

/// Exact test of `x^n + y^n = 1`.
pub fn check_unit_circle(rt: &RationalTriple) -> bool {
    match (rational_pow(&rt.x, rt.n), rational_pow(&rt.y, rt.n)) {
        (Ok(x), Ok(y)) => x + y == Rational::one(),
        _ => false,
    }
}
