//! Contrast identities: relaxed cubic equations that do have solutions,
//! parametric sums of squares, and the rational points of `y^2 = x^3 - x`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integer::Rational;

/// One exactly checked equation, with both sides evaluated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub label: String,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub holds: bool,
}

/// A division that is expected to be exact, with its quotient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientCheck {
    pub label: String,
    pub dividend: BigInt,
    pub divisor: BigInt,
    pub quotient: BigInt,
    pub exact: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicContrastReport {
    pub identities: Vec<IdentityCheck>,
    pub quotients: Vec<QuotientCheck>,
}

impl CubicContrastReport {
    pub fn all_hold(&self) -> bool {
        self.identities.iter().all(|i| i.holds) && self.quotients.iter().all(|q| q.exact)
    }
}

fn cube(x: i64) -> BigInt {
    BigInt::from(x).pow(3)
}

fn identity(label: &str, lhs: BigInt, rhs: BigInt) -> IdentityCheck {
    IdentityCheck {
        label: label.to_string(),
        holds: lhs == rhs,
        lhs,
        rhs,
    }
}

fn quotient(label: &str, dividend: BigInt, divisor: i64) -> QuotientCheck {
    let divisor = BigInt::from(divisor);
    let (quotient, rem) = dividend.div_rem(&divisor);
    QuotientCheck {
        label: label.to_string(),
        dividend,
        divisor,
        quotient,
        exact: rem.is_zero(),
    }
}

/// Cubic equations with an extra variable, which unlike `a^3 + b^3 = c^3`
/// have small solutions, and the divisions by `a + b` (or `c - a`) that the
/// cofactor factorisation predicts to be exact.
pub fn cubic_contrast_identities() -> CubicContrastReport {
    let identities = vec![
        identity("3^3 + 5^3 = 19 * 2^3", cube(3) + cube(5), BigInt::from(19) * cube(2)),
        identity("3^3 + 4^3 + 5^3 = 6^3", cube(3) + cube(4) + cube(5), cube(6)),
        identity("1^3 + 12^3 = 9^3 + 10^3", cube(1) + cube(12), cube(9) + cube(10)),
        identity("9^3 + 10^3 = 1729", cube(9) + cube(10), BigInt::from(1729)),
        identity("4^3 + 8^3 = 24^2", cube(4) + cube(8), BigInt::from(24).pow(2)),
    ];
    let quotients = vec![
        quotient("19 * 2^3 / (3 + 5)", BigInt::from(19) * cube(2), 3 + 5),
        quotient("(6^3 - 5^3) / (3 + 4)", cube(6) - cube(5), 3 + 4),
        quotient("(3^3 + 4^3) / (6 - 5)", cube(3) + cube(4), 6 - 5),
        quotient("1729 / (1 + 12)", BigInt::from(1729), 1 + 12),
        quotient("1729 / (9 + 10)", BigInt::from(1729), 9 + 10),
        quotient("24^2 / (4 + 8)", BigInt::from(24).pow(2), 4 + 8),
    ];
    CubicContrastReport {
        identities,
        quotients,
    }
}

/// Residuals of the two square-sum identities in squared seeds `R = r^2`, `S = s^2` and a free `t`:
///
/// `(R + S - t^2)^2 + 4 R t^2 - (R - S + t^2)^2 - 4 R S` and
/// `(-R + 2S + t)^2 + (R - 2S + t)^2 + 16 R S - (R + 2S + t)^2 - (R + 2S - t)^2`.
///
/// Both vanish identically; seeds are squared so irrational `r = sqrt(2)` is exact.
pub fn square_sum_residuals(r_sq: &Rational, s_sq: &Rational, t: &Rational) -> (Rational, Rational) {
    let sq = |x: Rational| &x * &x;
    let two = Rational::from_integer(BigInt::from(2));
    let four = Rational::from_integer(BigInt::from(4));
    let sixteen = Rational::from_integer(BigInt::from(16));
    let t2 = t * t;
    let first = sq(r_sq + s_sq - &t2) + &four * r_sq * &t2 - sq(r_sq - s_sq + &t2) - &four * r_sq * s_sq;
    let s2 = &two * s_sq;
    let second = sq(-r_sq.clone() + &s2 + t) + sq(r_sq - &s2 + t) + &sixteen * r_sq * s_sq
        - sq(r_sq + &s2 + t)
        - sq(r_sq + &s2 - t);
    (first, second)
}

/// `(r^2 - s^2 - t^2 - q^2)^2 + (2rs)^2 + (2rt)^2 + (2rq)^2 - (r^2 + s^2 + t^2 + q^2)^2`, always 0.
pub fn four_square_residual(r: &BigInt, s: &BigInt, t: &BigInt, q: &BigInt) -> BigInt {
    let sq = |x: &BigInt| x * x;
    let (r2, s2, t2, q2) = (sq(r), sq(s), sq(t), sq(q));
    sq(&(&r2 - &s2 - &t2 - &q2)) + sq(&(r * s * 2)) + sq(&(r * t * 2)) + sq(&(r * q * 2))
        - sq(&(r2 + s2 + t2 + q2))
}

/// The five squares `(r^2 - s^2 - t^2 - q^2)^2, (2rs)^2, (2rt)^2, (2rq)^2, (r^2 + s^2 + t^2 + q^2)^2`
/// from squared seeds `R, S, T, Q`; the first four sum to the last.
pub fn four_square_terms(r_sq: &Rational, s_sq: &Rational, t_sq: &Rational, q_sq: &Rational) -> [Rational; 5] {
    let four = Rational::from_integer(BigInt::from(4));
    let lead = r_sq - s_sq - t_sq - q_sq;
    let total = r_sq + s_sq + t_sq + q_sq;
    [
        &lead * &lead,
        &four * r_sq * s_sq,
        &four * r_sq * t_sq,
        &four * r_sq * q_sq,
        &total * &total,
    ]
}

/// The base of a perfect square, if `x` is the square of a non-negative integer.
pub fn integer_square_root(x: &Rational) -> Option<BigInt> {
    if !x.is_integer() || x.is_negative() {
        return None;
    }
    let n = x.to_integer();
    let root = n.sqrt();
    (&root * &root == n).then_some(root)
}

/// Rational points of `y^2 = x^3 - x` whose coordinates have numerator and
/// denominator at most `height` in absolute value, sorted by `(x, y)`.
///
/// With `x = p/q` in lowest terms, `x^3 - x = p (p^2 - q^2) / q^3` is already
/// reduced, so it is a rational square only if `q^3` and `p (p^2 - q^2)` are
/// both perfect squares. That turns the search over pairs into a search over `x`.
pub fn elliptic_rational_scan(height: u64) -> Result<Vec<(Rational, Rational)>> {
    if height == 0 {
        return Err(Error::domain("height must be at least 1"));
    }
    let h = i64::try_from(height).map_err(|_| Error::domain("height too large"))?;
    let hb = BigInt::from(h);
    let mut out = Vec::new();
    for q in 1..=h {
        for p in -h..=h {
            if p.gcd(&q) != 1 {
                continue;
            }
            let (pb, qb) = (BigInt::from(p), BigInt::from(q));
            let num = &pb * (&pb * &pb - &qb * &qb);
            if num.is_negative() {
                continue;
            }
            let den = qb.pow(3);
            let (num_root, den_root) = (num.sqrt(), den.sqrt());
            if &num_root * &num_root != num || &den_root * &den_root != den {
                continue;
            }
            if num_root > hb || den_root > hb {
                continue;
            }
            let x = Rational::new(pb, qb);
            let y = Rational::new(num_root, den_root);
            if !y.is_zero() {
                out.push((x.clone(), -y.clone()));
            }
            out.push((x, y));
        }
    }
    out.sort();
    Ok(out)
}
