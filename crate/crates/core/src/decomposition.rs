//! Cofactor polynomials and power-sum recurrences.
//!
//! For odd `n`, `a^n + b^n = (a + b) * F(a, b, n)` where
//! `F = a^(n-1) - a^(n-2) b + ... + b^(n-1)`. For every `n >= 1`,
//! `c^n - a^n = (c - a) * G(c, a, n)` with `G = c^(n-1) + c^(n-2) a + ... + a^(n-1)`,
//! and for even `n` the factor `c + a` splits off again: `G = (c + a) * g`.
//! These factorizations are what the divisibility sieve tests against.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::integer::{rational_pow, Rational};

/// Which cofactor polynomial an evaluation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CofactorKind {
    /// `F(a, b, n)`: alternating sum, `(a + b) F = a^n + b^n`, odd `n` only.
    Sum,
    /// `G(c, a, n)`: plain sum, `(c - a) G = c^n - a^n`.
    Difference,
    /// `g(c, a, n) = G(c, a, n) / (c + a)`, even `n` only.
    ReducedDifference,
}

/// A cofactor value tagged with the polynomial and arguments that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CofactorEval {
    pub kind: CofactorKind,
    pub first: BigInt,
    pub second: BigInt,
    pub n: u32,
    pub value: BigInt,
}

impl CofactorEval {
    pub fn evaluate(kind: CofactorKind, first: &BigInt, second: &BigInt, n: u32) -> Result<Self> {
        let value = match kind {
            CofactorKind::Sum => sum_cofactor(first, second, n)?,
            CofactorKind::Difference => difference_cofactor(first, second, n)?,
            CofactorKind::ReducedDifference => reduced_difference_cofactor(first, second, n)?,
        };
        Ok(CofactorEval {
            kind,
            first: first.clone(),
            second: second.clone(),
            n,
            value,
        })
    }
}

fn powers(x: &BigInt, count: u32) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(count as usize);
    let mut acc = BigInt::one();
    for _ in 0..count {
        out.push(acc.clone());
        acc *= x;
    }
    out
}

/// `F(a, b, n) = sum_{k=0}^{n-1} (-1)^k a^(n-1-k) b^k` for odd `n >= 1`.
pub fn sum_cofactor(a: &BigInt, b: &BigInt, n: u32) -> Result<BigInt> {
    if n == 0 || n % 2 == 0 {
        return Err(Error::domain(format!("F(a, b, n) needs odd n >= 1, got {n}")));
    }
    let a_pows = powers(a, n);
    let mut b_pow = BigInt::one();
    let mut total = BigInt::zero();
    for k in 0..n {
        let term = &a_pows[(n - 1 - k) as usize] * &b_pow;
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
        b_pow *= b;
    }
    Ok(total)
}

/// `G(c, a, n) = sum_{k=0}^{n-1} c^(n-1-k) a^k` for `n >= 1`.
pub fn difference_cofactor(c: &BigInt, a: &BigInt, n: u32) -> Result<BigInt> {
    if n == 0 {
        return Err(Error::domain("G(c, a, n) needs n >= 1"));
    }
    let c_pows = powers(c, n);
    let mut a_pow = BigInt::one();
    let mut total = BigInt::zero();
    for k in 0..n {
        total += &c_pows[(n - 1 - k) as usize] * &a_pow;
        a_pow *= a;
    }
    Ok(total)
}

/// `g(c, a, n) = G(c, a, n) / (c + a)` for even `n >= 2`.
///
/// The division is exact for every even `n`; a remainder means a bug and panics.
pub fn reduced_difference_cofactor(c: &BigInt, a: &BigInt, n: u32) -> Result<BigInt> {
    if n < 2 || n % 2 == 1 {
        return Err(Error::domain(format!("g(c, a, n) needs even n >= 2, got {n}")));
    }
    let sum = c + a;
    if sum.is_zero() {
        return Err(Error::domain("g(c, a, n) needs c + a != 0"));
    }
    let g = difference_cofactor(c, a, n)?;
    let (quotient, remainder) = g.div_rem(&sum);
    assert!(
        remainder.is_zero(),
        "G({c}, {a}, {n}) = {g} is not divisible by c + a = {sum}"
    );
    Ok(quotient)
}

fn check_negative_powers(x: &Rational, y: &Rational, n: i64) -> Result<()> {
    if n < 2 && (x.is_zero() || y.is_zero()) {
        return Err(Error::domain(
            "recurrence needs nonzero bases when an exponent below zero appears",
        ));
    }
    Ok(())
}

/// `a^n + b^n - [(a + b)(a^(n-1) + b^(n-1)) - ab(a^(n-2) + b^(n-2))]`.
///
/// Identically zero for every integer `n`, including zero and negative values.
pub fn power_sum_residual(a: &Rational, b: &Rational, n: i64) -> Result<Rational> {
    check_negative_powers(a, b, n)?;
    let p = |e: i64| -> Result<Rational> { Ok(rational_pow(a, e)? + rational_pow(b, e)?) };
    let lhs = p(n)?;
    let rhs = (a + b) * p(n - 1)? - (a * b) * p(n - 2)?;
    Ok(lhs - rhs)
}

/// `c^n - a^n - [(c - a)(c^(n-1) + a^(n-1)) + ca(c^(n-2) - a^(n-2))]`, identically zero.
pub fn power_difference_residual(c: &Rational, a: &Rational, n: i64) -> Result<Rational> {
    check_negative_powers(c, a, n)?;
    let lhs = rational_pow(c, n)? - rational_pow(a, n)?;
    let rhs = (c - a) * (rational_pow(c, n - 1)? + rational_pow(a, n - 1)?)
        + (c * a) * (rational_pow(c, n - 2)? - rational_pow(a, n - 2)?);
    Ok(lhs - rhs)
}

/// With `c = p + q` and `a = p - q`, returns `R^n` such that
/// `(p + q)^n = (p - q)^n + R^n`, built from the binomial expansion
/// `sum_{i=0}^{n-1} C(n, i) p^i (q^(n-i) - (-q)^(n-i))`.
pub fn binomial_gap_power(p: &BigInt, q: &BigInt, n: u32) -> Result<BigInt> {
    if !(q.is_positive() && p > q) {
        return Err(Error::domain("binomial gap needs p > q >= 1"));
    }
    if n == 0 {
        return Err(Error::domain("binomial gap needs n >= 1"));
    }
    let q_pows = powers(q, n + 1);
    let mut binom = BigInt::one();
    let mut p_pow = BigInt::one();
    let mut total = BigInt::zero();
    for i in 0..n {
        let e = n - i;
        // q^e - (-q)^e vanishes for even e and doubles for odd e
        if e % 2 == 1 {
            total += &binom * &p_pow * &q_pows[e as usize] * 2u32;
        }
        binom = binom * (n - i) / (i + 1);
        p_pow *= p;
    }
    Ok(total)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(x: &BigInt) -> Parity {
        if x.is_even() {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn of_u32(x: u32) -> Parity {
        if x % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

/// Predicted parity of `F(a, b, n)` for odd `n >= 3`: even only when both arguments are even.
pub fn sum_cofactor_parity(a: Parity, b: Parity) -> Parity {
    match (a, b) {
        (Parity::Even, Parity::Even) => Parity::Even,
        _ => Parity::Odd,
    }
}

/// Predicted parity of `G(c, a, n)` for `n >= 2`.
///
/// Odd/odd arguments give `n` odd terms, so the parity follows `n`; even/even
/// gives only even terms; mixed arguments leave exactly one odd term.
pub fn difference_cofactor_parity(c: Parity, a: Parity, n: Parity) -> Parity {
    match (c, a) {
        (Parity::Odd, Parity::Odd) => n,
        (Parity::Even, Parity::Even) => Parity::Even,
        _ => Parity::Odd,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(b(n), b(d))
    }

    #[test]
    fn sum_cofactor_examples() {
        assert_eq!(sum_cofactor(&b(1), &b(1), 3).unwrap(), b(1));
        // direct division oracle: (2^3 + 3^3) / (2 + 3)
        assert_eq!(sum_cofactor(&b(2), &b(3), 3).unwrap(), b((8 + 27) / 5));
        assert_eq!(sum_cofactor(&b(17), &b(-4), 1).unwrap(), b(1));
        assert!(sum_cofactor(&b(2), &b(3), 4).is_err());
        assert!(sum_cofactor(&b(2), &b(3), 0).is_err());
    }

    #[test]
    fn difference_cofactor_examples() {
        assert_eq!(difference_cofactor(&b(3), &b(1), 2).unwrap(), b((9 - 1) / 2));
        assert_eq!(difference_cofactor(&b(13), &b(12), 2).unwrap(), b(25));
        assert_eq!(difference_cofactor(&b(13), &b(5), 1).unwrap(), b(1));
        assert!(difference_cofactor(&b(3), &b(1), 0).is_err());
    }

    #[test]
    fn reduced_difference_examples() {
        assert_eq!(reduced_difference_cofactor(&b(9), &b(4), 2).unwrap(), b(1));
        // G(2,1,4) = 15 = 3 * 5
        assert_eq!(reduced_difference_cofactor(&b(2), &b(1), 4).unwrap(), b(5));
        // (3^6 - 1) / ((3 - 1)(3 + 1))
        assert_eq!(reduced_difference_cofactor(&b(3), &b(1), 6).unwrap(), b(728 / 8));
        assert!(reduced_difference_cofactor(&b(3), &b(-3), 2).is_err());
        assert!(reduced_difference_cofactor(&b(3), &b(1), 3).is_err());
    }

    #[test]
    fn cofactor_eval_records_arguments() {
        let e = CofactorEval::evaluate(CofactorKind::Sum, &b(2), &b(3), 3).unwrap();
        assert_eq!(e.value, b(7));
        assert_eq!((e.first, e.second, e.n), (b(2), b(3), 3));
        let g = CofactorEval::evaluate(CofactorKind::ReducedDifference, &b(2), &b(1), 4).unwrap();
        assert_eq!(g.value, b(5));
    }

    #[test]
    fn factorisations_hold_on_small_grid() {
        for x in -50i64..=50 {
            for y in -50i64..=50 {
                let (bx, by) = (b(x), b(y));
                for n in (1u32..=15).step_by(2) {
                    let f = sum_cofactor(&bx, &by, n).unwrap();
                    assert_eq!((&bx + &by) * f, bx.pow(n) + by.pow(n));
                }
                for n in 1u32..=15 {
                    let g = difference_cofactor(&bx, &by, n).unwrap();
                    assert_eq!((&bx - &by) * &g, bx.pow(n) - by.pow(n));
                    if n % 2 == 0 && x + y != 0 {
                        let h = reduced_difference_cofactor(&bx, &by, n).unwrap();
                        assert_eq!((&bx + &by) * h, g);
                    }
                }
            }
        }
    }

    #[test]
    fn factorisation_chain_for_4n_plus_2() {
        for c in 1i64..=50 {
            for a in 1i64..=50 {
                for half in 0u32..=3 {
                    let odd = 2 * half + 1;
                    let lhs = difference_cofactor(&b(c), &b(a), 2 * odd).unwrap();
                    let rhs = b(c + a)
                        * sum_cofactor(&b(c), &b(a), odd).unwrap()
                        * difference_cofactor(&b(c), &b(a), odd).unwrap();
                    assert_eq!(lhs, rhs, "c={c} a={a} n={}", 2 * odd);
                }
            }
        }
    }

    #[test]
    fn parity_tables_match_evaluation() {
        for x in 1i64..=12 {
            for y in 1i64..=12 {
                let (px, py) = (Parity::of(&b(x)), Parity::of(&b(y)));
                for n in (3u32..=11).step_by(2) {
                    let f = sum_cofactor(&b(x), &b(y), n).unwrap();
                    assert_eq!(Parity::of(&f), sum_cofactor_parity(px, py));
                }
                for n in 2u32..=11 {
                    let g = difference_cofactor(&b(x), &b(y), n).unwrap();
                    assert_eq!(Parity::of(&g), difference_cofactor_parity(px, py, Parity::of_u32(n)));
                }
            }
        }
        assert_eq!(sum_cofactor_parity(Parity::Even, Parity::Even), Parity::Even);
        assert_eq!(
            difference_cofactor_parity(Parity::Odd, Parity::Odd, Parity::Even),
            Parity::Even
        );
        assert_eq!(
            difference_cofactor_parity(Parity::Even, Parity::Odd, Parity::Odd),
            Parity::Odd
        );
    }

    #[test]
    fn recurrence_examples() {
        assert!(power_sum_residual(&r(2, 1), &r(3, 1), 5).unwrap().is_zero());
        assert!(power_sum_residual(&r(2, 1), &r(3, 1), -2).unwrap().is_zero());
        assert!(power_sum_residual(&r(1, 1), &r(1, 1), 0).unwrap().is_zero());
        assert!(power_difference_residual(&r(5, 1), &r(2, 1), 4).unwrap().is_zero());
        assert!(power_difference_residual(&r(3, 1), &r(2, 1), -3).unwrap().is_zero());
        assert!(power_difference_residual(&r(7, 1), &r(7, 1), 6).unwrap().is_zero());
        assert!(power_sum_residual(&r(0, 1), &r(3, 1), 1).is_err());
        assert!(power_sum_residual(&r(0, 1), &r(3, 1), 2).unwrap().is_zero());
    }

    #[test]
    fn binomial_gap_examples() {
        assert_eq!(binomial_gap_power(&b(2), &b(1), 2).unwrap(), b(9 - 1));
        assert_eq!(binomial_gap_power(&b(2), &b(1), 1).unwrap(), b(2));
        assert_eq!(binomial_gap_power(&b(3), &b(2), 3).unwrap(), b(125 - 1));
        assert!(binomial_gap_power(&b(2), &b(2), 3).is_err());
        for p in 2i64..20 {
            for q in 1..p {
                for n in 1u32..10 {
                    let direct = b(p + q).pow(n) - b(p - q).pow(n);
                    assert_eq!(binomial_gap_power(&b(p), &b(q), n).unwrap(), direct);
                }
            }
        }
    }
}
