//! Exact integer and rational primitives.
//!
//! Everything here is pure and allocation-light; the rest of the crate builds
//! on these helpers rather than on floating point.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Greatest common divisor, always non-negative. `gcd(0, 0) = 0`.
pub fn gcd(x: &BigInt, y: &BigInt) -> BigInt {
    x.gcd(y)
}

/// Greatest common divisor of three integers (not merely pairwise).
pub fn gcd3(a: &BigInt, b: &BigInt, c: &BigInt) -> BigInt {
    a.gcd(b).gcd(c)
}

const SMALL_PRIMES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

/// Largest bound below which Miller-Rabin with the 13 bases in
/// [`SMALL_PRIMES`] is known to be exact (Sorenson and Webster).
const MR_DETERMINISTIC_LIMIT: &str = "3317044064679887385961981";

/// Primality test.
///
/// Below 3 317 044 064 679 887 385 961 981 (about 2^81.4) this is strong
/// Miller-Rabin with the first thirteen prime bases, which is proven exact on
/// that range. Larger inputs additionally pass a strong Lucas test, making the
/// combination a Baillie-PSW test: no counterexample is known, but exactness
/// above the bound is not proven.
pub fn is_prime(n: &BigInt) -> bool {
    if n.sign() != Sign::Plus {
        return false;
    }
    if let Some(small) = n.to_u64() {
        if small < 2 {
            return false;
        }
        for &p in &SMALL_PRIMES {
            let p = p as u64;
            if small == p {
                return true;
            }
            if small % p == 0 {
                return false;
            }
        }
        if small < 43 * 43 {
            return true;
        }
    } else {
        for &p in &SMALL_PRIMES {
            if (n % p).is_zero() {
                return false;
            }
        }
    }

    if !SMALL_PRIMES
        .iter()
        .all(|&base| strong_probable_prime(n, &BigInt::from(base)))
    {
        return false;
    }
    let limit: BigInt = MR_DETERMINISTIC_LIMIT.parse().expect("valid literal");
    if n < &limit {
        return true;
    }
    strong_lucas_probable_prime(n)
}

fn strong_probable_prime(n: &BigInt, base: &BigInt) -> bool {
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    let mut x = base.modpow(&d, n);
    if x.is_one() || x == n_minus_one {
        return true;
    }
    for _ in 1..s {
        x = (&x * &x) % n;
        if x == n_minus_one {
            return true;
        }
        if x.is_one() {
            return false;
        }
    }
    false
}

/// Jacobi symbol (a / n) for odd positive n.
fn jacobi(a: &BigInt, n: &BigInt) -> i32 {
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut result = 1;
    while !a.is_zero() {
        let tz = a.trailing_zeros().unwrap_or(0);
        a >>= tz;
        let n_mod_8 = (&n % 8u32).to_u32().unwrap_or(0);
        if tz % 2 == 1 && (n_mod_8 == 3 || n_mod_8 == 5) {
            result = -result;
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u32() == Some(3) && (&n % 4u32).to_u32() == Some(3) {
            result = -result;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        result
    } else {
        0
    }
}

fn half_mod(x: BigInt, n: &BigInt) -> BigInt {
    let x = x.mod_floor(n);
    if x.is_odd() {
        (x + n) >> 1
    } else {
        x >> 1
    }
}

/// Strong Lucas probable-prime test with Selfridge's parameter choice.
fn strong_lucas_probable_prime(n: &BigInt) -> bool {
    if integer_nth_root(n, 2).map(|r| r.exact).unwrap_or(false) {
        return false;
    }
    let mut d = BigInt::from(5);
    loop {
        match jacobi(&d, n) {
            -1 => break,
            0 => {
                if &d.abs() != n {
                    return false;
                }
            }
            _ => {}
        }
        d = if d.is_positive() { -(d + 2u32) } else { -d + 2u32 };
    }
    let p = BigInt::one();
    let q: BigInt = (BigInt::one() - &d) / 4;

    let n_plus_one = n + 1u32;
    let s = n_plus_one.trailing_zeros().unwrap_or(0);
    let k = &n_plus_one >> s;

    let mut u = BigInt::one();
    let mut v = p.clone();
    let mut qk = q.mod_floor(n);
    let bits = k.bits();
    for i in (0..bits - 1).rev() {
        u = (&u * &v).mod_floor(n);
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        qk = (&qk * &qk).mod_floor(n);
        if k.bit(i) {
            let next_u = half_mod(&p * &u + &v, n);
            let next_v = half_mod(&d * &u + &p * &v, n);
            u = next_u;
            v = next_v;
            qk = (&qk * &q).mod_floor(n);
        }
    }
    if u.is_zero() || v.is_zero() {
        return true;
    }
    for _ in 1..s {
        v = (&v * &v - &qk * 2u32).mod_floor(n);
        if v.is_zero() {
            return true;
        }
        qk = (&qk * &qk).mod_floor(n);
    }
    false
}

/// `n = prime^exponent` with `prime` prime and `exponent >= 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimePower {
    pub prime: BigInt,
    pub exponent: u32,
}

/// Writes `n` as `p^k` if it is a prime power; `None` otherwise (and for `n < 2`).
pub fn prime_power_decompose(n: &BigInt) -> Option<PrimePower> {
    if n < &BigInt::from(2) {
        return None;
    }
    let max_exponent = u32::try_from(n.bits()).unwrap_or(u32::MAX);
    (1..=max_exponent).find_map(|k| {
        let root = n.nth_root(k);
        if root < BigInt::from(2) {
            return None;
        }
        (num_traits::pow(root.clone(), k as usize) == *n && is_prime(&root)).then(|| PrimePower {
            prime: root,
            exponent: k,
        })
    })
}

/// `floor(x^(1/n))` together with whether the root is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NthRoot {
    pub root: BigInt,
    pub exact: bool,
}

pub fn integer_nth_root(x: &BigInt, n: u32) -> Result<NthRoot> {
    if x.is_negative() {
        return Err(Error::domain("integer_nth_root needs x >= 0"));
    }
    if n == 0 {
        return Err(Error::domain("integer_nth_root needs n >= 1"));
    }
    let root = x.nth_root(n);
    let exact = num_traits::pow(root.clone(), n as usize) == *x;
    Ok(NthRoot { root, exact })
}

/// Exact prime-counting function pi(x), by a sieve of Eratosthenes.
pub fn prime_count_exact(x: u64) -> Result<u64> {
    if x < 2 {
        return Err(Error::domain("prime counting is defined here for x >= 2"));
    }
    let limit = usize::try_from(x).map_err(|_| Error::domain("x too large to sieve"))?;
    let mut composite = vec![false; limit + 1];
    let mut count = 0u64;
    for i in 2..=limit {
        if composite[i] {
            continue;
        }
        count += 1;
        let mut j = i.saturating_mul(i);
        while j <= limit {
            composite[j] = true;
            j += i;
        }
    }
    Ok(count)
}

/// Two-term prime-count estimate `x/ln x + x/(ln x)^2`.
pub fn prime_count_estimate(x: f64) -> Result<f64> {
    if !(x >= 2.0) {
        return Err(Error::domain("prime count estimate is defined for x >= 2"));
    }
    let ln = x.ln();
    Ok(x / ln + x / (ln * ln))
}

/// `base^exp` over the rationals; negative exponents invert.
pub fn rational_pow(base: &Rational, exp: i64) -> Result<Rational> {
    if exp < 0 && base.is_zero() {
        return Err(Error::domain("zero raised to a negative power"));
    }
    let magnitude = usize::try_from(exp.unsigned_abs())
        .map_err(|_| Error::domain("exponent out of range"))?;
    let power = num_traits::pow(base.clone(), magnitude);
    Ok(if exp < 0 { power.recip() } else { power })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(x: i64) -> BigInt {
        BigInt::from(x)
    }

    fn trial_division(n: u64) -> bool {
        n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(gcd(&b(0), &b(7)), b(7));
        assert_eq!(gcd(&b(49), &b(91)), b(7));
        assert_eq!(gcd(&b(151), &b(109)), b(1));
        assert_eq!(gcd(&b(0), &b(0)), b(0));
        assert_eq!(gcd(&b(-12), &b(18)), b(6));
    }

    #[test]
    fn gcd3_examples() {
        assert_eq!(gcd3(&b(3), &b(4), &b(5)), b(1));
        assert_eq!(gcd3(&b(9), &b(18), &b(21)), b(3));
        assert_eq!(gcd3(&b(17), &b(17), &b(17)), b(17));
        // pairwise gcds are not 1, the triple gcd is
        assert_eq!(gcd3(&b(6), &b(10), &b(15)), b(1));
    }

    #[test]
    fn primality_examples() {
        assert!(is_prime(&b(2)));
        assert!(is_prime(&b(1013)));
        assert!(!is_prime(&b(21)));
        assert!(!is_prime(&b(0)));
        assert!(!is_prime(&b(1)));
    }

    #[test]
    fn primality_matches_trial_division() {
        for n in 0..20_000u64 {
            assert_eq!(is_prime(&BigInt::from(n)), trial_division(n), "n = {n}");
        }
    }

    #[test]
    fn primality_on_hard_composites_and_large_primes() {
        // Carmichael numbers and strong pseudoprimes to many small bases
        for n in [561u64, 1105, 1729, 2047, 3_215_031_751, 3_825_123_056_546_413_051] {
            assert!(!is_prime(&BigInt::from(n)), "{n}");
        }
        let m61 = (BigInt::one() << 61) - 1;
        let m89 = (BigInt::one() << 89) - 1;
        let m127 = (BigInt::one() << 127) - 1;
        assert!(is_prime(&m61));
        assert!(is_prime(&m89));
        assert!(is_prime(&m127));
        assert!(!is_prime(&(&m89 * &m61)));
        assert!(!is_prime(&(&m127 * &m127)));
        let two_67 = (BigInt::one() << 67) - 1; // 193707721 * 761838257287
        assert!(!is_prime(&two_67));
    }

    #[test]
    fn lucas_component_alone() {
        for n in (5u64..5000).filter(|n| n % 2 == 1) {
            if trial_division(n) {
                assert!(strong_lucas_probable_prime(&BigInt::from(n)), "{n}");
            }
        }
        // smallest strong Lucas pseudoprimes are odd composites the test passes;
        // they must still fail Miller-Rabin base 2
        for n in [5459u64, 5777, 10877] {
            let n = BigInt::from(n);
            assert!(strong_lucas_probable_prime(&n));
            assert!(!strong_probable_prime(&n, &b(2)));
        }
    }

    #[test]
    fn prime_power_examples() {
        assert_eq!(
            prime_power_decompose(&b(49)),
            Some(PrimePower { prime: b(7), exponent: 2 })
        );
        assert_eq!(
            prime_power_decompose(&b(27)),
            Some(PrimePower { prime: b(3), exponent: 3 })
        );
        assert_eq!(prime_power_decompose(&b(42)), None);
        assert_eq!(prime_power_decompose(&b(1)), None);
        assert_eq!(
            prime_power_decompose(&b(1013)),
            Some(PrimePower { prime: b(1013), exponent: 1 })
        );
        assert_eq!(prime_power_decompose(&b(36)), None);
    }

    #[test]
    fn prime_power_scan_against_factorisation() {
        for n in 2u64..3000 {
            let distinct: Vec<u64> = (2..=n).filter(|p| n % p == 0 && trial_division(*p)).collect();
            let got = prime_power_decompose(&BigInt::from(n));
            assert_eq!(got.is_some(), distinct.len() == 1, "n = {n}");
            if let Some(pp) = got {
                assert_eq!(pp.prime, BigInt::from(distinct[0]));
                assert_eq!(num_traits::pow(pp.prime, pp.exponent as usize), BigInt::from(n));
            }
        }
    }

    #[test]
    fn nth_root_examples() {
        assert_eq!(
            integer_nth_root(&b(576), 2).unwrap(),
            NthRoot { root: b(24), exact: true }
        );
        assert_eq!(
            integer_nth_root(&b(6_880_121), 7).unwrap(),
            NthRoot { root: b(9), exact: false }
        );
        assert_eq!(integer_nth_root(&b(1), 9).unwrap(), NthRoot { root: b(1), exact: true });
        assert!(integer_nth_root(&b(-1), 3).is_err());
        assert!(integer_nth_root(&b(5), 0).is_err());
    }

    #[test]
    fn prime_count_examples() {
        assert_eq!(prime_count_exact(5).unwrap(), 3);
        assert_eq!(prime_count_exact(2).unwrap(), 1);
        assert_eq!(prime_count_exact(100).unwrap(), 25);
        assert_eq!(prime_count_exact(1013).unwrap(), 170);
        assert!(prime_count_exact(1).is_err());
        assert!(prime_count_estimate(1.5).is_err());
        let est = prime_count_estimate(100.0).unwrap();
        assert!((est - (100.0 / 100f64.ln() + 100.0 / 100f64.ln().powi(2))).abs() < 1e-12);
        // the two-term form lands within 10% of pi(x) from x = 10^3 on
        for x in [1_000u64, 10_000, 100_000] {
            let exact = prime_count_exact(x).unwrap() as f64;
            assert!((prime_count_estimate(x as f64).unwrap() - exact).abs() / exact < 0.1);
        }
    }

    #[test]
    fn rational_pow_handles_negative_exponents() {
        let half = Rational::new(b(1), b(2));
        assert_eq!(rational_pow(&half, -3).unwrap(), Rational::from_integer(b(8)));
        assert_eq!(rational_pow(&half, 0).unwrap(), Rational::one());
        assert!(rational_pow(&Rational::zero(), -1).is_err());
    }
}
