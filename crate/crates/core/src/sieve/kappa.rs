use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::integer::Rational;

/// Exponent-cap constant `1.5 / ln 2`, about 2.164.
pub const KAPPA: f64 = 1.5 / std::f64::consts::LN_2;

/// Rigorous rational enclosure `[lo, hi]` of `ln 2` from the first `terms`
/// terms of `sum_{k>=1} 1 / (k 2^k)`; the tail is below `1 / ((terms + 1) 2^terms)`.
pub fn ln2_bracket(terms: u32) -> (Rational, Rational) {
    let mut sum = Rational::zero();
    let mut pow2 = BigInt::one();
    for k in 1..=terms {
        pow2 <<= 1;
        sum += Rational::new(BigInt::one(), BigInt::from(k) * &pow2);
    }
    let tail = Rational::new(BigInt::one(), BigInt::from(terms + 1) * pow2);
    let hi = &sum + tail;
    (sum, hi)
}

const SCALE_BITS: u32 = 128;

/// `(floor(lo 2^128), ceil(hi 2^128))` for the 128-term enclosure of `ln 2`.
fn scaled_bracket() -> &'static (BigInt, BigInt) {
    static BRACKET: OnceLock<(BigInt, BigInt)> = OnceLock::new();
    BRACKET.get_or_init(|| {
        let (lo, hi) = ln2_bracket(128);
        let scale = Rational::from_integer(BigInt::one() << SCALE_BITS);
        ((lo * &scale).floor().to_integer(), (hi * scale).ceil().to_integer())
    })
}

fn floor_of(x: &Rational) -> BigInt {
    x.numer().div_floor(x.denom())
}

/// `floor(c / kappa) = floor(2 c ln 2 / 3)`, exact.
///
/// `2 c ln 2 / 3` is irrational for `c >= 1`, so narrowing the enclosure of
/// `ln 2` until both ends share a floor always terminates. Non-positive `c`
/// gives 0.
pub fn max_exponent(c: &BigInt) -> BigInt {
    if !c.is_positive() {
        return BigInt::zero();
    }
    let (lo, hi) = scaled_bracket();
    let denom = BigInt::from(3) << SCALE_BITS;
    let twice: BigInt = c << 1u32;
    let lo_floor = (&twice * lo).div_floor(&denom);
    if lo_floor == (&twice * hi).div_floor(&denom) {
        return lo_floor;
    }
    let scale = Rational::new(c * 2, BigInt::from(3));
    let mut terms = 256;
    loop {
        let (lo, hi) = ln2_bracket(terms);
        let lo_floor = floor_of(&(&scale * &lo));
        if lo_floor == floor_of(&(&scale * &hi)) {
            return lo_floor;
        }
        terms *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn examples() {
        assert_eq!(max_exponent(&BigInt::from(5)), BigInt::from(2));
        assert_eq!(max_exponent(&BigInt::from(21)), BigInt::from(9));
        assert_eq!(max_exponent(&BigInt::from(42)), BigInt::from(19));
        assert_eq!(max_exponent(&BigInt::from(100)), BigInt::from(46));
        assert_eq!(max_exponent(&BigInt::from(1013)), BigInt::from(468));
        assert_eq!(max_exponent(&BigInt::from(0)), BigInt::from(0));
    }

    #[test]
    fn bracket_encloses_ln2() {
        let (lo, hi) = ln2_bracket(60);
        let (lo, hi) = (lo.to_f64().unwrap(), hi.to_f64().unwrap());
        assert!(lo <= std::f64::consts::LN_2 && std::f64::consts::LN_2 <= hi);
        assert!(hi - lo < 1e-17);
    }

    #[test]
    fn kappa_between_crude_bounds() {
        let ln2 = std::f64::consts::LN_2;
        assert!(1.0 / ln2 < KAPPA && KAPPA < 2.0 / ln2);
        assert!((KAPPA - 2.164).abs() < 1e-3);
    }

    #[test]
    fn agrees_with_float_away_from_integers() {
        for c in 1u64..5000 {
            let x = c as f64 / KAPPA;
            if (x - x.round()).abs() > 1e-9 {
                assert_eq!(max_exponent(&BigInt::from(c)), BigInt::from(x.floor() as u64), "c={c}");
            }
        }
    }

    #[test]
    fn large_c_needs_refinement_but_stays_exact() {
        // 10^60 / kappa: compare against a much tighter enclosure computed directly
        let c: BigInt = num_traits::pow(BigInt::from(10), 60);
        let (lo, hi) = ln2_bracket(400);
        let scale = Rational::new(&c * 2, BigInt::from(3));
        assert_eq!(floor_of(&(&scale * &lo)), floor_of(&(&scale * &hi)));
        assert_eq!(max_exponent(&c), floor_of(&(&scale * &lo)));
    }
}
