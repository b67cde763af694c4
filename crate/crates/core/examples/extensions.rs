//! Negative exponents, the radical equation and rational points on x^n + y^n = 1.

use fermat_sieve::extensions::{check_unit_circle, inverse_fermat_generate, negate_exponent, normalize, verify_negative};
use fermat_sieve::sieve::Triple;
use num_bigint::BigInt;

fn main() -> fermat_sieve::Result<()> {
    for t in [Triple::new(3, 4, 7, 1), Triple::new(3, 4, 5, 2)] {
        let neg = negate_exponent(&t)?;
        println!("{t} -> {neg}, holds: {}", verify_negative(&neg));
    }
    for (r, s, t, m) in [(1, 1, 1, 2), (2, 2, 1, 2), (1, 1, 2, 3)] {
        let rt = inverse_fermat_generate(&BigInt::from(r), &BigInt::from(s), &BigInt::from(t), m)?;
        println!(
            "r = {r}, s = {s}, t = {t}: {}^(1/{m}) + {}^(1/{m}) = {}^(1/{m}), verified: {}",
            rt.a, rt.b, rt.c, rt.verify()
        );
    }
    let p = normalize(&Triple::new(5, 12, 13, 2))?;
    println!("({}, {}) on x^2 + y^2 = 1: {}", p.x, p.y, check_unit_circle(&p));
    Ok(())
}
