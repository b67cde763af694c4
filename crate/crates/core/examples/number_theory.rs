//! The integer layer: gcds, primality, prime powers, roots and prime counts.

use fermat_sieve::integer::{gcd3, integer_nth_root, is_prime, prime_count_estimate, prime_count_exact, prime_power_decompose};
use num_bigint::BigInt;

fn main() -> fermat_sieve::Result<()> {
    let big = |s: &str| s.parse::<BigInt>().unwrap();
    println!("gcd(9, 18, 21) = {}", gcd3(&big("9"), &big("18"), &big("21")));
    for s in ["97", "561", "170141183460469231731687303715884105727"] {
        println!("{s} prime: {}", is_prime(&big(s)));
    }
    if let Some(pp) = prime_power_decompose(&big("3125")) {
        println!("3125 = {}^{}", pp.prime, pp.exponent);
    }
    let r = integer_nth_root(&big("1000001"), 3)?;
    println!("floor cube root of 1000001 = {} (exact: {})", r.root, r.exact);
    for x in [100u64, 10_000, 1_000_000] {
        println!("pi({x}) = {}, estimate {:.1}", prime_count_exact(x)?, prime_count_estimate(x as f64)?);
    }
    Ok(())
}
