//! Solution counts K(n, c) and their decrease with the exponent.

use fermat_sieve::sieve::{a_min, count_solutions, max_exponent, monotonicity_report, CountOptions};
use num_bigint::BigInt;

fn main() -> fermat_sieve::Result<()> {
    let at_c0 = CountOptions { at_c0_only: true, ..CountOptions::default() };
    println!("K(1, c = 5) = {}", count_solutions(1, 5, at_c0)?);
    println!("K(2, c = 5) = {}", count_solutions(2, 5, at_c0)?);

    let parallel = CountOptions { jobs: 4, ..CountOptions::default() };
    let report = monotonicity_report(100, 6, parallel)?;
    for (i, k) in report.counts.iter().enumerate() {
        println!("K({}, c <= 100) = {k}", i + 1);
    }
    println!("non-increasing in n: {}", report.non_increasing);

    let cap = max_exponent(&BigInt::from(100));
    println!("largest admissible exponent at c = 100: {cap}");
    for n in [1u32, 2, 3] {
        match a_min(n, 10)? {
            Some(a) => println!("smallest a over solutions with c <= 10 at n = {n}: {a}"),
            None => println!("no solutions with c <= 10 at n = {n}"),
        }
    }
    Ok(())
}
