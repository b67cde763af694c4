//! The cofactors of a^n + b^n and c^n - a^n, and their parities.

use fermat_sieve::decomposition::{
    binomial_gap_power, difference_cofactor, difference_cofactor_parity, reduced_difference_cofactor,
    sum_cofactor, sum_cofactor_parity, Parity,
};
use num_bigint::BigInt;

fn main() -> fermat_sieve::Result<()> {
    let (a, b, c) = (BigInt::from(7), BigInt::from(20), BigInt::from(21));
    let f = sum_cofactor(&a, &b, 5)?;
    println!("F(7, 20, 5) = {f}, (a + b) F = {}", (&a + &b) * &f);
    println!("7^5 + 20^5   = {}", a.pow(5) + b.pow(5));
    let g = difference_cofactor(&c, &a, 5)?;
    println!("G(21, 7, 5) = {g}, (c - a) G = {}", (&c - &a) * &g);
    println!("g(5, 3, 2) = {}", reduced_difference_cofactor(&BigInt::from(5), &BigInt::from(3), 2)?);
    println!(
        "parity of F for odd/even legs: {:?}, of G(odd, odd, n = 5): {:?}",
        sum_cofactor_parity(Parity::Odd, Parity::Even),
        difference_cofactor_parity(Parity::Odd, Parity::Odd, Parity::Odd)
    );
    // c = p + q, a = p - q
    let gap = binomial_gap_power(&BigInt::from(4), &BigInt::from(1), 2)?;
    println!("5^2 - 3^2 = {gap}");
    Ok(())
}
