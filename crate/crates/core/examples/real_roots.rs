//! The real x with x^n + b^n = c^n, which is never an integer for n > 2 in these examples.

use fermat_sieve::sieve::{real_root, root_magnitude_estimate};
use num_bigint::BigInt;

fn main() -> fermat_sieve::Result<()> {
    let (b, c) = (BigInt::from(20), BigInt::from(21));
    for n in [3u32, 5, 7, 9] {
        println!(
            "x^{n} + 20^{n} = 21^{n}: x = {:.5}, estimate {:.4}",
            real_root(&b, &c, n)?,
            root_magnitude_estimate(&c, n)?
        );
    }
    let x = real_root(&BigInt::from(9), &BigInt::from(10), 7)?;
    println!("x^7 + 9^7 = 10^7: x = {x:.4}");
    println!("8^7 + 9^7 = {}", BigInt::from(8).pow(7) + BigInt::from(9).pow(7));
    Ok(())
}
