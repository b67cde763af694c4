//! The equation over the Gaussian integers: generated solutions, symmetries and a small cubic scan.

use fermat_sieve::gaussian::{
    cubic_residuals, proportional_complex_pythagorean, pythagorean_from_params, quadratic_residuals,
    scan_cubic_simultaneous, GaussInt,
};
use num_bigint::BigInt;

fn main() -> fermat_sieve::Result<()> {
    let m: GaussInt = "1+i".parse()?;
    let big: GaussInt = "2-i".parse()?;
    let t = pythagorean_from_params(&m, &big);
    println!("{t}: solution {}", t.is_solution());
    println!("swapped real/imaginary: {}", t.swap_real_imag().is_solution());
    println!("rotated by i: {}", t.rotate(1).is_solution());

    let big_int = |xs: [i64; 6]| xs.map(BigInt::from);
    let [a, a1, b, b1, c, c1] = big_int([1, 2, 2, 1, 2, 2]);
    println!("quadratic residuals at (1,2,2,1,2,2): {:?}", quadratic_residuals(&a, &a1, &b, &b1, &c, &c1));
    let [a, a1, b, b1, c, c1] = big_int([3, 5, 4, 12, 5, 13]);
    println!("quadratic residuals at (3,5,4,12,5,13): {:?}", quadratic_residuals(&a, &a1, &b, &b1, &c, &c1));
    let [a, a1, b, b1, c, c1] = big_int([1, 3, -2, 2, 1, 2]);
    println!("cubic residuals at (1,3,-2,2,1,2): {:?}", cubic_residuals(&a, &a1, &b, &b1, &c, &c1));

    let hits = scan_cubic_simultaneous(4)?;
    println!("{} simultaneous cubic solutions with |components| <= 4", hits.len());
    for h in hits.iter().take(5) {
        println!("  {:?} ({:?})", h.components, h.family);
    }

    let base = [3, 4, 5].map(BigInt::from);
    let scaled = proportional_complex_pythagorean(&base, &BigInt::from(2))?;
    println!("proportional: {scaled}, solution {}", scaled.is_solution());
    Ok(())
}
