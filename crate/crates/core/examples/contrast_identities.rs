//! Equations close to a^3 + b^3 = c^3 that do have solutions, sums of squares
//! and the rational points of y^2 = x^3 - x.

use fermat_sieve::identities::{
    cubic_contrast_identities, elliptic_rational_scan, four_square_residual, four_square_terms,
    integer_square_root, square_sum_residuals,
};
use fermat_sieve::integer::Rational;
use num_bigint::BigInt;

fn main() -> fermat_sieve::Result<()> {
    let report = cubic_contrast_identities();
    for i in &report.identities {
        println!("{:<28} {}", i.label, i.holds);
    }
    for q in &report.quotients {
        println!("{:<28} = {} (exact: {})", q.label, q.quotient, q.exact);
    }

    let rat = |n: i64, d: i64| Rational::new(BigInt::from(n), BigInt::from(d));
    let (first, second) = square_sum_residuals(&rat(2, 1), &rat(1, 2), &rat(5, 7));
    println!("square-sum residuals: {first}, {second}");
    let one = BigInt::from(1);
    println!("four-square residual at 1,1,1,1: {}", four_square_residual(&one, &one, &one, &one));
    let roots: Vec<String> = four_square_terms(&rat(2, 1), &rat(1, 2), &rat(2, 1), &rat(9, 2))
        .iter()
        .map(|t| integer_square_root(t).map_or("?".into(), |r| r.to_string()))
        .collect();
    println!("squared seeds 2, 1/2, 2, 9/2 give the squares of {}", roots.join(", "));

    let height = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(30);
    let points = elliptic_rational_scan(height)?;
    println!("rational points on y^2 = x^3 - x up to height {height}:");
    for (x, y) in points {
        println!("  ({x}, {y})");
    }
    Ok(())
}
