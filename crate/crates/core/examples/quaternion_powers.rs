//! Integer quaternions: the commuting subfamily, powers of pure-imaginary quaternions
//! and the odd-power identity.

use fermat_sieve::quaternion::{
    commutative_subset_mul, odd_power_permuted, odd_pure_imag_scan, power_vector_scale, quat_pythagorean_subset,
    verify_odd_power_instance, verify_square_sum_instance, QuatInt,
};
use num_bigint::BigInt;

fn main() -> fermat_sieve::Result<()> {
    let (m1, big1) = (BigInt::from(1), BigInt::from(2));
    println!("(1,1,1,1)(2,1,1,1) = {}", commutative_subset_mul(&m1, &big1));
    let t = quat_pythagorean_subset(&m1, &big1);
    println!("{} ^2 + {} ^2 = {} ^2: {}", t.a, t.b, t.c, t.is_solution());

    let q = QuatInt::new(1, 3, 4, 5);
    let q8 = q.pow(8);
    println!("(1 + 3i + 4j + 5k)^8 = {q8}");
    if let Some((scalar, scale)) = power_vector_scale(&q, 8) {
        println!("  = {scalar} + {scale} (3i + 4j + 5k)");
    }

    let i = QuatInt::new(0, 1, 0, 0);
    let j = QuatInt::new(0, 0, 1, 0);
    println!("ij = {}, ji = {}", &i * &j, &j * &i);

    let b = BigInt::from(3);
    println!("square-sum instance at b = 3: {}", verify_square_sum_instance(&b));
    for big_n in 0..=3 {
        println!(
            "odd-power instance at b = 3, exponent {}: {} (permuted: {})",
            2 * big_n + 1,
            verify_odd_power_instance(&b, big_n),
            odd_power_permuted(&b, big_n, [2, 0, 1])?
        );
    }
    println!("pure-imaginary cubes in [-1, 1]^3: {}", odd_pure_imag_scan(1, 1)?.len());
    Ok(())
}
