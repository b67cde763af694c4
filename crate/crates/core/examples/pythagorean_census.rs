//! Primitive Pythagorean triples and the ones with c = b + 1.

use fermat_sieve::sieve::{euclid_triple, hypotenuse_adjacent_count, primitive_pythagorean_triples};
use num_bigint::BigInt;

fn main() -> fermat_sieve::Result<()> {
    for c_max in [100u64, 300] {
        let census = hypotenuse_adjacent_count(c_max)?;
        println!("c <= {c_max}: {} primitive, {} with c = b + 1", census.total, census.adjacent);
    }
    for t in primitive_pythagorean_triples(50) {
        println!("  {t}");
    }
    let t = euclid_triple(&BigInt::from(1), &BigInt::from(2), 2)?;
    println!("m = 1, M = 2 gives {t}");
    Ok(())
}
