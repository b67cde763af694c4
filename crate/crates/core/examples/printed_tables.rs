//! The three filter tables, in the layout they are usually printed in.

use fermat_sieve::cli::aligned;
use fermat_sieve::sieve::{table1, table2, table3};

fn main() {
    println!("pairs below c0 = 5:");
    print!("{}", aligned(&table1().grid()));

    let t2 = table2();
    println!("\nc = {}, n = {}, a + b = {}:", t2.c, t2.n, t2.sum);
    print!("{}", aligned(&t2.grid()));
    println!("every column excluded: {}", t2.all_excluded());

    let t3 = table3();
    println!("\nc = {}, n = {}, a + b = {} (odd a):", t3.c, t3.n, t3.sum);
    print!("{}", aligned(&t3.grid()));
}
