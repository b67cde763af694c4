//! Run a few candidates through the sieve and print which filter stopped each one.
//!
//! `cargo run --example classify_candidate [a b c n]`

use fermat_sieve::sieve::{classify, ClassifyOptions, StepOutcome, Triple, Verdict};

fn main() -> fermat_sieve::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|s| s.parse().ok()).collect();
    let candidates = if args.len() == 4 {
        vec![Triple::new(args[0], args[1], args[2], args[3])]
    } else {
        vec![
            Triple::new(3, 4, 5, 2),
            Triple::new(7, 20, 21, 5),
            Triple::new(8, 15, 21, 3),
            Triple::new(9, 18, 21, 3),
            Triple::new(5, 8, 11, 5),
            Triple::new(12, 9, 15, 2),
        ]
    };

    for t in &candidates {
        let cl = classify(t, ClassifyOptions::default())?;
        match cl.verdict {
            Verdict::Solution => println!("{t}: solution"),
            Verdict::Excluded(r) => println!("{t}: excluded by {r} [{}]", r.rule()),
            Verdict::Undecided => println!("{t}: undecided"),
        }
        let skipped = cl.trace.iter().filter(|s| matches!(s.outcome, StepOutcome::Skipped(_))).count();
        println!("    {} filters applied, {skipped} skipped", cl.trace.len());
    }
    Ok(())
}
