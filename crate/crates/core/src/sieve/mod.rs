//! The divisibility sieve for `a^n + b^n = c^n` over positive integers.
//!
//! [`classify`] runs a candidate through a fixed sequence of cheap necessary
//! conditions (ordering, exponent bounds, parity, prime-power and coprimality
//! arguments, divisibility by the cofactors) before falling back to the exact
//! equality test. Every filter is a *necessary* condition for a solution, so a
//! genuine solution always survives to the end.

mod census;
mod classify;
mod kappa;
mod roots;
mod tables;

use std::fmt;

use num_bigint::BigInt;

pub use census::{
    a_min, count_solutions, enumerate_candidates, euclid_triple, find_solutions, hypotenuse_adjacent_count,
    monotonicity_report, primitive_pythagorean_triples, residue_sums, CountOptions,
    HypotenuseCensus, MonotonicityReport,
};
pub use classify::{
    classify, direct_check, Classification, ClassifyOptions, ExclusionReason, StepOutcome,
    TraceStep, Verdict,
};
pub use kappa::{ln2_bracket, max_exponent, KAPPA};
pub use roots::{real_root, real_root_with_tolerance, root_magnitude_estimate, DEFAULT_ROOT_TOLERANCE};
pub use tables::{
    divisor_check_table, filter_matrix, table1, table2, table3, DivisorCheckRow,
    DivisorCheckTable, FactoredRational, FilterMatrix, FilterMatrixRow, SurvivorFate, TableLayout,
    TableRule,
};

/// A candidate `(a, b, c, n)` for `a^n + b^n = c^n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Triple {
    pub a: BigInt,
    pub b: BigInt,
    pub c: BigInt,
    pub n: i64,
}

impl Triple {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>, n: i64) -> Self {
        Triple {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            n,
        }
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, n = {})", self.a, self.b, self.c, self.n)
    }
}
