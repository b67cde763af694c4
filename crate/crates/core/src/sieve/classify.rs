use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use super::{kappa::max_exponent, Triple};
use crate::decomposition::{difference_cofactor, reduced_difference_cofactor, sum_cofactor};
use crate::error::{Error, Result};
use crate::integer::{gcd, gcd3, prime_power_decompose, rational_pow, Rational};

/// The filter that proved a candidate cannot solve `a^n + b^n = c^n`.
///
/// Variants are listed in pipeline order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ExclusionReason {
    /// `0 < a < b < c < a + b` (or `a <= b`, `c <= a + b` when `n = 1`) fails.
    OrderingBounds,
    /// `n <= a` fails.
    ExponentFloor,
    /// `n <= c / kappa` fails.
    ExponentCap,
    /// `a + b <= 2^((n-1)/n) c` fails.
    StripBound,
    /// `a = 1` with `n > 1`.
    UnitA,
    /// `(a, b, c)` already solves the equation at another exponent.
    PowerConflict,
    /// `a + b` and `c` have different parity.
    ParityViolation,
    /// `c` is a prime power and `n` is odd.
    PrimePowerExclusion,
    /// `gcd(a, b, c) > 1` and the reduced triple is itself excluded.
    NonPrimitive,
    /// `gcd(a + b, c) = 1` with odd `n >= 3`.
    CoprimeSum,
    /// `gcd(c - a, b) = 1` with `n > 1`.
    CoprimeDiffB,
    /// `gcd(c - b, a) = 1` with `n > 1` and `c - b > 1`.
    CoprimeDiffA,
    /// `(a + b)` does not divide `c^n` (odd `n >= 3`).
    SumNotDivisor,
    /// `(c - a)` does not divide `b^n`.
    DiffBNotDivisor,
    /// `(c - b)` does not divide `a^n`.
    DiffANotDivisor,
    /// The alternating cofactor `F(a, b, n)` does not divide `c^n`.
    SumCofactorNotDivisor,
    /// A difference cofactor (`G`, or for even `n` also `c + a` and `g`) fails to divide.
    DifferenceCofactorNotDivisor,
    /// Survived every filter but `a^n + b^n != c^n`.
    DirectCheckFailed,
}

impl ExclusionReason {
    pub const ALL: [ExclusionReason; 18] = [
        ExclusionReason::OrderingBounds,
        ExclusionReason::ExponentFloor,
        ExclusionReason::ExponentCap,
        ExclusionReason::StripBound,
        ExclusionReason::UnitA,
        ExclusionReason::PowerConflict,
        ExclusionReason::ParityViolation,
        ExclusionReason::PrimePowerExclusion,
        ExclusionReason::NonPrimitive,
        ExclusionReason::CoprimeSum,
        ExclusionReason::CoprimeDiffB,
        ExclusionReason::CoprimeDiffA,
        ExclusionReason::SumNotDivisor,
        ExclusionReason::DiffBNotDivisor,
        ExclusionReason::DiffANotDivisor,
        ExclusionReason::SumCofactorNotDivisor,
        ExclusionReason::DifferenceCofactorNotDivisor,
        ExclusionReason::DirectCheckFailed,
    ];

    /// Stable machine-readable name.
    pub fn code(self) -> &'static str {
        match self {
            ExclusionReason::OrderingBounds => "ordering-bounds",
            ExclusionReason::ExponentFloor => "exponent-floor",
            ExclusionReason::ExponentCap => "exponent-cap",
            ExclusionReason::StripBound => "strip-bound",
            ExclusionReason::UnitA => "unit-a",
            ExclusionReason::PowerConflict => "power-conflict",
            ExclusionReason::ParityViolation => "parity-violation",
            ExclusionReason::PrimePowerExclusion => "prime-power",
            ExclusionReason::NonPrimitive => "non-primitive",
            ExclusionReason::CoprimeSum => "coprime-sum",
            ExclusionReason::CoprimeDiffB => "coprime-diff-b",
            ExclusionReason::CoprimeDiffA => "coprime-diff-a",
            ExclusionReason::SumNotDivisor => "sum-not-divisor",
            ExclusionReason::DiffBNotDivisor => "diff-b-not-divisor",
            ExclusionReason::DiffANotDivisor => "diff-a-not-divisor",
            ExclusionReason::SumCofactorNotDivisor => "sum-cofactor-not-divisor",
            ExclusionReason::DifferenceCofactorNotDivisor => "difference-cofactor-not-divisor",
            ExclusionReason::DirectCheckFailed => "direct-check-failed",
        }
    }

    /// The necessary condition that failed, stated as a formula.
    pub fn rule(self) -> &'static str {
        match self {
            ExclusionReason::OrderingBounds => "0 < a < b < c < a+b (a <= b and c <= a+b when n = 1)",
            ExclusionReason::ExponentFloor => "n <= a",
            ExclusionReason::ExponentCap => "n <= c/kappa with kappa = 1.5/ln 2",
            ExclusionReason::StripBound => "(a+b)^n <= 2^(n-1) c^n",
            ExclusionReason::UnitA => "a > 1 whenever n > 1",
            ExclusionReason::PowerConflict => "a^N + b^N = c^N for at most one exponent N",
            ExclusionReason::ParityViolation => "a^n + b^n = c^n mod 2, i.e. a + b = c mod 2",
            ExclusionReason::PrimePowerExclusion => {
                "c = p^k and odd n: no divisor of p^(kn) lies strictly between c and 2c"
            }
            ExclusionReason::NonPrimitive => "(a, b, c)/gcd(a, b, c) must survive at the smaller c",
            ExclusionReason::CoprimeSum => "(a+b) | c^n impossible when gcd(a+b, c) = 1",
            ExclusionReason::CoprimeDiffB => "(c-a) | b^n impossible when gcd(c-a, b) = 1",
            ExclusionReason::CoprimeDiffA => "(c-b) | a^n impossible when gcd(c-b, a) = 1",
            ExclusionReason::SumNotDivisor => "(a+b) | c^n",
            ExclusionReason::DiffBNotDivisor => "(c-a) | b^n",
            ExclusionReason::DiffANotDivisor => "(c-b) | a^n",
            ExclusionReason::SumCofactorNotDivisor => "F(a,b,n) | c^n",
            ExclusionReason::DifferenceCofactorNotDivisor => {
                "G(c,a,n) | b^n and G(c,b,n) | a^n (even n: also c+a, c+b, g)"
            }
            ExclusionReason::DirectCheckFailed => "a^n + b^n = c^n",
        }
    }

    /// Range of `n` (and other side conditions) under which the filter applies.
    pub fn precondition(self) -> &'static str {
        match self {
            ExclusionReason::OrderingBounds
            | ExclusionReason::ExponentFloor
            | ExclusionReason::StripBound
            | ExclusionReason::PowerConflict
            | ExclusionReason::ParityViolation
            | ExclusionReason::NonPrimitive
            | ExclusionReason::DirectCheckFailed => "n >= 1",
            ExclusionReason::ExponentCap => "n >= 1, c > 2",
            ExclusionReason::UnitA => "n > 1",
            ExclusionReason::PrimePowerExclusion
            | ExclusionReason::CoprimeSum
            | ExclusionReason::SumNotDivisor
            | ExclusionReason::SumCofactorNotDivisor => "n odd, n >= 3",
            ExclusionReason::CoprimeDiffB
            | ExclusionReason::DiffBNotDivisor
            | ExclusionReason::DiffANotDivisor
            | ExclusionReason::DifferenceCofactorNotDivisor => "n > 1",
            ExclusionReason::CoprimeDiffA => "n > 1, c - b > 1",
        }
    }
}

impl fmt::Display for ExclusionReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Solution,
    Excluded(ExclusionReason),
    /// Only produced when the direct check is switched off.
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum StepOutcome {
    Passed,
    Skipped(String),
    Fired,
}

/// One filter application in a classification trace.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub filter: ExclusionReason,
    pub outcome: StepOutcome,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifyOptions {
    /// Apply `n <= a` and `n <= c/kappa`.
    pub exponent_bounds: bool,
    /// Finish with the exact equality test; otherwise survivors are `Undecided`.
    pub direct_check: bool,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            exponent_bounds: true,
            direct_check: true,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    /// The input with `a <= b` (the equation is symmetric in `a`, `b`).
    pub triple: Triple,
    pub swapped: bool,
    pub verdict: Verdict,
    pub trace: Vec<TraceStep>,
}

impl Classification {
    pub fn is_solution(&self) -> bool {
        self.verdict == Verdict::Solution
    }

    pub fn reason(&self) -> Option<ExclusionReason> {
        match self.verdict {
            Verdict::Excluded(r) => Some(r),
            _ => None,
        }
    }
}

/// Exact test of `a^n + b^n = c^n`; negative and zero `n` are evaluated over the rationals.
pub fn direct_check(t: &Triple) -> bool {
    if t.n >= 1 {
        let n = t.n as u32;
        return num_traits::pow(t.a.clone(), n as usize) + num_traits::pow(t.b.clone(), n as usize)
            == num_traits::pow(t.c.clone(), n as usize);
    }
    let q = |x: &BigInt| Rational::from_integer(x.clone());
    match (
        rational_pow(&q(&t.a), t.n),
        rational_pow(&q(&t.b), t.n),
        rational_pow(&q(&t.c), t.n),
    ) {
        (Ok(a), Ok(b), Ok(c)) => a + b == c,
        _ => false,
    }
}

struct Trace {
    steps: Vec<TraceStep>,
}

impl Trace {
    fn pass(&mut self, filter: ExclusionReason) {
        self.steps.push(TraceStep {
            filter,
            outcome: StepOutcome::Passed,
            detail: None,
        });
    }

    fn skip(&mut self, filter: ExclusionReason, why: &str) {
        self.steps.push(TraceStep {
            filter,
            outcome: StepOutcome::Skipped(why.to_string()),
            detail: None,
        });
    }

    fn fire(&mut self, filter: ExclusionReason, detail: Option<String>) -> Verdict {
        self.steps.push(TraceStep {
            filter,
            outcome: StepOutcome::Fired,
            detail,
        });
        Verdict::Excluded(filter)
    }

    /// Records `filter` as passed when `violated` is false, fired otherwise.
    fn check(&mut self, filter: ExclusionReason, violated: bool) -> Option<Verdict> {
        if violated {
            Some(self.fire(filter, None))
        } else {
            self.pass(filter);
            None
        }
    }
}

fn divides(d: &BigInt, base: &BigInt, n: u32) -> bool {
    if d.is_zero() {
        return false;
    }
    base.modpow(&BigInt::from(n), &d.abs()).is_zero()
}

/// Classifies a candidate with all filters in their fixed order.
///
/// Order: ordering, exponent floor, exponent cap, strip, `a = 1`, power
/// conflict, parity, prime-power `c`, primitivity, the three coprimality
/// tests, the linear divisibility tests, the cofactor divisibility tests, and
/// finally the exact equality. The first filter that fires decides the verdict.
pub fn classify(t: &Triple, opts: ClassifyOptions) -> Result<Classification> {
    if !(t.a.is_positive() && t.b.is_positive() && t.c.is_positive()) {
        return Err(Error::domain(format!("classify needs a, b, c > 0, got {t}")));
    }
    if t.n < 1 {
        return Err(Error::domain(format!("classify needs n >= 1, got {t}")));
    }
    let n = u32::try_from(t.n).map_err(|_| Error::domain("exponent out of range"))?;
    let swapped = t.a > t.b;
    let triple = if swapped {
        Triple::new(t.b.clone(), t.a.clone(), t.c.clone(), t.n)
    } else {
        t.clone()
    };
    let mut trace = Trace { steps: Vec::new() };
    let verdict = run_pipeline(&triple, n, opts, &mut trace)?;
    Ok(Classification {
        triple,
        swapped,
        verdict,
        trace: trace.steps,
    })
}

fn run_pipeline(t: &Triple, n: u32, opts: ClassifyOptions, trace: &mut Trace) -> Result<Verdict> {
    use ExclusionReason::*;
    let (a, b, c) = (&t.a, &t.b, &t.c);
    let sum = a + b;
    let odd_n = n % 2 == 1;

    let ordered = if n == 1 {
        a <= b && b < c && c <= &sum
    } else {
        a < b && b < c && c < &sum
    };
    if let Some(v) = trace.check(OrderingBounds, !ordered) {
        return Ok(v);
    }

    if opts.exponent_bounds {
        if let Some(v) = trace.check(ExponentFloor, &BigInt::from(n) > a) {
            return Ok(v);
        }
        if c <= &BigInt::from(2) {
            trace.skip(ExponentCap, "cap stated for c > 2");
        } else if let Some(v) = trace.check(ExponentCap, BigInt::from(n) > max_exponent(c)) {
            return Ok(v);
        }
    } else {
        trace.skip(ExponentFloor, "exponent bounds disabled");
        trace.skip(ExponentCap, "exponent bounds disabled");
    }

    let c_pow = num_traits::pow(c.clone(), n as usize);
    let strip_violated = num_traits::pow(sum.clone(), n as usize) > (&c_pow << (n - 1));
    if let Some(v) = trace.check(StripBound, strip_violated) {
        return Ok(v);
    }

    if n > 1 {
        if let Some(v) = trace.check(UnitA, a.is_one()) {
            return Ok(v);
        }
    } else {
        trace.skip(UnitA, "n = 1");
    }

    let conflict = [1u32, 2]
        .into_iter()
        .filter(|&other| other != n)
        .find(|&other| {
            num_traits::pow(a.clone(), other as usize) + num_traits::pow(b.clone(), other as usize)
                == num_traits::pow(c.clone(), other as usize)
        });
    if let Some(other) = conflict {
        return Ok(trace.fire(PowerConflict, Some(format!("solves the equation at n = {other}"))));
    }
    trace.pass(PowerConflict);

    if let Some(v) = trace.check(ParityViolation, (&sum - c).is_odd()) {
        return Ok(v);
    }

    if odd_n && n >= 3 {
        if let Some(pp) = prime_power_decompose(c) {
            return Ok(trace.fire(
                PrimePowerExclusion,
                Some(format!("c = {}^{}", pp.prime, pp.exponent)),
            ));
        }
        trace.pass(PrimePowerExclusion);
    } else {
        trace.skip(PrimePowerExclusion, "needs odd n >= 3");
    }

    let g = gcd3(a, b, c);
    if g > BigInt::one() {
        let reduced = Triple::new(a / &g, b / &g, c / &g, t.n);
        let mut inner = Trace { steps: Vec::new() };
        let inner_verdict = run_pipeline(&reduced, n, opts, &mut inner)?;
        if let Verdict::Excluded(r) = inner_verdict {
            return Ok(trace.fire(
                NonPrimitive,
                Some(format!("gcd = {g}; reduced {reduced} excluded by {r}")),
            ));
        }
        trace.pass(NonPrimitive);
    } else {
        trace.pass(NonPrimitive);
    }

    let c_minus_a = c - a;
    let c_minus_b = c - b;
    if odd_n && n >= 3 {
        if let Some(v) = trace.check(CoprimeSum, gcd(&sum, c).is_one()) {
            return Ok(v);
        }
    } else {
        trace.skip(CoprimeSum, "needs odd n >= 3");
    }
    if n > 1 {
        if let Some(v) = trace.check(CoprimeDiffB, gcd(&c_minus_a, b).is_one()) {
            return Ok(v);
        }
        if c_minus_b.is_one() {
            trace.skip(CoprimeDiffA, "c - b = 1 divides everything");
        } else if let Some(v) = trace.check(CoprimeDiffA, gcd(&c_minus_b, a).is_one()) {
            return Ok(v);
        }
    } else {
        trace.skip(CoprimeDiffB, "n = 1");
        trace.skip(CoprimeDiffA, "n = 1");
    }

    if odd_n && n >= 3 {
        if let Some(v) = trace.check(SumNotDivisor, !divides(&sum, c, n)) {
            return Ok(v);
        }
    } else {
        trace.skip(SumNotDivisor, "needs odd n >= 3");
    }
    if n > 1 {
        if let Some(v) = trace.check(DiffBNotDivisor, !divides(&c_minus_a, b, n)) {
            return Ok(v);
        }
        if let Some(v) = trace.check(DiffANotDivisor, !divides(&c_minus_b, a, n)) {
            return Ok(v);
        }
    } else {
        trace.skip(DiffBNotDivisor, "n = 1");
        trace.skip(DiffANotDivisor, "n = 1");
    }

    if odd_n && n >= 3 {
        let f = sum_cofactor(a, b, n)?;
        if let Some(v) = trace.check(SumCofactorNotDivisor, !divides(&f, c, n)) {
            return Ok(v);
        }
    } else {
        trace.skip(SumCofactorNotDivisor, "needs odd n >= 3");
    }
    if n > 1 {
        let mut failed = None;
        for (x, y, label) in [(a, b, "a"), (b, a, "b")] {
            // (c - x) G(c, x, n) = c^n - x^n = y^n
            let mut divisors = vec![("G", difference_cofactor(c, x, n)?)];
            if !odd_n {
                divisors.push(("c+", c + x));
                divisors.push(("g", reduced_difference_cofactor(c, x, n)?));
            }
            if let Some((name, _)) = divisors.iter().find(|(_, d)| !divides(d, y, n)) {
                failed = Some(format!("{name}(c, {label}) does not divide the other leg's power"));
                break;
            }
        }
        if let Some(detail) = failed {
            return Ok(trace.fire(DifferenceCofactorNotDivisor, Some(detail)));
        }
        trace.pass(DifferenceCofactorNotDivisor);
    } else {
        trace.skip(DifferenceCofactorNotDivisor, "n = 1");
    }

    if !opts.direct_check {
        return Ok(Verdict::Undecided);
    }
    let lhs = num_traits::pow(a.clone(), n as usize) + num_traits::pow(b.clone(), n as usize);
    if let Some(v) = trace.check(DirectCheckFailed, lhs != c_pow) {
        return Ok(v);
    }
    Ok(Verdict::Solution)
}
