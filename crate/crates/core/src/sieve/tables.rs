use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::kappa::max_exponent;
use crate::error::{Error, Result};
use crate::integer::{gcd, gcd3, Rational};

/// A positive rational held as prime factorisations of its numerator and denominator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactoredRational {
    pub numerator: Vec<(u64, u32)>,
    pub denominator: Vec<(u64, u32)>,
}

fn factor_u64(mut x: u64) -> BTreeMap<u64, u32> {
    let mut out = BTreeMap::new();
    let mut p = 2u64;
    while p * p <= x {
        while x % p == 0 {
            *out.entry(p).or_insert(0) += 1;
            x /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if x > 1 {
        *out.entry(x).or_insert(0) += 1;
    }
    out
}

impl FactoredRational {
    /// `base^exp / divisor`, reduced.
    pub fn power_ratio(base: u64, exp: u32, divisor: u64) -> Result<Self> {
        if base == 0 || divisor == 0 {
            return Err(Error::domain("power_ratio needs positive base and divisor"));
        }
        let mut net: BTreeMap<u64, i64> = BTreeMap::new();
        for (p, e) in factor_u64(base) {
            *net.entry(p).or_insert(0) += i64::from(e) * i64::from(exp);
        }
        for (p, e) in factor_u64(divisor) {
            *net.entry(p).or_insert(0) -= i64::from(e);
        }
        let mut numerator = Vec::new();
        let mut denominator = Vec::new();
        for (p, e) in net {
            let magnitude = u32::try_from(e.unsigned_abs())
                .map_err(|_| Error::domain("exponent too large to tabulate"))?;
            if e > 0 {
                numerator.push((p, magnitude));
            } else if e < 0 {
                denominator.push((p, magnitude));
            }
        }
        Ok(FactoredRational {
            numerator,
            denominator,
        })
    }

    pub fn is_integer(&self) -> bool {
        self.denominator.is_empty()
    }

    pub fn value(&self) -> Rational {
        let eval = |fs: &[(u64, u32)]| {
            fs.iter()
                .fold(BigInt::one(), |acc, &(p, e)| acc * num_traits::pow(BigInt::from(p), e as usize))
        };
        Rational::new(eval(&self.numerator), eval(&self.denominator))
    }
}

fn write_factors(f: &mut fmt::Formatter<'_>, fs: &[(u64, u32)]) -> fmt::Result {
    if fs.is_empty() {
        return f.write_str("1");
    }
    for (i, (p, e)) in fs.iter().enumerate() {
        if i > 0 {
            f.write_str("*")?;
        }
        if *e == 1 {
            write!(f, "{p}")?;
        } else {
            write!(f, "{p}^{e}")?;
        }
    }
    Ok(())
}

impl fmt::Display for FactoredRational {
    /// Formats like `2^9*5^5/7`; a compound denominator is parenthesised.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_factors(f, &self.numerator)?;
        if !self.denominator.is_empty() {
            f.write_str("/")?;
            let compound = self.denominator.len() > 1 || self.denominator[0].1 > 1;
            if compound {
                f.write_str("(")?;
            }
            write_factors(f, &self.denominator)?;
            if compound {
                f.write_str(")")?;
            }
        }
        Ok(())
    }
}

/// The marking rules of the divisor-check tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TableRule {
    /// `a^n/(c-b)` or `b^n/(c-a)` is not an integer.
    NonIntegerQuotient,
    /// `gcd(c-a, b) = 1` or `gcd(c-b, a) = 1`.
    CoprimeDifference,
    /// `gcd(a, b, c) != 1`; the triple belongs to a smaller `c`.
    NonPrimitive,
}

impl TableRule {
    pub fn code(self) -> &'static str {
        match self {
            TableRule::NonIntegerQuotient => "non-integer-quotient",
            TableRule::CoprimeDifference => "coprime-difference",
            TableRule::NonPrimitive => "non-primitive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TableLayout {
    /// Shows the two quotient rows.
    WithQuotients,
    /// Shows only the differences and the three gcd rows.
    GcdOnly,
}

/// One candidate `a` (column) of a divisor-check table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorCheckRow {
    pub a: u64,
    pub b: u64,
    pub c_minus_a: u64,
    pub c_minus_b: u64,
    /// `a^n/(c-b)`.
    pub a_quotient: FactoredRational,
    /// `b^n/(c-a)`.
    pub b_quotient: FactoredRational,
    pub gcd_abc: u64,
    /// `gcd(c-a, b)`.
    pub gcd_diff_b: u64,
    /// `gcd(c-b, a)`.
    pub gcd_diff_a: u64,
}

impl DivisorCheckRow {
    pub fn a_quotient_marked(&self) -> bool {
        !self.a_quotient.is_integer()
    }

    pub fn b_quotient_marked(&self) -> bool {
        !self.b_quotient.is_integer()
    }

    pub fn gcd_abc_marked(&self) -> bool {
        self.gcd_abc != 1
    }

    pub fn gcd_diff_b_marked(&self) -> bool {
        self.gcd_diff_b == 1
    }

    /// Marked whenever the gcd is 1, including the trivial `c - b = 1` column.
    pub fn gcd_diff_a_marked(&self) -> bool {
        self.gcd_diff_a == 1
    }

    /// Rules that mark this column, given the table layout.
    pub fn reasons(&self, layout: TableLayout) -> Vec<TableRule> {
        let mut out = Vec::new();
        if layout == TableLayout::WithQuotients && (self.a_quotient_marked() || self.b_quotient_marked()) {
            out.push(TableRule::NonIntegerQuotient);
        }
        if self.gcd_diff_b_marked() || self.gcd_diff_a_marked() {
            out.push(TableRule::CoprimeDifference);
        }
        if self.gcd_abc_marked() {
            out.push(TableRule::NonPrimitive);
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisorCheckTable {
    pub c: u64,
    pub n: u32,
    pub sum: u64,
    pub layout: TableLayout,
    pub rows: Vec<DivisorCheckRow>,
}

fn underline(text: String, marked: bool) -> String {
    if marked {
        format!("_{text}_")
    } else {
        text
    }
}

impl DivisorCheckTable {
    /// The table as printed: one line per quantity, one column per `a`.
    /// Marked cells are wrapped as `_x_`.
    pub fn grid(&self) -> Vec<Vec<String>> {
        let n = self.n;
        let mut lines: Vec<Vec<String>> = Vec::new();
        let mut line = |label: String, cell: &dyn Fn(&DivisorCheckRow) -> String| {
            let mut v = vec![label];
            v.extend(self.rows.iter().map(cell));
            lines.push(v);
        };
        line("a".into(), &|r| r.a.to_string());
        line("b".into(), &|r| r.b.to_string());
        line("c-a".into(), &|r| r.c_minus_a.to_string());
        line("c-b".into(), &|r| r.c_minus_b.to_string());
        if self.layout == TableLayout::WithQuotients {
            line(format!("a^{n}/(c-b)"), &|r| {
                underline(r.a_quotient.to_string(), r.a_quotient_marked())
            });
            line(format!("b^{n}/(c-a)"), &|r| {
                underline(r.b_quotient.to_string(), r.b_quotient_marked())
            });
        }
        line("gcd(a,b,c)".into(), &|r| underline(r.gcd_abc.to_string(), r.gcd_abc_marked()));
        line("gcd(c-a,b)".into(), &|r| {
            underline(r.gcd_diff_b.to_string(), r.gcd_diff_b_marked())
        });
        line("gcd(c-b,a)".into(), &|r| {
            underline(r.gcd_diff_a.to_string(), r.gcd_diff_a_marked())
        });
        lines
    }

    /// Whether every column carries at least one mark.
    pub fn all_excluded(&self) -> bool {
        self.rows.iter().all(|r| !r.reasons(self.layout).is_empty())
    }
}

/// Divisor checks for all `a` with `a + b = sum`, `n <= a < b < c`.
pub fn divisor_check_table(c: u64, n: u32, sum: u64) -> Result<DivisorCheckTable> {
    if n == 0 {
        return Err(Error::domain("divisor_check_table needs n >= 1"));
    }
    if !(c < sum && sum < 2 * c) {
        return Err(Error::domain(format!("need c < a + b < 2c, got c = {c}, a + b = {sum}")));
    }
    let big = BigInt::from;
    let first = u64::from(n).max(sum - c + 1);
    let mut rows = Vec::new();
    let mut a = first;
    while 2 * a < sum {
        let b = sum - a;
        let g = |x: u64, y: u64| gcd(&big(x), &big(y)).to_u64().unwrap_or(0);
        rows.push(DivisorCheckRow {
            a,
            b,
            c_minus_a: c - a,
            c_minus_b: c - b,
            a_quotient: FactoredRational::power_ratio(a, n, c - b)?,
            b_quotient: FactoredRational::power_ratio(b, n, c - a)?,
            gcd_abc: gcd3(&big(a), &big(b), &big(c)).to_u64().unwrap_or(0),
            gcd_diff_b: g(c - a, b),
            gcd_diff_a: g(c - b, a),
        });
        a += 1;
    }
    Ok(DivisorCheckTable {
        c,
        n,
        sum,
        layout: TableLayout::WithQuotients,
        rows,
    })
}

/// `c = 21`, `n = 5`, `a + b = 27`.
pub fn table2() -> DivisorCheckTable {
    divisor_check_table(21, 5, 27).expect("fixed parameters are valid")
}

/// `c = 42`, `n = 7`, `a + b = 64`, odd `a` only (even `a`, `b` share the factor 2 with `c`).
pub fn table3() -> DivisorCheckTable {
    let mut t = divisor_check_table(42, 7, 64).expect("fixed parameters are valid");
    t.rows.retain(|r| r.a % 2 == 1);
    t.layout = TableLayout::GcdOnly;
    t
}

/// What happens to a pair left unflagged by the low-exponent filters.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SurvivorFate {
    /// `a = b`, not allowed once `n > 1`.
    EqualLegs,
    /// `c0/kappa < 3`, so no exponent above 2 is admissible.
    ExponentCap,
    /// Still a candidate for some `n > 2`.
    Open,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterMatrixRow {
    pub a: u64,
    pub b: u64,
    pub n1_solution: bool,
    pub n2_solution: bool,
    /// Solves at `n = 1` or `n = 2`, hence at no `n > 2`.
    pub power_conflict: bool,
    /// `a + b < c0`.
    pub ordering_violation: bool,
    pub cumulative: bool,
    pub survivor: Option<SurvivorFate>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FilterMatrix {
    pub c0: u64,
    pub rows: Vec<FilterMatrixRow>,
}

impl FilterMatrix {
    /// The table as printed: a line per flag, a column per `(a, b)`, `Y` or empty.
    pub fn grid(&self) -> Vec<Vec<String>> {
        let flag = |b: bool| if b { "Y".to_string() } else { String::new() };
        let mut lines: Vec<Vec<String>> = Vec::new();
        let mut line = |label: &str, cell: &dyn Fn(&FilterMatrixRow) -> String| {
            let mut v = vec![label.to_string()];
            v.extend(self.rows.iter().map(cell));
            lines.push(v);
        };
        line("a", &|r| r.a.to_string());
        line("b", &|r| r.b.to_string());
        line("n=1 solution", &|r| flag(r.n1_solution));
        line("n=2 solution", &|r| flag(r.n2_solution));
        line("power conflict", &|r| flag(r.power_conflict));
        line("a+b < c0", &|r| flag(r.ordering_violation));
        line("cumulative", &|r| flag(r.cumulative));
        lines
    }
}

/// Low-exponent filters over all pairs `0 < a <= b < c0`.
pub fn filter_matrix(c0: u64) -> Result<FilterMatrix> {
    if c0 < 2 {
        return Err(Error::domain("filter_matrix needs c0 >= 2"));
    }
    let cap = max_exponent(&BigInt::from(c0));
    let c = u128::from(c0);
    let mut rows = Vec::new();
    for a in 1..c0 {
        for b in a..c0 {
            let (x, y) = (u128::from(a), u128::from(b));
            let n1_solution = x + y == c;
            let n2_solution = x * x + y * y == c * c;
            let power_conflict = n1_solution || n2_solution;
            let ordering_violation = x + y < c;
            let cumulative = power_conflict || ordering_violation;
            let survivor = (!cumulative).then(|| {
                if a == b {
                    SurvivorFate::EqualLegs
                } else if cap < BigInt::from(3) {
                    SurvivorFate::ExponentCap
                } else {
                    SurvivorFate::Open
                }
            });
            rows.push(FilterMatrixRow {
                a,
                b,
                n1_solution,
                n2_solution,
                power_conflict,
                ordering_violation,
                cumulative,
                survivor,
            });
        }
    }
    Ok(FilterMatrix { c0, rows })
}

/// The filter matrix at `c0 = 5`.
pub fn table1() -> FilterMatrix {
    filter_matrix(5).expect("fixed parameters are valid")
}
