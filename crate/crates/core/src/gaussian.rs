//! Gaussian integers and the component equations of `A^n + B^n = C^n` over them.
//!
//! Writing `A = a + a1 i` etc., the equation splits into a real-part and an
//! imaginary-part Diophantine equation in six integers. For `n = 2` these are
//! `a^2 + b^2 + c1^2 = a1^2 + b1^2 + c^2` and `a a1 + b b1 = c c1`; for `n = 3`
//! they are cubic.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GaussInt {
    pub re: BigInt,
    pub im: BigInt,
}

impl GaussInt {
    pub fn new(re: impl Into<BigInt>, im: impl Into<BigInt>) -> Self {
        GaussInt {
            re: re.into(),
            im: im.into(),
        }
    }

    pub fn zero() -> Self {
        GaussInt::new(0, 0)
    }

    pub fn one() -> Self {
        GaussInt::new(1, 0)
    }

    pub fn i() -> Self {
        GaussInt::new(0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussInt::new(self.re.clone(), -&self.im)
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut result = GaussInt::one();
        let mut base = self.clone();
        let mut e = n;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        result
    }

    /// Multiplication by `i^k`; `k` may be negative.
    pub fn rotate(&self, k: i64) -> Self {
        match k.rem_euclid(4) {
            0 => self.clone(),
            1 => GaussInt::new(-&self.im, self.re.clone()),
            2 => GaussInt::new(-&self.re, -&self.im),
            _ => GaussInt::new(self.im.clone(), -&self.re),
        }
    }

    /// `a + a1 i -> a1 + a i`, the reflection in the line `re = im`.
    pub fn swap(&self) -> Self {
        GaussInt::new(self.im.clone(), self.re.clone())
    }

    /// Exact division by a rational integer, if it divides both parts.
    pub fn div_integer(&self, d: &BigInt) -> Option<Self> {
        if d.is_zero() || !(&self.re % d).is_zero() || !(&self.im % d).is_zero() {
            return None;
        }
        Some(GaussInt::new(&self.re / d, &self.im / d))
    }
}

impl From<i64> for GaussInt {
    fn from(x: i64) -> Self {
        GaussInt::new(x, 0)
    }
}

impl<'a> Add<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn add(self, o: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl<'a> Sub<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn sub(self, o: &GaussInt) -> GaussInt {
        GaussInt::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl<'a> Mul<&'a GaussInt> for &'a GaussInt {
    type Output = GaussInt;
    fn mul(self, o: &GaussInt) -> GaussInt {
        GaussInt::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Add for GaussInt {
    type Output = GaussInt;
    fn add(self, o: GaussInt) -> GaussInt {
        &self + &o
    }
}

impl Sub for GaussInt {
    type Output = GaussInt;
    fn sub(self, o: GaussInt) -> GaussInt {
        &self - &o
    }
}

impl Mul for GaussInt {
    type Output = GaussInt;
    fn mul(self, o: GaussInt) -> GaussInt {
        &self * &o
    }
}

impl Neg for GaussInt {
    type Output = GaussInt;
    fn neg(self) -> GaussInt {
        GaussInt::new(-self.re, -self.im)
    }
}

impl fmt::Display for GaussInt {
    /// `3+4i`, `-1+2i`, `2-i`, `i`, `4i`, `7`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |f: &mut fmt::Formatter<'_>, v: &BigInt, lead: bool| -> fmt::Result {
            let sign = if v.is_negative() {
                "-"
            } else if lead {
                ""
            } else {
                "+"
            };
            let mag = v.abs();
            if mag.is_one() {
                write!(f, "{sign}i")
            } else {
                write!(f, "{sign}{mag}i")
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => imag(f, &self.im, true),
            (false, false) => {
                write!(f, "{}", self.re)?;
                imag(f, &self.im, false)
            }
        }
    }
}

impl FromStr for GaussInt {
    type Err = Error;

    /// Accepts forms like `2+i`, `-1+2i`, `3-4i`, `5`, `-i`, `7i`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::domain(format!("cannot parse Gaussian integer {s:?}"));
        let text: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if text.is_empty() {
            return Err(bad());
        }
        let Some(body) = text.strip_suffix('i') else {
            return text.parse::<BigInt>().map(|re| GaussInt::new(re, 0)).map_err(|_| bad());
        };
        // split at the last sign that is not the leading one
        let split = body
            .char_indices()
            .skip(1)
            .filter(|(_, c)| *c == '+' || *c == '-')
            .map(|(i, _)| i)
            .last();
        let (re_part, im_part) = match split {
            Some(i) => (&body[..i], &body[i..]),
            None => ("0", body),
        };
        let re = re_part.parse::<BigInt>().map_err(|_| bad())?;
        let im = match im_part {
            "" | "+" => BigInt::one(),
            "-" => -BigInt::one(),
            other => other.parse::<BigInt>().map_err(|_| bad())?,
        };
        Ok(GaussInt::new(re, im))
    }
}

/// A candidate `(A, B, C, n)` for `A^n + B^n = C^n` over the Gaussian integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComplexTriple {
    pub a: GaussInt,
    pub b: GaussInt,
    pub c: GaussInt,
    pub n: u32,
}

impl ComplexTriple {
    pub fn new(a: GaussInt, b: GaussInt, c: GaussInt, n: u32) -> Self {
        ComplexTriple { a, b, c, n }
    }

    /// `A^n + B^n - C^n`.
    pub fn residual(&self) -> GaussInt {
        let lhs = &self.a.pow(self.n) + &self.b.pow(self.n);
        &lhs - &self.c.pow(self.n)
    }

    pub fn is_solution(&self) -> bool {
        self.residual().is_zero()
    }

    /// Divides out the largest rational integer common to all six components.
    pub fn reduce_integer_content(&self) -> (ComplexTriple, BigInt) {
        let content = [&self.a, &self.b, &self.c]
            .iter()
            .fold(BigInt::zero(), |g, z| g.gcd(&z.re).gcd(&z.im));
        if content.is_zero() || content.is_one() {
            return (self.clone(), BigInt::one());
        }
        let div = |z: &GaussInt| z.div_integer(&content).expect("content divides every component");
        (
            ComplexTriple::new(div(&self.a), div(&self.b), div(&self.c), self.n),
            content,
        )
    }

    /// Every component multiplied by `i^k`.
    pub fn rotate(&self, k: i64) -> Self {
        ComplexTriple::new(self.a.rotate(k), self.b.rotate(k), self.c.rotate(k), self.n)
    }

    /// Real and imaginary parts of every component interchanged.
    pub fn swap_real_imag(&self) -> Self {
        ComplexTriple::new(self.a.swap(), self.b.swap(), self.c.swap(), self.n)
    }
}

impl fmt::Display for ComplexTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, n = {})", self.a, self.b, self.c, self.n)
    }
}

/// `(M^2 - m^2, 2 m M, M^2 + m^2)`, a solution at `n = 2` for any `m`, `M`.
pub fn pythagorean_from_params(m: &GaussInt, big_m: &GaussInt) -> ComplexTriple {
    let m2 = m.pow(2);
    let big2 = big_m.pow(2);
    let two = GaussInt::from(2);
    ComplexTriple::new(&big2 - &m2, &(&two * m) * big_m, &big2 + &m2, 2)
}

/// Real and imaginary parts of `(a + a1 i)^n + (b + b1 i)^n - (c + c1 i)^n`.
pub fn expand_components(
    a: &BigInt,
    a1: &BigInt,
    b: &BigInt,
    b1: &BigInt,
    c: &BigInt,
    c1: &BigInt,
    n: u32,
) -> (BigInt, BigInt) {
    let t = ComplexTriple::new(
        GaussInt::new(a.clone(), a1.clone()),
        GaussInt::new(b.clone(), b1.clone()),
        GaussInt::new(c.clone(), c1.clone()),
        n,
    );
    let r = t.residual();
    (r.re, r.im)
}

/// `(a^2 + b^2 + c1^2 - a1^2 - b1^2 - c^2, a a1 + b b1 - c c1)`.
///
/// The first is the real part of the `n = 2` residual, the second half its
/// imaginary part.
pub fn quadratic_residuals(a: &BigInt, a1: &BigInt, b: &BigInt, b1: &BigInt, c: &BigInt, c1: &BigInt) -> (BigInt, BigInt) {
    let sq = |x: &BigInt| x * x;
    (
        sq(a) + sq(b) + sq(c1) - sq(a1) - sq(b1) - sq(c),
        a * a1 + b * b1 - c * c1,
    )
}

/// Whether the `n = 2` real-part and imaginary-part equations hold.
pub fn quadratic_conditions(a: &BigInt, a1: &BigInt, b: &BigInt, b1: &BigInt, c: &BigInt, c1: &BigInt) -> (bool, bool) {
    let (re, im) = quadratic_residuals(a, a1, b, b1, c, c1);
    (re.is_zero(), im.is_zero())
}

/// `(a^3 + b^3 + 3 c c1^2 - 3 a a1^2 - 3 b b1^2 - c^3,
///   3 a^2 a1 + 3 b^2 b1 + c1^3 - a1^3 - b1^3 - 3 c^2 c1)`,
/// the real and imaginary parts of the `n = 3` residual.
pub fn cubic_residuals(a: &BigInt, a1: &BigInt, b: &BigInt, b1: &BigInt, c: &BigInt, c1: &BigInt) -> (BigInt, BigInt) {
    let cube = |x: &BigInt| x * x * x;
    let three = BigInt::from(3);
    let re = cube(a) + cube(b) + &three * c * c1 * c1 - &three * a * a1 * a1 - &three * b * b1 * b1 - cube(c);
    let im = &three * a * a * a1 + &three * b * b * b1 + cube(c1) - cube(a1) - cube(b1) - &three * c * c * c1;
    (re, im)
}

/// Whether the `n = 3` real-part and imaginary-part equations hold.
pub fn cubic_conditions(a: &BigInt, a1: &BigInt, b: &BigInt, b1: &BigInt, c: &BigInt, c1: &BigInt) -> (bool, bool) {
    let (re, im) = cubic_residuals(a, a1, b, b1, c, c1);
    (re.is_zero(), im.is_zero())
}

/// Families of solutions that reduce to rational-integer statements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TrivialFamily {
    /// All imaginary parts zero.
    PureReal,
    /// All real parts zero.
    PureImaginary,
    /// One of `A`, `B`, `C` is zero.
    ZeroTerm,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CubicScanHit {
    /// `(a, a1, b, b1, c, c1)`.
    pub components: [i64; 6],
    pub family: Option<TrivialFamily>,
}

impl CubicScanHit {
    pub fn triple(&self) -> ComplexTriple {
        let [a, a1, b, b1, c, c1] = self.components;
        ComplexTriple::new(GaussInt::new(a, a1), GaussInt::new(b, b1), GaussInt::new(c, c1), 3)
    }
}

fn cube_i128(re: i64, im: i64) -> (i128, i128) {
    let (x, y) = (i128::from(re), i128::from(im));
    (x * x * x - 3 * x * y * y, 3 * x * x * y - y * y * y)
}

fn classify_family(v: [i64; 6]) -> Option<TrivialFamily> {
    let [a, a1, b, b1, c, c1] = v;
    if (a == 0 && a1 == 0) || (b == 0 && b1 == 0) || (c == 0 && c1 == 0) {
        Some(TrivialFamily::ZeroTerm)
    } else if a1 == 0 && b1 == 0 && c1 == 0 {
        Some(TrivialFamily::PureReal)
    } else if a == 0 && b == 0 && c == 0 {
        Some(TrivialFamily::PureImaginary)
    } else {
        None
    }
}

/// All `(a, a1, b, b1, c, c1)` in `[-bound, bound]^6` solving both cubic
/// component equations, in lexicographic order.
pub fn scan_cubic_simultaneous(bound: i64) -> Result<Vec<CubicScanHit>> {
    if !(1..=1_000).contains(&bound) {
        return Err(Error::domain(format!("scan bound must be in 1..=1000, got {bound}")));
    }
    let range = -bound..=bound;
    let mut cubes: HashMap<(i128, i128), Vec<(i64, i64)>> = HashMap::new();
    for re in range.clone() {
        for im in range.clone() {
            cubes.entry(cube_i128(re, im)).or_default().push((re, im));
        }
    }
    let mut hits = Vec::new();
    for a in range.clone() {
        for a1 in range.clone() {
            let ca = cube_i128(a, a1);
            for b in range.clone() {
                for b1 in range.clone() {
                    let cb = cube_i128(b, b1);
                    if let Some(cs) = cubes.get(&(ca.0 + cb.0, ca.1 + cb.1)) {
                        for &(c, c1) in cs {
                            let v = [a, a1, b, b1, c, c1];
                            hits.push(CubicScanHit {
                                components: v,
                                family: classify_family(v),
                            });
                        }
                    }
                }
            }
        }
    }
    hits.sort_by_key(|h| h.components);
    Ok(hits)
}

fn is_pythagorean(t: &[BigInt; 3]) -> bool {
    &t[0] * &t[0] + &t[1] * &t[1] == &t[2] * &t[2]
}

/// `a a1 + b b1 - c c1` for two Pythagorean triples.
///
/// Zero exactly when the triples are proportional with a positive factor
/// (for non-negative entries), by Cauchy-Schwarz.
pub fn pythagorean_dot(first: &[BigInt; 3], second: &[BigInt; 3]) -> Result<BigInt> {
    for t in [first, second] {
        if !is_pythagorean(t) {
            return Err(Error::NotPythagorean(format!("({}, {}, {})", t[0], t[1], t[2])));
        }
    }
    Ok(&first[0] * &second[0] + &first[1] * &second[1] - &first[2] * &second[2])
}

/// `(a + k a i, b + k b i, c + k c i, 2)`, a Gaussian solution for any Pythagorean `(a, b, c)`.
pub fn proportional_complex_pythagorean(base: &[BigInt; 3], k: &BigInt) -> Result<ComplexTriple> {
    if !is_pythagorean(base) {
        return Err(Error::NotPythagorean(format!("({}, {}, {})", base[0], base[1], base[2])));
    }
    let lift = |x: &BigInt| GaussInt::new(x.clone(), k * x);
    Ok(ComplexTriple::new(lift(&base[0]), lift(&base[1]), lift(&base[2]), 2))
}
