//! Integer quaternions `w + x i + y j + z k` and their power identities.
//!
//! Multiplication is the Hamilton product and does not commute, but powers of
//! a single quaternion are unambiguous. Two families behave like scalars:
//! quaternions `(a, b, b, b)` commute with each other, and a pure-imaginary
//! `v` satisfies `v^2 = -|v|^2`, so its even powers are integers and its odd
//! powers are integer multiples of `v`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct QuatInt {
    pub w: BigInt,
    pub x: BigInt,
    pub y: BigInt,
    pub z: BigInt,
}

impl QuatInt {
    pub fn new(w: impl Into<BigInt>, x: impl Into<BigInt>, y: impl Into<BigInt>, z: impl Into<BigInt>) -> Self {
        QuatInt {
            w: w.into(),
            x: x.into(),
            y: y.into(),
            z: z.into(),
        }
    }

    pub fn scalar(w: impl Into<BigInt>) -> Self {
        QuatInt::new(w, 0, 0, 0)
    }

    /// `0 + v0 i + v1 j + v2 k`.
    pub fn pure(v: &[BigInt; 3]) -> Self {
        QuatInt::new(0, v[0].clone(), v[1].clone(), v[2].clone())
    }

    pub fn zero() -> Self {
        QuatInt::scalar(0)
    }

    pub fn one() -> Self {
        QuatInt::scalar(1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn vector(&self) -> [BigInt; 3] {
        [self.x.clone(), self.y.clone(), self.z.clone()]
    }

    /// `w^2 + x^2 + y^2 + z^2`.
    pub fn norm(&self) -> BigInt {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    pub fn conj(&self) -> Self {
        QuatInt::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    /// Binary exponentiation; `q^0 = 1`.
    pub fn pow(&self, n: u32) -> Self {
        let mut result = QuatInt::one();
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

    /// Moves imaginary slot `s` to slot `perm[s]`.
    pub fn permute_imaginary(&self, perm: [usize; 3]) -> Result<Self> {
        check_permutation(perm)?;
        let old = self.vector();
        let mut new = old.clone();
        for (s, v) in old.into_iter().enumerate() {
            new[perm[s]] = v;
        }
        let [x, y, z] = new;
        Ok(QuatInt::new(self.w.clone(), x, y, z))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        QuatInt::new(k * &self.w, k * &self.x, k * &self.y, k * &self.z)
    }
}

fn check_permutation(perm: [usize; 3]) -> Result<()> {
    let mut seen = [false; 3];
    for &p in &perm {
        if p > 2 || seen[p] {
            return Err(Error::domain(format!("{perm:?} is not a permutation of the slots i, j, k")));
        }
        seen[p] = true;
    }
    Ok(())
}

impl<'a> Mul<&'a QuatInt> for &'a QuatInt {
    type Output = QuatInt;
    fn mul(self, o: &QuatInt) -> QuatInt {
        let (a1, b1, c1, d1) = (&self.w, &self.x, &self.y, &self.z);
        let (a2, b2, c2, d2) = (&o.w, &o.x, &o.y, &o.z);
        QuatInt {
            w: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            x: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            y: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            z: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }
}

impl<'a> Add<&'a QuatInt> for &'a QuatInt {
    type Output = QuatInt;
    fn add(self, o: &QuatInt) -> QuatInt {
        QuatInt::new(&self.w + &o.w, &self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl<'a> Sub<&'a QuatInt> for &'a QuatInt {
    type Output = QuatInt;
    fn sub(self, o: &QuatInt) -> QuatInt {
        QuatInt::new(&self.w - &o.w, &self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl Mul for QuatInt {
    type Output = QuatInt;
    fn mul(self, o: QuatInt) -> QuatInt {
        &self * &o
    }
}

impl Add for QuatInt {
    type Output = QuatInt;
    fn add(self, o: QuatInt) -> QuatInt {
        &self + &o
    }
}

impl Sub for QuatInt {
    type Output = QuatInt;
    fn sub(self, o: QuatInt) -> QuatInt {
        &self - &o
    }
}

impl Neg for QuatInt {
    type Output = QuatInt;
    fn neg(self) -> QuatInt {
        QuatInt::new(-self.w, -self.x, -self.y, -self.z)
    }
}

impl fmt::Display for QuatInt {
    /// Component form `(w, x, y, z)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.w, self.x, self.y, self.z)
    }
}

/// A candidate `(A, B, C, n)` for `A^n + B^n = C^n` over integer quaternions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuatTriple {
    pub a: QuatInt,
    pub b: QuatInt,
    pub c: QuatInt,
    pub n: u32,
}

impl QuatTriple {
    pub fn residual(&self) -> QuatInt {
        &(&self.a.pow(self.n) + &self.b.pow(self.n)) - &self.c.pow(self.n)
    }

    pub fn is_solution(&self) -> bool {
        self.residual().is_zero()
    }
}

/// `(m1, 1, 1, 1)(M1, 1, 1, 1) = (m1 M1 - 3, m1 + M1, m1 + M1, m1 + M1)`; the two factors commute.
pub fn commutative_subset_mul(m1: &BigInt, big_m1: &BigInt) -> QuatInt {
    let s = m1 + big_m1;
    let closed = QuatInt::new(m1 * big_m1 - 3, s.clone(), s.clone(), s);
    let m = QuatInt::new(m1.clone(), 1, 1, 1);
    let big = QuatInt::new(big_m1.clone(), 1, 1, 1);
    assert!(&m * &big == closed && &big * &m == closed);
    closed
}

/// `(M^2 - m^2, 2 m M, M^2 + m^2)` for `m = (m1, 1, 1, 1)`, `M = (M1, 1, 1, 1)`.
///
/// Inside the commuting family the usual Pythagorean parametrisation goes through.
pub fn quat_pythagorean_subset(m1: &BigInt, big_m1: &BigInt) -> QuatTriple {
    let m = QuatInt::new(m1.clone(), 1, 1, 1);
    let big = QuatInt::new(big_m1.clone(), 1, 1, 1);
    let (m2, big2) = (m.pow(2), big.pow(2));
    QuatTriple {
        a: &big2 - &m2,
        b: commutative_subset_mul(m1, big_m1).scale(&BigInt::from(2)),
        c: &big2 + &m2,
        n: 2,
    }
}

fn is_pythagorean(v: &[BigInt; 3]) -> bool {
    &v[0] * &v[0] + &v[1] * &v[1] == &v[2] * &v[2]
}

/// `(a1 + v)(a2 + v) = (a1 a2 - 2 d^2) + (a1 + a2) v` for `v = (b, c, d)` with `b^2 + c^2 = d^2`.
pub fn shared_vector_product(a1: &BigInt, a2: &BigInt, v: &[BigInt; 3]) -> Result<QuatInt> {
    if !is_pythagorean(v) {
        return Err(Error::NotPythagorean(format!(
            "vector part ({}, {}, {}) needs b^2 + c^2 = d^2",
            v[0], v[1], v[2]
        )));
    }
    let s = a1 + a2;
    Ok(QuatInt::new(
        a1 * a2 - &v[2] * &v[2] * 2,
        &s * &v[0],
        &s * &v[1],
        &s * &v[2],
    ))
}

/// As [`shared_vector_product`], but the hypotenuse may sit in any imaginary slot.
///
/// The real part `a1 a2 - 2 d^2` does not depend on where `d` sits.
pub fn shared_vector_product_any_slot(a1: &BigInt, a2: &BigInt, v: &[BigInt; 3]) -> Result<QuatInt> {
    let sq: Vec<BigInt> = v.iter().map(|x| x * x).collect();
    let hyp = (0..3)
        .find(|&h| {
            let others: BigInt = (0..3).filter(|&o| o != h).map(|o| &sq[o]).sum();
            others == sq[h]
        })
        .ok_or_else(|| {
            Error::NotPythagorean(format!("no slot of ({}, {}, {}) is a hypotenuse", v[0], v[1], v[2]))
        })?;
    let s = a1 + a2;
    Ok(QuatInt::new(
        a1 * a2 - &sq[hyp] * 2,
        &s * &v[0],
        &s * &v[1],
        &s * &v[2],
    ))
}

/// If `q^n = t + s v` where `v` is the vector part of `q`, returns `(t, s)`.
pub fn power_vector_scale(q: &QuatInt, n: u32) -> Option<(BigInt, BigInt)> {
    let p = q.pow(n);
    let v = q.vector();
    let pv = p.vector();
    let pivot = v.iter().position(|x| !x.is_zero())?;
    if !(&pv[pivot] % &v[pivot]).is_zero() {
        return None;
    }
    let s = &pv[pivot] / &v[pivot];
    (0..3).all(|i| pv[i] == &s * &v[i]).then_some((p.w, s))
}

/// `v^n` for pure-imaginary `v`: `(-|v|^2)^N` when `n = 2N`, `(-|v|^2)^N v` when `n = 2N + 1`.
pub fn pure_imag_pow(v: &[BigInt; 3], n: u32) -> QuatInt {
    let norm: BigInt = v.iter().map(|x| x * x).sum();
    let factor = num_traits::pow(-norm, (n / 2) as usize);
    if n % 2 == 0 {
        QuatInt::scalar(factor)
    } else {
        QuatInt::pure(v).scale(&factor)
    }
}

fn vec3(a: i64, b: i64, c: i64, k: &BigInt) -> [BigInt; 3] {
    [k * a, k * b, k * c]
}

/// `(b i)^2 + (b j)^2 = (b j + b k)^2`.
pub fn verify_square_sum_instance(b: &BigInt) -> bool {
    QuatTriple {
        a: QuatInt::pure(&vec3(1, 0, 0, b)),
        b: QuatInt::pure(&vec3(0, 1, 0, b)),
        c: QuatInt::pure(&vec3(0, 1, 1, b)),
        n: 2,
    }
    .is_solution()
}

/// The odd-power triple `(-b i - b j, b j - b k, -b i - b k)` at exponent `2N + 1`.
pub fn odd_power_triple(b: &BigInt, big_n: u32) -> QuatTriple {
    QuatTriple {
        a: QuatInt::pure(&vec3(-1, -1, 0, b)),
        b: QuatInt::pure(&vec3(0, 1, -1, b)),
        c: QuatInt::pure(&vec3(-1, 0, -1, b)),
        n: 2 * big_n + 1,
    }
}

/// `(-b i - b j)^(2N+1) + (b j - b k)^(2N+1) = (-b i - b k)^(2N+1)`.
///
/// All three have norm `2 b^2`, so each power is the same scalar times its
/// vector, and the vectors add up.
pub fn verify_odd_power_instance(b: &BigInt, big_n: u32) -> bool {
    odd_power_triple(b, big_n).is_solution()
}

/// The odd-power instance with the same slot permutation applied to all three terms.
pub fn odd_power_permuted(b: &BigInt, big_n: u32, perm: [usize; 3]) -> Result<bool> {
    let t = odd_power_triple(b, big_n);
    Ok(QuatTriple {
        a: t.a.permute_imaginary(perm)?,
        b: t.b.permute_imaginary(perm)?,
        c: t.c.permute_imaginary(perm)?,
        n: t.n,
    }
    .is_solution())
}

/// A solution `(v1, v2, v3)` of `v1^n + v2^n = v3^n` among pure-imaginary quaternions.
pub type VectorTriple = [[i64; 3]; 3];

/// All pure-imaginary solutions at exponent `2N + 1` with components in `[-bound, bound]`,
/// in lexicographic order.
pub fn odd_pure_imag_scan(big_n: u32, bound: i64) -> Result<Vec<VectorTriple>> {
    if !(1..=5).contains(&bound) {
        return Err(Error::domain(format!("scan bound must be in 1..=5, got {bound}")));
    }
    let n = 2 * big_n + 1;
    let mut vectors = Vec::new();
    for x in -bound..=bound {
        for y in -bound..=bound {
            for z in -bound..=bound {
                vectors.push([x, y, z]);
            }
        }
    }
    let power = |v: &[i64; 3]| -> [BigInt; 3] {
        pure_imag_pow(&[BigInt::from(v[0]), BigInt::from(v[1]), BigInt::from(v[2])], n).vector()
    };
    let powers: Vec<[BigInt; 3]> = vectors.iter().map(power).collect();
    let mut lookup: HashMap<&[BigInt; 3], Vec<usize>> = HashMap::new();
    for (i, p) in powers.iter().enumerate() {
        lookup.entry(p).or_default().push(i);
    }
    let mut out = Vec::new();
    for (i, p1) in powers.iter().enumerate() {
        for (j, p2) in powers.iter().enumerate() {
            let sum = [&p1[0] + &p2[0], &p1[1] + &p2[1], &p1[2] + &p2[2]];
            if let Some(ks) = lookup.get(&sum) {
                for &k in ks {
                    out.push([vectors[i], vectors[j], vectors[k]]);
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// The integer equation `|v1|^(2N) + |v2|^(2N) = |v3|^(2N)` that
/// `v1^(2N) + v2^(2N) = v3^(2N)` reduces to, as `(lhs, rhs)` with `|v|^2` the squared norm.
///
/// Both sides carry the common sign `(-1)^N`, which is dropped.
pub fn even_pure_imag_reduction(v1: &[BigInt; 3], v2: &[BigInt; 3], v3: &[BigInt; 3], big_n: u32) -> (BigInt, BigInt) {
    let norm = |v: &[BigInt; 3]| -> BigInt { v.iter().map(|x| x * x).sum() };
    let p = |v: &[BigInt; 3]| num_traits::pow(norm(v), big_n as usize);
    (p(v1) + p(v2), p(v3))
}
