//! Dense univariate polynomials over the integers and rationals.
//!
//! Coefficients are stored ascending by exponent. Text I/O uses the
//! descending order, e.g. `"1,-7,13,-7,1"` is `t^4 - 7t^3 + 13t^2 - 7t + 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    /// Ascending coefficients.
    pub fn from_i64(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    /// Descending coefficients, the order used in text.
    pub fn from_desc(c: &[i64]) -> Self {
        Self::new(c.iter().rev().map(|&x| BigInt::from(x)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn t() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of `p(x)` computed on the integer `q^d p(n/q)`.
    pub fn sign_at(&self, x: &BigRational) -> i32 {
        let (n, q) = (x.numer(), x.denom());
        let mut acc = BigInt::zero();
        let mut qpow = BigInt::one();
        // Horner on the homogenised form: sum c_i n^i q^(d-i)
        for c in self.coeffs.iter().rev() {
            acc = acc * n + c * &qpow;
            qpow *= q;
        }
        sign_of(&acc)
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| {
            acc * z + c.to_f64().unwrap_or(f64::NAN)
        })
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect()
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    /// `t^deg p(1/t)`.
    pub fn reversed(&self) -> Self {
        let mut v = self.coeffs.clone();
        v.reverse();
        Self::new(v)
    }

    /// Number of factors of `t`.
    pub fn t_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self::new(v)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `p(a t + b)`.
    pub fn compose_linear(&self, a: &BigInt, b: &BigInt) -> Self {
        let lin = Self::new(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn compose(&self, q: &IntPoly) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * q) + &Self::constant(c.clone());
        }
        acc
    }

    pub fn content(&self) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Divide by the content, keeping the sign.
    pub fn primitive(&self) -> Self {
        let g = self.content();
        if g.is_zero() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Exact division in `Z[t]`; `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < d.degree() {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let dl = d.lead();
        let dd = d.degree();
        let mut q = vec![BigInt::zero(); self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (qq, r) = top.div_rem(&dl);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &qq * c;
            }
            q[k] = qq;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Self::new(q))
        } else {
            None
        }
    }

    /// Remove every factor `f`, returning the quotient and the count.
    pub fn strip_factor(&self, f: &IntPoly) -> (IntPoly, usize) {
        let mut p = self.clone();
        let mut k = 0;
        while !p.is_zero() {
            match p.div_exact(f) {
                Some(q) => {
                    p = q;
                    k += 1;
                }
                None => break,
            }
        }
        (p, k)
    }

    /// Coefficients read the same reversed (exact palindrome).
    pub fn is_palindromic(&self) -> bool {
        let c = &self.coeffs;
        let n = c.len();
        (0..n / 2).all(|i| c[i] == c[n - 1 - i])
    }

    pub fn is_antipalindromic(&self) -> bool {
        let c = &self.coeffs;
        let n = c.len();
        (0..n).all(|i| c[i] == -&c[n - 1 - i])
    }

    /// Monic gcd over `Q`, returned as a primitive integer polynomial
    /// with positive leading coefficient.
    /// Pseudo-remainder `lc(d)^(deg self - deg d + 1) self mod d`, and that
    /// multiplier's sign.
    pub fn prem(&self, d: &IntPoly) -> (IntPoly, i32) {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.degree() < d.degree() || self.is_zero() {
            return (self.clone(), 1);
        }
        let dd = d.degree();
        let lc = d.lead().clone();
        let steps = self.degree() - dd + 1;
        let mut rem = self.coeffs.clone();
        for k in (0..steps).rev() {
            let top = rem[k + dd].clone();
            for c in rem.iter_mut() {
                *c *= &lc;
            }
            if !top.is_zero() {
                for (i, dc) in d.coeffs.iter().enumerate() {
                    rem[k + i] -= &top * dc;
                }
            }
        }
        rem.truncate(dd);
        let sign = if lc.is_negative() && steps % 2 == 1 { -1 } else { 1 };
        (IntPoly::new(rem), sign)
    }

    /// Primitive part with a positive leading coefficient.
    fn normalized(&self) -> IntPoly {
        let p = self.primitive();
        if p.lead().is_negative() {
            -p
        } else {
            p
        }
    }

    /// Greatest common divisor, primitive with positive lead, by the
    /// primitive remainder sequence.
    pub fn gcd(&self, other: &IntPoly) -> IntPoly {
        let (mut a, mut b) = (self.normalized(), other.normalized());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let (r, _) = a.prem(&b);
            a = b;
            b = r.primitive();
        }
        a.normalized()
    }

    /// `self / gcd(self, self')`, primitive with positive lead.
    pub fn squarefree_part(&self) -> IntPoly {
        let g = self.gcd(&self.derivative());
        self.div_exact(&g).expect("gcd divides").normalized()
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::from(self)
    }
}

pub(crate) fn sign_of(x: &BigInt) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().rev().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for IntPoly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut coeffs = Vec::new();
        let mut pos = 0usize;
        for tok in s.split(',') {
            let trimmed = tok.trim();
            let c = BigInt::from_str(trimmed).map_err(|_| Error::Parse {
                pos,
                msg: format!("expected integer, found {trimmed:?}"),
            })?;
            coeffs.push(c);
            pos += tok.len() + 1;
        }
        coeffs.reverse();
        Ok(IntPoly::new(coeffs))
    }
}

impl<'a> Add<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn add(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn sub(self, o: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a IntPoly> for &'a IntPoly {
    type Output = IntPoly;
    fn mul(self, o: &IntPoly) -> IntPoly {
        if self.is_zero() || o.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        IntPoly::new(v)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! owned_ops {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, o: $t) -> $t {
                &self + &o
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, o: $t) -> $t {
                &self - &o
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, o: $t) -> $t {
                &self * &o
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}

owned_ops!(IntPoly);

/// Polynomial with rational coefficients, used for gcds and Sturm chains.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl From<&IntPoly> for RatPoly {
    fn from(p: &IntPoly) -> Self {
        RatPoly::new(
            p.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        RatPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().recip();
        self.scale(&l)
    }

    pub fn sub(&self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect())
    }

    pub fn add(&self, o: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect())
    }

    pub fn mul(&self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::zero();
        }
        let mut v = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RatPoly::new(v)
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn divrem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!d.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        if self.coeffs.len() < d.coeffs.len() {
            return (RatPoly::zero(), self.clone());
        }
        let dd = d.degree();
        let inv = d.lead().recip();
        let mut q = vec![BigRational::zero(); self.coeffs.len() - dd];
        for k in (0..q.len()).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in d.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            q[k] = c;
        }
        rem.truncate(dd);
        (RatPoly::new(q), RatPoly::new(rem))
    }

    pub fn rem(&self, d: &RatPoly) -> RatPoly {
        self.divrem(d).1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &RatPoly) -> RatPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Clear denominators and divide by the content, preserving sign.
    pub fn to_int_preserving_sign(&self) -> IntPoly {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let p = IntPoly::new(
            self.coeffs
                .iter()
                .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
                .collect(),
        );
        p.primitive()
    }

    /// Primitive integer polynomial with positive leading coefficient.
    pub fn to_primitive(&self) -> IntPoly {
        let p = self.to_int_preserving_sign();
        if p.lead().is_negative() {
            -p
        } else {
            p
        }
    }
}

/// Strip powers of `t` and fix the overall sign.
///
/// With a sign hint `e` (the product of the signs of the continued fraction
/// entries) the polynomial is multiplied by `e` first; the result must then
/// already have a positive leading coefficient.
pub fn normalize_alexander(p: &IntPoly, sign_hint: Option<i32>) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut q = p.shift_down(p.t_valuation());
    if let Some(e) = sign_hint {
        if e < 0 {
            q = -q;
        }
        if q.lead().is_negative() {
            return Err(Error::SignMismatch { hint: e });
        }
    } else if q.lead().is_negative() {
        q = -q;
    }
    Ok(q)
}

/// Reciprocal up to sign: `t^deg p(1/t) = +-p`.
pub fn is_reciprocal(p: &IntPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(p.is_palindromic() || p.is_antipalindromic())
}

/// The polynomials `p_k(x)` with `t^k + t^-k = p_k(t + 1/t)`, for `k <= n`.
pub fn chebyshev_like(n: usize) -> Vec<IntPoly> {
    let mut v = vec![IntPoly::from_i64(&[2])];
    if n >= 1 {
        v.push(IntPoly::t());
    }
    for k in 2..=n {
        let next = &(&IntPoly::t() * &v[k - 1]) - &v[k - 2];
        v.push(next);
    }
    v
}

/// The modification `F` of a reciprocal `p` of degree `2n`:
/// `t^-n p(t) = F(t + 1/t)`.
pub fn modification(p: &IntPoly) -> Result<IntPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() % 2 == 1 {
        return Err(Error::OddDegree);
    }
    if !p.is_palindromic() {
        return Err(Error::NotReciprocal);
    }
    let n = p.degree() / 2;
    let basis = chebyshev_like(n);
    let mut f = IntPoly::constant(p.coeff(n));
    for k in 1..=n {
        f = &f + &basis[k].scale(&p.coeff(n + k));
    }
    Ok(f)
}

/// Inverse of [`modification`]: `t^n F(t + 1/t)` for `deg F = n`.
pub fn unmodify(f: &IntPoly) -> IntPoly {
    let n = f.degree();
    // (t^2 + 1)^k t^(n-k) for each power x^k
    let tp1 = IntPoly::from_i64(&[1, 0, 1]);
    let mut acc = IntPoly::zero();
    for (k, c) in f.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let term = tp1.pow(k as u32).shift_up(n - k).scale(c);
        acc = &acc + &term;
    }
    acc
}

/// Substitute `z^2 = x - 2` into an even Conway polynomial.
pub fn conway_to_modified(c: &IntPoly) -> IntPoly {
    debug_assert!(
        c.coeffs().iter().skip(1).step_by(2).all(|x| x.is_zero()),
        "odd powers in an even Conway polynomial"
    );
    let xm2 = IntPoly::from_i64(&[-2, 1]);
    let mut acc = IntPoly::zero();
    for a in c.coeffs().iter().step_by(2).rev() {
        acc = &(&acc * &xm2) + &IntPoly::constant(a.clone());
    }
    acc
}

/// Substitute `z^2 = t + 1/t - 2` into an even polynomial in `z` and clear
/// denominators with `t^(deg/2)`.
pub fn conway_to_alexander(c: &IntPoly) -> IntPoly {
    unmodify(&conway_to_modified(c))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoeffProfile {
    pub is_alternating_sign: bool,
    /// Index `k` with `c_0 < ... < c_k = ... = c_{d-k} > ... > c_d`.
    pub is_trapezoidal: Option<usize>,
    pub is_strictly_log_concave: bool,
}

pub fn coeff_profile(p: &IntPoly) -> Result<CoeffProfile> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let signed: Vec<BigInt> = p.coeffs().iter().rev().cloned().collect();
    let c: Vec<BigInt> = signed.iter().map(|x| x.abs()).collect();
    let d = c.len() - 1;

    let is_alternating_sign = signed
        .windows(2)
        .all(|w| (w[0].is_positive() && w[1].is_negative()) || (w[0].is_negative() && w[1].is_positive()));

    let is_trapezoidal = {
        let mut k = 0;
        while k < d && c[k] < c[k + 1] {
            k += 1;
        }
        let ok = k >= 1
            && k <= d - k
            && (k..d - k).all(|j| c[j] == c[j + 1])
            && (d - k..d).all(|j| c[j] > c[j + 1]);
        ok.then_some(k)
    };

    let is_strictly_log_concave = c.iter().all(|x| !x.is_zero())
        && (1..d).all(|j| &c[j - 1] * &c[j + 1] < &c[j] * &c[j]);

    Ok(CoeffProfile {
        is_alternating_sign,
        is_trapezoidal,
        is_strictly_log_concave,
    })
}

/// Exact interpolation of the integer polynomial of degree `<= n` from its
/// values at `0, 1, ..., n`.
pub fn interpolate_integer_points(values: &[BigInt]) -> IntPoly {
    let n = values.len();
    // forward differences at 0
    let mut diffs = Vec::with_capacity(n);
    let mut row = values.to_vec();
    for _ in 0..n {
        diffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    let mut acc = IntPoly::zero();
    let mut falling = IntPoly::one();
    let mut fact = BigInt::one();
    for (k, d) in diffs.iter().enumerate() {
        if k > 0 {
            fact *= BigInt::from(k);
            falling = &falling * &IntPoly::new(vec![BigInt::from(-(k as i64 - 1)), BigInt::one()]);
        }
        if d.is_zero() {
            continue;
        }
        let (e, r) = d.div_rem(&fact);
        assert!(r.is_zero(), "values do not come from an integer polynomial");
        acc = &acc + &falling.scale(&e);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(desc: &[i64]) -> IntPoly {
        IntPoly::from_desc(desc)
    }

    #[test]
    fn text_round_trip() {
        let q: IntPoly = "1,-7,13,-7,1".parse().unwrap();
        assert_eq!(q, p(&[1, -7, 13, -7, 1]));
        assert_eq!(q.to_string(), "1,-7,13,-7,1");
        assert!("1,x".parse::<IntPoly>().is_err());
    }

    #[test]
    fn normalize_examples() {
        let f = p(&[1, -3, 1]);
        let g = -(&f * &IntPoly::monomial(BigInt::one(), 3));
        assert_eq!(normalize_alexander(&g, None).unwrap(), f);
        assert_eq!(normalize_alexander(&g, Some(-1)).unwrap(), f);
        assert!(normalize_alexander(&g, Some(1)).is_err());
        assert_eq!(normalize_alexander(&p(&[5]), None).unwrap(), p(&[5]));
        assert_eq!(normalize_alexander(&IntPoly::zero(), None), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn reciprocity() {
        assert!(is_reciprocal(&p(&[1, -7, 13, -7, 1])).unwrap());
        assert!(!is_reciprocal(&p(&[1, -2])).unwrap());
        assert!(is_reciprocal(&p(&[1, -3, 3, -3, 3, -1])).unwrap());
    }

    #[test]
    fn modification_examples() {
        assert_eq!(modification(&p(&[1, -3, 2, -1, 2, -3, 1])).unwrap(), p(&[1, -3, -1, 5]));
        assert_eq!(modification(&p(&[1, -3, 1])).unwrap(), p(&[1, -3]));
        assert_eq!(modification(&p(&[1, 0, 1])).unwrap(), p(&[1, 0]));
        assert_eq!(modification(&p(&[1, -2])), Err(Error::OddDegree));
        assert_eq!(modification(&p(&[1, 2, 3])), Err(Error::NotReciprocal));
    }

    #[test]
    fn conway_examples() {
        // z^2 + 1, 1, 1 - z^2
        assert_eq!(conway_to_modified(&IntPoly::from_i64(&[1, 0, 1])), p(&[1, -1]));
        assert_eq!(conway_to_modified(&IntPoly::from_i64(&[1])), p(&[1]));
        assert_eq!(conway_to_modified(&IntPoly::from_i64(&[1, 0, -1])), p(&[-1, 3]));
    }

    #[test]
    fn profile_examples() {
        let a = coeff_profile(&p(&[1, -3, 3, -3, 3, -1])).unwrap();
        assert!(a.is_alternating_sign);
        assert_eq!(a.is_trapezoidal, Some(1));
        assert_eq!(coeff_profile(&p(&[1, -2, 1, -2, 1])).unwrap().is_trapezoidal, None);
        assert!(coeff_profile(&p(&[1, -7, 13, -7, 1])).unwrap().is_strictly_log_concave);
    }

    #[test]
    fn interpolation_recovers() {
        let f = p(&[3, -1, 0, 7, -2]);
        let vals: Vec<BigInt> = (0..5).map(|k| f.eval(&BigInt::from(k))).collect();
        assert_eq!(interpolate_integer_points(&vals), f);
    }

    #[test]
    fn exact_division() {
        let a = p(&[1, -3, 1]);
        let b = p(&[2, 5, 7]);
        assert_eq!((&a * &b).div_exact(&a), Some(b.clone()));
        assert_eq!(b.div_exact(&a), None);
        let (q, k) = (&a * &p(&[1, -1]).pow(3)).strip_factor(&p(&[1, -1]));
        assert_eq!((q, k), (a, 3));
    }
}
