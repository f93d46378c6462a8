//! Even continued fractions and the closed-form or recursive polynomial
//! families: `X_n`, `Y_n`, the Salem sequence `D_{m,n}` and the two
//! twisted families of the appendix.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{normalize_alexander, IntPoly};
use crate::seifert::{self, CfForm, SplitSpec};

/// Even continued fraction `[2a_1, ..., 2a_m]`, stored by its half-entries.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EvenCF {
    half: Vec<i64>,
}

impl EvenCF {
    pub fn new(half: Vec<i64>) -> Result<Self> {
        if half.is_empty() {
            return Err(Error::EmptyCF);
        }
        if let Some(i) = half.iter().position(|&a| a == 0) {
            return Err(Error::ZeroEntry(i));
        }
        Ok(EvenCF { half })
    }

    /// From full entries, which must be even and nonzero.
    pub fn from_entries(full: &[i64]) -> Result<Self> {
        if let Some(i) = full.iter().position(|&x| x % 2 != 0) {
            return Err(Error::Parse { pos: i, msg: format!("entry {} is odd", full[i]) });
        }
        Self::new(full.iter().map(|&x| x / 2).collect())
    }

    pub fn half_entries(&self) -> &[i64] {
        &self.half
    }

    pub fn entries(&self) -> Vec<i64> {
        self.half.iter().map(|&a| 2 * a).collect()
    }

    pub fn len(&self) -> usize {
        self.half.len()
    }

    pub fn is_empty(&self) -> bool {
        self.half.is_empty()
    }

    /// `-r`: every entry negated.
    pub fn neg(&self) -> EvenCF {
        EvenCF { half: self.half.iter().map(|a| -a).collect() }
    }

    /// `r^{-1}`: entries reversed.
    pub fn rev(&self) -> EvenCF {
        EvenCF { half: self.half.iter().rev().copied().collect() }
    }

    pub fn concat(&self, other: &EvenCF) -> EvenCF {
        let mut half = self.half.clone();
        half.extend_from_slice(&other.half);
        EvenCF { half }
    }

    /// `prod sign(a_j)`.
    pub fn sign_product(&self) -> i32 {
        if self.half.iter().filter(|&&a| a < 0).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_knot(&self) -> bool {
        self.half.len().is_multiple_of(2)
    }

    /// Entries alternate in sign starting from a positive one.
    pub fn is_alternating(&self) -> bool {
        self.half
            .iter()
            .enumerate()
            .all(|(i, &a)| (i % 2 == 0) == (a > 0))
    }

    /// Normalised Alexander polynomial of the twisted chain Seifert matrix.
    pub fn alexander(&self) -> IntPoly {
        let m = seifert::seifert_2bridge(self, CfForm::TwistedChain).expect("valid cf");
        normalize_alexander(&seifert::alexander_poly(&m), Some(self.sign_product()))
            .expect("twisted chain determinant is nonzero")
    }
}

impl fmt::Display for EvenCF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", s.join(","))
    }
}

impl FromStr for EvenCF {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let body = t
            .strip_prefix('[')
            .and_then(|x| x.strip_suffix(']'))
            .ok_or(Error::Parse { pos: 0, msg: "expected [..]".into() })?;
        if body.trim().is_empty() {
            return Err(Error::EmptyCF);
        }
        let mut full = Vec::new();
        let mut pos = 1;
        for tok in body.split(',') {
            let v: i64 = tok.trim().parse().map_err(|_| Error::Parse {
                pos,
                msg: format!("expected integer, found {:?}", tok.trim()),
            })?;
            if v % 2 != 0 {
                return Err(Error::Parse { pos, msg: format!("entry {v} is odd") });
            }
            full.push(v);
            pos += tok.len() + 1;
        }
        EvenCF::from_entries(&full)
    }
}

/// `beta / alpha` in lowest terms with `alpha >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fraction {
    pub beta: i64,
    pub alpha: i64,
}

impl Fraction {
    pub fn new(beta: i64, alpha: i64) -> Result<Self> {
        if alpha == 0 || beta == 0 {
            return Err(Error::BadFraction(format!("{beta}/{alpha}")));
        }
        let g = beta.gcd(&alpha);
        let s = alpha.signum();
        Ok(Fraction { beta: s * beta / g, alpha: s * alpha / g })
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.beta, self.alpha)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (b, a) = s
            .split_once('/')
            .ok_or(Error::Parse { pos: 0, msg: "expected beta/alpha".into() })?;
        let beta = b.trim().parse().map_err(|_| Error::Parse { pos: 0, msg: "bad numerator".into() })?;
        let alpha = a
            .trim()
            .parse()
            .map_err(|_| Error::Parse { pos: b.len() + 1, msg: "bad denominator".into() })?;
        Fraction::new(beta, alpha)
    }
}

/// `1 / (2a_1 - 1 / (2a_2 - ...))`.
pub fn cf_to_fraction(cf: &EvenCF) -> Result<Fraction> {
    let a = cf.half_entries();
    let last = *a.last().ok_or(Error::EmptyCF)?;
    // x = num / den
    let (mut num, mut den) = (BigInt::from(2 * last), BigInt::one());
    for &ak in a.iter().rev().skip(1) {
        let n = BigInt::from(2 * ak) * &num - &den;
        den = num;
        num = n;
    }
    // r = 1 / x = den / num
    let (mut b, mut al) = (den, num);
    if al.is_negative() {
        b = -b;
        al = -al;
    }
    let conv = |x: BigInt| i64::try_from(x).map_err(|_| Error::BadFraction("overflow".into()));
    Fraction::new(conv(b)?, conv(al)?)
}

/// Nearest-even-integer expansion of `beta / alpha`.
pub fn fraction_to_cf(r: &Fraction) -> Result<EvenCF> {
    let (mut b, mut a) = (BigInt::from(r.beta), BigInt::from(r.alpha));
    let two = BigInt::from(2);
    let mut half = Vec::new();
    while !b.is_zero() {
        // y = 1 / r = a / b; nearest even integer 2k with |y - 2k| < 1
        if b.is_negative() {
            b = -b;
            a = -a;
        }
        let k = (&a + &b).div_floor(&(&two * &b));
        let rem = &a - &two * &k * &b;
        if rem.abs() == b {
            return Err(Error::NotExpandable);
        }
        half.push(i64::try_from(&k).map_err(|_| Error::NotExpandable)?);
        // r_{k+1} = 2k - a / b = (2kb - a) / b
        let nb = -rem;
        a = b;
        b = nb;
        let g = a.gcd(&b);
        if !g.is_zero() {
            a /= &g;
            b /= &g;
        }
    }
    EvenCF::new(half).map_err(|_| Error::NotExpandable)
}

/// `(d - beta) / d` for an even denominator `d`.
pub fn dual_fraction(r: &Fraction) -> Result<Fraction> {
    if r.alpha % 2 != 0 {
        return Err(Error::OddDenominator);
    }
    Fraction::new(r.alpha - r.beta, r.alpha)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    Same,
    Neg,
    Rev,
    NegRev,
}

/// `[r, 2k, s]` with `s` the chosen transform of `r`.
pub fn cf_compose(r: &EvenCF, k: i64, variant: Variant) -> Result<EvenCF> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let s = match variant {
        Variant::Same => r.clone(),
        Variant::Neg => r.neg(),
        Variant::Rev => r.rev(),
        Variant::NegRev => r.neg().rev(),
    };
    Ok(r.concat(&EvenCF { half: vec![k] }).concat(&s))
}

/// All even continued fractions of length `1..=max_len` with full entries
/// in `{±2, ±4, ..., ±max_abs}`, in lexicographic order of length then entries.
pub fn enumerate_cfs(max_len: usize, max_abs: i64) -> impl Iterator<Item = EvenCF> {
    let half_max = max_abs / 2;
    let alphabet: Vec<i64> = (-half_max..=half_max).filter(|&x| x != 0).collect();
    (1..=max_len).flat_map(move |len| {
        let alphabet = alphabet.clone();
        let base = alphabet.len();
        let total = base.checked_pow(len as u32).unwrap_or(0);
        (0..total).map(move |mut idx| {
            let mut half = vec![0; len];
            for slot in half.iter_mut().rev() {
                *slot = alphabet[idx % base];
                idx /= base;
            }
            EvenCF { half }
        })
    })
}

/// Number of continued fractions produced by [`enumerate_cfs`].
pub fn count_cfs(max_len: usize, max_abs: i64) -> u64 {
    let base = 2 * (max_abs / 2) as u64;
    (1..=max_len as u32).fold(0u64, |acc, l| acc.saturating_add(base.saturating_pow(l)))
}

fn p(c: &[i64]) -> IntPoly {
    IntPoly::from_i64(c)
}

/// `G(n)` for the all-`±2` case: `G(n) = (2t^2 - 5t + 2) G(n-1) - (t-1)^4 G(n-2)`.
pub fn xn_recursion(n: usize) -> IntPoly {
    let lambda = p(&[2, -5, 2]);
    let q = p(&[-1, 1]).pow(4);
    let mut prev = IntPoly::one();
    let mut cur = p(&[1, -3, 1]);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = &(&lambda * &cur) - &(&q * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

/// Alexander polynomial of `X_n(2a | 2b)` through its split Seifert matrix.
pub fn xn_alexander(a: &[i64], b: &[i64]) -> Result<IntPoly> {
    let spec = SplitSpec::xn(a, b)?;
    let m = seifert::seifert_split(&spec).map_err(|e| Error::BadDimensions(e.to_string()))?;
    normalize_alexander(&seifert::alexander_poly(&m), None)
}

/// Conway, reduced Conway and Alexander data of `Y_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct YnBundle {
    pub n: usize,
    /// Conway polynomial in `z`.
    pub c: IntPoly,
    /// `c` with the maximal power of `1 - z^2` removed.
    pub f: IntPoly,
    /// Monic reciprocal factor in `t`.
    pub g: IntPoly,
    /// Normalised Alexander polynomial `mu^{2m-1} g`.
    pub h: IntPoly,
}

/// `mu(t) = 1 - 3t + t^2`.
pub fn mu_poly() -> IntPoly {
    p(&[1, -3, 1])
}

/// `rho(t) = 1 - t + t^2`.
pub fn rho_poly() -> IntPoly {
    p(&[1, -1, 1])
}

/// Conway polynomials `c_1..=c_n` of `Y_n`.
pub fn yn_conway(n: usize) -> Vec<IntPoly> {
    let a = p(&[1, 0, -1]);
    let b = p(&[1, 0, 1]);
    let z2 = p(&[0, 0, 4]);
    let a2 = &a * &a;
    let b2 = &b * &b;
    let mut c = vec![a.clone(), &a * &(&a2 - &z2)];
    while c.len() < n {
        let k = c.len();
        let two = BigInt::from(2);
        let next = &a2 * &(&c[k - 1].scale(&two) - &(&b2 * &c[k - 2]));
        c.push(next);
    }
    c.truncate(n);
    c
}

/// `g_1..=g_n` by the two interleaved recursions in `t`.
pub fn yn_g(n: usize) -> Vec<IntPoly> {
    let mu2 = mu_poly().pow(2);
    let rho2 = rho_poly().pow(2);
    let two = BigInt::from(2);
    let mut g = vec![IntPoly::one(), p(&[1, -10, 19, -10, 1])];
    while g.len() < n {
        let k = g.len() + 1; // index of the new term
        let last = &g[g.len() - 1];
        let prev = &g[g.len() - 2];
        let next = if k % 2 == 1 {
            &last.scale(&two) - &(&rho2 * prev)
        } else {
            &(&mu2 * last).scale(&two) - &(&rho2 * prev)
        };
        g.push(next);
    }
    g.truncate(n);
    g
}

/// Substitute `z = sqrt(t) - 1/sqrt(t)` into an even polynomial in `z` of
/// degree `2d` and multiply by `t^d`.
pub fn even_z_to_t(f: &IntPoly) -> IntPoly {
    let d = f.degree() / 2;
    let tm1sq = p(&[1, -2, 1]);
    let mut out = IntPoly::zero();
    for j in 0..=d {
        let c = f.coeff(2 * j);
        if c.is_zero() {
            continue;
        }
        out = &out + &(&tm1sq.pow(j as u32) * &IntPoly::monomial(c, d - j));
    }
    out
}

/// The `Y_n` bundle. The Conway route and the `t` recursion are computed
/// independently and must agree.
pub fn yn_bundle(n: usize) -> Result<YnBundle> {
    if n == 0 {
        return Err(Error::BadDimensions("n must be positive".into()));
    }
    let c = yn_conway(n).pop().unwrap();
    let m = n.div_ceil(2);
    let a = p(&[1, 0, -1]);
    let f = c
        .div_exact(&a.pow((2 * m - 1) as u32))
        .ok_or_else(|| Error::Invariant(format!("(1-z^2)^{} does not divide c_{n}", 2 * m - 1)))?;
    if f.div_exact(&a).is_some() {
        return Err(Error::Invariant(format!("1-z^2 still divides f_{n}")));
    }
    let g = yn_g(n).pop().unwrap();
    if even_z_to_t(&f) != g {
        return Err(Error::Invariant(format!("Conway and t routes disagree for g_{n}")));
    }
    if g.div_exact(&mu_poly()).is_some() {
        return Err(Error::Invariant(format!("mu divides g_{n}")));
    }
    let h = &mu_poly().pow((2 * m - 1) as u32) * &g;
    Ok(YnBundle { n, c, f, g, h })
}

/// `D_{m,n}`, the normalised Alexander polynomial of `[(2)^m, -2, (2)^n]`.
pub fn salem_dmn(m: i64, n: i64) -> Result<IntPoly> {
    if n < 0 || m < n || (m + n) % 2 == 0 {
        return Err(Error::ParityViolation);
    }
    let sgn = |k: i64| if k % 2 == 0 { 1 } else { -1 };
    let mut c = vec![0i64; (m + n + 2) as usize];
    for k in 0..=n {
        c[k as usize] += sgn(k) * (4 * k + 1);
    }
    for k in n + 1..=m {
        c[k as usize] += (4 * n + 3) * sgn(k);
    }
    for j in 0..=n {
        c[(m + j + 1) as usize] += sgn(m + j + 1) * (4 * n + 1 - 4 * j);
    }
    let d = p(&c);
    if d.eval(&BigInt::one()) != -BigInt::one() {
        return Err(Error::Invariant(format!("D_{{{m},{n}}}(1) != -1")));
    }
    Ok(d)
}

/// `[(2)^m, -2, (2)^n]`.
pub fn salem_cf(m: usize, n: usize) -> EvenCF {
    let mut half = vec![1; m];
    half.push(-1);
    half.extend(std::iter::repeat_n(1, n));
    EvenCF { half }
}

/// `k f(t) + t^4` with `f = (t-1)^2 (t^2+1)(t^4-t^3+t^2-t+1)`.
pub fn appc_vertical(k: i64) -> Result<IntPoly> {
    if k == 0 {
        return Err(Error::ZeroK);
    }
    let f = &(&p(&[1, -2, 1]) * &p(&[1, 0, 1])) * &p(&[1, -1, 1, -1, 1]);
    Ok(&f.scale(&BigInt::from(k)) + &IntPoly::monomial(BigInt::one(), 4))
}

/// `[2,2,2,2k,-2,-2,-2,-2]`, the continued fraction realising [`appc_vertical`].
pub fn appc_vertical_cf(k: i64) -> Result<EvenCF> {
    EvenCF::new(vec![1, 1, 1, k, -1, -1, -1, -1])
}

/// `sum_{k<n} (-1)^k (2k+1)(t^k + t^{2n-k}) + (-1)^n (2n+1) t^n`.
pub fn appc_horizontal(n: usize) -> Result<IntPoly> {
    if n == 0 {
        return Err(Error::BadDimensions("n must be positive".into()));
    }
    let mut c = vec![0i64; 2 * n + 1];
    for k in 0..n {
        let v = if k % 2 == 0 { 1 } else { -1 } * (2 * k as i64 + 1);
        c[k] += v;
        c[2 * n - k] += v;
    }
    c[n] = if n.is_multiple_of(2) { 1 } else { -1 } * (2 * n as i64 + 1);
    let d = p(&c);
    let lhs = &p(&[1, 2, 1]) * &d;
    let mut rhs = &(&IntPoly::monomial(BigInt::one(), 2 * n + 1) - &IntPoly::one()) * &p(&[-1, 1]);
    let sign = if n.is_multiple_of(2) { 4 } else { -4 };
    rhs = &rhs + &IntPoly::monomial(BigInt::from(sign), n + 1);
    if lhs != rhs {
        return Err(Error::Invariant("(t+1)^2 identity fails".into()));
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(full: &[i64]) -> EvenCF {
        EvenCF::from_entries(full).unwrap()
    }

    #[test]
    fn codec_examples() {
        for (full, b, a) in [(&[2, 2][..], 2, 3), (&[2, -2][..], 2, 5), (&[2, 4, 2, 6, 2][..], 69, 118)] {
            let r = cf_to_fraction(&cf(full)).unwrap();
            assert_eq!((r.beta, r.alpha), (b, a));
            assert_eq!(fraction_to_cf(&r).unwrap(), cf(full));
        }
        assert_eq!(fraction_to_cf(&Fraction::new(1, 3).unwrap()), Err(Error::NotExpandable));
    }

    #[test]
    fn duals() {
        for (b, a, db, full) in [
            (69, 118, 49, &[2, -2, 2, -4, 2][..]),
            (7, 26, 19, &[2, 2, 2, -2, 2][..]),
            (13, 42, 29, &[2, 2, 6, 2, 2][..]),
        ] {
            let d = dual_fraction(&Fraction::new(b, a).unwrap()).unwrap();
            assert_eq!((d.beta, d.alpha), (db, a));
            assert_eq!(fraction_to_cf(&d).unwrap(), cf(full));
        }
        assert_eq!(dual_fraction(&Fraction::new(2, 5).unwrap()), Err(Error::OddDenominator));
    }

    #[test]
    fn compose() {
        assert_eq!(cf_compose(&cf(&[2]), 1, Variant::NegRev).unwrap(), cf(&[2, 2, -2]));
        assert_eq!(cf_compose(&cf(&[2, -2]), 1, Variant::Same).unwrap(), cf(&[2, -2, 2, 2, -2]));
        assert_eq!(cf_compose(&cf(&[2]), 0, Variant::Same), Err(Error::ZeroK));
        assert_eq!(cf(&[2, 2, -2]).alexander(), p(&[-1, 1]).pow(3));
    }

    #[test]
    fn parse_cf() {
        let r: EvenCF = "[2,-2,-8,2]".parse().unwrap();
        assert_eq!(r.half_entries(), &[1, -1, -4, 1]);
        assert_eq!(r.to_string(), "[2,-2,-8,2]");
        assert!(matches!("[2,3]".parse::<EvenCF>(), Err(Error::Parse { .. })));
        assert!(matches!("[2,0]".parse::<EvenCF>(), Err(Error::ZeroEntry(1))));
        assert_eq!("[]".parse::<EvenCF>(), Err(Error::EmptyCF));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_cfs(2, 4).count() as u64, count_cfs(2, 4));
        assert_eq!(count_cfs(6, 6), 55986);
        let first: Vec<_> = enumerate_cfs(1, 4).collect();
        assert_eq!(first, vec![cf(&[-4]), cf(&[-2]), cf(&[2]), cf(&[4])]);
    }

    #[test]
    fn xn_routes() {
        assert_eq!(xn_recursion(1), p(&[1, -3, 1]));
        assert_eq!(xn_recursion(2), IntPoly::from_desc(&[1, -7, 13, -7, 1]));
        for n in 1..=4 {
            assert_eq!(xn_alexander(&vec![1; n], &vec![-1; n]).unwrap(), xn_recursion(n));
        }
        assert!(matches!(xn_alexander(&[1], &[-1, -1]), Err(Error::BadDimensions(_))));
    }

    #[test]
    fn yn_examples() {
        let c = yn_conway(2);
        let a = p(&[1, 0, -1]);
        assert_eq!(c[0], a);
        assert_eq!(c[1], &a * &(&(&a * &a) - &p(&[0, 0, 4])));
        assert_eq!(yn_bundle(2).unwrap().g, p(&[1, -10, 19, -10, 1]));
        assert_eq!(yn_bundle(3).unwrap().g, p(&[1, -18, 35, -18, 1]));
        assert!(yn_bundle(6).is_ok());
    }

    #[test]
    fn salem() {
        assert_eq!(salem_dmn(1, 0).unwrap(), p(&[1, -3, 1]));
        assert_eq!(salem_dmn(2, 0), Err(Error::ParityViolation));
        for (m, n) in [(1, 0), (3, 0), (2, 1), (4, 1), (3, 2)] {
            assert_eq!(salem_dmn(m, n).unwrap(), salem_cf(m as usize, n as usize).alexander());
        }
    }

    #[test]
    fn appendix_families() {
        assert_eq!(appc_vertical(1).unwrap(), p(&[1, -3, 5, -7, 9, -7, 5, -3, 1]));
        for k in [-3, -1, 1, 2, 5] {
            let d = normalize_alexander(&appc_vertical(k).unwrap(), None).unwrap();
            assert_eq!(d, appc_vertical_cf(k).unwrap().alexander());
        }
        assert_eq!(appc_horizontal(1).unwrap(), p(&[1, -3, 1]));
        assert!(appc_horizontal(7).is_ok());
    }
}
