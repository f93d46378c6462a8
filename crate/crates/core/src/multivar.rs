//! Two-variable Alexander polynomials of 2-bridge links, their one-variable
//! specialisations, inversive links and stability in the upper half plane.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::EvenCF;
use crate::polyring::{normalize_alexander, IntPoly, RatPoly};
use crate::stability::{classify, numeric_zeros, Verdict};

/// Sparse Laurent polynomial in `x, y` with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BiLaurent {
    terms: BTreeMap<(i64, i64), BigInt>,
}

impl BiLaurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    pub fn x() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0, 0)
    }

    pub fn monomial(c: BigInt, i: i64, j: i64) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        BiLaurent { terms }
    }

    /// From `(c, i, j)` triples; repeated exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (i64, i64, i64)>>(it: I) -> Self {
        let mut out = Self::zero();
        for (c, i, j) in it {
            out.add_term((i, j), BigInt::from(c));
        }
        out
    }

    fn add_term(&mut self, k: (i64, i64), c: BigInt) {
        let e = self.terms.entry(k).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(i64, i64), &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BiLaurent { terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect() }
    }

    pub fn shift(&self, di: i64, dj: i64) -> Self {
        BiLaurent { terms: self.terms.iter().map(|(&(i, j), v)| ((i + di, j + dj), v.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// `(min i, max i, min j, max j)`.
    pub fn exponent_box(&self) -> Option<(i64, i64, i64, i64)> {
        let mut it = self.terms.keys();
        let &(i0, j0) = it.next()?;
        Some(self.terms.keys().fold((i0, i0, j0, j0), |(a, b, c, d), &(i, j)| {
            (a.min(i), b.max(i), c.min(j), d.max(j))
        }))
    }

    /// Canonical representative modulo units `±x^i y^j`: smallest exponents
    /// zero and a positive coefficient on the lexicographically first term.
    pub fn normalize_units(&self) -> Self {
        let Some((imin, _, jmin, _)) = self.exponent_box() else {
            return Self::zero();
        };
        let s = self.shift(-imin, -jmin);
        let first = s.terms.values().next().unwrap();
        if first.is_negative() {
            -&s
        } else {
            s
        }
    }

    pub fn eq_up_to_units(&self, other: &Self) -> bool {
        self.normalize_units() == other.normalize_units()
    }

    /// Both exponents in `{0, 1}`.
    pub fn is_multi_affine(&self) -> bool {
        self.terms.keys().all(|&(i, j)| (0..=1).contains(&i) && (0..=1).contains(&j))
    }

    /// Substitute `x = t^p`, `y = t^q` and shift to a polynomial; returns the
    /// polynomial and the shift applied.
    pub fn substitute_powers(&self, p: i64, q: i64) -> (IntPoly, i64) {
        let exps: Vec<i64> = self.terms.keys().map(|&(i, j)| p * i + q * j).collect();
        let lo = exps.iter().copied().min().unwrap_or(0);
        let hi = exps.iter().copied().max().unwrap_or(0);
        let mut c = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for ((_, v), e) in self.terms.iter().zip(exps) {
            c[(e - lo) as usize] += v;
        }
        (IntPoly::new(c), -lo)
    }

    /// `x = 1` as a polynomial in `y` (after clearing negative powers), or
    /// `y = 1` as a polynomial in `x`.
    pub fn at_one(&self, var_is_x: bool) -> IntPoly {
        if var_is_x {
            self.substitute_powers(1, 0).0
        } else {
            self.substitute_powers(0, 1).0
        }
    }

    pub fn eval_complex(&self, x: Complex64, y: Complex64) -> Complex64 {
        self.terms.iter().fold(Complex64::new(0.0, 0.0), |acc, (&(i, j), c)| {
            acc + x.powi(i as i32) * y.powi(j as i32) * c.to_f64().unwrap_or(f64::NAN)
        })
    }
}

impl<'a> Add<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn add(self, o: &BiLaurent) -> BiLaurent {
        let mut out = self.clone();
        for (k, v) in &o.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
}

impl<'a> Sub<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn sub(self, o: &BiLaurent) -> BiLaurent {
        self + &(-o)
    }
}

impl Neg for &BiLaurent {
    type Output = BiLaurent;
    fn neg(self) -> BiLaurent {
        BiLaurent { terms: self.terms.iter().map(|(k, v)| (*k, -v)).collect() }
    }
}

impl<'a> Mul<&'a BiLaurent> for &'a BiLaurent {
    type Output = BiLaurent;
    fn mul(self, o: &BiLaurent) -> BiLaurent {
        let mut out = BiLaurent::zero();
        for (&(i, j), a) in &self.terms {
            for (&(k, l), b) in &o.terms {
                out.add_term((i + k, j + l), a * b);
            }
        }
        out
    }
}

impl fmt::Display for BiLaurent {
    /// `c:i,j;...` in increasing exponent order; zero prints as `0:0,0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0:0,0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(&(i, j), c)| format!("{c}:{i},{j}")).collect();
        write!(f, "{}", parts.join(";"))
    }
}

impl FromStr for BiLaurent {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut out = BiLaurent::zero();
        let mut pos = 0;
        for tok in s.split(';') {
            let bad = |msg: &str| Error::Parse { pos, msg: msg.to_string() };
            let (c, ij) = tok.split_once(':').ok_or_else(|| bad("expected c:i,j"))?;
            let (i, j) = ij.split_once(',').ok_or_else(|| bad("expected i,j"))?;
            let c: BigInt = c.trim().parse().map_err(|_| bad("bad coefficient"))?;
            let i: i64 = i.trim().parse().map_err(|_| bad("bad x exponent"))?;
            let j: i64 = j.trim().parse().map_err(|_| bad("bad y exponent"))?;
            out.add_term((i, j), c);
            pos += tok.len() + 1;
        }
        Ok(out)
    }
}

impl Serialize for BiLaurent {
    /// JSON array of `[c, i, j]`.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<(String, i64, i64)> = self.terms.iter().map(|(&(i, j), c)| (c.to_string(), i, j)).collect();
        let raw: Vec<serde_json::Value> = v
            .into_iter()
            .map(|(c, i, j)| {
                let cv = c
                    .parse::<i64>()
                    .map(serde_json::Value::from)
                    .unwrap_or(serde_json::Value::String(c));
                serde_json::json!([cv, i, j])
            })
            .collect();
        raw.serialize(s)
    }
}

impl<'de> Deserialize<'de> for BiLaurent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<(i64, i64, i64)> = Vec::deserialize(d)?;
        Ok(BiLaurent::from_terms(v))
    }
}

/// `G_n = (x^n - y^n) / (x - y)`, `G_{-n} = -G_n / (xy)^n`, `G_0 = 0`.
pub fn gk(n: i64) -> BiLaurent {
    if n == 0 {
        return BiLaurent::zero();
    }
    let m = n.abs();
    let g = BiLaurent::from_terms((0..m).map(|k| (1, k, m - 1 - k)));
    if n > 0 {
        g
    } else {
        -&g.shift(-m, -m)
    }
}

fn odd_halves(cf: &EvenCF) -> Result<(Vec<i64>, Vec<i64>)> {
    let h = cf.half_entries();
    if h.len().is_multiple_of(2) {
        return Err(Error::EvenLength);
    }
    let a = h.iter().step_by(2).copied().collect();
    let b = h.iter().skip(1).step_by(2).copied().collect();
    Ok((a, b))
}

/// Two-variable Alexander polynomial of the link with continued fraction
/// `[2a_1, 2b_1, ..., 2a_n, 2b_n, 2a_{n+1}]`, as the sum over subsets
/// `{j_1 < ... < j_m}` of `b_{j_1}..b_{j_m} ((x-1)(y-1))^m G_{mu_1}..G_{mu_{m+1}}`
/// where the `mu` are the block sums of the `a` cut after each `a_{j_k}`.
pub fn alexander_xy(cf: &EvenCF) -> Result<BiLaurent> {
    let (a, b) = odd_halves(cf)?;
    let n = b.len();
    if n > 20 {
        return Err(Error::BadDimensions(format!("{n} twist regions is too many")));
    }
    let u = &(&BiLaurent::x() - &BiLaurent::one()) * &(&BiLaurent::y() - &BiLaurent::one());
    let mut total = BiLaurent::zero();
    for mask in 0u32..(1 << n) {
        let mut coef = BigInt::one();
        let mut mus = Vec::new();
        let mut run = 0i64;
        for (k, &ak) in a.iter().enumerate() {
            run += ak;
            if k < n && mask & (1 << k) != 0 {
                coef *= b[k];
                mus.push(run);
                run = 0;
            }
        }
        mus.push(run);
        if mus.contains(&0) {
            continue;
        }
        let mut term = u.pow(mask.count_ones()).scale(&coef);
        for mu in mus {
            term = &term * &gk(mu);
        }
        total = &total + &term;
    }
    Ok(total)
}

/// Sum of the half-entries in odd positions.
pub fn linking_number(cf: &EvenCF) -> Result<i64> {
    Ok(odd_halves(cf)?.0.iter().sum())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    /// `(t - 1) D(t, t)`, the reduced Alexander polynomial.
    Diag,
    /// `t^s D(t, 1/t)`.
    Reversed,
}

pub fn specialize(d: &BiLaurent, mode: Mode) -> Result<IntPoly> {
    if d.is_zero() {
        return Err(Error::ZeroInput);
    }
    let p = match mode {
        Mode::Diag => &d.substitute_powers(1, 1).0 * &IntPoly::from_i64(&[-1, 1]),
        Mode::Reversed => d.substitute_powers(1, -1).0,
    };
    if p.is_zero() {
        return Err(Error::ZeroInput);
    }
    normalize_alexander(&p, None)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InversiveReport {
    pub diag_verdict: Verdict,
    pub reversed_verdict: Verdict,
    pub inversive: bool,
}

/// Stable with one orientation and c-stable after reversing a component,
/// or the other way round. Zeros at `t = ±1` count as both real and unit.
pub fn inversive_check(cf: &EvenCF) -> Result<InversiveReport> {
    let d = alexander_xy(cf)?;
    let diag = classify(&specialize(&d, Mode::Diag)?)?;
    let rev = classify(&specialize(&d, Mode::Reversed)?)?;
    let inversive = (diag.all_real() && rev.all_unit()) || (diag.all_unit() && rev.all_real());
    Ok(InversiveReport { diag_verdict: diag.verdict, reversed_verdict: rev.verdict, inversive })
}

/// Exact stability of `a00 + a01 y + a10 x + a11 xy`: `a00 a11 - a01 a10 <= 0`.
pub fn multiaffine_stable(f: &BiLaurent) -> Result<bool> {
    if !f.is_multi_affine() {
        return Err(Error::NotMultiAffine);
    }
    let det = f.coeff(0, 0) * f.coeff(1, 1) - f.coeff(0, 1) * f.coeff(1, 0);
    Ok(!det.is_positive())
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ProbeResult {
    /// `f(a_1 + b_1 t, a_2 + b_2 t)` has a zero with positive imaginary part.
    Counterexample { a: [f64; 2], b: [f64; 2], root: [f64; 2] },
    /// Heuristic evidence only.
    NoCounterexample { trials: usize },
}

/// Restriction of a polynomial (nonnegative exponents) to the line
/// `(a_1 + b_1 t, a_2 + b_2 t)`.
pub fn line_restriction(f: &BiLaurent, a: [&BigRational; 2], b: [&BigRational; 2]) -> RatPoly {
    let lx = RatPoly::new(vec![a[0].clone(), b[0].clone()]);
    let ly = RatPoly::new(vec![a[1].clone(), b[1].clone()]);
    let mut out = RatPoly::zero();
    for (&(i, j), c) in f.terms() {
        let mut term = RatPoly::new(vec![BigRational::from_integer(c.clone())]);
        for _ in 0..i {
            term = term.mul(&lx);
        }
        for _ in 0..j {
            term = term.mul(&ly);
        }
        out = out.add(&term);
    }
    out
}

const PROBE_TOL: f64 = 1e-9;

/// Random search for a line `a + b t`, `a` in `[-3, 3]^2`, `b` in `(0, 3]^2`,
/// along which `f` has a zero in the upper half plane. Trials use
/// independent streams of one seed, so the outcome does not depend on
/// scheduling.
pub fn hstable_probe(f: &BiLaurent, trials: usize, seed: u64) -> ProbeResult {
    let g = f.normalize_units();
    let run = |trial: usize| -> Option<ProbeResult> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(trial as u64);
        let den = BigInt::from(64);
        let mut pick = |lo: i64, hi: i64| BigRational::new(BigInt::from(rng.gen_range(lo..=hi)), den.clone());
        let a = [pick(-192, 192), pick(-192, 192)];
        let b = [pick(1, 192), pick(1, 192)];
        let r = line_restriction(&g, [&a[0], &a[1]], [&b[0], &b[1]]);
        let af = [a[0].to_f64().unwrap(), a[1].to_f64().unwrap()];
        let bf = [b[0].to_f64().unwrap(), b[1].to_f64().unwrap()];
        if r.is_zero() {
            return Some(ProbeResult::Counterexample { a: af, b: bf, root: [0.0, 1.0] });
        }
        let q = r.to_int_preserving_sign();
        if q.degree() == 0 {
            return None;
        }
        let zs = numeric_zeros(&q, 1e-12).ok()?;
        zs.iter()
            .find(|z| z.im > PROBE_TOL)
            .map(|z| ProbeResult::Counterexample { a: af, b: bf, root: [z.re, z.im] })
    };
    (0..trials)
        .into_par_iter()
        .map(run)
        .find_first(|r| r.is_some())
        .flatten()
        .unwrap_or(ProbeResult::NoCounterexample { trials })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cf(full: &[i64]) -> EvenCF {
        EvenCF::from_entries(full).unwrap()
    }

    fn xy(s: &str) -> BiLaurent {
        s.parse().unwrap()
    }

    #[test]
    fn g_values() {
        assert_eq!(gk(2), xy("1:1,0;1:0,1"));
        assert!(gk(0).is_zero());
        assert_eq!(gk(-1), xy("-1:-1,-1"));
        assert_eq!(gk(3).to_string(), "1:0,2;1:1,1;1:2,0");
    }

    #[test]
    fn small_links() {
        assert_eq!(alexander_xy(&cf(&[2])).unwrap(), BiLaurent::one());
        // [2, -2b, 2]: -b (x-1)(y-1) + x + y
        let d = alexander_xy(&cf(&[2, -6, 2])).unwrap();
        assert_eq!(d, xy("-3:0,0;4:1,0;4:0,1;-3:1,1"));
        assert!(multiaffine_stable(&d).unwrap());
        let d = alexander_xy(&cf(&[4, 2, -2])).unwrap().shift(1, 1);
        let e = xy("1:1,1;-1:1,0;-1:0,1");
        let f = xy("1:1,0;1:0,1;-1:0,0");
        assert_eq!(d, -&(&e * &f));
        assert_eq!(alexander_xy(&cf(&[2, 2])), Err(Error::EvenLength));
    }

    #[test]
    fn linking() {
        assert_eq!(linking_number(&cf(&[4, 2, -2])).unwrap(), 1);
        assert_eq!(linking_number(&cf(&[2])).unwrap(), 1);
        assert_eq!(linking_number(&cf(&[2, 4, -2])).unwrap(), 0);
    }

    #[test]
    fn specializations_of_a_non_inversive_link() {
        let d = alexander_xy(&cf(&[2, -2, 2, 2, -2])).unwrap();
        let q = IntPoly::from_desc(&[1, -3, 1]);
        assert_eq!(specialize(&d, Mode::Diag).unwrap(), &(&q * &q) * &IntPoly::from_desc(&[1, -1]));
        let r = &IntPoly::from_desc(&[2, -2, 1]) * &IntPoly::from_desc(&[1, -2, 2]);
        assert_eq!(specialize(&d, Mode::Reversed).unwrap(), r);
        assert!(!inversive_check(&cf(&[2, -2, 2, 2, -2])).unwrap().inversive);
        assert_eq!(specialize(&BiLaurent::zero(), Mode::Diag), Err(Error::ZeroInput));
    }

    #[test]
    fn inversive_families() {
        for (a, k) in [(1, 1), (2, 1), (1, 3), (3, 2)] {
            assert!(inversive_check(&cf(&[2 * a, 2 * k, -2 * a])).unwrap().inversive, "a={a} k={k}");
        }
        for k in 1..=4 {
            assert!(inversive_check(&cf(&[4, 2 * k, -2])).unwrap().inversive, "k={k}");
        }
    }

    #[test]
    fn multiaffine() {
        assert!(!multiaffine_stable(&xy("1:0,0;1:1,1")).unwrap());
        assert!(multiaffine_stable(&xy("1:1,0;1:0,1")).unwrap());
        assert_eq!(multiaffine_stable(&xy("1:2,0")), Err(Error::NotMultiAffine));
    }

    #[test]
    fn probes() {
        assert!(matches!(hstable_probe(&gk(3), 200, 1), ProbeResult::Counterexample { .. }));
        let d = alexander_xy(&cf(&[4, 2, -2])).unwrap();
        assert_eq!(hstable_probe(&d, 300, 1), ProbeResult::NoCounterexample { trials: 300 });
        let d = alexander_xy(&cf(&[6, 2, -4])).unwrap();
        assert!(matches!(hstable_probe(&d, 1000, 1), ProbeResult::Counterexample { .. }));
        assert_eq!(hstable_probe(&gk(2), 200, 5), hstable_probe(&gk(2), 200, 5));
    }

    #[test]
    fn json_and_text() {
        let g = gk(-2);
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, "[[-1,-2,-1],[-1,-1,-2]]");
        let back: BiLaurent = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert_eq!(g.to_string().parse::<BiLaurent>().unwrap(), g);
    }
}
