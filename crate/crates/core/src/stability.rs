//! Zero-distribution classification: exact real root isolation by Sturm
//! sequences, the five stability classes, Routh-Hurwitz minors, Lyapunov
//! certificates, the Hoste bounds and a numeric root finder for plots.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, RatMatrix};
use crate::polyring::{modification, IntPoly, RatPoly};

pub const DEFAULT_TOL: f64 = 1e-12;
pub const DEFAULT_BUCKET: f64 = 1e-8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl IsolatingInterval {
    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn mid_f64(&self) -> f64 {
        let m = (&self.lo + &self.hi) / BigRational::from_integer(2.into());
        m.to_f64().unwrap_or(f64::NAN)
    }
}

/// Square-free decomposition `p = c * prod f_i^i` (Yun). Factors are
/// primitive with positive leading coefficient; constants are dropped.
pub fn squarefree_decomposition(p: &IntPoly) -> Vec<(IntPoly, usize)> {
    if p.is_zero() || p.degree() == 0 {
        return vec![];
    }
    // Yun's algorithm; every division is exact over Z by Gauss's lemma
    let div = |a: &IntPoly, b: &IntPoly| a.div_exact(b).expect("exact division");
    let f = p.primitive();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = div(&f, &a0);
    let c = div(&df, &a0);
    let mut d = &c - &b.derivative();
    let mut out = Vec::new();
    let mut i = 1;
    while b.degree() > 0 {
        let a = b.gcd(&d);
        b = div(&b, &a);
        let c = div(&d, &a);
        d = &c - &b.derivative();
        if a.degree() > 0 {
            out.push((a, i));
        }
        i += 1;
    }
    out
}

/// Sturm sequence of a square-free polynomial; each entry is an integer
/// polynomial that differs from the true remainder by a positive factor.
fn sturm_chain(p: &IntPoly) -> Vec<IntPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            break;
        }
        if chain[n - 1].degree() == 0 {
            break;
        }
        let (r, sign) = chain[n - 2].prem(&chain[n - 1]);
        if r.is_zero() {
            break;
        }
        // -rem up to a positive factor
        let r = r.primitive();
        chain.push(if sign > 0 { -r } else { r });
    }
    chain
}

fn sign_changes(signs: impl Iterator<Item = i32>) -> usize {
    let mut last = 0;
    let mut n = 0;
    for s in signs {
        if s != 0 {
            if last != 0 && s != last {
                n += 1;
            }
            last = s;
        }
    }
    n
}

fn variations_at(chain: &[IntPoly], x: &BigRational) -> usize {
    sign_changes(chain.iter().map(|q| q.sign_at(x)))
}

fn lead_sign(q: &IntPoly) -> i32 {
    if q.lead().is_negative() {
        -1
    } else {
        1
    }
}

fn variations_at_inf(chain: &[IntPoly], positive: bool) -> usize {
    sign_changes(chain.iter().map(|q| {
        let s = lead_sign(q);
        if positive || q.degree() % 2 == 0 {
            s
        } else {
            -s
        }
    }))
}

/// Cauchy bound: every root satisfies `|x| < 1 + max |c_i / c_n|`.
fn root_bound(p: &IntPoly) -> BigRational {
    let lead = p.lead().abs();
    let m = p.coeffs().iter().map(|c| c.abs()).max().unwrap_or_default();
    BigRational::new(m, lead) + BigRational::one()
}

fn half() -> BigRational {
    BigRational::new(1.into(), 2.into())
}

/// Number of distinct roots of a square-free `p` in `(a, b]`.
fn count_in(chain: &[IntPoly], a: &BigRational, b: &BigRational) -> usize {
    variations_at(chain, a).saturating_sub(variations_at(chain, b))
}

/// Isolate the roots of a square-free polynomial in `(lo, hi]`.
fn isolate_squarefree(p: &IntPoly, lo: &BigRational, hi: &BigRational, width: &BigRational) -> Vec<(BigRational, BigRational)> {
    let chain = sturm_chain(p);
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), hi.clone())];
    while let Some((a, b)) = stack.pop() {
        let n = count_in(&chain, &a, &b);
        if n == 0 {
            continue;
        }
        if p.sign_at(&b) == 0 && n == 1 {
            out.push((b.clone(), b));
            continue;
        }
        if n == 1 {
            out.push(refine(p, a, b, width));
            continue;
        }
        let m = (&a + &b) * half();
        stack.push((m.clone(), b));
        stack.push((a, m));
    }
    out.sort();
    out
}

/// Bisect an interval `(a, b]` holding exactly one root of a square-free `p`.
pub(crate) fn refine(p: &IntPoly, mut a: BigRational, mut b: BigRational, width: &BigRational) -> (BigRational, BigRational) {
    if p.sign_at(&b) == 0 {
        return (b.clone(), b);
    }
    let sb = p.sign_at(&b);
    while &(&b - &a) >= width {
        let m = (&a + &b) * half();
        let sm = p.sign_at(&m);
        if sm == 0 {
            return (m.clone(), m);
        }
        if sm == sb {
            b = m;
        } else {
            a = m;
        }
    }
    (a, b)
}

pub(crate) fn default_width() -> BigRational {
    BigRational::new(1.into(), BigInt::from(1u64 << 40))
}

/// Real roots with multiplicity, as sorted disjoint isolating intervals of
/// width below `2^-40` (or exact). `range` restricts to `(lo, hi]`.
pub fn isolate_real_roots(p: &RatPoly, range: Option<(BigRational, BigRational)>) -> Result<Vec<IsolatingInterval>> {
    isolate_real_roots_to(p, range, &default_width())
}

/// As [`isolate_real_roots`], refining each interval below `width`.
pub fn isolate_real_roots_to(
    p: &RatPoly,
    range: Option<(BigRational, BigRational)>,
    width: &BigRational,
) -> Result<Vec<IsolatingInterval>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let ip = p.to_int_preserving_sign();
    let mut all: Vec<(usize, IntPoly, BigRational, BigRational)> = Vec::new();
    for (f, mult) in squarefree_decomposition(&ip) {
        let (lo, hi) = match &range {
            Some(r) => r.clone(),
            None => {
                let b = root_bound(&f);
                (-b.clone(), b)
            }
        };
        for (a, b) in isolate_squarefree(&f, &lo, &hi, width) {
            all.push((mult, f.clone(), a, b));
        }
    }
    // roots of different factors are distinct; shrink until disjoint
    loop {
        all.sort_by(|x, y| x.2.cmp(&y.2).then(x.3.cmp(&y.3)));
        let clash = (1..all.len()).find(|&i| all[i].2 <= all[i - 1].3);
        match clash {
            None => break,
            Some(i) => {
                for j in [i - 1, i] {
                    let (_, f, a, b) = &all[j];
                    if a != b {
                        let w = (b - a) * half();
                        let (na, nb) = refine(f, a.clone(), b.clone(), &w);
                        all[j].2 = na;
                        all[j].3 = nb;
                    }
                }
            }
        }
    }
    Ok(all
        .into_iter()
        .map(|(multiplicity, _, lo, hi)| IsolatingInterval { lo, hi, multiplicity })
        .collect())
}

/// Number of real roots, with multiplicity.
pub fn count_real_roots(p: &IntPoly) -> usize {
    squarefree_decomposition(p)
        .iter()
        .map(|(f, m)| {
            let chain = sturm_chain(f);
            m * variations_at_inf(&chain, false).saturating_sub(variations_at_inf(&chain, true))
        })
        .sum()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    Stable,
    CStable,
    StrictlyBiStable,
    TotallyUnstable,
    Mixed,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Stable => "Stable",
            Verdict::CStable => "CStable",
            Verdict::StrictlyBiStable => "StrictlyBiStable",
            Verdict::TotallyUnstable => "TotallyUnstable",
            Verdict::Mixed => "Mixed",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StabilityReport {
    pub verdict: Verdict,
    pub n_real: usize,
    pub n_unit: usize,
    pub n_other: usize,
    pub delta_max_lo: Option<f64>,
    pub delta_max_hi: Option<f64>,
    pub zeros: Vec<[f64; 2]>,
    /// False when the unit-circle count came from the numeric fallback.
    #[serde(skip)]
    pub certified: bool,
    /// Zeros at `t = 1` or `t = -1`, already included in `n_unit`.
    #[serde(skip)]
    pub n_pm1: usize,
    #[serde(skip)]
    pub delta_max: Option<IsolatingInterval>,
}

impl StabilityReport {
    pub fn degree(&self) -> usize {
        self.n_real + self.n_unit + self.n_other
    }

    /// Every zero is real, counting `t = ±1` as real.
    pub fn all_real(&self) -> bool {
        self.n_real + self.n_pm1 == self.degree()
    }

    /// Every zero lies on the unit circle.
    pub fn all_unit(&self) -> bool {
        self.n_unit == self.degree()
    }

    /// Attach numeric zeros for reporting.
    pub fn with_zeros(mut self, p: &IntPoly, tol: f64, seed: u64) -> Result<Self> {
        self.zeros = numeric_zeros_seeded(p, tol, seed)?.iter().map(|z| [z.re, z.im]).collect();
        Ok(self)
    }
}

pub fn verdict_of(n_real: usize, n_unit: usize, n_other: usize) -> Verdict {
    let deg = n_real + n_unit + n_other;
    if n_real == deg {
        Verdict::Stable
    } else if n_unit == deg {
        Verdict::CStable
    } else if n_other == 0 && n_real > 0 && n_unit > 0 {
        Verdict::StrictlyBiStable
    } else if n_real == 0 && n_unit == 0 {
        Verdict::TotallyUnstable
    } else {
        Verdict::Mixed
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// Counts of the roots of a reciprocal `q` through its modification:
/// returns `(real, unit, at_pm1)`.
fn reciprocal_counts(q: &IntPoly) -> Result<(usize, usize, usize)> {
    let f = modification(q)?;
    let (two, mtwo) = (rat(2), rat(-2));
    let (mut real, mut unit, mut pm1) = (0, 0, 0);
    for (s, mult) in squarefree_decomposition(&f) {
        let chain = sturm_chain(&s);
        let v_minf = variations_at_inf(&chain, false);
        let v_pinf = variations_at_inf(&chain, true);
        let v_m2 = variations_at(&chain, &mtwo);
        let v_2 = variations_at(&chain, &two);
        let at_m2 = usize::from(s.sign_at(&mtwo) == 0);
        let at_2 = usize::from(s.sign_at(&two) == 0);
        // (a, b] counts
        let below = v_minf - v_m2 - at_m2;
        let inside = v_m2 - v_2 - at_2;
        let above = v_2 - v_pinf;
        real += 2 * mult * (below + above);
        unit += 2 * mult * (inside + at_2 + at_m2);
        pm1 += 2 * mult * (at_2 + at_m2);
    }
    Ok((real, unit, pm1))
}

/// Classify the zeros of `p` into real, unit-circle and other.
///
/// Factors `t` count as other and factors `t - 1` as unit. A reciprocal
/// remainder is handled exactly through its modification; otherwise the real
/// count stays exact and the unit count is numeric (`certified = false`).
pub fn classify(p: &IntPoly) -> Result<StabilityReport> {
    classify_with(p, DEFAULT_TOL, DEFAULT_BUCKET)
}

pub fn classify_with(p: &IntPoly, tol: f64, bucket: f64) -> Result<StabilityReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let v = p.t_valuation();
    let mut n_other = v;
    let q = p.shift_down(v);
    let (q, k1) = q.strip_factor(&IntPoly::from_i64(&[-1, 1]));
    let mut n_unit = k1;
    let mut n_pm1 = k1;
    let mut n_real = 0;
    let mut certified = true;
    let (q, km1) = if q.is_palindromic() && q.degree() % 2 == 1 {
        q.strip_factor(&IntPoly::from_i64(&[1, 1]))
    } else {
        (q, 0)
    };
    n_unit += km1;
    n_pm1 += km1;
    if q.degree() > 0 {
        if q.is_palindromic() && q.degree() % 2 == 0 {
            let (r, u, pm) = reciprocal_counts(&q)?;
            n_real += r;
            n_unit += u;
            n_pm1 += pm;
            n_other += q.degree() - r - u;
        } else {
            certified = false;
            let (q, km1) = q.strip_factor(&IntPoly::from_i64(&[1, 1]));
            n_unit += km1;
            n_pm1 += km1;
            let real = count_real_roots(&q);
            n_real += real;
            let zs = numeric_zeros_seeded(&q, tol, 0)?;
            let mut nonreal: Vec<&Complex64> = zs.iter().collect();
            nonreal.sort_by(|a, b| a.im.abs().partial_cmp(&b.im.abs()).unwrap());
            // the `real` zeros with smallest |Im| are the real ones
            for z in nonreal.into_iter().skip(real) {
                if (z.norm() - 1.0).abs() < bucket {
                    n_unit += 1;
                } else {
                    n_other += 1;
                }
            }
        }
    }
    let delta_max = largest_real_zero(p)?;
    let (lo, hi) = match &delta_max {
        Some(iv) => (iv.lo.to_f64(), iv.hi.to_f64()),
        None => (None, None),
    };
    Ok(StabilityReport {
        verdict: verdict_of(n_real, n_unit, n_other),
        n_real,
        n_unit,
        n_other,
        delta_max_lo: lo,
        delta_max_hi: hi,
        zeros: vec![],
        certified,
        n_pm1,
        delta_max,
    })
}

/// Certified interval around the largest real zero.
pub fn largest_real_zero(p: &IntPoly) -> Result<Option<IsolatingInterval>> {
    if p.degree() == 0 {
        return Ok(None);
    }
    Ok(isolate_real_roots(&p.to_rat(), None)?.pop())
}

/// Largest absolute value of a real zero, from certified intervals.
pub fn max_abs_real_zero(p: &IntPoly) -> Result<Option<f64>> {
    let roots = isolate_real_roots(&p.to_rat(), None)?;
    Ok(roots
        .iter()
        .map(|iv| iv.mid_f64().abs())
        .fold(None, |acc: Option<f64>, x| Some(acc.map_or(x, |a| a.max(x)))))
}

/// The Hurwitz matrix: entry `(i, j)` (1-based) is `a_{2i-j}` where `a_0` is
/// the leading coefficient.
pub fn hurwitz_matrix(p: &IntPoly) -> Vec<Vec<BigInt>> {
    let n = p.degree();
    let a = |k: i64| -> BigInt {
        if k < 0 || k > n as i64 {
            BigInt::zero()
        } else {
            p.coeff(n - k as usize)
        }
    };
    (1..=n as i64)
        .map(|i| (1..=n as i64).map(|j| a(2 * i - j)).collect())
        .collect()
}

/// Routh-Hurwitz test: every leading minor of the Hurwitz matrix is positive,
/// i.e. every zero has negative real part.
pub fn s_hurwitz(p: &IntPoly) -> Result<(bool, Vec<BigInt>)> {
    if p.is_zero() || !p.lead().is_positive() {
        return Err(Error::NonPositiveLeading);
    }
    let minors = linalg::leading_minors(&hurwitz_matrix(p));
    let ok = minors.iter().all(|m| m.is_positive());
    Ok((ok, minors))
}

/// Companion matrix of a monic polynomial: ones below the diagonal and the
/// negated coefficients in the last column.
pub fn companion(p: &IntPoly) -> RatMatrix {
    let n = p.degree();
    let lead = BigRational::from_integer(p.lead());
    let mut m = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        if i > 0 {
            m[i][i - 1] = BigRational::one();
        }
        m[i][n - 1] = -BigRational::from_integer(p.coeff(i)) / &lead;
    }
    m
}

/// Solve `V M + M^T V = -I` for symmetric `V`, `M` the companion matrix.
/// Returns `V` when it is positive definite.
pub fn lyapunov_certificate(p: &IntPoly) -> Result<Option<RatMatrix>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = p.degree();
    if n == 0 {
        return Err(Error::BadDimensions("degree must be at least 1".into()));
    }
    let m = companion(p);
    let idx = |i: usize, j: usize| {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        a * n - a * (a + 1) / 2 + b
    };
    let nu = n * (n + 1) / 2;
    let mut a = vec![vec![BigRational::zero(); nu]; nu];
    let mut rhs = vec![BigRational::zero(); nu];
    for i in 0..n {
        for j in i..n {
            let row = idx(i, j);
            // (VM)_{ij} + (M^T V)_{ij} = sum_k V_ik M_kj + M_ki V_kj
            for k in 0..n {
                if !m[k][j].is_zero() {
                    a[row][idx(i, k)] += &m[k][j];
                }
                if !m[k][i].is_zero() {
                    a[row][idx(k, j)] += &m[k][i];
                }
            }
            if i == j {
                rhs[row] = -BigRational::one();
            }
        }
    }
    let x = linalg::solve(&a, &rhs).ok_or(Error::SingularSystem)?;
    let v: RatMatrix = (0..n).map(|i| (0..n).map(|j| x[idx(i, j)].clone()).collect()).collect();
    let pd = (1..=n).all(|k| {
        let block: RatMatrix = v.iter().take(k).map(|r| r[..k].to_vec()).collect();
        rat_det(&block).is_positive()
    });
    Ok(pd.then_some(v))
}

fn rat_det(a: &RatMatrix) -> BigRational {
    let n = a.len();
    let mut m = a.clone();
    let mut d = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !m[i][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            d = -d;
        }
        d *= &m[k][k];
        for i in k + 1..n {
            let f = &m[i][k] / &m[k][k];
            for j in k..n {
                let v = &f * &m[k][j];
                m[i][j] -= v;
            }
        }
    }
    d
}

fn positive_lead(q: IntPoly) -> IntPoly {
    if q.lead().is_negative() {
        -q
    } else {
        q
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct HosteReport {
    /// Every zero has real part greater than `-1`.
    pub hoste_ok: bool,
    /// Every zero has real part in `(-3, 6)`.
    pub bridge_bounds_ok: bool,
    pub delta_max_lo: Option<f64>,
    pub delta_max_hi: Option<f64>,
    /// Largest real part over all zeros (numeric).
    pub max_re: f64,
}

pub fn hurwitz_shifted(p: &IntPoly, a: i64, b: i64) -> bool {
    let q = positive_lead(p.compose_linear(&BigInt::from(a), &BigInt::from(b)));
    q.degree() == 0 || s_hurwitz(&q).map(|r| r.0).unwrap_or(false)
}

/// `Re(z) > -1` for all zeros.
pub fn hoste_ok(p: &IntPoly) -> bool {
    hurwitz_shifted(p, -1, -1)
}

/// `-3 < Re(z) < 6` for all zeros.
pub fn bridge_bounds_ok(p: &IntPoly) -> bool {
    hurwitz_shifted(p, -1, -3) && hurwitz_shifted(p, 1, 6)
}

pub fn hoste_report(p: &IntPoly) -> Result<HosteReport> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let dm = largest_real_zero(p)?;
    let max_re = numeric_zeros(p, DEFAULT_TOL)?
        .iter()
        .map(|z| z.re)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(HosteReport {
        hoste_ok: hoste_ok(p),
        bridge_bounds_ok: bridge_bounds_ok(p),
        delta_max_lo: dm.as_ref().and_then(|iv| iv.lo.to_f64()),
        delta_max_hi: dm.as_ref().and_then(|iv| iv.hi.to_f64()),
        max_re,
    })
}

/// All complex zeros with multiplicity (seed 0).
pub fn numeric_zeros(p: &IntPoly, tol: f64) -> Result<Vec<Complex64>> {
    numeric_zeros_seeded(p, tol, 0)
}

/// All complex zeros with multiplicity: Aberth-Ehrlich iteration on each
/// square-free factor, stopped when every backward error
/// `|q(z)| / sum |c_i| |z|^i` is below `tol`. Output sorted by (re, im).
pub fn numeric_zeros_seeded(p: &IntPoly, tol: f64, seed: u64) -> Result<Vec<Complex64>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !(tol > 0.0) {
        return Err(Error::Invariant("tolerance must be positive".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (f, mult) in squarefree_decomposition(p) {
        let zs = aberth(&f.to_f64_vec(), tol, &mut rng)?;
        for z in zs {
            for _ in 0..mult {
                out.push(z);
            }
        }
    }
    out.sort_by(|a, b| a.re.partial_cmp(&b.re).unwrap().then(a.im.partial_cmp(&b.im).unwrap()));
    Ok(out)
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn backward_error(c: &[f64], z: Complex64) -> f64 {
    let r = z.norm();
    let scale = c.iter().rev().fold(0.0, |acc, a| acc * r + a.abs());
    horner(c, z).0.norm() / scale
}

fn aberth(c: &[f64], tol: f64, rng: &mut ChaCha8Rng) -> Result<Vec<Complex64>> {
    let n = c.len() - 1;
    if n == 1 {
        return Ok(vec![Complex64::new(-c[0] / c[1], 0.0)]);
    }
    // initial guesses on a circle sized from the coefficient magnitudes
    let lead = c[n].abs();
    let radius = (0..n)
        .map(|i| (c[i].abs() / lead).powf(1.0 / (n - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3);
    let offset: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, offset + std::f64::consts::TAU * k as f64 / n as f64 + 0.4))
        .collect();
    let max_iter = 2000;
    let mut worst = f64::INFINITY;
    for _ in 0..max_iter {
        let mut done = true;
        for i in 0..n {
            let (pv, dv) = horner(c, z[i]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dv;
            let s: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let w = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if w.is_finite() {
                z[i] -= w;
            }
            if w.norm() > 1e-15 * z[i].norm().max(1.0) {
                done = false;
            }
        }
        worst = z.iter().map(|&zi| backward_error(c, zi)).fold(0.0, f64::max);
        if done || worst < tol * 1e-3 {
            break;
        }
    }
    if worst < tol {
        Ok(z)
    } else {
        Err(Error::ConvergenceFailure { residual: worst })
    }
}
