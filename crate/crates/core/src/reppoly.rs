//! Riley polynomials of 2-bridge knots and links and dihedral polynomials.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::{binomial, Integer};
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::Fraction;
use crate::polyring::IntPoly;
use crate::stability::{count_real_roots, isolate_real_roots};

/// `x^{e_1} y^{f_1} x^{e_2} ... y^{f_m} x^{e_{m+1}}`, or ending in `y` for
/// links.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParabolicWord {
    pub epsilons: Vec<i8>,
    pub etas: Vec<i8>,
}

impl ParabolicWord {
    /// Letters `i = 1..alpha-1` alternate `x` (odd `i`) and `y` (even `i`)
    /// with exponent `(-1)^{floor(i beta' / alpha)}`, `beta beta' = 1 mod alpha`.
    pub fn for_fraction(r: &Fraction) -> Result<Self> {
        let (beta, alpha) = (r.beta, r.alpha);
        if alpha < 2 || beta.gcd(&alpha) != 1 {
            return Err(Error::BadFraction(r.to_string()));
        }
        let inv = modinv(beta.rem_euclid(alpha), alpha).ok_or_else(|| Error::BadFraction(r.to_string()))?;
        let (mut epsilons, mut etas) = (Vec::new(), Vec::new());
        for i in 1..alpha {
            let e = if (i * inv).div_euclid(alpha) % 2 == 0 { 1 } else { -1 };
            if i % 2 == 1 {
                epsilons.push(e);
            } else {
                etas.push(e);
            }
        }
        Ok(ParabolicWord { epsilons, etas })
    }

    /// Palindromic exponent sequence.
    pub fn is_symmetric(&self) -> bool {
        let all = self.letters();
        all.iter().eq(all.iter().rev())
    }

    /// Exponents in reading order.
    pub fn letters(&self) -> Vec<i8> {
        let mut out = Vec::with_capacity(self.epsilons.len() + self.etas.len());
        for (k, e) in self.epsilons.iter().enumerate() {
            out.push(*e);
            if let Some(f) = self.etas.get(k) {
                out.push(*f);
            }
        }
        out
    }
}

fn modinv(a: i64, m: i64) -> Option<i64> {
    let g = num_integer::Integer::extended_gcd(&a, &m);
    (g.gcd == 1).then(|| g.x.rem_euclid(m))
}

/// 2x2 matrix over `Z[z]`.
pub type PolyMat = [[IntPoly; 2]; 2];

fn mat_mul(a: &PolyMat, b: &PolyMat) -> PolyMat {
    let e = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// `x = [[1, 1], [0, 1]]`, `y = [[1, 0], [z, 1]]` raised to `+-1`.
fn letter(is_x: bool, e: i8) -> PolyMat {
    let one = IntPoly::one();
    let zero = IntPoly::zero();
    let s = BigInt::from(e);
    if is_x {
        [[one.clone(), IntPoly::constant(s)], [zero, one]]
    } else {
        [[one.clone(), zero], [IntPoly::t().scale(&s), one]]
    }
}

/// Product of the letter matrices of the word.
pub fn word_matrix(w: &ParabolicWord) -> PolyMat {
    let mut m = [[IntPoly::one(), IntPoly::zero()], [IntPoly::zero(), IntPoly::one()]];
    for (k, e) in w.letters().into_iter().enumerate() {
        m = mat_mul(&m, &letter(k % 2 == 0, e));
    }
    m
}

fn positive_lead(p: IntPoly) -> IntPoly {
    if p.lead().is_negative() {
        -p
    } else {
        p
    }
}

/// Riley polynomial from the word: the `(1,1)` entry for knots, the `(1,2)`
/// entry for links, normalised to a positive leading coefficient. For links
/// the word is palindromic of odd length and its diagonal entries agree.
pub fn riley_theta_word(r: &Fraction) -> Result<IntPoly> {
    let w = ParabolicWord::for_fraction(r)?;
    if !w.is_symmetric() {
        return Err(Error::Invariant(format!("word for {r} is not palindromic")));
    }
    let m = word_matrix(&w);
    if r.alpha % 2 == 0 && m[0][0] != m[1][1] {
        return Err(Error::Invariant(format!("diagonal entries differ for {r}")));
    }
    let [[a, b], _] = m;
    Ok(positive_lead(if r.alpha % 2 == 1 { a } else { b }))
}

fn binom(n: i64, k: i64) -> BigInt {
    binomial(BigInt::from(n), BigInt::from(k))
}

/// `sum_{k=0}^{n} C(n+k, 2k) z^k`, the Riley polynomial of `1/(2n+1)`.
pub fn torus_knot_theta(n: usize) -> IntPoly {
    let n = n as i64;
    IntPoly::new((0..=n).map(|k| binom(n + k, 2 * k)).collect())
}

/// `sum_{j=0}^{n-1} C(n+j, 2j+1) z^j`, the Riley polynomial of `1/(2n)`.
pub fn torus_link_theta(n: usize) -> IntPoly {
    let n = n as i64;
    IntPoly::new((0..n).map(|j| binom(n + j, 2 * j + 1)).collect())
}

/// Riley polynomial of the 2-bridge knot or link `beta/alpha`.
pub fn riley_theta(r: &Fraction) -> Result<IntPoly> {
    if r.alpha < 2 || r.beta.gcd(&r.alpha) != 1 {
        return Err(Error::BadFraction(r.to_string()));
    }
    let b = r.beta.rem_euclid(r.alpha);
    if b == 1 || b == r.alpha - 1 {
        let n = (r.alpha / 2) as usize;
        return Ok(if r.alpha % 2 == 1 { torus_knot_theta(n) } else { torus_link_theta(n) });
    }
    riley_theta_word(r)
}

fn relative_residual(p: &IntPoly, z: f64) -> f64 {
    let scale: f64 = p.to_f64_vec().iter().enumerate().map(|(k, c)| c.abs() * z.abs().powi(k as i32)).sum();
    p.eval_f64(z).abs() / scale.max(f64::MIN_POSITIVE)
}

/// Zeros of the closed-form Riley polynomials of `1/(2n+1)` and `1/(2n)`.
pub fn riley_zeros(n: usize, knot: bool) -> Vec<f64> {
    if knot {
        let d = (2 * (2 * n + 1)) as f64;
        (1..=n).map(|k| -4.0 * ((2 * k - 1) as f64 * PI / d).sin().powi(2)).collect()
    } else {
        let d = (2 * n) as f64;
        (1..n).map(|k| -4.0 * (k as f64 * PI / d).sin().powi(2)).collect()
    }
}

/// Checks the closed-form zero lists of the torus knot `1/(2n+1)` and the
/// torus link `1/(2n)` to a relative residual of `1e-10`, and that they are
/// distinct and as many as the degree.
pub fn riley_zero_check(n: usize) -> bool {
    if n == 0 {
        return false;
    }
    [(torus_knot_theta(n), true), (torus_link_theta(n), false)].iter().all(|(p, knot)| {
        let zs = riley_zeros(n, *knot);
        let distinct = zs.windows(2).all(|w| (w[0] - w[1]).abs() > 1e-12);
        zs.len() == p.degree() && distinct && zs.iter().all(|&z| relative_residual(p, z) < 1e-10)
    })
}

/// `phi_p(z) = sum_{k=0}^{n} (2n+1)/(2k+1) C(n+k, 2k) z^k` for `p = 2n+1`,
/// checked to be real-rooted with zeros `2 cos(2 pi k / p) - 2` in `(-4, 0)`.
pub fn dihedral_phi(p: u64) -> Result<IntPoly> {
    if p < 3 || p.is_multiple_of(2) {
        return Err(Error::EvenP);
    }
    let n = ((p - 1) / 2) as i64;
    let mut coeffs = Vec::with_capacity(n as usize + 1);
    for k in 0..=n {
        let num = binom(n + k, 2 * k) * (2 * n + 1);
        let (q, r) = num.div_rem(&BigInt::from(2 * k + 1));
        if !r.is_zero() {
            return Err(Error::Invariant(format!("non-integral coefficient at k={k}")));
        }
        coeffs.push(q);
    }
    let phi = IntPoly::new(coeffs);
    let deg = phi.degree();
    let lo = num_rational::BigRational::from_integer(BigInt::from(-4));
    let hi = num_rational::BigRational::from_integer(BigInt::from(0));
    let inside: usize = isolate_real_roots(&phi.to_rat(), Some((lo, hi)))?.iter().map(|iv| iv.multiplicity).sum();
    if count_real_roots(&phi) != deg || inside != deg || phi.coeff(0).is_zero() {
        return Err(Error::Invariant(format!("phi_{p} is not real stable in (-4, 0)")));
    }
    let zeta = Complex64::from_polar(1.0, 2.0 * PI / p as f64);
    for k in 1..=n as i32 {
        let z = (zeta.powi(k) + zeta.powi(-k)).re - 2.0;
        if relative_residual(&phi, z) > 1e-10 {
            return Err(Error::Invariant(format!("phi_{p} does not vanish at zeta^{k}")));
        }
    }
    Ok(phi)
}
