//! The star transform `f -> f*`, which maps the zeros of a reciprocal
//! polynomial through `phi(z) = (1 - zi) / (z - i)`.
//!
//! `phi` swaps the unit circle and the real line, so stable and c-stable
//! polynomials are exchanged.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, IntMatrix};
use crate::polyring::IntPoly;

/// `phi(z) = (1 - zi) / (z - i)`.
pub fn phi_map(z: Complex64) -> Result<Complex64> {
    let i = Complex64::i();
    if z == i {
        return Err(Error::PoleAtI);
    }
    Ok((Complex64::new(1.0, 0.0) - z * i) / (z - i))
}

/// Matrices of the pipeline for half-degree `n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarPipeline {
    pub n: usize,
    /// Relates `(X_0, X_2, ...)` to the even coefficients.
    pub m: IntMatrix,
    /// Relates `(X_1, X_3, ...)` to the odd coefficients.
    pub nn: IntMatrix,
    /// `diag(1, 4^2, 4^4, ...)` sized for the even system.
    pub p: IntMatrix,
    /// `4 diag(1, 4^2, ...)` sized for the odd system.
    pub phat: IntMatrix,
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

fn diag16(size: usize, scale: i64) -> IntMatrix {
    let mut d = linalg::zeros(size, size);
    let mut v = BigInt::from(scale);
    for (k, row) in d.iter_mut().enumerate() {
        row[k] = v.clone();
        v *= 16;
    }
    d
}

/// Mirror of the identity.
pub fn reversal(size: usize) -> IntMatrix {
    let mut q = linalg::zeros(size, size);
    for i in 0..size {
        q[i][size - 1 - i] = BigInt::one();
    }
    q
}

impl StarPipeline {
    pub fn new(n: usize) -> Self {
        let ni = n as i64;
        let m_half = n / 2;
        let even_size = m_half + 1;
        let m: IntMatrix = (0..even_size as i64)
            .map(|k| (0..even_size as i64).map(|i| binom(ni - 2 * i, k - i)).collect())
            .collect();
        let nn: IntMatrix = if n.is_multiple_of(2) {
            (1..=m_half as i64)
                .map(|k| (1..=m_half as i64).map(|i| binom(ni - (2 * i - 1), k - i)).collect())
                .collect()
        } else {
            (0..=m_half as i64)
                .map(|k| (0..=m_half as i64).map(|i| binom(ni - (2 * i + 1), k - i)).collect())
                .collect()
        };
        let odd_size = nn.len();
        let (p, phat) = if n.is_multiple_of(2) {
            (diag16(even_size, 1), diag16(odd_size, 4))
        } else {
            (diag16(even_size, 1), diag16(even_size, 4))
        };
        StarPipeline { n, m, nn, p, phat }
    }
}

fn mat_mul(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, |r| r.len()));
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).fold(BigInt::zero(), |acc, l| acc + &a[i][l] * &b[l][j]))
                .collect()
        })
        .collect()
}

fn mat_vec(a: &IntMatrix, v: &[BigInt]) -> Vec<BigInt> {
    a.iter()
        .map(|r| r.iter().zip(v).fold(BigInt::zero(), |acc, (x, y)| acc + x * y))
        .collect()
}

/// Solve a unimodular lower-triangular system exactly.
fn solve_int(a: &IntMatrix, b: &[BigInt]) -> Vec<BigInt> {
    let ra = linalg::to_rat(a);
    let rb: Vec<BigRational> = b.iter().map(|x| BigRational::from_integer(x.clone())).collect();
    linalg::solve(&ra, &rb)
        .expect("unimodular")
        .into_iter()
        .map(|x| {
            assert!(x.is_integer());
            x.to_integer()
        })
        .collect()
}

/// Exact test for `f(i) = 0` using the even and odd parts of `f`.
pub fn vanishes_at_i(f: &IntPoly) -> bool {
    let (mut re, mut im) = (BigInt::zero(), BigInt::zero());
    for (k, c) in f.coeffs().iter().enumerate() {
        let s = if (k / 2) % 2 == 0 { 1 } else { -1 };
        if k % 2 == 0 {
            re += c * s;
        } else {
            im += c * s;
        }
    }
    re.is_zero() && im.is_zero()
}

fn check_input(f: &IntPoly) -> Result<usize> {
    if f.is_zero() || f.coeff(0).is_zero() || vanishes_at_i(f) {
        return Err(Error::RootAtZeroOrI);
    }
    if f.degree() % 2 == 1 || !f.is_palindromic() {
        return Err(Error::NotReciprocal);
    }
    Ok(f.degree() / 2)
}

/// `f*` exactly as the pipeline produces it, sign included.
pub fn star_transform_raw(f: &IntPoly) -> Result<IntPoly> {
    let n = check_input(f)?;
    if n == 0 {
        return Ok(f.clone());
    }
    let pl = StarPipeline::new(n);
    // c_j is the coefficient of t^{2n-j}
    let c = |j: usize| f.coeff(2 * n - j);
    let m_half = n / 2;
    let mut a = vec![BigInt::zero(); n + 1];
    if n % 2 == 0 {
        let ce: Vec<BigInt> = (0..=m_half).map(|k| c(2 * k)).collect();
        let co: Vec<BigInt> = (1..=m_half).map(|k| c(2 * k - 1)).collect();
        let q1 = reversal(m_half + 1);
        let q0 = reversal(m_half);
        let ae = mat_vec(&mat_mul(&mat_mul(&pl.m, &pl.p), &q1), &solve_int(&pl.m, &ce));
        let ao = if m_half > 0 {
            mat_vec(&mat_mul(&mat_mul(&pl.nn, &pl.phat), &q0), &solve_int(&pl.nn, &co))
        } else {
            vec![]
        };
        for (k, v) in ae.into_iter().enumerate() {
            a[2 * k] = v;
        }
        for (k, v) in ao.into_iter().enumerate() {
            a[2 * k + 1] = v;
        }
    } else {
        let ce: Vec<BigInt> = (0..=m_half).map(|k| c(2 * k)).collect();
        let co: Vec<BigInt> = (0..=m_half).map(|k| c(2 * k + 1)).collect();
        let q = reversal(m_half + 1);
        let ae = mat_vec(&mat_mul(&mat_mul(&pl.m, &pl.p), &q), &solve_int(&pl.nn, &co));
        let ao = mat_vec(&mat_mul(&mat_mul(&pl.nn, &pl.phat), &q), &solve_int(&pl.m, &ce));
        for (k, v) in ae.into_iter().enumerate() {
            a[2 * k] = -v;
        }
        for (k, v) in ao.into_iter().enumerate() {
            if 2 * k < n {
                a[2 * k + 1] = -v;
            }
        }
    }
    // a_j multiplies t^{2n-j}; the upper half mirrors the lower
    let mut coeffs = vec![BigInt::zero(); 2 * n + 1];
    for j in 0..=n {
        coeffs[2 * n - j] = a[j].clone();
        coeffs[j] = a[j].clone();
    }
    Ok(IntPoly::new(coeffs))
}

/// `f*` normalised to a positive leading coefficient.
pub fn star_transform(f: &IntPoly) -> Result<IntPoly> {
    let s = star_transform_raw(f)?;
    Ok(if s.lead().is_negative() { -s } else { s })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::modification;

    fn d(c: &[i64]) -> IntPoly {
        IntPoly::from_desc(c)
    }

    /// `(-1)^n sum F_k (4t)^k (t^2+1)^{n-k}` with `F` the modification.
    fn oracle(f: &IntPoly) -> IntPoly {
        let big_f = modification(f).unwrap();
        let n = f.degree() / 2;
        let mut acc = IntPoly::zero();
        for (k, fk) in big_f.coeffs().iter().enumerate() {
            let term = &IntPoly::monomial(BigInt::from(4).pow(k as u32), k) * &d(&[1, 0, 1]).pow((n - k) as u32);
            acc = &acc + &term.scale(fk);
        }
        if n % 2 == 1 {
            -acc
        } else {
            acc
        }
    }

    #[test]
    fn phi_points() {
        assert!((phi_map(Complex64::new(1.0, 0.0)).unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-15);
        assert!((phi_map(Complex64::new(0.0, 0.0)).unwrap() - Complex64::i()).norm() < 1e-15);
        assert!(phi_map(-Complex64::i()).unwrap().norm() < 1e-15);
        assert_eq!(phi_map(Complex64::i()), Err(Error::PoleAtI));
    }

    #[test]
    fn small_pipelines() {
        let p = StarPipeline::new(3);
        assert_eq!(p.m, linalg::from_i64(&[&[1, 0], &[3, 1]]));
        assert_eq!(p.nn, linalg::from_i64(&[&[1, 0], &[2, 1]]));
        let p = StarPipeline::new(4);
        assert_eq!(p.m, linalg::from_i64(&[&[1, 0, 0], &[4, 1, 0], &[6, 2, 1]]));
        assert_eq!(p.nn, linalg::from_i64(&[&[1, 0], &[3, 1]]));
    }

    #[test]
    fn worked_vectors() {
        assert_eq!(star_transform_raw(&d(&[1, -3, 1])).unwrap(), d(&[3, -4, 3]));
        assert_eq!(star_transform_raw(&d(&[1, -1, 1, -1, 1])).unwrap(), -d(&[1, 4, -14, 4, 1]));
        assert_eq!(
            star_transform_raw(&d(&[1, -1, 0, 1, 0, -1, 1])).unwrap(),
            -d(&[3, -12, -7, 40, -7, -12, 3])
        );
        assert_eq!(
            star_transform(&d(&[1, -1, 1, -1, 1, -1, 1, -1, 1])).unwrap(),
            d(&[1, 8, -44, -40, 166, -40, -44, 8, 1])
        );
    }

    #[test]
    fn agrees_with_closed_form() {
        for f in [d(&[1, -3, 1]), d(&[2, -5, 2]), d(&[1, -7, 13, -7, 1]), d(&[1, -1, 0, 1, 0, -1, 1])] {
            assert_eq!(star_transform_raw(&f).unwrap(), oracle(&f));
        }
    }

    #[test]
    fn input_checks() {
        assert_eq!(star_transform(&d(&[1, 0, 1])), Err(Error::RootAtZeroOrI));
        assert_eq!(star_transform(&d(&[1, -2, 1, 1])), Err(Error::NotReciprocal));
        assert_eq!(star_transform(&d(&[1, 2])), Err(Error::NotReciprocal));
    }
}
