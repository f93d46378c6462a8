//! Exact dense linear algebra over `Z` and `Q`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type IntMatrix = Vec<Vec<BigInt>>;
pub type RatMatrix = Vec<Vec<BigRational>>;

pub fn from_i64(rows: &[&[i64]]) -> IntMatrix {
    rows.iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect()
}

pub fn zeros(n: usize, m: usize) -> IntMatrix {
    vec![vec![BigInt::zero(); m]; n]
}

pub fn transpose(a: &IntMatrix) -> IntMatrix {
    if a.is_empty() {
        return vec![];
    }
    (0..a[0].len())
        .map(|j| a.iter().map(|r| r[j].clone()).collect())
        .collect()
}

pub fn is_square(a: &IntMatrix) -> bool {
    a.iter().all(|r| r.len() == a.len())
}

pub fn is_symmetric(a: &IntMatrix) -> bool {
    is_square(a) && (0..a.len()).all(|i| (0..i).all(|j| a[i][j] == a[j][i]))
}

/// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
/// The empty matrix has determinant 1.
pub fn det(a: &IntMatrix) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = 1i32;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}

/// Delete row `r` and column `c`.
pub fn minor_matrix(a: &IntMatrix, r: usize, c: usize) -> IntMatrix {
    a.iter()
        .enumerate()
        .filter(|(i, _)| *i != r)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != c)
                .map(|(_, x)| x.clone())
                .collect()
        })
        .collect()
}

pub fn leading_block(a: &IntMatrix, k: usize) -> IntMatrix {
    a.iter().take(k).map(|r| r[..k].to_vec()).collect()
}

/// Leading principal minors `det A[..k, ..k]` for `k = 1..=n`.
pub fn leading_minors(a: &IntMatrix) -> Vec<BigInt> {
    (1..=a.len()).map(|k| det(&leading_block(a, k))).collect()
}

pub fn to_rat(a: &IntMatrix) -> RatMatrix {
    a.iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect()
}

/// Solve `A x = b` over `Q`. Returns `None` when `A` is singular.
pub fn solve(a: &RatMatrix, b: &[BigRational]) -> Option<Vec<BigRational>> {
    let n = a.len();
    let mut m: RatMatrix = a
        .iter()
        .zip(b)
        .map(|(r, bi)| {
            let mut row = r.clone();
            row.push(bi.clone());
            row
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !m[i][k].is_zero())?;
        m.swap(k, p);
        let inv = m[k][k].recip();
        for j in k..=n {
            m[k][j] = &m[k][j] * &inv;
        }
        for i in 0..n {
            if i != k && !m[i][k].is_zero() {
                let f = m[i][k].clone();
                for j in k..=n {
                    let v = &m[k][j] * &f;
                    m[i][j] -= v;
                }
            }
        }
    }
    Some(m.into_iter().map(|mut r| r.pop().unwrap()).collect())
}

/// Signature of a symmetric rational matrix by congruence diagonalisation.
///
/// A zero pivot with a nonzero off-diagonal entry `s_ij` is repaired by the
/// congruence `row_i += row_j, col_i += col_j`, which puts `2 s_ij` on the
/// diagonal. Rows that are entirely zero form the radical.
pub fn signature_rat(s: &RatMatrix) -> i64 {
    let mut m = s.clone();
    let mut alive: Vec<usize> = (0..m.len()).collect();
    let mut sig = 0i64;
    while !alive.is_empty() {
        let piv = alive.iter().copied().find(|&i| !m[i][i].is_zero());
        let p = match piv {
            Some(p) => p,
            None => {
                let pair = alive.iter().copied().find_map(|i| {
                    alive
                        .iter()
                        .copied()
                        .find(|&j| j != i && !m[i][j].is_zero())
                        .map(|j| (i, j))
                });
                match pair {
                    Some((i, j)) => {
                        for &k in &alive {
                            let v = m[j][k].clone();
                            m[i][k] += v;
                        }
                        for &k in &alive {
                            let v = m[k][j].clone();
                            m[k][i] += v;
                        }
                        i
                    }
                    None => break,
                }
            }
        };
        let d = m[p][p].clone();
        sig += if d.is_positive() { 1 } else { -1 };
        alive.retain(|&i| i != p);
        for &i in &alive {
            if m[i][p].is_zero() {
                continue;
            }
            let f = &m[i][p] / &d;
            for &j in &alive {
                let v = &f * &m[p][j];
                m[i][j] -= v;
            }
        }
    }
    sig
}

pub fn signature(s: &IntMatrix) -> i64 {
    signature_rat(&to_rat(s))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cofactor_det(a: &IntMatrix) -> BigInt {
        if a.is_empty() {
            return BigInt::one();
        }
        (0..a.len())
            .map(|j| {
                let s = if j % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                s * &a[0][j] * cofactor_det(&minor_matrix(a, 0, j))
            })
            .fold(BigInt::zero(), |x, y| x + y)
    }

    #[test]
    fn bareiss_matches_cofactor() {
        let a = from_i64(&[&[0, 2, -1, 3], &[1, 0, 4, 2], &[-3, 5, 0, 1], &[2, 2, 2, 0]]);
        assert_eq!(det(&a), cofactor_det(&a));
        assert_eq!(det(&vec![]), BigInt::one());
        let sing = from_i64(&[&[1, 2], &[2, 4]]);
        assert!(det(&sing).is_zero());
    }

    #[test]
    fn signatures() {
        assert_eq!(signature(&from_i64(&[&[2, 1], &[1, 2]])), 2);
        assert_eq!(signature(&from_i64(&[&[2, 1], &[1, -2]])), 0);
        assert_eq!(signature(&from_i64(&[&[0, 1], &[1, 0]])), 0);
        assert_eq!(signature(&from_i64(&[&[0, 0], &[0, -3]])), -1);
        assert_eq!(signature(&from_i64(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]])), 1);
    }

    #[test]
    fn solve_small() {
        let a = to_rat(&from_i64(&[&[2, 1], &[1, 3]]));
        let b = vec![BigRational::from_integer(3.into()), BigRational::from_integer(5.into())];
        let x = solve(&a, &b).unwrap();
        assert_eq!(x[0], BigRational::new(4.into(), 5.into()));
        assert_eq!(x[1], BigRational::new(7.into(), 5.into()));
    }
}
