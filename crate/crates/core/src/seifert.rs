//! Seifert matrices of the families studied here, the Alexander polynomial
//! `det(tM - M^T)`, signatures and positivity tests.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::EvenCF;
use crate::linalg::{self, IntMatrix};
use crate::polyring::{interpolate_integer_points, IntPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    Standard,
    TwistedChain,
    Split,
    Montesinos,
    User,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeifertMatrix {
    pub entries: IntMatrix,
    pub form: Form,
}

impl SeifertMatrix {
    pub fn new(entries: IntMatrix, form: Form) -> Result<Self> {
        if entries.is_empty() || !linalg::is_square(&entries) {
            return Err(Error::DimensionMismatch("Seifert matrix must be square and nonempty".into()));
        }
        Ok(SeifertMatrix { entries, form })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Result<Self> {
        Self::new(linalg::from_i64(rows), Form::User)
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// `M + M^T`.
    pub fn symmetrized(&self) -> IntMatrix {
        let n = self.size();
        (0..n)
            .map(|i| (0..n).map(|j| &self.entries[i][j] + &self.entries[j][i]).collect())
            .collect()
    }

    /// Delete the first row and column.
    pub fn without_first(&self) -> IntMatrix {
        linalg::minor_matrix(&self.entries, 0, 0)
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl FromStr for SeifertMatrix {
    type Err = Error;

    /// Rows separated by `;`, entries by `,`: `"1,1;0,-1"`.
    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut pos = 0;
        for row in s.split(';') {
            let mut r = Vec::new();
            for tok in row.split(',') {
                let t = tok.trim();
                let v = BigInt::from_str(t).map_err(|_| Error::Parse {
                    pos,
                    msg: format!("expected integer, found {t:?}"),
                })?;
                r.push(v);
                pos += tok.len() + 1;
            }
            rows.push(r);
        }
        if !linalg::is_square(&rows) {
            return Err(Error::Parse { pos: 0, msg: "matrix is not square".into() });
        }
        SeifertMatrix::new(rows, Form::User)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CfForm {
    Standard,
    TwistedChain,
}

/// Seifert matrix of the 2-bridge knot or link with even continued fraction `cf`.
///
/// The twisted chain form has the half-entries on the diagonal and 1 on the
/// superdiagonal. The standard form keeps the diagonal and places `-1` below
/// and `1` above the diagonal on every even row.
pub fn seifert_2bridge(cf: &EvenCF, form: CfForm) -> Result<SeifertMatrix> {
    let a = cf.half_entries();
    if a.is_empty() {
        return Err(Error::EmptyCF);
    }
    if let Some(i) = a.iter().position(|&x| x == 0) {
        return Err(Error::ZeroEntry(i));
    }
    let m = a.len();
    let mut e = linalg::zeros(m, m);
    for i in 0..m {
        e[i][i] = BigInt::from(a[i]);
    }
    match form {
        CfForm::TwistedChain => {
            for i in 0..m - 1 {
                e[i][i + 1] = BigInt::one();
            }
            SeifertMatrix::new(e, Form::TwistedChain)
        }
        CfForm::Standard => {
            // rows 2, 4, ... in 1-based numbering
            for i in (1..m).step_by(2) {
                e[i][i - 1] = -BigInt::one();
                if i + 1 < m {
                    e[i][i + 1] = BigInt::one();
                }
            }
            SeifertMatrix::new(e, Form::Standard)
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitSpec {
    pub pos_weights: Vec<i64>,
    pub neg_weights: Vec<i64>,
    /// `|neg| x |pos|` lower-left block.
    pub coupling: IntMatrix,
}

impl SplitSpec {
    /// Coupling with `-1` on the diagonal and `1` just above it; this is the
    /// split form of an alternating 2-bridge continued fraction.
    pub fn two_bridge(cf: &EvenCF) -> Result<Self> {
        let a = cf.half_entries();
        let pos: Vec<i64> = a.iter().step_by(2).copied().collect();
        let neg: Vec<i64> = a.iter().skip(1).step_by(2).copied().collect();
        let mut c = linalg::zeros(neg.len(), pos.len());
        for k in 0..neg.len() {
            c[k][k] = -BigInt::one();
            if k + 1 < pos.len() {
                c[k][k + 1] = BigInt::one();
            }
        }
        Ok(SplitSpec { pos_weights: pos, neg_weights: neg, coupling: c })
    }

    /// The `X_n` coupling: ones on and below the diagonal.
    pub fn xn(a: &[i64], b: &[i64]) -> Result<Self> {
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::BadDimensions(format!("|a| = {}, |b| = {}", a.len(), b.len())));
        }
        let n = a.len();
        let mut c = linalg::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                c[i][j] = BigInt::one();
            }
        }
        Ok(SplitSpec { pos_weights: a.to_vec(), neg_weights: b.to_vec(), coupling: c })
    }
}

/// `[[diag(pos), 0], [coupling, diag(neg)]]`.
pub fn seifert_split(spec: &SplitSpec) -> Result<SeifertMatrix> {
    let (p, q) = (spec.pos_weights.len(), spec.neg_weights.len());
    if spec.pos_weights.iter().any(|&x| x <= 0) || spec.neg_weights.iter().any(|&x| x >= 0) {
        return Err(Error::DimensionMismatch("weights must be positive then negative".into()));
    }
    if spec.coupling.len() != q || spec.coupling.iter().any(|r| r.len() != p) {
        return Err(Error::DimensionMismatch(format!("coupling must be {q} x {p}")));
    }
    let n = p + q;
    let mut e = linalg::zeros(n, n);
    for (i, &w) in spec.pos_weights.iter().enumerate() {
        e[i][i] = BigInt::from(w);
    }
    for (i, &w) in spec.neg_weights.iter().enumerate() {
        e[p + i][p + i] = BigInt::from(w);
        for j in 0..p {
            e[p + i][j] = spec.coupling[i][j].clone();
        }
    }
    SeifertMatrix::new(e, Form::Split)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MontesinosSpec {
    pub e: i64,
    pub tangles: Vec<EvenCF>,
}

fn alternates_from_positive(a: &[i64]) -> bool {
    a.iter()
        .enumerate()
        .all(|(i, &x)| if i % 2 == 0 { x > 0 } else { x < 0 })
}

impl MontesinosSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: &str| Err(Error::InvalidInput(m.to_string()));
        if self.e <= 0 || self.e % 2 == 0 {
            return bad("e must be odd and positive");
        }
        if self.tangles.len() < 2 {
            return bad("need at least two tangles");
        }
        let first = self.tangles[0].half_entries();
        if first.len().is_multiple_of(2) || !alternates_from_positive(first) {
            return bad("first tangle must have odd length and alternate from a positive entry");
        }
        for t in &self.tangles[1..] {
            let a = t.half_entries();
            if a.len() % 2 == 1 || !alternates_from_positive(a) {
                return bad("later tangles must have even length and alternate from a positive entry");
            }
        }
        Ok(())
    }

    /// The block `M_0` built from `e` and the first tangle.
    pub fn m0(&self) -> IntMatrix {
        let mut diag: Vec<i64> = vec![-(self.e + 1) / 2];
        for (j, &a) in self.tangles[0].half_entries().iter().enumerate() {
            let a = a.abs();
            if j % 2 == 0 {
                diag.extend(std::iter::repeat_n(-1, (2 * a - 1) as usize));
            } else {
                diag.push(-(a + 1));
            }
        }
        let n = diag.len();
        let mut m = linalg::zeros(n, n);
        for i in 0..n {
            m[i][i] = BigInt::from(diag[i]);
            if i + 1 < n {
                m[i][i + 1] = BigInt::one();
            }
        }
        m
    }

    /// Twisted chain blocks of the remaining tangles.
    pub fn other_blocks(&self) -> Vec<IntMatrix> {
        self.tangles[1..]
            .iter()
            .map(|t| seifert_2bridge(t, CfForm::TwistedChain).unwrap().entries)
            .collect()
    }
}

/// Direct sum of `M_0` and the twisted chain blocks, plus a 1 in the first
/// column on the first row of each later block.
pub fn seifert_montesinos(spec: &MontesinosSpec) -> Result<SeifertMatrix> {
    spec.validate()?;
    let mut blocks = vec![spec.m0()];
    blocks.extend(spec.other_blocks());
    let n: usize = blocks.iter().map(|b| b.len()).sum();
    let mut e = linalg::zeros(n, n);
    let mut off = 0;
    for (k, b) in blocks.iter().enumerate() {
        for i in 0..b.len() {
            for j in 0..b.len() {
                e[off + i][off + j] = b[i][j].clone();
            }
        }
        if k > 0 {
            e[off][0] = BigInt::one();
        }
        off += b.len();
    }
    SeifertMatrix::new(e, Form::Montesinos)
}

/// `det(tA - B)` for square integer matrices, by evaluation at
/// `t = 0..=n` and exact interpolation.
pub fn pencil_det(a: &IntMatrix, b: &IntMatrix) -> IntPoly {
    let n = a.len();
    if n == 0 {
        return IntPoly::one();
    }
    let values: Vec<BigInt> = (0..=n)
        .map(|k| {
            let t = BigInt::from(k);
            let m: IntMatrix = (0..n)
                .map(|i| (0..n).map(|j| &t * &a[i][j] - &b[i][j]).collect())
                .collect();
            linalg::det(&m)
        })
        .collect();
    interpolate_integer_points(&values)
}

/// `det(tM - M^T)` of a square integer matrix.
pub fn alexander_of(m: &IntMatrix) -> IntPoly {
    pencil_det(m, &linalg::transpose(m))
}

/// Exact `det(tM - M^T)`, not normalised.
pub fn alexander_poly(m: &SeifertMatrix) -> IntPoly {
    alexander_of(&m.entries)
}

/// Signature of `M + M^T`.
pub fn signature(m: &SeifertMatrix) -> i64 {
    linalg::signature(&m.symmetrized())
}

/// Exact test by leading principal minors.
pub fn is_positive_definite(s: &IntMatrix) -> Result<bool> {
    if !linalg::is_symmetric(s) {
        return Err(Error::NotSymmetric);
    }
    Ok(linalg::leading_minors(s).iter().all(|d| d.is_positive()))
}

fn strongly_connected(s: &IntMatrix) -> bool {
    let n = s.len();
    let reach = |forward: bool| {
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let edge = if forward { &s[i][j] } else { &s[j][i] };
                if !seen[j] && !edge.is_zero() {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|x| x)
    };
    n == 0 || (reach(true) && reach(false))
}

/// Sufficient test for a positive determinant: irreducible, positive
/// diagonal, weakly diagonally dominant with at least one strict row.
/// For symmetric input a pass means positive definite.
pub fn diag_dominance_test(s: &IntMatrix) -> bool {
    let n = s.len();
    let mut strict = false;
    for i in 0..n {
        if !s[i][i].is_positive() {
            return false;
        }
        let off: BigInt = (0..n).filter(|&j| j != i).map(|j| s[i][j].abs()).sum();
        if s[i][i] < off {
            return false;
        }
        strict |= s[i][i] > off;
    }
    strict && strongly_connected(s)
}

/// Minimal diagonal twists `k_i` making `(S + diag k) + (S + diag k)^T`
/// strictly diagonally dominant with positive diagonal.
pub fn stabilize_twists(s: &SeifertMatrix) -> Vec<u64> {
    let m = s.symmetrized();
    let n = m.len();
    (0..n)
        .map(|i| {
            let r: BigInt = (0..n).filter(|&j| j != i).map(|j| m[i][j].abs()).sum();
            let k: BigInt = (r - &m[i][i]).div_floor(&BigInt::from(2)) + 1;
            if k.is_positive() {
                u64::try_from(k).unwrap_or(u64::MAX)
            } else {
                0
            }
        })
        .collect()
}

/// Apply twists to the diagonal.
pub fn twisted(s: &SeifertMatrix, k: &[u64]) -> SeifertMatrix {
    let mut e = s.entries.clone();
    for (i, &ki) in k.iter().enumerate() {
        e[i][i] += BigInt::from(ki);
    }
    SeifertMatrix { entries: e, form: s.form }
}

/// Right-hand side of the block determinant formula: `A (+) B` with the
/// `(alpha, n + beta)` entry set to `x` and the `(n + gamma, delta)` entry set
/// to `y` has determinant
/// `det A det B - (-1)^(alpha+beta+gamma+delta) x y det A_{alpha,delta} det B_{gamma,beta}`.
/// Indices are 1-based.
#[allow(clippy::too_many_arguments)]
pub fn block_det_formula(
    a: &IntMatrix,
    b: &IntMatrix,
    alpha: usize,
    beta: usize,
    gamma: usize,
    delta: usize,
    x: &BigInt,
    y: &BigInt,
) -> BigInt {
    let s = if (alpha + beta + gamma + delta).is_multiple_of(2) { BigInt::one() } else { -BigInt::one() };
    linalg::det(a) * linalg::det(b)
        - s * x * y
            * linalg::det(&linalg::minor_matrix(a, alpha - 1, delta - 1))
            * linalg::det(&linalg::minor_matrix(b, gamma - 1, beta - 1))
}

/// The matrix the formula above describes.
#[allow(clippy::too_many_arguments)]
pub fn block_with_corners(
    a: &IntMatrix,
    b: &IntMatrix,
    alpha: usize,
    beta: usize,
    gamma: usize,
    delta: usize,
    x: &BigInt,
    y: &BigInt,
) -> IntMatrix {
    let (n, m) = (a.len(), b.len());
    let mut e = linalg::zeros(n + m, n + m);
    for i in 0..n {
        for j in 0..n {
            e[i][j] = a[i][j].clone();
        }
    }
    for i in 0..m {
        for j in 0..m {
            e[n + i][n + j] = b[i][j].clone();
        }
    }
    e[alpha - 1][n + beta - 1] = x.clone();
    e[n + gamma - 1][delta - 1] = y.clone();
    e
}
