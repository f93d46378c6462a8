//! Interlacing of real-rooted pairs, proper position through the Wronskian,
//! and interlacing on the unit circle through real parts.

use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polyring::{modification, IntPoly};
use crate::stability::{
    classify, count_real_roots, default_width, isolate_real_roots_to, refine, squarefree_decomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    /// `alpha_1 <= beta_1 <= alpha_2 <= ...` with `alpha` the zeros of `f`.
    FLeG,
    GLeF,
    EqualMultiset,
    #[serde(rename = "n/a")]
    NotApplicable,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InterlaceVerdict {
    pub interlaced: bool,
    pub direction: Direction,
    pub shared_roots: Vec<f64>,
}

/// Distinct real zeros of `f g` in increasing order, with the multiplicity
/// of each in `f` and in `g`.
fn merged_roots(f: &IntPoly, g: &IntPoly) -> Result<Vec<(BigRational, usize, usize)>> {
    let fg = f * g;
    let sq = fg.squarefree_part();
    // isolation alone suffices for the sign tests below
    let ivs = isolate_real_roots_to(&sq.to_rat(), None, &BigRational::from_integer(1.into()))?;
    let ff = squarefree_decomposition(f);
    let gf = squarefree_decomposition(g);
    // each interval holds one root of fg, simple in every square-free factor
    let mult_in = |factors: &[(IntPoly, usize)], lo: &BigRational, hi: &BigRational| -> usize {
        factors
            .iter()
            .filter(|(q, _)| {
                let sh = q.sign_at(hi);
                sh == 0 || (lo != hi && q.sign_at(lo) * sh < 0)
            })
            .map(|(_, m)| *m)
            .sum()
    };
    Ok(ivs
        .iter()
        .map(|iv| {
            let (mf, mg) = (mult_in(&ff, &iv.lo, &iv.hi), mult_in(&gf, &iv.lo, &iv.hi));
            let (lo, hi) = if mf > 0 && mg > 0 && iv.lo != iv.hi {
                refine(&sq, iv.lo.clone(), iv.hi.clone(), &default_width())
            } else {
                (iv.lo.clone(), iv.hi.clone())
            };
            ((lo + hi) / BigRational::from_integer(2.into()), mf, mg)
        })
        .collect())
}

/// Does `a_1 <= b_1 <= a_2 <= b_2 <= ...` hold, with ranks standing in for
/// the roots? `a` must be at least as long as `b`.
fn chain(a: &[usize], b: &[usize]) -> bool {
    let mut seq = Vec::with_capacity(a.len() + b.len());
    for i in 0..a.len() {
        seq.push(a[i]);
        if i < b.len() {
            seq.push(b[i]);
        }
    }
    seq.len() == a.len() + b.len() && seq.windows(2).all(|w| w[0] <= w[1])
}

/// Interlacing of two real-rooted polynomials, with shared roots allowed.
pub fn interlaced_real(f: &IntPoly, g: &IntPoly) -> Result<InterlaceVerdict> {
    for p in [f, g] {
        if p.is_zero() || count_real_roots(p) != p.degree() {
            return Err(Error::NotRealRooted);
        }
    }
    let merged = merged_roots(f, g)?;
    let mut alpha = Vec::new();
    let mut beta = Vec::new();
    let mut shared = Vec::new();
    for (rank, (x, mf, mg)) in merged.iter().enumerate() {
        alpha.extend(std::iter::repeat_n(rank, *mf));
        beta.extend(std::iter::repeat_n(rank, *mg));
        if *mf > 0 && *mg > 0 {
            shared.push(x.to_f64().unwrap_or(f64::NAN));
        }
    }
    let (m, n) = (alpha.len(), beta.len());
    let (interlaced, direction) = if m == n {
        match (chain(&alpha, &beta), chain(&beta, &alpha)) {
            (true, true) => (true, Direction::EqualMultiset),
            (true, false) => (true, Direction::FLeG),
            (false, true) => (true, Direction::GLeF),
            _ => (false, Direction::NotApplicable),
        }
    } else if m == n + 1 {
        let ok = chain(&alpha, &beta);
        (ok, if ok { Direction::FLeG } else { Direction::NotApplicable })
    } else if n == m + 1 {
        let ok = chain(&beta, &alpha);
        (ok, if ok { Direction::GLeF } else { Direction::NotApplicable })
    } else {
        (false, Direction::NotApplicable)
    };
    Ok(InterlaceVerdict { interlaced, direction, shared_roots: shared })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `W[f, g] = f'g - fg' <= 0` on the real line.
    FLlG,
    GLlF,
    Neither,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProperPosition {
    pub relation: Relation,
    /// The Wronskian vanishes identically.
    pub equal: bool,
}

pub fn wronskian(f: &IntPoly, g: &IntPoly) -> IntPoly {
    &(&f.derivative() * g) - &(f * &g.derivative())
}

/// Decide the sign of `W[f, g]` on the real line exactly.
pub fn proper_position(f: &IntPoly, g: &IntPoly) -> Result<ProperPosition> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let w = wronskian(f, g);
    if w.is_zero() {
        return Ok(ProperPosition { relation: Relation::FLlG, equal: true });
    }
    let sign_changes = squarefree_decomposition(&w)
        .iter()
        .any(|(q, m)| m % 2 == 1 && count_real_roots(q) > 0);
    if sign_changes {
        return Ok(ProperPosition { relation: Relation::Neither, equal: false });
    }
    let s = (0i64..)
        .map(|k| w.sign_at(&BigRational::from_integer(k.into())))
        .find(|&s| s != 0)
        .unwrap();
    let relation = if s < 0 { Relation::FLlG } else { Relation::GLlF };
    Ok(ProperPosition { relation, equal: false })
}

/// Strip `t - 1` and `t + 1`, which have no zero in the open upper half plane.
fn upper_half_part(p: &IntPoly) -> IntPoly {
    let (q, _) = p.strip_factor(&IntPoly::from_i64(&[-1, 1]));
    q.strip_factor(&IntPoly::from_i64(&[1, 1])).0
}

/// Interlacing of c-stable reciprocal polynomials: the real parts of their
/// zeros in the upper half plane interlace. These are half the roots of the
/// modifications.
pub fn interlaced_unit(f: &IntPoly, g: &IntPoly) -> Result<InterlaceVerdict> {
    let mut mods = Vec::new();
    for p in [f, g] {
        if p.is_zero() || !classify(p)?.all_unit() {
            return Err(Error::NotCStable);
        }
        let q = upper_half_part(p);
        mods.push(if q.degree() == 0 { q } else { modification(&q).map_err(|_| Error::NotCStable)? });
    }
    let mut v = interlaced_real(&mods[0], &mods[1])?;
    for x in v.shared_roots.iter_mut() {
        *x /= 2.0;
    }
    Ok(v)
}

/// True when the polynomial has no repeated zero.
pub fn is_simple(p: &IntPoly) -> bool {
    !p.is_zero() && squarefree_decomposition(p).iter().all(|(_, m)| *m == 1)
}

pub fn has_nonzero_constant(p: &IntPoly) -> bool {
    !p.coeff(0).is_zero()
}
