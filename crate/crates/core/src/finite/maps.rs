//! Contractions, insertions and the truncated maps `Ξ_I`.
//!
//! Slot pairs are 1-based. For gl and sl a pair `(i, j)` joins covariant
//! slot `i` with contravariant slot `j`; for sp and so it joins two slots
//! `i < j` of `V^{⊗d}`. A collection of pairs must be pairwise disjoint.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;

use super::model::{pairing, FiniteModel};
use super::sparse::{add_entry, ratio, Rational, SparseRationalMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::socle::AlgebraKind;

pub type SlotPair = (usize, usize);

/// Sparse vector keyed by basis tuples, for work outside a fixed model.
pub type TupleVec = BTreeMap<Vec<i32>, Rational>;

/// 0-based tuple positions of validated, disjoint pairs.
pub(crate) fn slot_positions(
    algebra: AlgebraKind,
    p: usize,
    q: usize,
    pairs: &[SlotPair],
) -> Result<Vec<(usize, usize)>> {
    let mut out = Vec::with_capacity(pairs.len());
    for &(i, j) in pairs {
        let bad = |reason: String| Error::InvalidSlots {
            pair: (i, j),
            reason,
        };
        let pos = if algebra.is_mixed() {
            if !(1..=p).contains(&i) || !(1..=q).contains(&j) {
                return Err(bad(format!("shape is ({p},{q})")));
            }
            (i - 1, p + j - 1)
        } else {
            if i == 0 || j > p || i >= j {
                return Err(bad(format!("need 1 <= i < j <= {p}")));
            }
            (i - 1, j - 1)
        };
        out.push(pos);
    }
    for (k, a) in out.iter().enumerate() {
        for (l, b) in out.iter().enumerate().skip(k + 1) {
            if a.0 == b.0 || a.1 == b.1 || a.0 == b.1 || a.1 == b.0 {
                return Err(Error::OverlappingPairs(pairs[k], pairs[l]));
            }
        }
    }
    Ok(out)
}

fn drop_positions(tuple: &[i32], positions: &[(usize, usize)]) -> Vec<i32> {
    let gone: BTreeSet<usize> = positions.iter().flat_map(|&(a, b)| [a, b]).collect();
    tuple
        .iter()
        .enumerate()
        .filter(|(k, _)| !gone.contains(k))
        .map(|(_, &a)| a)
        .collect()
}

pub(crate) fn contract_tuple(
    algebra: AlgebraKind,
    tuple: &[i32],
    positions: &[(usize, usize)],
) -> Option<(i64, Vec<i32>)> {
    let mut coeff = 1;
    for &(a, b) in positions {
        coeff *= pairing(algebra, tuple[a], tuple[b]);
        if coeff == 0 {
            return None;
        }
    }
    Some((coeff, drop_positions(tuple, positions)))
}

/// Scale of one inserted canonical element: `1/n` for gl, `1/(2n)` for sp
/// and so, so that contracting it back gives 1.
pub(crate) fn insertion_scale(algebra: AlgebraKind, n: usize) -> i64 {
    if algebra.is_mixed() {
        n as i64
    } else {
        2 * n as i64
    }
}

/// Unscaled canonical element on one pair: `Σ_k ξ_k ⊗ ξ_k^*` for gl,
/// `Σ_a sgn(a) ξ_a ⊗ ξ_{-a}` for sp, `Σ_a ξ_a ⊗ ξ_{-a}` for so.
fn canonical_terms(algebra: AlgebraKind, letters: &[i32]) -> Vec<(i64, i32, i32)> {
    letters
        .iter()
        .map(|&a| match algebra {
            AlgebraKind::Gl | AlgebraKind::Sl => (1, a, a),
            AlgebraKind::Sp => (i64::from(a.signum()), a, -a),
            AlgebraKind::So => (1, a, -a),
        })
        .collect()
}

/// Inserts canonical elements at `positions` of a tuple of length `len`,
/// filling the other slots with `source` in order. Unscaled.
pub(crate) fn insert_tuple(
    algebra: AlgebraKind,
    letters: &[i32],
    source: &[i32],
    positions: &[(usize, usize)],
    len: usize,
) -> Vec<(i64, Vec<i32>)> {
    let taken: BTreeSet<usize> = positions.iter().flat_map(|&(a, b)| [a, b]).collect();
    let mut base = vec![0; len];
    let mut rest = source.iter();
    for (k, slot) in base.iter_mut().enumerate() {
        if !taken.contains(&k) {
            *slot = *rest.next().expect("source fills the free slots");
        }
    }
    let canon = canonical_terms(algebra, letters);
    let mut out = vec![(1i64, base)];
    for &(a, b) in positions {
        let mut next = Vec::with_capacity(out.len() * canon.len());
        for (c, t) in &out {
            for &(k, x, y) in &canon {
                let mut t = t.clone();
                t[a] = x;
                t[b] = y;
                next.push((c * k, t));
            }
        }
        out = next;
    }
    out
}

fn reduced_shape(model: &FiniteModel, r: usize) -> Result<(usize, usize)> {
    let (p, q) = model.shape();
    let ok = if model.algebra().is_mixed() {
        r <= p && r <= q
    } else {
        2 * r <= p
    };
    if !ok {
        return Err(Error::InvalidShape(format!("{r} pairs do not fit {model}")));
    }
    Ok(if model.algebra().is_mixed() {
        (p - r, q - r)
    } else {
        (p - 2 * r, 0)
    })
}

/// The model a contraction along `r` pairs lands in.
pub fn contraction_target(model: &FiniteModel, r: usize) -> Result<FiniteModel> {
    let (p, q) = reduced_shape(model, r)?;
    Ok(model.reshaped(p, q))
}

/// Contracts `v` along already validated positions; result is in the
/// coordinates of `target`.
pub(crate) fn contract_vec(
    model: &FiniteModel,
    target: &FiniteModel,
    positions: &[(usize, usize)],
    v: &SparseVec,
) -> SparseVec {
    let mut out = SparseVec::new();
    for (&pos, x) in v {
        if let Some((c, t)) = contract_tuple(model.algebra(), &model.tuple(pos), positions) {
            add_entry(&mut out, target.position(&t), x * Rational::from_integer(c.into()));
        }
    }
    out
}

/// `Φ_I` or the multi-contraction `Φ_{I_1..I_r}` as a matrix from `model`
/// to [`contraction_target`].
pub fn contraction(model: &FiniteModel, pairs: &[SlotPair]) -> Result<SparseRationalMatrix> {
    let (p, q) = model.shape();
    let positions = slot_positions(model.algebra(), p, q, pairs)?;
    let target = contraction_target(model, pairs.len())?;
    let mut m = SparseRationalMatrix::zeros(target.dim(), model.dim());
    for pos in 0..model.dim() {
        if let Some((c, t)) = contract_tuple(model.algebra(), &model.tuple(pos), &positions) {
            m.add_to(target.position(&t), pos, Rational::from_integer(c.into()));
        }
    }
    Ok(m)
}

/// `Ψ_I` or `Ψ_{I_1..I_r}`: from [`contraction_target`] into `model`. The
/// pairs are numbered in `model`.
pub fn insertion(model: &FiniteModel, pairs: &[SlotPair]) -> Result<SparseRationalMatrix> {
    let (p, q) = model.shape();
    let positions = slot_positions(model.algebra(), p, q, pairs)?;
    let source = contraction_target(model, pairs.len())?;
    let scale = ratio(1, insertion_scale(model.algebra(), model.rank()).pow(pairs.len() as u32));
    let mut m = SparseRationalMatrix::zeros(model.dim(), source.dim());
    for pos in 0..source.dim() {
        let terms = insert_tuple(
            model.algebra(),
            model.letters(),
            &source.tuple(pos),
            &positions,
            model.slots(),
        );
        for (c, t) in terms {
            m.add_to(model.position(&t), pos, &scale * Rational::from_integer(c.into()));
        }
    }
    Ok(m)
}

/// `θ_I = Ψ_I Φ_I` on `model`.
pub fn theta(model: &FiniteModel, pairs: &[SlotPair]) -> Result<SparseRationalMatrix> {
    insertion(model, pairs)?.mul(&contraction(model, pairs)?)
}

/// `Ξ_I`: like `Φ_I` but only the pairing through `ξ_n`, scaled by `n`.
pub fn xi_map(model: &FiniteModel, pair: SlotPair) -> Result<SparseRationalMatrix> {
    if !model.algebra().is_mixed() {
        return Err(Error::Unsupported("Ξ maps exist only for gl and sl"));
    }
    let (p, q) = model.shape();
    let positions = slot_positions(model.algebra(), p, q, &[pair])?;
    let target = contraction_target(model, 1)?;
    let n = model.rank() as i32;
    let mut m = SparseRationalMatrix::zeros(target.dim(), model.dim());
    for pos in 0..model.dim() {
        if let Some((c, t)) = xi_tuple(n, &model.tuple(pos), positions[0]) {
            m.add_to(target.position(&t), pos, Rational::from_integer(c.into()));
        }
    }
    Ok(m)
}

pub(crate) fn xi_tuple(n: i32, tuple: &[i32], (a, b): (usize, usize)) -> Option<(i64, Vec<i32>)> {
    (tuple[a] == n && tuple[b] == n).then(|| (i64::from(n), drop_positions(tuple, &[(a, b)])))
}

/// Applies a tuple-level map to a [`TupleVec`].
pub(crate) fn map_tuple_vec<I>(v: &TupleVec, f: impl Fn(&[i32]) -> I) -> TupleVec
where
    I: IntoIterator<Item = (i64, Vec<i32>)>,
{
    let mut out = TupleVec::new();
    for (t, x) in v {
        for (c, u) in f(t) {
            let term = x * Rational::from_integer(c.into());
            *out.entry(u).or_insert_with(Rational::zero) += term;
        }
    }
    out.retain(|_, x| !x.is_zero());
    out
}
