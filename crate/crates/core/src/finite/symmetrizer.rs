//! Permutations of tensor slots and Young symmetrizers.

use std::collections::BTreeMap;

use super::model::FiniteModel;
use super::sparse::{add_entry, rat, SparseRationalMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::partitions::{sym_group_irrep_dim, Partition};

/// A permutation of `0..len`, stored by images.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn identity(len: usize) -> Self {
        Self((0..len).collect())
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidShape(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Self(images))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Self(inv)
    }

    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.len()];
        let mut sign = 1;
        for start in 0..self.len() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.0[i];
                len += 1;
            }
            if len > 0 && len % 2 == 0 {
                sign = -sign;
            }
        }
        sign
    }

    /// Moves the factor in `slots[k]` to `slots[σ(k)]`.
    pub fn permute_slots(&self, slots: &[usize], tuple: &[i32]) -> Vec<i32> {
        let mut out = tuple.to_vec();
        for (k, &s) in slots.iter().enumerate() {
            out[slots[self.0[k]]] = tuple[s];
        }
        out
    }
}

/// All permutations of `0..len` that only move elements within the given
/// blocks.
fn block_group(len: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
    let mut group = vec![Perm::identity(len)];
    for block in blocks {
        let mut next = Vec::new();
        for arrangement in arrangements(block) {
            let mut step = Perm::identity(len);
            for (&from, &to) in block.iter().zip(&arrangement) {
                step.0[from] = to;
            }
            next.extend(group.iter().map(|g| step.compose(g)));
        }
        group = next;
    }
    group
}

fn arrangements(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (k, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in arrangements(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}

/// Group algebra element `Σ c_σ σ`.
pub type GroupElement = BTreeMap<Perm, i64>;

pub fn group_product(a: &GroupElement, b: &GroupElement) -> GroupElement {
    let mut out = GroupElement::new();
    for (x, cx) in a {
        for (y, cy) in b {
            *out.entry(x.compose(y)).or_insert(0) += cx * cy;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// `c_λ = a_λ b_λ` for the row-reading tableau of `λ`, where `a_λ` sums the
/// row group and `b_λ` is the signed sum over the column group.
pub fn young_element(shape: &Partition) -> GroupElement {
    let d = shape.weight();
    let mut rows = Vec::new();
    let mut next = 0;
    for &len in shape.parts() {
        rows.push((next..next + len as usize).collect::<Vec<_>>());
        next += len as usize;
    }
    let cols: Vec<Vec<usize>> = (0..shape.part(1) as usize)
        .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
        .collect();
    let row_group: GroupElement = block_group(d, &rows).into_iter().map(|p| (p, 1)).collect();
    let col_group: GroupElement = block_group(d, &cols)
        .into_iter()
        .map(|p| {
            let s = p.sign();
            (p, s)
        })
        .collect();
    group_product(&row_group, &col_group)
}

/// `c_λ` acting on a chosen set of tensor slots.
#[derive(Clone, Debug)]
pub struct YoungSymmetrizer {
    shape: Partition,
    slots: Vec<usize>,
    terms: Vec<(Perm, i64)>,
}

impl YoungSymmetrizer {
    /// `slots` are 0-based tuple positions, one per box of `shape`.
    pub fn new(shape: &Partition, slots: Vec<usize>) -> Result<Self> {
        if slots.len() != shape.weight() {
            return Err(Error::SizeMismatch(format!(
                "shape {shape} needs {} slots, got {}",
                shape.weight(),
                slots.len()
            )));
        }
        Ok(Self {
            shape: shape.clone(),
            slots,
            terms: young_element(shape).into_iter().collect(),
        })
    }

    /// On the covariant slots `0..p` of a model.
    pub fn covariant(shape: &Partition, model: &FiniteModel) -> Result<Self> {
        let (p, _) = model.shape();
        Self::new(shape, (0..p).collect())
    }

    /// On the contravariant slots `p..p+q` of a gl or sl model.
    pub fn contravariant(shape: &Partition, model: &FiniteModel) -> Result<Self> {
        let (p, q) = model.shape();
        Self::new(shape, (p..p + q).collect())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// `c_λ² = κ c_λ` with `κ = d! / dim H_λ`.
    pub fn idempotent_constant(&self) -> u128 {
        let d = self.shape.weight() as u128;
        (1..=d).product::<u128>() / u128::from(sym_group_irrep_dim(&self.shape))
    }

    pub fn apply_tuple(&self, tuple: &[i32]) -> Vec<(i64, Vec<i32>)> {
        self.terms
            .iter()
            .map(|(perm, c)| (*c, perm.permute_slots(&self.slots, tuple)))
            .collect()
    }

    pub fn apply(&self, model: &FiniteModel, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&pos, x) in v {
            for (c, t) in self.apply_tuple(&model.tuple(pos)) {
                add_entry(&mut out, model.position(&t), x * rat(c));
            }
        }
        out
    }

    pub fn matrix(&self, model: &FiniteModel) -> SparseRationalMatrix {
        let mut m = SparseRationalMatrix::zeros(model.dim(), model.dim());
        for pos in 0..model.dim() {
            for (c, t) in self.apply_tuple(&model.tuple(pos)) {
                m.add_to(model.position(&t), pos, rat(c));
            }
        }
        m
    }
}

/// Matrix of `c_λ` on the given 0-based slots of `model`.
pub fn young_symmetrizer(
    shape: &Partition,
    model: &FiniteModel,
    slots: &[usize],
) -> Result<SparseRationalMatrix> {
    if let Some(&bad) = slots.iter().find(|&&s| s >= model.slots()) {
        return Err(Error::InvalidSlots {
            pair: (bad, bad),
            reason: format!("model has {} slots", model.slots()),
        });
    }
    Ok(YoungSymmetrizer::new(shape, slots.to_vec())?.matrix(model))
}

/// Matrix of a slot permutation. For gl and sl it must keep covariant and
/// contravariant slots apart.
pub fn permutation_matrix(model: &FiniteModel, perm: &Perm) -> Result<SparseRationalMatrix> {
    if perm.len() != model.slots() {
        return Err(Error::SizeMismatch(format!(
            "permutation of {} slots on a model with {}",
            perm.len(),
            model.slots()
        )));
    }
    let (p, _) = model.shape();
    if model.algebra().is_mixed() && (0..perm.len()).any(|i| (i < p) != (perm.image(i) < p)) {
        return Err(Error::InvalidShape(
            "permutation mixes covariant and contravariant slots".into(),
        ));
    }
    let slots: Vec<usize> = (0..model.slots()).collect();
    let mut m = SparseRationalMatrix::zeros(model.dim(), model.dim());
    for pos in 0..model.dim() {
        let t = perm.permute_slots(&slots, &model.tuple(pos));
        m.add_to(model.position(&t), pos, rat(1));
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partitions::partitions_of;
    use crate::socle::AlgebraKind;

    #[test]
    fn perm_basics() {
        let p = Perm::from_images(vec![1, 2, 0]).unwrap();
        assert_eq!(p.sign(), 1);
        assert_eq!(p.compose(&p.inverse()), Perm::identity(3));
        assert_eq!(Perm::from_images(vec![1, 0]).unwrap().sign(), -1);
        assert!(Perm::from_images(vec![0, 0]).is_err());
        let moved = p.permute_slots(&[0, 1, 2], &[7, 8, 9]);
        assert_eq!(moved, vec![9, 7, 8]);
    }

    #[test]
    fn quasi_idempotent() {
        for d in 1..=4 {
            for shape in partitions_of(d) {
                let c = young_element(&shape);
                let sq = group_product(&c, &c);
                let kappa = YoungSymmetrizer::new(&shape, (0..d).collect())
                    .unwrap()
                    .idempotent_constant() as i64;
                let scaled: GroupElement = c.iter().map(|(p, x)| (p.clone(), kappa * x)).collect();
                assert_eq!(sq, scaled, "shape {shape}");
            }
        }
    }

    #[test]
    fn image_dimensions_match_schur_functor() {
        // dim im c_λ on (k^n)^{⊗d} equals the number of SSYT of shape λ in n letters.
        let m = FiniteModel::new(AlgebraKind::Gl, 3, 3, 0).unwrap();
        for (shape, expected) in [(part![3], 10), (part![2, 1], 8), (part![1, 1, 1], 1)] {
            let c = young_symmetrizer(&shape, &m, &[0, 1, 2]).unwrap();
            assert_eq!(c.rank(), expected, "shape {shape}");
        }
    }

    #[test]
    fn square_on_matrices() {
        let m = FiniteModel::new(AlgebraKind::Gl, 2, 2, 1).unwrap();
        let c = young_symmetrizer(&part![1, 1], &m, &[0, 1]).unwrap();
        assert_eq!(c.mul(&c).unwrap(), c.scale(&rat(2)));
    }

    #[test]
    fn permutation_rules() {
        let m = FiniteModel::new(AlgebraKind::Gl, 2, 2, 1).unwrap();
        let swap = Perm::from_images(vec![1, 0, 2]).unwrap();
        let s = permutation_matrix(&m, &swap).unwrap();
        assert_eq!(s.mul(&s).unwrap(), SparseRationalMatrix::identity(m.dim()));
        let bad = Perm::from_images(vec![2, 1, 0]).unwrap();
        assert!(permutation_matrix(&m, &bad).is_err());
    }
}
