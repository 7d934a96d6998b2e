//! Weight-graded subspaces, the contraction-kernel filtration and
//! singular vector counts.
//!
//! Contractions, slot permutations and the Cartan subalgebra all preserve
//! weights, so every subspace here is stored one weight space at a time.

use std::collections::BTreeMap;

use super::maps::{contract_vec, contraction_target, slot_positions, SlotPair};
use super::model::{FiniteModel, RootVector, WeightVector};
use super::sparse::{span_basis, Echelon, Rational, SparseVec};
use super::symmetrizer::YoungSymmetrizer;
use crate::error::{Error, Result};

/// A subspace given by a basis of each of its weight spaces. Missing
/// weights are zero.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct WeightedSubspace {
    pieces: BTreeMap<WeightVector, Vec<SparseVec>>,
}

impl WeightedSubspace {
    pub fn new() -> Self {
        Self::default()
    }

    /// Stores an echelon basis of the span of `vectors` at `weight`.
    pub fn set(&mut self, weight: WeightVector, vectors: &[SparseVec]) {
        let basis = span_basis(vectors);
        if basis.is_empty() {
            self.pieces.remove(&weight);
        } else {
            self.pieces.insert(weight, basis);
        }
    }

    pub fn dim(&self) -> usize {
        self.pieces.values().map(Vec::len).sum()
    }

    pub fn dim_at(&self, weight: &WeightVector) -> usize {
        self.basis_at(weight).len()
    }

    pub fn basis_at(&self, weight: &WeightVector) -> &[SparseVec] {
        self.pieces.get(weight).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn weights(&self) -> impl Iterator<Item = &WeightVector> {
        self.pieces.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&WeightVector, &[SparseVec])> {
        self.pieces.iter().map(|(w, b)| (w, b.as_slice()))
    }

    /// Is every vector of `self` in `other`?
    pub fn is_contained_in(&self, other: &Self) -> bool {
        self.iter().all(|(w, basis)| {
            let e = echelon_of(other.basis_at(w));
            basis.iter().all(|v| !e.is_independent(v))
        })
    }
}

fn echelon_of(vectors: &[SparseVec]) -> Echelon {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert_rational(v);
    }
    e
}

/// The whole model, one standard basis vector per tuple.
pub fn full_space(model: &FiniteModel) -> WeightedSubspace {
    let pieces = model
        .weight_spaces()
        .into_iter()
        .map(|(w, positions)| {
            let basis = positions
                .into_iter()
                .map(|p| SparseVec::from([(p, Rational::from_integer(1.into()))]))
                .collect();
            (w, basis)
        })
        .collect();
    WeightedSubspace { pieces }
}

/// Image of the composite of `symmetrizers` (acting on disjoint slots).
pub fn symmetrized_space(model: &FiniteModel, symmetrizers: &[YoungSymmetrizer]) -> WeightedSubspace {
    let mut out = WeightedSubspace::new();
    for (w, positions) in model.weight_spaces() {
        let images: Vec<SparseVec> = positions
            .into_iter()
            .map(|p| {
                let mut v = SparseVec::from([(p, Rational::from_integer(1.into()))]);
                for c in symmetrizers {
                    v = c.apply(model, &v);
                }
                v
            })
            .collect();
        out.set(w, &images);
    }
    out
}

/// Largest number of disjoint pairs in the model.
pub fn max_pairs(model: &FiniteModel) -> usize {
    let (p, q) = model.shape();
    if model.algebra().is_mixed() {
        p.min(q)
    } else {
        p / 2
    }
}

/// Every unordered collection of `r` disjoint slot pairs.
pub fn contraction_collections(model: &FiniteModel, r: usize) -> Vec<Vec<SlotPair>> {
    let (p, q) = model.shape();
    let mut out = Vec::new();
    if model.algebra().is_mixed() {
        // Increasing covariant slots, each matched to a distinct contravariant slot.
        fn rec(
            p: usize,
            q: usize,
            r: usize,
            start: usize,
            used: &mut Vec<bool>,
            acc: &mut Vec<SlotPair>,
            out: &mut Vec<Vec<SlotPair>>,
        ) {
            if acc.len() == r {
                out.push(acc.clone());
                return;
            }
            for i in start..=p {
                for j in 1..=q {
                    if !used[j] {
                        used[j] = true;
                        acc.push((i, j));
                        rec(p, q, r, i + 1, used, acc, out);
                        acc.pop();
                        used[j] = false;
                    }
                }
            }
        }
        rec(p, q, r, 1, &mut vec![false; q + 1], &mut Vec::new(), &mut out);
    } else {
        fn rec(
            d: usize,
            r: usize,
            used: &mut Vec<bool>,
            acc: &mut Vec<SlotPair>,
            out: &mut Vec<Vec<SlotPair>>,
        ) {
            if acc.len() == r {
                out.push(acc.clone());
                return;
            }
            // Pairs are generated with increasing first slots.
            let from = acc.last().map_or(1, |&(i, _)| i + 1);
            for i in from..=d {
                if used[i] {
                    continue;
                }
                for j in i + 1..=d {
                    if !used[j] {
                        used[i] = true;
                        used[j] = true;
                        acc.push((i, j));
                        rec(d, r, used, acc, out);
                        acc.pop();
                        used[i] = false;
                        used[j] = false;
                    }
                }
            }
        }
        rec(p, r, &mut vec![false; p + 1], &mut Vec::new(), &mut out);
    }
    out
}

/// Vectors of `ambient` killed by every `r`-fold multi-contraction.
pub fn contraction_kernel(
    model: &FiniteModel,
    ambient: &WeightedSubspace,
    r: usize,
) -> Result<WeightedSubspace> {
    if r > max_pairs(model) {
        return Ok(ambient.clone());
    }
    let (p, q) = model.shape();
    let target = contraction_target(model, r)?;
    let maps: Vec<Vec<(usize, usize)>> = contraction_collections(model, r)
        .iter()
        .map(|c| slot_positions(model.algebra(), p, q, c))
        .collect::<Result<_>>()?;
    let mut out = WeightedSubspace::new();
    for (w, basis) in ambient.iter() {
        // Row (collection, target coordinate), column = basis index.
        let mut rows: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
        for (col, b) in basis.iter().enumerate() {
            for (k, positions) in maps.iter().enumerate() {
                for (t, c) in contract_vec(model, &target, positions, b) {
                    rows.entry((k, t)).or_default().insert(col, c);
                }
            }
        }
        let mut e = Echelon::new();
        for row in rows.values() {
            e.insert_rational(row);
        }
        let kernel: Vec<SparseVec> = e
            .kernel(basis.len())
            .iter()
            .map(|x| combine(basis, x))
            .collect();
        out.set(w.clone(), &kernel);
    }
    Ok(out)
}

fn combine(basis: &[SparseVec], coeffs: &SparseVec) -> SparseVec {
    let mut v = SparseVec::new();
    for (&i, c) in coeffs {
        super::sparse::axpy(&mut v, c, &basis[i]);
    }
    v
}

/// `F^{(1)} ⊂ … ⊂ F^{(r_max)}` on the whole model.
pub fn kernel_filtration(model: &FiniteModel, r_max: usize) -> Result<Vec<WeightedSubspace>> {
    kernel_filtration_within(model, &full_space(model), r_max)
}

/// The same filtration intersected with an invariant `ambient` subspace.
pub fn kernel_filtration_within(
    model: &FiniteModel,
    ambient: &WeightedSubspace,
    r_max: usize,
) -> Result<Vec<WeightedSubspace>> {
    if r_max > max_pairs(model) {
        return Err(Error::InvalidShape(format!(
            "filtration depth {r_max} exceeds {} for {model}",
            max_pairs(model)
        )));
    }
    (1..=r_max)
        .map(|r| contraction_kernel(model, ambient, r))
        .collect()
}

/// `dim` of the highest weight vectors of weight `weight` in
/// `subspace / modulo`, using the simple raising operators.
pub fn singular_vector_count(
    model: &FiniteModel,
    subspace: &WeightedSubspace,
    modulo: &WeightedSubspace,
    weight: &WeightVector,
) -> Result<usize> {
    singular_vector_count_with(model, subspace, modulo, weight, &model.simple_raising())
}

/// As [`singular_vector_count`] with an explicit set of raising operators.
///
/// Counts `dim {v ∈ S_χ : X v ∈ M for every X} - dim M_χ`, after checking
/// that `M_χ ⊂ S_χ` and that each `X` maps `S_χ` into `S` and `M_χ` into `M`.
pub fn singular_vector_count_with(
    model: &FiniteModel,
    subspace: &WeightedSubspace,
    modulo: &WeightedSubspace,
    weight: &WeightVector,
    raising: &[RootVector],
) -> Result<usize> {
    let s = subspace.basis_at(weight);
    let m = modulo.basis_at(weight);
    let s_ech = echelon_of(s);
    if m.iter().any(|v| s_ech.is_independent(v)) {
        return Err(Error::NonInvariant(format!(
            "modulus is not contained in the subspace at weight {weight}"
        )));
    }
    // Columns: x for S_χ, then y_α for each M_{χ+α}.
    let mut rows: BTreeMap<(usize, usize), SparseVec> = BTreeMap::new();
    let mut offset = s.len();
    for (k, op) in raising.iter().enumerate() {
        let up = weight.add(&op.root);
        let s_up = echelon_of(subspace.basis_at(&up));
        let m_up_basis = modulo.basis_at(&up);
        let m_up = echelon_of(m_up_basis);
        for (col, v) in s.iter().enumerate() {
            let image = model.act(&op.element, v);
            if s_up.is_independent(&image) {
                return Err(Error::NonInvariant(format!(
                    "{} leaves the subspace at weight {weight}",
                    op.name
                )));
            }
            for (pos, c) in image {
                rows.entry((k, pos)).or_default().insert(col, c);
            }
        }
        for v in m {
            if m_up.is_independent(&model.act(&op.element, v)) {
                return Err(Error::NonInvariant(format!(
                    "{} leaves the modulus at weight {weight}",
                    op.name
                )));
            }
        }
        for (j, v) in m_up_basis.iter().enumerate() {
            for (&pos, c) in v {
                rows.entry((k, pos)).or_default().insert(offset + j, -c.clone());
            }
        }
        offset += m_up_basis.len();
    }
    let mut e = Echelon::new();
    for row in rows.values() {
        e.insert_rational(row);
    }
    let kernel = offset - e.rank();
    Ok(kernel - m.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::socle::AlgebraKind;

    #[test]
    fn collection_counts() {
        let gl = FiniteModel::new(AlgebraKind::Gl, 2, 2, 2).unwrap();
        assert_eq!(contraction_collections(&gl, 1).len(), 4);
        assert_eq!(contraction_collections(&gl, 2).len(), 2);
        let sp = FiniteModel::new(AlgebraKind::Sp, 2, 4, 0).unwrap();
        assert_eq!(contraction_collections(&sp, 1).len(), 6);
        assert_eq!(contraction_collections(&sp, 2).len(), 3);
    }

    #[test]
    fn traceless_dimensions() {
        let f = kernel_filtration(&FiniteModel::new(AlgebraKind::Gl, 2, 1, 1).unwrap(), 1).unwrap();
        assert_eq!(f[0].dim(), 3);
        let f = kernel_filtration(&FiniteModel::new(AlgebraKind::Gl, 3, 1, 1).unwrap(), 1).unwrap();
        assert_eq!(f[0].dim(), 8);
        let f = kernel_filtration(&FiniteModel::new(AlgebraKind::Sp, 2, 2, 0).unwrap(), 1).unwrap();
        assert_eq!(f[0].dim(), 15);
        let f = kernel_filtration(&FiniteModel::new(AlgebraKind::So, 2, 2, 0).unwrap(), 1).unwrap();
        assert_eq!(f[0].dim(), 15);
    }

    #[test]
    fn filtration_is_increasing() {
        let m = FiniteModel::new(AlgebraKind::Gl, 3, 2, 2).unwrap();
        let f = kernel_filtration(&m, 2).unwrap();
        assert!(f[0].is_contained_in(&f[1]));
        // Two independent full contractions to scalars.
        assert_eq!(f[1].dim(), m.dim() - 2);
        assert!(!f[1].is_contained_in(&f[0]));
    }

    #[test]
    fn adjoint_has_one_singular_vector() {
        let m = FiniteModel::new(AlgebraKind::Gl, 3, 1, 1).unwrap();
        let f1 = &kernel_filtration(&m, 1).unwrap()[0];
        let zero = WeightedSubspace::new();
        let top = WeightVector(vec![1, 0, -1]);
        assert_eq!(singular_vector_count(&m, f1, &zero, &top).unwrap(), 1);
        assert_eq!(singular_vector_count(&m, f1, &zero, &WeightVector(vec![0, 0, 0])).unwrap(), 0);
        let all = full_space(&m);
        assert_eq!(singular_vector_count(&m, &all, f1, &WeightVector(vec![0, 0, 0])).unwrap(), 1);
    }

    #[test]
    fn non_invariant_is_rejected() {
        let m = FiniteModel::new(AlgebraKind::Gl, 2, 1, 0).unwrap();
        let mut s = WeightedSubspace::new();
        let w = WeightVector(vec![0, 1]);
        s.set(w.clone(), &[SparseVec::from([(1, Rational::from_integer(1.into()))])]);
        let zero = WeightedSubspace::new();
        assert!(matches!(
            singular_vector_count(&m, &s, &zero, &w),
            Err(Error::NonInvariant(_))
        ));
    }

    #[test]
    fn symmetrized_dimensions() {
        let m = FiniteModel::new(AlgebraKind::Gl, 3, 2, 0).unwrap();
        let c = YoungSymmetrizer::covariant(&part![2], &m).unwrap();
        assert_eq!(symmetrized_space(&m, &[c]).dim(), 6);
    }
}
