//! Tensor models `V^{⊗p} ⊗ V_*^{⊗q}` (gl, sl) and `V^{⊗d}` (sp, so) at a
//! fixed finite rank, with their Lie algebra actions.
//!
//! Natural-module basis letters are `1..=n` for gl and sl, and `±1..=±n`
//! for sp and so, where `ξ_{-i}` pairs with `ξ_i` under the invariant form.
//! A basis vector of the tensor model is a tuple of letters, covariant
//! slots first; tuples are numbered in row-major order.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::sparse::{add_entry, rat, SparseRationalMatrix, SparseVec};
use crate::error::{Error, Result};
use crate::socle::AlgebraKind;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct WeightVector(pub Vec<i32>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `e_i` with a 1-based index.
    pub fn unit(n: usize, i: usize, sign: i32) -> Self {
        let mut w = vec![0; n];
        w[i - 1] = sign;
        Self(w)
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of the Lie algebra written in matrix units of the natural
/// module: `Σ c · E_{a,b}` with `E_{a,b} ξ_c = δ_{bc} ξ_a`.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct LieElement {
    terms: BTreeMap<(i32, i32), i64>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(a: i32, b: i32) -> Self {
        Self::zero().plus(1, a, b)
    }

    /// Adds `c · E_{a,b}`.
    pub fn plus(mut self, c: i64, a: i32, b: i32) -> Self {
        let e = self.terms.entry((a, b)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.terms.remove(&(a, b));
        }
        self
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, i64)> + '_ {
        self.terms.iter().map(|(&(a, b), &c)| (a, b, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut out = Self::zero();
        for (a, b, x) in self.terms() {
            out = out.plus(c * x, a, b);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (a, b, c) in other.terms() {
            out = out.plus(c, a, b);
        }
        out
    }

    /// Matrix product on the natural module.
    pub fn compose(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, b, x) in self.terms() {
            for (c, d, y) in other.terms() {
                if b == c {
                    out = out.plus(x * y, a, d);
                }
            }
        }
        out
    }

    pub fn bracket(&self, other: &Self) -> Self {
        self.compose(other).add(&other.compose(self).scaled(-1))
    }
}

impl fmt::Debug for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms()
            .map(|(a, b, c)| format!("{c}·E({a},{b})"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub name: String,
    pub element: LieElement,
}

/// A root vector together with its root.
#[derive(Clone, Debug)]
pub struct RootVector {
    pub name: String,
    pub root: WeightVector,
    pub element: LieElement,
}

/// Size limits for finite models.
///
/// With `max_dim` unset, gl and sl models need `p + q <= 5` and `n <= 8`,
/// sp and so models need `d <= 4` and `n <= 5`. With `max_dim` set, any
/// shape is allowed whose total dimension stays within it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Capacity {
    pub max_dim: Option<usize>,
}

impl Capacity {
    pub fn with_max_dim(max_dim: usize) -> Self {
        Self {
            max_dim: Some(max_dim),
        }
    }

    pub fn check(&self, algebra: AlgebraKind, n: usize, p: usize, q: usize) -> Result<()> {
        let letters = if algebra.is_mixed() { n } else { 2 * n };
        let dim = (letters as u128).checked_pow((p + q) as u32);
        match self.max_dim {
            Some(max) => match dim {
                Some(d) if d <= max as u128 => Ok(()),
                _ => Err(Error::Capacity(format!(
                    "{algebra} model at n={n} with {} slots exceeds dimension {max}",
                    p + q
                ))),
            },
            None => {
                let (max_slots, max_n) = if algebra.is_mixed() { (5, 8) } else { (4, 5) };
                if p + q > max_slots || n > max_n {
                    Err(Error::Capacity(format!(
                        "{algebra} model with {} slots at n={n}; limits are {max_slots} slots and n<={max_n}",
                        p + q
                    )))
                } else {
                    Ok(())
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteModel {
    algebra: AlgebraKind,
    n: usize,
    p: usize,
    q: usize,
    letters: Vec<i32>,
}

impl FiniteModel {
    /// Model within the default [`Capacity`].
    pub fn new(algebra: AlgebraKind, n: usize, p: usize, q: usize) -> Result<Self> {
        Self::with_capacity(algebra, n, p, q, &Capacity::default())
    }

    pub fn with_capacity(
        algebra: AlgebraKind,
        n: usize,
        p: usize,
        q: usize,
        capacity: &Capacity,
    ) -> Result<Self> {
        algebra.check_shape(p, q)?;
        if n == 0 {
            return Err(Error::InvalidShape("rank must be at least 1".into()));
        }
        capacity.check(algebra, n, p, q)?;
        Ok(Self::unchecked(algebra, n, p, q))
    }

    pub(crate) fn unchecked(algebra: AlgebraKind, n: usize, p: usize, q: usize) -> Self {
        let n_i = n as i32;
        let letters = if algebra.is_mixed() {
            (1..=n_i).collect()
        } else {
            (1..=n_i).chain((1..=n_i).map(|i| -i)).collect()
        };
        Self {
            algebra,
            n,
            p,
            q,
            letters,
        }
    }

    /// Same algebra and rank, different shape.
    pub(crate) fn reshaped(&self, p: usize, q: usize) -> Self {
        Self::unchecked(self.algebra, self.n, p, q)
    }

    pub fn algebra(&self) -> AlgebraKind {
        self.algebra
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    /// `(p, q)`; for sp and so this is `(d, 0)`.
    pub fn shape(&self) -> (usize, usize) {
        (self.p, self.q)
    }

    pub fn slots(&self) -> usize {
        self.p + self.q
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn dim(&self) -> usize {
        self.letters.len().pow(self.slots() as u32)
    }

    fn letter_index(&self, a: i32) -> usize {
        if a > 0 {
            a as usize - 1
        } else {
            self.n + (-a) as usize - 1
        }
    }

    pub fn tuple(&self, mut pos: usize) -> Vec<i32> {
        let base = self.letters.len();
        let mut t = vec![0; self.slots()];
        for slot in t.iter_mut().rev() {
            *slot = self.letters[pos % base];
            pos /= base;
        }
        t
    }

    pub fn position(&self, tuple: &[i32]) -> usize {
        debug_assert_eq!(tuple.len(), self.slots());
        tuple
            .iter()
            .fold(0, |acc, &a| acc * self.letters.len() + self.letter_index(a))
    }

    pub fn is_covariant_slot(&self, slot: usize) -> bool {
        !self.algebra.is_mixed() || slot < self.p
    }

    pub fn weight_of_tuple(&self, tuple: &[i32]) -> WeightVector {
        let mut w = vec![0; self.n];
        for (k, &a) in tuple.iter().enumerate() {
            let sign = a.signum() * if self.is_covariant_slot(k) { 1 } else { -1 };
            w[a.unsigned_abs() as usize - 1] += sign;
        }
        WeightVector(w)
    }

    pub fn weight_of(&self, pos: usize) -> WeightVector {
        self.weight_of_tuple(&self.tuple(pos))
    }

    /// Basis positions grouped by weight.
    pub fn weight_spaces(&self) -> BTreeMap<WeightVector, Vec<usize>> {
        let mut out: BTreeMap<WeightVector, Vec<usize>> = BTreeMap::new();
        for pos in 0..self.dim() {
            out.entry(self.weight_of(pos)).or_default().push(pos);
        }
        out
    }

    fn letter_weight(&self, a: i32) -> WeightVector {
        WeightVector::unit(self.n, a.unsigned_abs() as usize, a.signum())
    }

    /// `X ξ_a` for a natural-module letter.
    fn act_letter(x: &LieElement, a: i32) -> impl Iterator<Item = (i32, i64)> + '_ {
        x.terms().filter(move |t| t.1 == a).map(|(row, _, c)| (row, c))
    }

    /// `X ξ_a^*`, using `E_{a,b} ξ_c^* = -δ_{ca} ξ_b^*`.
    fn act_dual_letter(x: &LieElement, a: i32) -> impl Iterator<Item = (i32, i64)> + '_ {
        x.terms().filter(move |t| t.0 == a).map(|(_, col, c)| (col, -c))
    }

    /// Leibniz action on one basis tuple.
    pub fn act_on_tuple(&self, x: &LieElement, tuple: &[i32]) -> Vec<(i64, Vec<i32>)> {
        let mut out = Vec::new();
        for (k, &a) in tuple.iter().enumerate() {
            let images: Vec<(i32, i64)> = if self.is_covariant_slot(k) {
                Self::act_letter(x, a).collect()
            } else {
                Self::act_dual_letter(x, a).collect()
            };
            for (b, c) in images {
                let mut t = tuple.to_vec();
                t[k] = b;
                out.push((c, t));
            }
        }
        out
    }

    pub fn act(&self, x: &LieElement, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&pos, coeff) in v {
            for (c, t) in self.act_on_tuple(x, &self.tuple(pos)) {
                add_entry(&mut out, self.position(&t), coeff * rat(c));
            }
        }
        out
    }

    pub fn action_matrix(&self, x: &LieElement) -> SparseRationalMatrix {
        let mut m = SparseRationalMatrix::zeros(self.dim(), self.dim());
        for pos in 0..self.dim() {
            for (c, t) in self.act_on_tuple(x, &self.tuple(pos)) {
                m.add_to(self.position(&t), pos, rat(c));
            }
        }
        m
    }

    /// A basis of the Lie algebra acting on this model.
    pub fn generators(&self) -> Vec<Generator> {
        let n = self.n as i32;
        let mut out = Vec::new();
        let mut push = |name: String, element: LieElement| out.push(Generator { name, element });
        match self.algebra {
            AlgebraKind::Gl | AlgebraKind::Sl => {
                for a in 1..=n {
                    for b in 1..=n {
                        if a != b {
                            push(format!("E({a},{b})"), LieElement::unit(a, b));
                        }
                    }
                }
                if self.algebra == AlgebraKind::Gl {
                    for a in 1..=n {
                        push(format!("E({a},{a})"), LieElement::unit(a, a));
                    }
                } else {
                    for a in 1..n {
                        push(format!("H({a})"), LieElement::unit(a, a).plus(-1, a + 1, a + 1));
                    }
                }
            }
            AlgebraKind::Sp | AlgebraKind::So => {
                for i in 1..=n {
                    push(format!("H({i})"), cartan(i));
                }
                for i in 1..=n {
                    for j in 1..=n {
                        if i != j {
                            push(format!("X(e{i}-e{j})"), self.x_minus(i, j));
                        }
                    }
                }
                let diagonal = self.algebra == AlgebraKind::Sp;
                for i in 1..=n {
                    for j in i..=n {
                        if i < j || diagonal {
                            push(format!("X(e{i}+e{j})"), self.x_plus(i, j));
                            push(format!("X(-e{i}-e{j})"), self.x_neg(i, j));
                        }
                    }
                }
            }
        }
        out
    }

    /// `X_{ε_i - ε_j}`.
    fn x_minus(&self, i: i32, j: i32) -> LieElement {
        LieElement::unit(i, j).plus(-1, -j, -i)
    }

    /// `X_{ε_i + ε_j}`.
    fn x_plus(&self, i: i32, j: i32) -> LieElement {
        match self.algebra {
            AlgebraKind::Sp => LieElement::unit(i, -j).plus(1, j, -i),
            _ => LieElement::unit(i, -j).plus(-1, j, -i),
        }
    }

    /// `X_{-ε_i - ε_j}`.
    fn x_neg(&self, i: i32, j: i32) -> LieElement {
        match self.algebra {
            AlgebraKind::Sp => LieElement::unit(-i, j).plus(1, -j, i),
            _ => LieElement::unit(-j, i).plus(-1, -i, j),
        }
    }

    fn root_vector(&self, name: String, element: LieElement) -> RootVector {
        let (a, b, _) = element.terms().next().expect("root vector is nonzero");
        let root = self
            .letter_weight(a)
            .add(&WeightVector(self.letter_weight(b).0.iter().map(|x| -x).collect()));
        RootVector {
            name,
            root,
            element,
        }
    }

    /// Raising operators for the simple roots of the standard Borel.
    pub fn simple_raising(&self) -> Vec<RootVector> {
        let n = self.n as i32;
        let mut out = Vec::new();
        match self.algebra {
            AlgebraKind::Gl | AlgebraKind::Sl => {
                for a in 1..n {
                    out.push(self.root_vector(format!("E({a},{})", a + 1), LieElement::unit(a, a + 1)));
                }
            }
            AlgebraKind::Sp | AlgebraKind::So => {
                for i in 1..n {
                    out.push(self.root_vector(format!("X(e{i}-e{})", i + 1), self.x_minus(i, i + 1)));
                }
                if self.algebra == AlgebraKind::Sp {
                    out.push(self.root_vector(format!("X(2e{n})"), self.x_plus(n, n)));
                } else if n >= 2 {
                    out.push(self.root_vector(format!("X(e{}+e{n})", n - 1), self.x_plus(n - 1, n)));
                }
            }
        }
        out
    }

    /// Root vectors for every positive root.
    pub fn positive_root_vectors(&self) -> Vec<RootVector> {
        let n = self.n as i32;
        let mut out = Vec::new();
        match self.algebra {
            AlgebraKind::Gl | AlgebraKind::Sl => {
                for a in 1..=n {
                    for b in a + 1..=n {
                        out.push(self.root_vector(format!("E({a},{b})"), LieElement::unit(a, b)));
                    }
                }
            }
            AlgebraKind::Sp | AlgebraKind::So => {
                for i in 1..=n {
                    for j in i + 1..=n {
                        out.push(self.root_vector(format!("X(e{i}-e{j})"), self.x_minus(i, j)));
                        out.push(self.root_vector(format!("X(e{i}+e{j})"), self.x_plus(i, j)));
                    }
                    if self.algebra == AlgebraKind::Sp {
                        out.push(self.root_vector(format!("X(2e{i})"), self.x_plus(i, i)));
                    }
                }
            }
        }
        out
    }

    /// The invariant pairing on natural-module letters: `δ` for gl between
    /// `V` and `V_*`, the symplectic form `Ω(ξ_a, ξ_b) = sgn(a) δ_{a+b,0}`
    /// for sp, and the symmetric form `Q(ξ_a, ξ_b) = δ_{a+b,0}` for so.
    pub fn pairing(&self, a: i32, b: i32) -> i64 {
        pairing(self.algebra, a, b)
    }
}

pub(crate) fn pairing(algebra: AlgebraKind, a: i32, b: i32) -> i64 {
    match algebra {
        AlgebraKind::Gl | AlgebraKind::Sl => i64::from(a == b),
        AlgebraKind::Sp if a + b == 0 => i64::from(a.signum()),
        AlgebraKind::So if a + b == 0 => 1,
        _ => 0,
    }
}

fn cartan(i: i32) -> LieElement {
    LieElement::unit(i, i).plus(-1, -i, -i)
}

impl fmt::Display for FiniteModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.algebra.is_mixed() {
            write!(f, "{}_{} on V^({},{})", self.algebra, self.n, self.p, self.q)
        } else {
            write!(f, "{}_{} on V^{}", self.algebra, self.n, self.p)
        }
    }
}

/// Does `x` preserve the bilinear form of an sp or so model?
pub fn preserves_form(model: &FiniteModel, x: &LieElement) -> bool {
    let letters = model.letters();
    letters.iter().all(|&u| {
        letters.iter().all(|&v| {
            let lhs: i64 = x
                .terms()
                .filter(|t| t.1 == u)
                .map(|(a, _, c)| c * model.pairing(a, v))
                .sum();
            let rhs: i64 = x
                .terms()
                .filter(|t| t.1 == v)
                .map(|(a, _, c)| c * model.pairing(u, a))
                .sum();
            lhs + rhs == 0
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn positions_round_trip() {
        for alg in AlgebraKind::ALL {
            let (p, q) = if alg.is_mixed() { (2, 1) } else { (3, 0) };
            let m = FiniteModel::new(alg, 2, p, q).unwrap();
            for pos in 0..m.dim() {
                assert_eq!(m.position(&m.tuple(pos)), pos);
            }
        }
    }

    #[test]
    fn dimensions_and_caps() {
        assert_eq!(FiniteModel::new(AlgebraKind::Gl, 3, 2, 1).unwrap().dim(), 27);
        assert_eq!(FiniteModel::new(AlgebraKind::Sp, 2, 2, 0).unwrap().dim(), 16);
        assert!(matches!(FiniteModel::new(AlgebraKind::Gl, 9, 1, 1), Err(Error::Capacity(_))));
        assert!(matches!(FiniteModel::new(AlgebraKind::So, 3, 5, 0), Err(Error::Capacity(_))));
        assert!(matches!(FiniteModel::new(AlgebraKind::Sp, 2, 1, 1), Err(Error::MixedShape { .. })));
        let big = Capacity::with_max_dim(100_000);
        assert!(FiniteModel::with_capacity(AlgebraKind::Gl, 9, 2, 3, &big).is_ok());
        assert!(FiniteModel::with_capacity(AlgebraKind::Gl, 10, 3, 3, &big).is_err());
    }

    #[test]
    fn generator_counts() {
        let count = |alg, n| FiniteModel::new(alg, n, 1, usize::from(alg == AlgebraKind::Gl || alg == AlgebraKind::Sl)).unwrap().generators().len();
        assert_eq!(count(AlgebraKind::Gl, 3), 9);
        assert_eq!(count(AlgebraKind::Sl, 3), 8);
        assert_eq!(count(AlgebraKind::Sp, 2), 10);
        assert_eq!(count(AlgebraKind::So, 3), 15);
    }

    #[test]
    fn classical_generators_preserve_forms() {
        for alg in [AlgebraKind::Sp, AlgebraKind::So] {
            let m = FiniteModel::new(alg, 3, 1, 0).unwrap();
            for g in m.generators() {
                assert!(preserves_form(&m, &g.element), "{alg} {}", g.name);
            }
        }
    }

    #[test]
    fn simple_roots() {
        let m = FiniteModel::new(AlgebraKind::Sp, 2, 1, 0).unwrap();
        let roots: Vec<_> = m.simple_raising().into_iter().map(|r| r.root).collect();
        assert_eq!(roots, vec![WeightVector(vec![1, -1]), WeightVector(vec![0, 2])]);
        let m = FiniteModel::new(AlgebraKind::So, 3, 1, 0).unwrap();
        let roots: Vec<_> = m.simple_raising().into_iter().map(|r| r.root).collect();
        assert_eq!(
            roots,
            vec![WeightVector(vec![1, -1, 0]), WeightVector(vec![0, 1, -1]), WeightVector(vec![0, 1, 1])]
        );
        assert_eq!(m.positive_root_vectors().len(), 6);
    }

    #[test]
    fn dual_slot_weights() {
        let m = FiniteModel::new(AlgebraKind::Gl, 3, 1, 1).unwrap();
        assert_eq!(m.weight_of_tuple(&[1, 3]), WeightVector(vec![1, 0, -1]));
        assert_eq!(m.weight_of_tuple(&[2, 2]), WeightVector(vec![0, 0, 0]));
    }

    #[test]
    fn root_vectors_shift_weights() {
        let m = FiniteModel::new(AlgebraKind::So, 2, 2, 0).unwrap();
        for rv in m.positive_root_vectors() {
            for pos in 0..m.dim() {
                let w = m.weight_of(pos);
                for (_, t) in m.act_on_tuple(&rv.element, &m.tuple(pos)) {
                    assert_eq!(m.weight_of_tuple(&t), w.add(&rv.root));
                }
            }
        }
    }
}
