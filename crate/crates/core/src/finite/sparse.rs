//! Exact sparse linear algebra over `Q`.
//!
//! Vectors and matrix rows are `BTreeMap`s from column index to a nonzero
//! [`BigRational`]. Rank, kernels and spans go through [`Echelon`], which
//! clears denominators and eliminates over the integers: a row is reduced
//! against a pivot row by cross-multiplication and then divided by the gcd
//! of its entries, so no fractions appear until a kernel vector is read off.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Sparse vector: index to nonzero coefficient.
pub type SparseVec = BTreeMap<usize, Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// `v[i] += c`, dropping the entry if it cancels.
pub fn add_entry(v: &mut SparseVec, i: usize, c: Rational) {
    if c.is_zero() {
        return;
    }
    match v.entry(i) {
        std::collections::btree_map::Entry::Occupied(mut o) => {
            *o.get_mut() += c;
            if o.get().is_zero() {
                o.remove();
            }
        }
        std::collections::btree_map::Entry::Vacant(slot) => {
            slot.insert(c);
        }
    }
}

/// `a += scale * b`.
pub fn axpy(a: &mut SparseVec, scale: &Rational, b: &SparseVec) {
    for (&i, c) in b {
        add_entry(a, i, scale * c);
    }
}

/// Largest absolute coefficient, zero for the zero vector.
pub fn max_norm<K>(v: &BTreeMap<K, Rational>) -> Rational {
    v.values()
        .map(Rational::abs)
        .max()
        .unwrap_or_else(Rational::zero)
}

#[derive(Clone, PartialEq, Eq)]
pub struct SparseRationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<SparseVec>,
}

impl SparseRationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i].insert(i, Rational::one());
        }
        m
    }

    /// Matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, c) in col {
                assert!(i < rows, "column entry {i} out of range {rows}");
                m.data[i].insert(j, c.clone());
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<SparseVec>) -> Self {
        debug_assert!(rows.iter().all(|r| r.keys().all(|&j| j < cols)));
        Self {
            rows: rows.len(),
            cols,
            data: rows,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().map(BTreeMap::len).sum()
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.data[i]
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.data[i].get(&j).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_to(&mut self, i: usize, j: usize, c: Rational) {
        assert!(i < self.rows && j < self.cols);
        add_entry(&mut self.data[i], j, c);
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(BTreeMap::is_empty)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for (i, row) in self.data.iter().enumerate() {
            for (&j, c) in row {
                t.data[j].insert(i, c.clone());
            }
        }
        t
    }

    /// Columns as sparse vectors.
    pub fn columns(&self) -> Vec<SparseVec> {
        self.transpose().data
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::SizeMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for (i, row) in self.data.iter().enumerate() {
            let acc = &mut out.data[i];
            for (&k, a) in row {
                axpy(acc, a, &other.data[k]);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.combine(other, &Rational::one())
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.combine(other, &-Rational::one())
    }

    fn combine(&self, other: &Self, scale: &Rational) -> Result<Self> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::SizeMismatch(format!(
                "{}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            axpy(a, scale, b);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zeros(self.rows, self.cols);
        }
        let data = self
            .data
            .iter()
            .map(|r| r.iter().map(|(&j, x)| (j, x * c)).collect())
            .collect();
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// `self · v`.
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (i, row) in self.data.iter().enumerate() {
            let mut acc = Rational::zero();
            for (j, c) in row {
                if let Some(x) = v.get(j) {
                    acc += c * x;
                }
            }
            if !acc.is_zero() {
                out.insert(i, acc);
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for row in &self.data {
            e.insert_rational(row);
        }
        e.rank()
    }

    /// Basis of the right kernel `{x : self · x = 0}`.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let mut e = Echelon::new();
        for row in &self.data {
            e.insert_rational(row);
        }
        e.kernel(self.cols)
    }

    /// Echelon basis of the column space.
    pub fn column_space(&self) -> Vec<SparseVec> {
        span_basis(&self.columns())
    }
}

impl fmt::Debug for SparseRationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "SparseRationalMatrix {}x{} ({} nnz)", self.rows, self.cols, self.nnz())?;
        for (i, row) in self.data.iter().enumerate().filter(|(_, r)| !r.is_empty()) {
            let cells: Vec<String> = row.iter().map(|(j, c)| format!("{j}:{c}")).collect();
            writeln!(f, "  {i}: {}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Echelon basis of the span of `vectors`.
pub fn span_basis(vectors: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert_rational(v);
    }
    e.basis()
}

/// Dimension of the span of `vectors`.
pub fn span_dim(vectors: &[SparseVec]) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert_rational(v);
    }
    e.rank()
}

/// Sparse integer row, sorted by column.
type IntRow = Vec<(usize, BigInt)>;

fn to_int_row(v: &SparseVec) -> IntRow {
    let lcm = v
        .values()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let row: IntRow = v
        .iter()
        .map(|(&j, c)| (j, c.numer() * (&lcm / c.denom())))
        .collect();
    normalize(row)
}

/// Divide by the content and make the leading entry positive.
fn normalize(mut row: IntRow) -> IntRow {
    let Some(first) = row.first() else {
        return row;
    };
    let mut g = first.1.abs();
    for (_, c) in &row[1..] {
        if g.is_one() {
            break;
        }
        g = g.gcd(c);
    }
    let flip = first.1.is_negative();
    if !g.is_one() || flip {
        let g = if flip { -g } else { g };
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
    row
}

/// `a·x + b·y` on sorted sparse rows.
fn lin_comb(a: &BigInt, x: &IntRow, b: &BigInt, y: &IntRow) -> IntRow {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push((x[i].0, a * &x[i].1));
            i += 1;
        } else if take_y {
            out.push((y[j].0, b * &y[j].1));
            j += 1;
        } else {
            let c = a * &x[i].1 + b * &y[j].1;
            if !c.is_zero() {
                out.push((x[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn entry(row: &IntRow, col: usize) -> Option<&BigInt> {
    row.binary_search_by_key(&col, |e| e.0)
        .ok()
        .map(|k| &row[k].1)
}

/// Incremental fraction-free row echelon form.
///
/// Rows are kept with distinct pivot (leading) columns; a newly inserted row
/// is first cleared at every existing pivot column.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<IntRow>,
    pivot_of: BTreeMap<usize, usize>,
    reduced: bool,
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn clear_pivots(&self, mut row: IntRow) -> IntRow {
        loop {
            let hit = row
                .iter()
                .find_map(|(c, _)| self.pivot_of.get(c).map(|&k| (*c, k)));
            let Some((col, k)) = hit else {
                return row;
            };
            let basis = &self.rows[k];
            let piv = &basis[0].1;
            let val = entry(&row, col).expect("hit column present").clone();
            let g = piv.gcd(&val);
            let a = piv / &g;
            let b = -(val / &g);
            row = normalize(lin_comb(&a, &row, &b, basis));
        }
    }

    /// Adds a row; returns whether it was independent of the rows so far.
    pub fn insert_rational(&mut self, v: &SparseVec) -> bool {
        if v.is_empty() {
            return false;
        }
        self.insert_int(to_int_row(v))
    }

    fn insert_int(&mut self, row: IntRow) -> bool {
        let row = self.clear_pivots(row);
        if row.is_empty() {
            return false;
        }
        self.pivot_of.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        self.reduced = false;
        true
    }

    /// Would `v` enlarge the span?
    pub fn is_independent(&self, v: &SparseVec) -> bool {
        !v.is_empty() && !self.clear_pivots(to_int_row(v)).is_empty()
    }

    /// Clears every pivot column in every other row (reduced echelon form).
    fn reduce(&mut self) {
        if self.reduced {
            return;
        }
        // Rows inserted later are already clear at earlier pivots, so
        // reducing from newest to oldest only ever uses finished rows.
        for k in (0..self.rows.len()).rev() {
            let own = self.rows[k][0].0;
            let mut row = std::mem::take(&mut self.rows[k]);
            loop {
                let hit = row.iter().find_map(|(c, _)| {
                    (*c != own).then(|| self.pivot_of.get(c).map(|&i| (*c, i))).flatten()
                });
                let Some((col, i)) = hit else { break };
                let basis = &self.rows[i];
                let piv = &basis[0].1;
                let val = entry(&row, col).expect("hit column present").clone();
                let g = piv.gcd(&val);
                row = normalize(lin_comb(&(piv / &g), &row, &(-(val / &g)), basis));
            }
            self.rows[k] = row;
        }
        self.reduced = true;
    }

    /// Current rows as rational vectors.
    pub fn basis(&self) -> Vec<SparseVec> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|(j, c)| (*j, Rational::from_integer(c.clone())))
                    .collect()
            })
            .collect()
    }

    /// Basis of `{x ∈ Q^ncols : row · x = 0 for every row}`.
    pub fn kernel(&mut self, ncols: usize) -> Vec<SparseVec> {
        self.reduce();
        let free: Vec<usize> = (0..ncols).filter(|c| !self.pivot_of.contains_key(c)).collect();
        let mut by_free: BTreeMap<usize, SparseVec> =
            free.iter().map(|&f| (f, SparseVec::from([(f, Rational::one())]))).collect();
        for row in &self.rows {
            let (pcol, piv) = (&row[0].0, &row[0].1);
            for (col, a) in &row[1..] {
                if let Some(v) = by_free.get_mut(col) {
                    v.insert(*pcol, Rational::new(-a.clone(), piv.clone()));
                }
            }
        }
        by_free.into_values().collect()
    }
}
