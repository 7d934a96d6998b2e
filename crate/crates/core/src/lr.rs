//! Littlewood–Richardson coefficients `N^ν_{λ,μ}` and a Schur-polynomial
//! oracle to check them against.
//!
//! The coefficients are counted directly: a filling of the skew diagram
//! `ν/λ` with content `μ` is accepted when rows weakly increase, columns
//! strictly increase, and the reverse reading word (right to left, top to
//! bottom) is a lattice word. Inputs are small, so plain backtracking is
//! fast; results are memoized per process.
//!
//! The oracle multiplies Schur polynomials expanded over semistandard
//! tableaux and peels the product back into Schur polynomials by leading
//! monomial. It never touches the tableau-counting code above.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use crate::partitions::{horizontal_strip_predecessors, partitions_of, Partition};

type LrKey = (Partition, Partition, Partition);

fn cache() -> &'static Mutex<HashMap<LrKey, u64>> {
    static CACHE: OnceLock<Mutex<HashMap<LrKey, u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `N^ν_{λ,μ}`: multiplicity of `s_ν` in `s_λ s_μ`.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !lambda.is_contained_in(nu) {
        return 0;
    }
    if !mu.is_contained_in(nu) {
        return 0;
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(&hit) = cache().lock().expect("lr cache poisoned").get(&key) {
        return hit;
    }
    let value = count_lr_tableaux(lambda, mu, nu);
    cache()
        .lock()
        .expect("lr cache poisoned")
        .insert(key, value);
    value
}

fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // Skew cells in reverse reading order: top row first, right to left.
    let mut cells = Vec::with_capacity(mu.weight());
    for r in 0..nu.len() {
        let lo = lambda.part(r + 1) as usize;
        let hi = nu.part(r + 1) as usize;
        for c in (lo..hi).rev() {
            cells.push((r, c));
        }
    }
    let width = nu.part(1) as usize;
    let mut grid = vec![0u32; nu.len() * width];
    let mut counts = vec![0u32; mu.len() + 1];
    let content: Vec<u32> = mu.parts().to_vec();

    struct Search<'a> {
        cells: &'a [(usize, usize)],
        grid: &'a mut [u32],
        counts: &'a mut [u32],
        content: &'a [u32],
        lambda: &'a Partition,
        nu: &'a Partition,
        width: usize,
    }

    impl Search<'_> {
        fn run(&mut self, k: usize) -> u64 {
            let Some(&(r, c)) = self.cells.get(k) else {
                return 1;
            };
            let mut max_v = self.content.len() as u32;
            if c + 1 < self.nu.part(r + 1) as usize {
                max_v = max_v.min(self.grid[r * self.width + c + 1]);
            }
            let mut min_v = 1;
            if r > 0 && c >= self.lambda.part(r) as usize {
                min_v = self.grid[(r - 1) * self.width + c] + 1;
            }
            let mut total = 0;
            for v in min_v..=max_v {
                let vi = v as usize;
                if self.counts[vi] >= self.content[vi - 1] {
                    continue;
                }
                if vi > 1 && self.counts[vi] >= self.counts[vi - 1] {
                    continue;
                }
                self.counts[vi] += 1;
                self.grid[r * self.width + c] = v;
                total += self.run(k + 1);
                self.counts[vi] -= 1;
            }
            self.grid[r * self.width + c] = 0;
            total
        }
    }

    Search {
        cells: &cells,
        grid: &mut grid,
        counts: &mut counts,
        content: &content,
        lambda,
        nu,
        width,
    }
    .run(0)
}

/// `s_λ s_μ = Σ_ν N^ν_{λ,μ} s_ν`, zero terms omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SchurExpansion {
    terms: BTreeMap<Partition, u64>,
}

impl SchurExpansion {
    pub fn terms(&self) -> &BTreeMap<Partition, u64> {
        &self.terms
    }

    pub fn coefficient(&self, nu: &Partition) -> u64 {
        self.terms.get(nu).copied().unwrap_or(0)
    }

    /// Terms in canonical (decreasing lexicographic) order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, u64)> {
        self.terms.iter().rev().map(|(p, &m)| (p, m))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl FromIterator<(Partition, u64)> for SchurExpansion {
    fn from_iter<I: IntoIterator<Item = (Partition, u64)>>(iter: I) -> Self {
        let mut terms = BTreeMap::new();
        for (p, m) in iter {
            if m > 0 {
                *terms.entry(p).or_insert(0) += m;
            }
        }
        Self { terms }
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(p, m)| format!("{p}:{m}")).collect();
        f.write_str(&parts.join(" "))
    }
}

pub fn schur_product_expand(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    partitions_of(lambda.weight() + mu.weight())
        .into_iter()
        .map(|nu| {
            let m = lr_coefficient(lambda, mu, &nu);
            (nu, m)
        })
        .collect()
}

/// Polynomial in `nvars` commuting variables with integer coefficients,
/// keyed by exponent vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, i64>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        let mut p = Self::zero(nvars);
        p.terms.insert(vec![0; nvars], 1);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i64> {
        &self.terms
    }

    pub fn coefficient(&self, exponents: &[u32]) -> i64 {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, exponents: Vec<u32>, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(exponents);
        match entry {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &Polynomial, scale: i64) {
        assert_eq!(self.nvars, other.nvars);
        for (e, &c) in &other.terms {
            self.add_term(e.clone(), scale * c);
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
}

/// Schur polynomial `s_λ(x_1, …, x_k)` as a sum over semistandard tableaux
/// with entries in `1..=k`, built one horizontal strip (one entry value) at
/// a time. Empty when `k < ℓ(λ)`.
pub fn schur_polynomial(lambda: &Partition, k: usize) -> Polynomial {
    let mut memo = HashMap::new();
    schur_rec(lambda, k, &mut memo)
}

fn schur_rec(
    lambda: &Partition,
    k: usize,
    memo: &mut HashMap<(Partition, usize), Polynomial>,
) -> Polynomial {
    if lambda.len() > k {
        return Polynomial::zero(k);
    }
    if k == 0 {
        return Polynomial::one(0);
    }
    if let Some(p) = memo.get(&(lambda.clone(), k)) {
        return p.clone();
    }
    let mut out = Polynomial::zero(k);
    for inner in horizontal_strip_predecessors(lambda) {
        if inner.len() > k - 1 {
            continue;
        }
        let strip = (lambda.weight() - inner.weight()) as u32;
        let sub = schur_rec(&inner, k - 1, memo);
        for (e, &c) in sub.terms() {
            let mut ext = e.clone();
            ext.push(strip);
            out.add_term(ext, c);
        }
    }
    memo.insert((lambda.clone(), k), out.clone());
    out
}

/// Enough variables to separate every `s_ν` in `s_λ s_μ`: each such `ν`
/// has at most `ℓ(λ) + ℓ(μ)` rows.
fn oracle_vars(lambda: &Partition, mu: &Partition) -> usize {
    (lambda.len() + mu.len()).max(1)
}

/// Oracle expansion of `s_λ s_μ`: multiply the polynomials in
/// `ℓ(λ)+ℓ(μ)` variables, then repeatedly subtract `c·s_α` for the
/// lexicographically largest surviving monomial `x^α`.
pub fn polynomial_expand(lambda: &Partition, mu: &Partition) -> SchurExpansion {
    let k = oracle_vars(lambda, mu);
    let mut rest = schur_polynomial(lambda, k).mul(&schur_polynomial(mu, k));
    let mut terms = Vec::new();
    while let Some((lead, &c)) = rest.terms().iter().next_back() {
        let parts: Vec<u32> = lead.iter().copied().filter(|&e| e > 0).collect();
        let nu = Partition::new(parts).expect("leading monomial of a symmetric polynomial is a partition");
        assert!(c > 0, "negative Schur coefficient {c} at {nu}");
        let s_nu = schur_polynomial(&nu, k);
        rest.add_scaled(&s_nu, -c);
        terms.push((nu, c as u64));
    }
    terms.into_iter().collect()
}

/// Coefficient-by-coefficient comparison of `s_λ s_μ` against
/// `Σ_ν N^ν_{λ,μ} s_ν` in `ℓ(λ)+ℓ(μ)` variables.
pub fn oracle_agrees(lambda: &Partition, mu: &Partition) -> bool {
    let k = oracle_vars(lambda, mu);
    let product = schur_polynomial(lambda, k).mul(&schur_polynomial(mu, k));
    let mut sum = Polynomial::zero(k);
    for (nu, m) in schur_product_expand(lambda, mu).iter() {
        sum.add_scaled(&schur_polynomial(nu, k), m as i64);
    }
    product == sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn multiplication_by_one() {
        for d in 0..=5 {
            for l in partitions_of(d) {
                assert_eq!(lr_coefficient(&l, &part![], &l), 1);
                assert_eq!(lr_coefficient(&part![], &l, &l), 1);
            }
        }
    }

    // Expected values below come from `polynomial_expand`, the independent
    // Schur-polynomial route, and are frozen here.
    #[test]
    fn frozen_oracle_values() {
        assert_eq!(lr_coefficient(&part![1], &part![1], &part![2]), 1);
        assert_eq!(lr_coefficient(&part![1], &part![1], &part![1, 1]), 1);
        assert_eq!(lr_coefficient(&part![1, 1], &part![1, 1], &part![2, 2]), 1);
        assert_eq!(lr_coefficient(&part![2], &part![1, 1], &part![2, 2]), 0);
        assert_eq!(lr_coefficient(&part![2, 1], &part![2, 1], &part![3, 2, 1]), 2);
        assert_eq!(lr_coefficient(&part![2, 1], &part![2, 1], &part![4, 2]), 1);
    }

    #[test]
    fn frozen_values_match_oracle() {
        let cases = [
            (part![1], part![1], part![2], 1),
            (part![1], part![1], part![1, 1], 1),
            (part![1, 1], part![1, 1], part![2, 2], 1),
            (part![2], part![1, 1], part![2, 2], 0),
            (part![2, 1], part![2, 1], part![3, 2, 1], 2),
            (part![2, 1], part![2, 1], part![4, 2], 1),
        ];
        for (l, m, n, want) in cases {
            assert_eq!(polynomial_expand(&l, &m).coefficient(&n), want, "{l} {m} {n}");
        }
    }

    #[test]
    fn product_expansions() {
        let e = schur_product_expand(&part![1], &part![1]);
        assert_eq!(e.to_string(), "(2):1 (1,1):1");
        let e = schur_product_expand(&part![2], &part![1]);
        assert_eq!(e.to_string(), "(3):1 (2,1):1");
        let e = schur_product_expand(&part![1], &part![]);
        assert_eq!(e.to_string(), "(1):1");
    }

    #[test]
    fn schur_polynomial_examples() {
        let p = schur_polynomial(&part![1], 2);
        assert_eq!(p.terms().len(), 2);
        assert_eq!(p.coefficient(&[1, 0]), 1);
        assert_eq!(p.coefficient(&[0, 1]), 1);

        let p = schur_polynomial(&part![1, 1], 2);
        assert_eq!(p.terms().len(), 1);
        assert_eq!(p.coefficient(&[1, 1]), 1);

        let p = schur_polynomial(&part![2], 2);
        assert_eq!(p.terms().len(), 3);
        for e in [[2, 0], [1, 1], [0, 2]] {
            assert_eq!(p.coefficient(&e), 1);
        }

        assert!(schur_polynomial(&part![1, 1, 1], 2).is_zero());
    }

    #[test]
    fn schur_polynomial_term_count_is_tableau_count() {
        // s_(2,1)(x1,x2,x3) has 8 tableaux: monomials x^α with coefficient
        // K_{(2,1),α}; x1x2x3 appears twice.
        let p = schur_polynomial(&part![2, 1], 3);
        let total: i64 = p.terms().values().sum();
        assert_eq!(total, 8);
        assert_eq!(p.coefficient(&[1, 1, 1]), 2);
    }

    #[test]
    fn degree_vanishing() {
        for a in 0..=3 {
            for b in 0..=3 {
                for c in 0..=6 {
                    if c == a + b {
                        continue;
                    }
                    for l in partitions_of(a) {
                        for m in partitions_of(b) {
                            for n in partitions_of(c) {
                                assert_eq!(lr_coefficient(&l, &m, &n), 0);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn commutativity() {
        for a in 0..=4 {
            for b in 0..=4 {
                for l in partitions_of(a) {
                    for m in partitions_of(b) {
                        for n in partitions_of(a + b) {
                            assert_eq!(lr_coefficient(&l, &m, &n), lr_coefficient(&m, &l, &n));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn oracle_small() {
        for a in 0..=3 {
            for b in 0..=3 {
                for l in partitions_of(a) {
                    for m in partitions_of(b) {
                        assert!(oracle_agrees(&l, &m), "{l} {m}");
                        assert_eq!(polynomial_expand(&l, &m), schur_product_expand(&l, &m));
                    }
                }
            }
        }
    }
}
