//! Integer partitions and the symmetric-group data attached to them.
//!
//! A [`Partition`] is stored as its list of positive parts in weakly
//! decreasing order; the zero partition is the empty list. Parts past the
//! length are treated as zero in every comparison, which for positive parts
//! coincides with plain lexicographic order on the stored vectors.
//!
//! The canonical order for lists of partitions is *decreasing*
//! lexicographic, so `(2)` comes before `(1,1)`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition, rejecting zero parts and increasing sequences.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(pos) = parts.iter().position(|&p| p == 0) {
            return Err(Error::ParsePartition {
                text: join_parts(&parts),
                reason: format!("part {} is zero", pos + 1),
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::ParsePartition {
                text: join_parts(&parts),
                reason: "parts must be weakly decreasing".into(),
            });
        }
        Ok(Self { parts })
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// Single-row partition `(k)`; `k = 0` gives the zero partition.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::zero()
        } else {
            Self { parts: vec![k] }
        }
    }

    /// Single-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Self { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn is_zero(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// `|λ|`.
    pub fn weight(&self) -> usize {
        self.parts.iter().map(|&p| p as usize).sum()
    }

    /// Conjugate partition: `(λᵀ)_i = #{j : λ_j ≥ i}`.
    pub fn transpose(&self) -> Self {
        let first = self.part(1);
        let parts = (1..=first)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count() as u32)
            .collect();
        Self { parts }
    }

    /// `2λ`, every part doubled.
    pub fn double(&self) -> Self {
        Self {
            parts: self.parts.iter().map(|p| 2 * p).collect(),
        }
    }

    /// Young-diagram inclusion `self ⊆ other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Row-major `(row, column)` cells of the Young diagram, 0-based.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
    }

    /// Hook length of the cell at 0-based `(row, col)`.
    pub fn hook(&self, row: usize, col: usize) -> usize {
        let arm = self.parts[row] as usize - col - 1;
        let leg = self.parts[row + 1..]
            .iter()
            .take_while(|&&p| p as usize > col)
            .count();
        arm + leg + 1
    }

    /// Text form used on the command line and in JSON: `"2,1"`, `"0"` for zero.
    pub fn to_csv(&self) -> String {
        if self.is_zero() {
            "0".into()
        } else {
            join_parts(&self.parts)
        }
    }
}

fn join_parts(parts: &[u32]) -> String {
    parts
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// Parenthesized form, `(2,1)` and `(0)`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if trimmed.is_empty() || trimmed == "0" {
            return Ok(Self::zero());
        }
        let parts = trimmed
            .split(',')
            .map(|tok| {
                tok.trim().parse::<u32>().map_err(|e| Error::ParsePartition {
                    text: s.to_string(),
                    reason: format!("`{}`: {e}", tok.trim()),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts).map_err(|e| match e {
            Error::ParsePartition { reason, .. } => Error::ParsePartition {
                text: s.to_string(),
                reason,
            },
            other => other,
        })
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Self::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_csv())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for literal partitions in tests and tables; panics on bad input.
#[macro_export]
macro_rules! part {
    () => {
        $crate::partitions::Partition::zero()
    };
    ($($p:expr),+ $(,)?) => {
        $crate::partitions::Partition::new(vec![$($p),+]).expect("valid partition literal")
    };
}

/// All partitions of `d`, in decreasing lexicographic order.
pub fn partitions_of(d: usize) -> Vec<Partition> {
    fn extend(rest: usize, max: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=rest.min(max)).rev() {
            prefix.push(first as u32);
            extend(rest - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(d, d, &mut Vec::new(), &mut out);
    out
}

/// Partitions `μ ⊆ λ` such that `λ/μ` is a horizontal strip (at most one
/// box per column), i.e. `λ_{i+1} ≤ μ_i ≤ λ_i`.
pub fn horizontal_strip_predecessors(lambda: &Partition) -> Vec<Partition> {
    fn go(lambda: &Partition, i: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if i == lambda.len() {
            let parts: Vec<u32> = prefix.iter().copied().filter(|&p| p > 0).collect();
            out.push(Partition { parts });
            return;
        }
        let hi = lambda.parts[i];
        let lo = lambda.part(i + 2);
        for m in (lo..=hi).rev() {
            prefix.push(m);
            go(lambda, i + 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, &mut Vec::new(), &mut out);
    out
}

/// `dim H_λ`, the dimension of the irreducible `S_d`-module, by the hook
/// length formula.
pub fn sym_group_irrep_dim(lambda: &Partition) -> u64 {
    let d = lambda.weight();
    let factorial: u128 = (1..=d as u128).product();
    let hooks: u128 = lambda
        .cells()
        .map(|(r, c)| lambda.hook(r, c) as u128)
        .product();
    (factorial / hooks) as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Counts standard Young tableaux by removing corners one at a time.
    fn count_syt(lambda: &Partition) -> u64 {
        if lambda.is_zero() {
            return 1;
        }
        let mut total = 0;
        for i in 0..lambda.len() {
            let is_corner = lambda.parts[i] > lambda.part(i + 2);
            if is_corner {
                let mut parts = lambda.parts.clone();
                parts[i] -= 1;
                parts.retain(|&p| p > 0);
                total += count_syt(&Partition { parts });
            }
        }
        total
    }

    #[test]
    fn weight_examples() {
        assert_eq!(part![].weight(), 0);
        assert_eq!(part![2, 1].weight(), 3);
        assert_eq!(part![3, 3, 1].weight(), 7);
    }

    #[test]
    fn transpose_examples() {
        assert_eq!(part![2, 1].transpose(), part![2, 1]);
        assert_eq!(part![3, 1].transpose(), part![2, 1, 1]);
        assert_eq!(part![2, 2].transpose(), part![2, 2]);
        assert_eq!(part![].transpose(), part![]);
    }

    #[test]
    fn double_examples() {
        assert_eq!(part![].double(), part![]);
        assert_eq!(part![1, 1].double(), part![2, 2]);
        assert_eq!(part![2, 1].double(), part![4, 2]);
    }

    #[test]
    fn partitions_of_small() {
        assert_eq!(partitions_of(0), vec![part![]]);
        assert_eq!(partitions_of(2), vec![part![2], part![1, 1]]);
        assert_eq!(partitions_of(4).len(), 5);
        let counts: Vec<usize> = (0..=10).map(|d| partitions_of(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
    }

    #[test]
    fn partitions_of_is_strictly_decreasing() {
        for d in 0..=9 {
            let ps = partitions_of(d);
            assert!(ps.windows(2).all(|w| w[0] > w[1]));
            assert!(ps.iter().all(|p| p.weight() == d));
        }
    }

    #[test]
    fn irrep_dims() {
        assert_eq!(sym_group_irrep_dim(&part![1, 1, 1]), 1);
        assert_eq!(sym_group_irrep_dim(&part![2, 1]), 2);
        assert_eq!(sym_group_irrep_dim(&part![3, 1]), 3);
        assert_eq!(sym_group_irrep_dim(&part![2, 2]), 2);
        assert_eq!(sym_group_irrep_dim(&part![]), 1);
    }

    #[test]
    fn hook_formula_matches_tableau_count() {
        for d in 0..=8 {
            for p in partitions_of(d) {
                assert_eq!(sym_group_irrep_dim(&p), count_syt(&p), "{p}");
            }
        }
    }

    #[test]
    fn regular_representation_identity() {
        for d in 0..=8u64 {
            let sum: u64 = partitions_of(d as usize)
                .iter()
                .map(|p| sym_group_irrep_dim(p).pow(2))
                .sum();
            assert_eq!(sum, (1..=d).product::<u64>().max(1));
        }
    }

    #[test]
    fn transpose_involution_and_weight() {
        for d in 0..=8 {
            for p in partitions_of(d) {
                assert_eq!(p.transpose().transpose(), p);
                assert_eq!(p.transpose().weight(), d);
            }
        }
    }

    #[test]
    fn parse_and_print() {
        assert_eq!("2,1".parse::<Partition>().unwrap(), part![2, 1]);
        assert_eq!("".parse::<Partition>().unwrap(), part![]);
        assert_eq!("0".parse::<Partition>().unwrap(), part![]);
        assert_eq!("(3, 1)".parse::<Partition>().unwrap(), part![3, 1]);
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(part![2, 1].to_csv(), "2,1");
        assert_eq!(part![].to_csv(), "0");
        assert_eq!(part![2, 1].to_string(), "(2,1)");
        assert_eq!(part![].to_string(), "(0)");
    }

    #[test]
    fn horizontal_strips() {
        let preds = horizontal_strip_predecessors(&part![2, 1]);
        assert_eq!(preds, vec![part![2, 1], part![2], part![1, 1], part![1]]);
        let preds = horizontal_strip_predecessors(&part![]);
        assert_eq!(preds, vec![part![]]);
    }
}
