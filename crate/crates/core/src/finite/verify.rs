//! Layer-by-layer comparison of predicted socle diagrams with the
//! contraction filtration of a finite model.

use serde::Serialize;

use super::filtration::{contraction_kernel, kernel_filtration_within, singular_vector_count, symmetrized_space, WeightedSubspace};
use super::model::{Capacity, FiniteModel, WeightVector};
use super::symmetrizer::YoungSymmetrizer;
use super::weyl::{flipped_weight, highest_weight, weyl_dim};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::socle::{socle_layers, AlgebraKind, IrrepLabel};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PredictedConstituent {
    pub label: String,
    pub mult: u64,
    /// `dim Γ_n(label)`; zero for sp labels longer than the rank.
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObservedCount {
    pub label: String,
    pub weight: WeightVector,
    pub count: usize,
    pub expected: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LayerRecord {
    /// 0 is the socle.
    pub r: usize,
    pub predicted: Vec<PredictedConstituent>,
    pub predicted_dim: u64,
    pub observed_dim: usize,
    pub observed_singular_counts: Vec<ObservedCount>,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub algebra: AlgebraKind,
    pub n: usize,
    pub lambda: Partition,
    pub mu: Partition,
    /// `n > p + q` for gl and sl, `n >= d` for sp and so.
    pub stable: bool,
    pub ambient_dim: usize,
    pub layers: Vec<LayerRecord>,
    pub pass: bool,
}

impl VerificationReport {
    /// Observed singular counts, layer by layer. The two weights of a
    /// full-length so label collapse to one entry when their counts agree,
    /// so reports at different ranks compare equal.
    pub fn observed_counts(&self) -> Vec<Vec<(String, usize)>> {
        self.layers
            .iter()
            .map(|l| {
                let mut counts: Vec<(String, usize)> = l
                    .observed_singular_counts
                    .iter()
                    .map(|c| (c.label.clone(), c.count))
                    .collect();
                counts.dedup();
                counts
            })
            .collect()
    }

    pub fn summary(&self) -> String {
        let dims: Vec<String> = self
            .layers
            .iter()
            .map(|l| format!("{}/{}", l.observed_dim, l.predicted_dim))
            .collect();
        format!(
            "{} n={} λ={} μ={}: layer dims observed/predicted [{}] {}",
            self.algebra,
            self.n,
            self.lambda,
            self.mu,
            dims.join(", "),
            if self.pass { "PASS" } else { "FAIL" }
        )
    }
}

/// Do the reports (for the same `λ, μ` at several ranks) observe the
/// same multiplicities?
pub fn counts_agree(reports: &[VerificationReport]) -> bool {
    reports
        .windows(2)
        .all(|w| w[0].observed_counts() == w[1].observed_counts())
}

pub fn is_stable_rank(algebra: AlgebraKind, n: usize, p: usize, q: usize) -> bool {
    if algebra.is_mixed() {
        n > p + q
    } else {
        n >= p
    }
}

pub fn verify_layer_multiplicities(
    algebra: AlgebraKind,
    n: usize,
    lambda: &Partition,
    mu: &Partition,
) -> Result<VerificationReport> {
    verify_with_capacity(algebra, n, lambda, mu, &Capacity::default())
}

pub fn verify_with_capacity(
    algebra: AlgebraKind,
    n: usize,
    lambda: &Partition,
    mu: &Partition,
    capacity: &Capacity,
) -> Result<VerificationReport> {
    let diagram = socle_layers(algebra, lambda, mu)?;
    let p = lambda.weight();
    let q = mu.weight();
    let model = FiniteModel::with_capacity(algebra, n, p, q, capacity)?;
    // gl and so need the top label itself to exist at this rank.
    if algebra != AlgebraKind::Sp {
        highest_weight(&IrrepLabel::new(algebra, lambda.clone(), mu.clone())?, n)?;
    }

    let mut symmetrizers = vec![YoungSymmetrizer::covariant(lambda, &model)?];
    if algebra.is_mixed() {
        symmetrizers.push(YoungSymmetrizer::contravariant(mu, &model)?);
    }
    let ambient = symmetrized_space(&model, &symmetrizers);
    let depth = diagram.loewy_length();
    let mut filtration = vec![WeightedSubspace::new()];
    filtration.extend(kernel_filtration_within(&model, &ambient, depth - 1)?);
    filtration.push(contraction_kernel(&model, &ambient, depth)?);

    let mut layers = Vec::with_capacity(depth);
    for (r, layer) in diagram.layers().iter().enumerate() {
        let (top, bottom) = (&filtration[r + 1], &filtration[r]);
        let mut predicted = Vec::new();
        let mut counts = Vec::new();
        let mut predicted_dim = 0;
        for (label, mult) in layer.iter() {
            let visible = algebra != AlgebraKind::Sp || label.covariant().len() <= n;
            let dim = if visible { weyl_dim(label, n)? } else { 0 };
            predicted_dim += mult * dim;
            predicted.push(PredictedConstituent {
                label: label.to_string(),
                mult,
                dim,
            });
            if !visible {
                continue;
            }
            let omega = highest_weight(label, n)?;
            let flipped = flipped_weight(label, &omega);
            for weight in std::iter::once(omega).chain(flipped) {
                counts.push(ObservedCount {
                    label: label.to_string(),
                    count: singular_vector_count(&model, top, bottom, &weight)?,
                    weight,
                    expected: mult,
                });
            }
        }
        let observed_dim = top.dim() - bottom.dim();
        let pass = observed_dim as u64 == predicted_dim
            && counts.iter().all(|c| c.count as u64 == c.expected);
        layers.push(LayerRecord {
            r,
            predicted,
            predicted_dim,
            observed_dim,
            observed_singular_counts: counts,
            pass,
        });
    }
    let accounted = filtration[depth].dim() == ambient.dim();
    Ok(VerificationReport {
        algebra,
        n,
        lambda: lambda.clone(),
        mu: mu.clone(),
        stable: is_stable_rank(algebra, n, p, q),
        ambient_dim: ambient.dim(),
        pass: accounted && layers.iter().all(|l| l.pass),
        layers,
    })
}

/// Runs the check at each rank in `ns`; the first error aborts.
pub fn verify_ranks(
    algebra: AlgebraKind,
    ns: &[usize],
    lambda: &Partition,
    mu: &Partition,
    capacity: &Capacity,
) -> Result<Vec<VerificationReport>> {
    if ns.is_empty() {
        return Err(Error::InvalidShape("no ranks to verify".into()));
    }
    ns.iter()
        .map(|&n| verify_with_capacity(algebra, n, lambda, mu, capacity))
        .collect()
}
