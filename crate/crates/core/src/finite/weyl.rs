//! Weyl dimension formula for the finite-rank irreducibles `Γ_n(λ, μ)`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};

use super::model::WeightVector;
use super::sparse::Rational;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::socle::{AlgebraKind, IrrepLabel};

/// Highest weight of a label at rank `n`: `(λ_1, …, 0, …, -μ_l, …, -μ_1)`
/// for gl and sl, `(λ_1, …, λ_k, 0, …)` for sp and so.
pub fn highest_weight(label: &IrrepLabel, n: usize) -> Result<WeightVector> {
    let lambda = label.covariant();
    let mu = label.contravariant();
    let too_long = |len: usize| {
        if len > n {
            Err(Error::RankTooSmall {
                label: label.to_string(),
                rank: n,
            })
        } else {
            Ok(())
        }
    };
    if label.algebra().is_mixed() {
        too_long(lambda.len() + mu.len())?;
        let mut w = vec![0; n];
        for (i, &x) in lambda.parts().iter().enumerate() {
            w[i] = x as i32;
        }
        for (i, &x) in mu.parts().iter().enumerate() {
            w[n - 1 - i] = -(x as i32);
        }
        Ok(WeightVector(w))
    } else {
        too_long(lambda.len())?;
        Ok(WeightVector(padded(lambda, n)))
    }
}

fn padded(lambda: &Partition, n: usize) -> Vec<i32> {
    (1..=n).map(|i| lambda.part(i) as i32).collect()
}

/// Dimension of the irreducible with a dominant highest weight `omega`.
pub fn weyl_dim_of_weight(algebra: AlgebraKind, omega: &WeightVector) -> Result<u64> {
    let n = omega.0.len();
    let w: Vec<i64> = omega.0.iter().map(|&x| i64::from(x)).collect();
    let rho: Vec<i64> = match algebra {
        AlgebraKind::Gl | AlgebraKind::Sl | AlgebraKind::So => (0..n as i64).rev().collect(),
        AlgebraKind::Sp => (1..=n as i64).rev().collect(),
    };
    let l: Vec<i64> = w.iter().zip(&rho).map(|(a, b)| a + b).collect();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    let mut factor = |a: i64, b: i64| {
        num *= a;
        den *= b;
    };
    for i in 0..n {
        for j in i + 1..n {
            factor(l[i] - l[j], rho[i] - rho[j]);
            if !algebra.is_mixed() {
                factor(l[i] + l[j], rho[i] + rho[j]);
            }
        }
        if algebra == AlgebraKind::Sp {
            factor(l[i], rho[i]);
        }
    }
    let dim = Rational::new(num, den);
    if !dim.is_integer() {
        return Err(Error::InvalidShape(format!("{omega} is not an integral dominant weight")));
    }
    dim.to_integer()
        .to_u64()
        .ok_or_else(|| Error::InvalidShape(format!("dimension at {omega} is negative or too large")))
}

/// `dim Γ_n(label)` by the Weyl dimension formula.
///
/// For so with `ℓ(λ) = n` and `λ_n > 0` this is the sum over the two
/// highest weights `(…, ±λ_n)`.
pub fn weyl_dim(label: &IrrepLabel, n: usize) -> Result<u64> {
    let omega = highest_weight(label, n)?;
    let base = weyl_dim_of_weight(label.algebra(), &omega)?;
    Ok(match flipped_weight(label, &omega) {
        Some(other) => base + weyl_dim_of_weight(label.algebra(), &other)?,
        None => base,
    })
}

/// The second highest weight `(…, -λ_n)` of an so label of full length.
pub fn flipped_weight(label: &IrrepLabel, omega: &WeightVector) -> Option<WeightVector> {
    let last = *omega.0.last()?;
    (label.algebra() == AlgebraKind::So && last > 0).then(|| {
        let mut w = omega.clone();
        *w.0.last_mut().expect("nonempty") = -last;
        w
    })
}
