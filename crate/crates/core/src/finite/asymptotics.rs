//! Numerical probe of `Ξ_{J_1} Φ_{J_2..J_r} Ψ_{I_1..I_r} → δ_{I,J}` as the
//! rank grows, for gl.
//!
//! The probe never builds a model: it pushes one tuple-keyed vector through
//! the maps, so ranks well past the model caps are cheap.

use std::collections::BTreeSet;

use num_traits::Zero;

use super::maps::{contract_tuple, insert_tuple, insertion_scale, map_tuple_vec, slot_positions, xi_tuple, SlotPair, TupleVec};
use super::sparse::{max_norm, ratio, Rational};
use super::symmetrizer::YoungSymmetrizer;
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::socle::AlgebraKind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProbePoint {
    pub n: usize,
    pub deviation: Rational,
}

/// `c_λ ⊗ c_μ` applied to `ξ_1 ⊗ … ⊗ ξ_p ⊗ ξ_{p+1}^* ⊗ … ⊗ ξ_{p+q}^*`,
/// then projected with `∏_I (1 - θ_I)`.
///
/// All letters are distinct, so every contraction already vanishes and the
/// projection is checked rather than relied on.
pub fn probe_vector(lambda: &Partition, mu: &Partition, n: usize) -> Result<TupleVec> {
    let p = lambda.weight();
    let q = mu.weight();
    if n <= p + q {
        return Err(Error::InvalidShape(format!("probe needs n > {}", p + q)));
    }
    let pattern: Vec<i32> = (1..=(p + q) as i32).collect();
    let cov = YoungSymmetrizer::new(lambda, (0..p).collect())?;
    let con = YoungSymmetrizer::new(mu, (p..p + q).collect())?;
    let mut v = TupleVec::from([(pattern, Rational::from_integer(1.into()))]);
    v = map_tuple_vec(&v, |t| cov.apply_tuple(t));
    v = map_tuple_vec(&v, |t| con.apply_tuple(t));

    let letters: Vec<i32> = (1..=n as i32).collect();
    let scale = ratio(1, insertion_scale(AlgebraKind::Gl, n));
    let singles: Vec<(usize, usize)> = (1..=p)
        .flat_map(|i| (1..=q).map(move |j| (i, j)))
        .map(|pair| slot_positions(AlgebraKind::Gl, p, q, &[pair]).map(|s| s[0]))
        .collect::<Result<_>>()?;
    for &pos in &singles {
        let down = map_tuple_vec(&v, |t| contract_tuple(AlgebraKind::Gl, t, &[pos]));
        let back = map_tuple_vec(&down, |t| insert_tuple(AlgebraKind::Gl, &letters, t, &[pos], p + q));
        for (t, x) in back {
            *v.entry(t).or_insert_with(Rational::zero) -= x * &scale;
        }
        v.retain(|_, x| !x.is_zero());
    }
    for &pos in &singles {
        if !map_tuple_vec(&v, |t| contract_tuple(AlgebraKind::Gl, t, &[pos])).is_empty() {
            return Err(Error::NonInvariant("probe vector is not traceless".into()));
        }
    }
    Ok(v)
}

/// Deviation of `Ξ_{J_1} Φ_{J_2..J_r} Ψ_{I_1..I_r} v` from its limit at each
/// `n`, in the max-coordinate norm. Pairs are numbered in `V^{(p+r, q+r)}`.
pub fn asymptotics_probe(
    lambda: &Partition,
    mu: &Partition,
    i_set: &[SlotPair],
    j_set: &[SlotPair],
    ns: &[usize],
) -> Result<Vec<ProbePoint>> {
    let p = lambda.weight();
    let q = mu.weight();
    let r = i_set.len();
    if r == 0 || j_set.len() != r {
        return Err(Error::InvalidShape(format!(
            "need equally many I and J pairs, got {} and {}",
            r,
            j_set.len()
        )));
    }
    let i_pos = slot_positions(AlgebraKind::Gl, p + r, q + r, i_set)?;
    let j_pos = slot_positions(AlgebraKind::Gl, p + r, q + r, j_set)?;
    let rest = &j_pos[1..];
    let removed: Vec<usize> = rest.iter().flat_map(|&(a, b)| [a, b]).collect();
    let shift = |x: usize| x - removed.iter().filter(|&&y| y < x).count();
    let first = (shift(j_pos[0].0), shift(j_pos[0].1));
    let same = i_set.iter().collect::<BTreeSet<_>>() == j_set.iter().collect::<BTreeSet<_>>();

    ns.iter()
        .map(|&n| {
            let v = probe_vector(lambda, mu, n)?;
            let letters: Vec<i32> = (1..=n as i32).collect();
            let len = p + q + 2 * r;
            let scale = ratio(1, insertion_scale(AlgebraKind::Gl, n).pow(r as u32));
            let w = map_tuple_vec(&v, |t| insert_tuple(AlgebraKind::Gl, &letters, t, &i_pos, len));
            let w = map_tuple_vec(&w, |t| contract_tuple(AlgebraKind::Gl, t, rest));
            let mut w: TupleVec = map_tuple_vec(&w, |t| xi_tuple(n as i32, t, first))
                .into_iter()
                .map(|(t, x)| (t, x * &scale))
                .collect();
            if same {
                for (t, x) in &v {
                    *w.entry(t.clone()).or_insert_with(Rational::zero) -= x;
                }
            }
            Ok(ProbePoint {
                n,
                deviation: max_norm(&w),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite::sparse::ratio;
    use crate::part;

    #[test]
    fn matching_single_pair_is_exact() {
        let pts = asymptotics_probe(&part![1], &part![1], &[(1, 1)], &[(1, 1)], &[4, 8]).unwrap();
        assert!(pts.iter().all(|p| p.deviation.is_zero()));
    }

    #[test]
    fn disjoint_single_pair_vanishes() {
        let pts = asymptotics_probe(&part![1], &part![1], &[(1, 1)], &[(2, 2)], &[4, 6, 8]).unwrap();
        assert!(pts.iter().all(|p| p.deviation.is_zero()));
    }

    #[test]
    fn chained_pairs_decay_like_one_over_n() {
        let pts = asymptotics_probe(
            &part![1],
            &part![1],
            &[(1, 1), (2, 2)],
            &[(2, 1), (1, 2)],
            &[4, 6, 8],
        )
        .unwrap();
        let devs: Vec<Rational> = pts.into_iter().map(|p| p.deviation).collect();
        assert_eq!(devs, vec![ratio(1, 4), ratio(1, 6), ratio(1, 8)]);
    }

    #[test]
    fn probe_vector_is_symmetrized() {
        let v = probe_vector(&part![2], &part![1, 1], 5).unwrap();
        assert_eq!(v.len(), 4);
        assert!(probe_vector(&part![2], &part![1], 3).is_err());
    }
}
