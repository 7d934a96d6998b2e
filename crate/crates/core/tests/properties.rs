use std::sync::OnceLock;

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use socle_lab::finite::sparse::{rat, ratio, span_dim};
use socle_lab::finite::{
    contraction, contraction_collections, contraction_kernel, full_space, insertion, kernel_filtration,
    singular_vector_count, singular_vector_count_with, symmetrized_space, theta, verify_layer_multiplicities,
    verify_ranks, xi_map, young_symmetrizer, Capacity, FiniteModel, LieElement, SparseRationalMatrix, SparseVec,
    WeightVector, YoungSymmetrizer,
};
use socle_lab::{lr_coefficient, part, partitions_of, sym_group_irrep_dim, AlgebraKind, Partition};

fn model(alg: AlgebraKind, n: usize, p: usize, q: usize) -> FiniteModel {
    FiniteModel::new(alg, n, p, q).unwrap()
}

struct ActionTable {
    model: FiniteModel,
    elements: Vec<LieElement>,
    matrices: Vec<SparseRationalMatrix>,
}

fn action_tables() -> &'static [ActionTable] {
    static TABLES: OnceLock<Vec<ActionTable>> = OnceLock::new();
    TABLES.get_or_init(|| {
        [
            model(AlgebraKind::Gl, 3, 1, 1),
            model(AlgebraKind::Gl, 2, 2, 1),
            model(AlgebraKind::Sl, 3, 1, 1),
            model(AlgebraKind::Sp, 2, 2, 0),
            model(AlgebraKind::So, 3, 2, 0),
        ]
        .into_iter()
        .map(|m| {
            let elements: Vec<LieElement> = m.generators().into_iter().map(|g| g.element).collect();
            let matrices = elements.iter().map(|x| m.action_matrix(x)).collect();
            ActionTable {
                model: m,
                elements,
                matrices,
            }
        })
        .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn bracket_fidelity(i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        for t in action_tables() {
            let (i, j) = (i.index(t.elements.len()), j.index(t.elements.len()));
            let (a, b) = (&t.matrices[i], &t.matrices[j]);
            let commutator = a.mul(b).unwrap().sub(&b.mul(a).unwrap()).unwrap();
            let bracket = t.model.action_matrix(&t.elements[i].bracket(&t.elements[j]));
            prop_assert_eq!(commutator, bracket, "{} generators {} {}", t.model, i, j);
        }
    }

    #[test]
    fn partition_text_round_trip(parts in prop::collection::vec(1u32..6, 0..6)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let lambda = Partition::new(parts).unwrap();
        prop_assert_eq!(lambda.to_csv().parse::<Partition>().unwrap(), lambda.clone());
        prop_assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda.clone());
        prop_assert_eq!(lambda.transpose().transpose(), lambda);
    }

    #[test]
    fn lr_symmetric_and_dimension_count(a in 0usize..=4, b in 0usize..=4, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let ls = partitions_of(a);
        let ms = partitions_of(b);
        let (lambda, mu) = (&ls[i.index(ls.len())], &ms[j.index(ms.len())]);
        // Restricting S_{a+b} irreps to S_a × S_b: Σ_ν N^ν_{λμ} f^ν = C(a+b, a) f^λ f^μ.
        let mut total = 0;
        for nu in partitions_of(a + b) {
            let c = lr_coefficient(lambda, mu, &nu);
            prop_assert_eq!(c, lr_coefficient(mu, lambda, &nu));
            total += c * sym_group_irrep_dim(&nu);
        }
        let binom = (1..=b as u64).fold(1, |acc, k| acc * (a as u64 + k) / k);
        prop_assert_eq!(total, binom * sym_group_irrep_dim(lambda) * sym_group_irrep_dim(mu));
    }
}

#[test]
fn traceless_part_plus_trace_images_is_everything() {
    for (n, p, q) in [(3, 1, 1), (4, 2, 1), (4, 1, 2), (5, 2, 2)] {
        let m = model(AlgebraKind::Gl, n, p, q);
        let f1 = contraction_kernel(&m, &full_space(&m), 1).unwrap();
        let mut images: Vec<SparseVec> = Vec::new();
        for pairs in contraction_collections(&m, 1) {
            images.extend(theta(&m, &pairs).unwrap().column_space());
        }
        let trace_part = span_dim(&images);
        assert_eq!(f1.dim() + trace_part, m.dim(), "n={n} ({p},{q})");
    }
}

#[test]
fn dimension_ledger_in_stable_range() {
    let mut checked = 0;
    for alg in [AlgebraKind::Gl, AlgebraKind::Sp, AlgebraKind::So] {
        for total in 1..=3 {
            let splits: Vec<(usize, usize)> = if alg.is_mixed() {
                (0..=total).map(|p| (p, total - p)).collect()
            } else {
                vec![(total, 0)]
            };
            for (p, q) in splits {
                let n = if alg.is_mixed() { total + 1 } else { total.max(2) };
                for lambda in partitions_of(p) {
                    for mu in partitions_of(q) {
                        let rep = verify_layer_multiplicities(alg, n, &lambda, &mu).unwrap();
                        assert!(rep.stable);
                        let predicted: u64 = rep.layers.iter().map(|l| l.predicted_dim).sum();
                        assert_eq!(predicted, rep.ambient_dim as u64, "{}", rep.summary());
                        checked += 1;
                    }
                }
            }
        }
    }
    assert!(checked > 20);
}

#[test]
fn multiplicities_stable_across_consecutive_ranks() {
    let cases = [
        (AlgebraKind::Gl, 5, part![2, 1], part![1]),
        (AlgebraKind::Gl, 5, part![1, 1], part![1, 1]),
        (AlgebraKind::Sp, 3, part![2, 1], part![]),
        (AlgebraKind::So, 3, part![1, 1, 1], part![]),
    ];
    for (alg, n, lambda, mu) in cases {
        let reports = verify_ranks(alg, &[n, n + 1], &lambda, &mu, &Capacity::default()).unwrap();
        assert!(reports.iter().all(|r| r.stable && r.pass));
        assert_eq!(reports[0].observed_counts(), reports[1].observed_counts(), "{alg} {lambda} {mu}");
    }
}

#[test]
fn traceless_part_holds_exactly_the_large_constituents() {
    // V^(2,1) at n=5: Γ{(2);(1)} and Γ{(1,1);(1)} live in F^(1); the two
    // copies of Γ{(1);(0)} only appear in the top layer.
    let m = model(AlgebraKind::Gl, 5, 2, 1);
    let full = full_space(&m);
    let f1 = contraction_kernel(&m, &full, 1).unwrap();
    let zero = socle_lab::finite::WeightedSubspace::new();
    let w = |v: [i32; 5]| WeightVector(v.to_vec());
    let large = [w([2, 0, 0, 0, -1]), w([1, 1, 0, 0, -1])];
    let small = w([1, 0, 0, 0, 0]);
    for weight in &large {
        assert_eq!(singular_vector_count(&m, &f1, &zero, weight).unwrap(), 1);
        assert_eq!(singular_vector_count(&m, &full, &f1, weight).unwrap(), 0);
    }
    assert_eq!(singular_vector_count(&m, &f1, &zero, &small).unwrap(), 0);
    assert_eq!(singular_vector_count(&m, &full, &f1, &small).unwrap(), 2);
}

#[test]
fn simple_raising_operators_suffice() {
    for m in [
        model(AlgebraKind::Gl, 3, 1, 1),
        model(AlgebraKind::Gl, 3, 2, 1),
        model(AlgebraKind::Sp, 3, 2, 0),
        model(AlgebraKind::So, 3, 2, 0),
    ] {
        let full = full_space(&m);
        let f1 = contraction_kernel(&m, &full, 1).unwrap();
        let zero = socle_lab::finite::WeightedSubspace::new();
        let simple = m.simple_raising();
        let all = m.positive_root_vectors();
        for (sub, modulo) in [(&f1, &zero), (&full, &f1)] {
            for weight in m.weight_spaces().keys() {
                let a = singular_vector_count_with(&m, sub, modulo, weight, &simple).unwrap();
                let b = singular_vector_count_with(&m, sub, modulo, weight, &all).unwrap();
                assert_eq!(a, b, "{m} weight {weight}");
            }
        }
    }
}

#[test]
fn natural_module_actions() {
    let m = model(AlgebraKind::Gl, 2, 1, 0);
    assert_eq!(m.dim(), 2);
    let v = SparseVec::from([(m.position(&[2]), rat(1))]);
    assert_eq!(m.act(&LieElement::unit(1, 2), &v), SparseVec::from([(m.position(&[1]), rat(1))]));

    let m = model(AlgebraKind::Gl, 2, 1, 1);
    assert_eq!(m.dim(), 4);
    let v = SparseVec::from([(m.position(&[1, 1]), rat(1))]);
    assert!(m.act(&LieElement::unit(1, 1), &v).is_empty());

    assert_eq!(model(AlgebraKind::Sp, 2, 2, 0).dim(), 16);
    let m = model(AlgebraKind::Sp, 2, 1, 0);
    let x = LieElement::unit(1, -2).plus(1, 2, -1);
    let v = SparseVec::from([(m.position(&[-2]), rat(1))]);
    assert_eq!(m.act(&x, &v), SparseVec::from([(m.position(&[1]), rat(1))]));
}

#[test]
fn contraction_examples() {
    let m = model(AlgebraKind::Gl, 2, 1, 1);
    assert_eq!(contraction(&m, &[(1, 1)]).unwrap().get(0, m.position(&[1, 1])), rat(1));
    let s = model(AlgebraKind::So, 2, 2, 0);
    let phi = contraction(&s, &[(1, 2)]).unwrap();
    assert_eq!(phi.get(0, s.position(&[1, -1])), rat(1));
    assert_eq!(phi.get(0, s.position(&[-1, 1])), rat(1));
}

#[test]
fn insertion_and_xi_examples() {
    let m = model(AlgebraKind::Gl, 2, 1, 1);
    let psi = insertion(&m, &[(1, 1)]).unwrap();
    assert_eq!((psi.rows(), psi.cols()), (4, 1));
    assert_eq!(psi.get(m.position(&[1, 1]), 0), ratio(1, 2));
    assert_eq!(psi.get(m.position(&[2, 2]), 0), ratio(1, 2));
    assert_eq!(psi.nnz(), 2);

    let xi = xi_map(&m, (1, 1)).unwrap();
    assert_eq!(xi.get(0, m.position(&[2, 2])), rat(2));
    assert_eq!(xi.get(0, m.position(&[1, 1])), rat(0));
}

#[test]
fn idempotents_on_every_pair() {
    for m in [model(AlgebraKind::Gl, 3, 2, 2), model(AlgebraKind::Sp, 2, 3, 0), model(AlgebraKind::So, 4, 2, 0)] {
        for pairs in contraction_collections(&m, 1) {
            let t = theta(&m, &pairs).unwrap();
            assert_eq!(t.mul(&t).unwrap(), t, "{m} {pairs:?}");
        }
    }
}

#[test]
fn symmetrizer_examples() {
    let m = model(AlgebraKind::Gl, 2, 2, 0);
    assert_eq!(young_symmetrizer(&part![2], &m, &[0, 1]).unwrap().rank(), 3);

    let m3 = model(AlgebraKind::Gl, 3, 2, 0);
    let c = YoungSymmetrizer::new(&part![1, 1], vec![0, 1]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..10 {
        let coords: Vec<i64> = (0..3).map(|_| rng.gen_range(-5..=5)).collect();
        let mut vv = SparseVec::new();
        for a in 1..=3 {
            for b in 1..=3 {
                let x = coords[a - 1] * coords[b - 1];
                if x != 0 {
                    vv.insert(m3.position(&[a as i32, b as i32]), rat(x));
                }
            }
        }
        assert!(c.apply(&m3, &vv).is_empty());
    }

    let m = model(AlgebraKind::Gl, 3, 3, 0);
    let c = young_symmetrizer(&part![2, 1], &m, &[0, 1, 2]).unwrap();
    assert_eq!(c.mul(&c).unwrap(), c.scale(&rat(3)));
}

#[test]
fn filtration_and_count_examples() {
    assert_eq!(kernel_filtration(&model(AlgebraKind::Gl, 2, 1, 1), 1).unwrap()[0].dim(), 3);
    assert_eq!(kernel_filtration(&model(AlgebraKind::Gl, 3, 1, 1), 1).unwrap()[0].dim(), 8);
    assert_eq!(kernel_filtration(&model(AlgebraKind::Sp, 2, 2, 0), 1).unwrap()[0].dim(), 15);

    let m = model(AlgebraKind::Gl, 3, 1, 1);
    let full = full_space(&m);
    let f1 = contraction_kernel(&m, &full, 1).unwrap();
    let top = singular_vector_count(&m, &full, &f1, &WeightVector(vec![0, 0, 0])).unwrap();
    assert_eq!(top, 1);

    let s = model(AlgebraKind::Sp, 3, 2, 0);
    let ambient = symmetrized_space(&s, &[YoungSymmetrizer::covariant(&part![1, 1], &s).unwrap()]);
    let f1 = contraction_kernel(&s, &ambient, 1).unwrap();
    let zero = socle_lab::finite::WeightedSubspace::new();
    assert_eq!(singular_vector_count(&s, &f1, &zero, &WeightVector(vec![1, 1, 0])).unwrap(), 1);
}
