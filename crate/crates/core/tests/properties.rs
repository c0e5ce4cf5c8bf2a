// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use approx::assert_relative_eq;
use proptest::prelude::*;
use renorm_core::smooth::sign_average_norm;
use renorm_core::*;

fn coeff() -> impl Strategy<Value = f64> {
    (-2.0f64..2.0, any::<bool>()).prop_map(|(e, neg)| if neg { -(10f64.powf(e)) } else { 10f64.powf(e) })
}

fn sparse(max_label: u64, max_len: usize) -> impl Strategy<Value = SparseVecF64> {
    prop::collection::btree_map(1..=max_label, coeff(), 0..=max_len).prop_map(|m| SparseVec::from_entries(m).unwrap())
}

fn nonzero_sparse(max_label: u64, max_len: usize) -> impl Strategy<Value = SparseVecF64> {
    prop::collection::btree_map(1..=max_label, coeff(), 1..=max_len).prop_map(|m| SparseVec::from_entries(m).unwrap())
}

fn dyadic_sparse(max_label: u64) -> impl Strategy<Value = SparseVecF64> {
    prop::collection::btree_map(1..=max_label, (-64i32..=64).prop_map(|k| k as f64 / 8.0), 0..=max_label as usize)
        .prop_map(|m| SparseVec::from_entries(m).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn projection_is_idempotent_and_suppressive(x in sparse(20, 10), set in prop::collection::btree_set(1u64..=20, 0..10)) {
        let once = x.project(&set);
        prop_assert_eq!(once.project(&set), once.clone());
        for b in [BaseNorm::L1, BaseNorm::Even(2), BaseNorm::Even(4)] {
            prop_assert!(base_norm(&once, b) <= base_norm(&x, b) * (1.0 + 1e-15));
        }
        prop_assert!(once.support().is_subset(&x.support()));
    }

    #[test]
    fn stored_entries_are_nonzero(x in sparse(30, 12)) {
        prop_assert!(x.iter().all(|(_, v)| v != 0.0));
        prop_assert_eq!(x.support_size(), x.support().len());
    }

    #[test]
    fn sparse_lin_comb_is_pointwise(a in -3.0f64..3.0, b in -3.0f64..3.0, x in sparse(12, 8), y in sparse(12, 8)) {
        let z = SparseVec::lin_comb(&[a, b], &[&x, &y]).unwrap();
        for l in 1..=12 {
            prop_assert_eq!(z.get(l), a * x.get(l) + b * y.get(l));
        }
    }

    #[test]
    fn periodic_lin_comb_is_pointwise(
        p1 in prop::collection::vec(-1.0f64..1.0, 0..5),
        t1 in prop::collection::vec(-0.9f64..0.9, 1..4),
        p2 in prop::collection::vec(-1.0f64..1.0, 0..5),
        t2 in prop::collection::vec(-0.9f64..0.9, 1..4),
        a in -2.0f64..2.0,
    ) {
        let x = FinValSeq::new(p1, t1).unwrap();
        let y = FinValSeq::new(p2, t2).unwrap();
        let z = FinValSeq::lin_comb(&[a, 1.0], &[&x, &y]).unwrap();
        for i in 1..40 {
            prop_assert_eq!(z.value_at(i).unwrap(), a * x.value_at(i).unwrap() + y.value_at(i).unwrap());
        }
    }

    #[test]
    fn analytic_sandwich(x in nonzero_sparse(24, 12)) {
        let params = AnalyticParamsF64::default();
        let seq = FinValSeq::from_sparse(&x).unwrap();
        let r = analytic_norm(&seq, &params, 1e-10).unwrap();
        let sup = sup_norm(&seq);
        prop_assert!(r.value + r.certified_error >= sup);
        prop_assert!(r.value - r.certified_error <= params.sandwich_constant() * sup);
        prop_assert!(r.bracket.0 <= r.value && r.value <= r.bracket.1);
    }

    #[test]
    fn analytic_homogeneity_and_symmetry(x in nonzero_sparse(16, 8), lambda in -5.0f64..5.0) {
        prop_assume!(lambda.abs() > 1e-3);
        let params = AnalyticParamsF64::default();
        let seq = FinValSeq::from_sparse(&x).unwrap();
        let a = analytic_norm(&seq, &params, 1e-11).unwrap();
        let b = analytic_norm(&seq.scaled(lambda), &params, 1e-11).unwrap();
        let slack = b.certified_error + lambda.abs() * a.certified_error + 1e-14 * b.value;
        prop_assert!((b.value - lambda.abs() * a.value).abs() <= slack);
        let c = analytic_norm(&seq.scaled(-1.0), &params, 1e-11).unwrap();
        prop_assert_eq!(c.value, a.value);
    }

    #[test]
    fn f_norm_routes_agree(x in sparse(40, 12)) {
        let s = SmoothScheduleF64::default();
        for b in [BaseNorm::L1, BaseNorm::Even(2)] {
            prop_assert_eq!(f_norm(&x, &s, b), f_norm_brute(&x, &s, b, 12).unwrap());
        }
    }

    #[test]
    fn f_norm_sandwich(x in sparse(40, 14)) {
        let s = SmoothScheduleF64::default();
        let f = f_norm(&x, &s, BaseNorm::L1);
        let n = base_norm(&x, BaseNorm::L1);
        prop_assert!(n <= f && f <= 1.5 * n * (1.0 + 1e-15));
    }

    #[test]
    fn sign_average_sandwich(mags in prop::collection::vec(1e-3f64..10.0, 1..=10)) {
        let n = mags.len();
        let theta = 1.0 / (4.0 * ((n + 1) * (n + 1)) as f64);
        let spec = FinNormSpec::new(BaseNorm::L1, n, theta).unwrap();
        let l1: f64 = mags.iter().sum();
        let v = sign_average_norm(&mags, spec.q);
        prop_assert!(v <= l1 * (1.0 + 1e-14));
        prop_assert!(v * (1.0 + theta) >= l1 * (1.0 - 1e-14));
    }

    #[test]
    fn smooth_ray_is_monotone_and_convex(x in nonzero_sparse(10, 5)) {
        let norm = SmoothNormF64::l1();
        let x = x.scaled(1.0 / norm.f_norm(&x));
        let ray = norm.psi_ray(&x).unwrap();
        let grid: Vec<f64> = (0..=400).map(|k| 0.85 + k as f64 * 0.25 / 400.0).collect();
        let vals: Vec<f64> = grid.iter().map(|&s| ray(s)).collect();
        for w in vals.windows(2) {
            prop_assert!(w[1] >= w[0]);
        }
        for w in vals.windows(3) {
            prop_assert!(w[2] - 2.0 * w[1] + w[0] >= -1e-12 * w[2].max(1.0));
        }
    }

    #[test]
    fn embedding_is_isometric(d in sparse(8, 8)) {
        let x = embed_l1(&d, 8).unwrap();
        prop_assert_eq!(x.prefix_len(), 256);
        prop_assert!((sup_norm(&x) - base_norm(&d, BaseNorm::L1)).abs() <= 1e-12);
    }

    #[test]
    fn embedding_is_linear_on_dyadic_data(a in dyadic_sparse(6), b in dyadic_sparse(6), alpha in -8i32..=8, beta in -8i32..=8) {
        let (alpha, beta) = (alpha as f64 / 4.0, beta as f64 / 4.0);
        let lhs = embed_l1(&SparseVec::lin_comb(&[alpha, beta], &[&a, &b]).unwrap(), 6).unwrap();
        let rhs = FinValSeq::lin_comb(&[alpha, beta], &[&embed_l1(&a, 6).unwrap(), &embed_l1(&b, 6).unwrap()]).unwrap();
        for i in 1..=64 {
            prop_assert_eq!(lhs.value_at(i).unwrap(), rhs.value_at(i).unwrap());
        }
    }

    #[test]
    fn locality_holds_below_the_f_sphere(x in sparse(10, 5), frac in 0.01f64..=1.0) {
        let norm = SmoothNormF64::l1();
        let x = if x.is_zero() { x } else { x.scaled(frac / norm.f_norm(&x)) };
        prop_assume!(norm.f_norm(&x) <= 1.0);
        let r = norm.locality_check(&x, &[11, 12, 13]).unwrap();
        prop_assert!(r.holds);
    }
}

#[test]
fn pullback_sandwich_and_two_valued_case() {
    let params = AnalyticParamsF64::default();
    let d = SparseVec::from_entries([(2, 0.75), (3, -1.25)]).unwrap();
    let r = l1_pullback_norm(&d, 3, &params, 1e-10).unwrap();
    assert!(r.value >= 2.0 - r.certified_error && r.value <= 2.0 * 1.1 / 0.9 + r.certified_error);
    let e = SparseVec::basis(1, 0.5).unwrap();
    let direct = analytic_norm(&FinValSeq::finite(vec![0.5, 0.5, -0.5, -0.5]).unwrap(), &params, 1e-10).unwrap();
    assert_eq!(l1_pullback_norm(&e, 2, &params, 1e-10).unwrap().value, direct.value);
}

#[test]
fn single_precision_pipeline() {
    let params = AnalyticParamsF32::default();
    let x = FinValSeqF32::finite(vec![0.0, -2.0]).unwrap();
    let r = analytic_norm(&x, &params, 1e-5).unwrap();
    assert_relative_eq!(r.value, 2.0 * 1.05, max_relative = 1e-5);

    let norm = SmoothNormF32::new(SmoothScheduleF32::default(), BaseNorm::L1, 6).unwrap();
    let e = SparseVecF32::basis(4, 1.0).unwrap();
    let v = norm.norm(&e, 1e-5).unwrap().value;
    assert!(v > 1.59 && v < 1.6, "{v}");
    let y = SparseVecF32::from_entries([(1, 0.5), (2, -0.25), (5, 1.0)]).unwrap();
    let f = norm.f_norm(&y);
    let g = norm.norm(&y, 1e-5).unwrap();
    assert!(g.value >= f * (1.0 - 1e-5) && g.value <= f * 17.0 / 15.0 * (1.0 + 1e-5));
    assert_eq!(norm.f_norm_brute(&y).unwrap(), f);
    let set: BTreeSet<Label> = [1, 5].into();
    assert_eq!(y.project(&set).support_size(), 2);
}
