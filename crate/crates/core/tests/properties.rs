use num_traits::One;
use proptest::prelude::*;

use polypos_core::graphs::{
    chromatic_by_partitions, chromatic_poly, independence_by_subsets, independence_poly, matrix_tree_check,
};
use polypos_core::linalg::Matrix;
use polypos_core::measures::{
    determinantal_measure, negatively_associated, pairwise_neg_corr, sep_stationary, SEPModel,
};
use polypos_core::permactions::{orbit, orbit_closed_form, orbit_des_poly, phi};
use polypos_core::positivity::gamma_expand;
use polypos_core::posets::p_eulerian;
use polypos_core::random;
use polypos_core::realroot::{apply_poly_matrix, build_g_lambda, is_interlacing_seq, is_real_rooted};
use polypos_core::subdivision::{barycentric_sd, E_operator};
use polypos_core::{Error, ExactPoly, Rat, DEFAULT_BUDGET};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn phi_is_an_involution_and_actions_commute(seed in any::<u64>(), n in 1usize..=8) {
        let mut rng = random::rng(seed);
        let pi = random::permutation(&mut rng, n);
        for x in 1..=n as u32 {
            prop_assert_eq!(phi(&phi(&pi, x), x), pi.clone());
            for y in 1..=n as u32 {
                prop_assert_eq!(phi(&phi(&pi, x), y), phi(&phi(&pi, y), x));
            }
        }
        let o = orbit(&pi);
        prop_assert!(o.contains(&pi));
        prop_assert_eq!(orbit_des_poly(&pi), orbit_closed_form(&pi));
    }

    #[test]
    fn chromatic_and_independence_oracles(seed in any::<u64>(), n in 1usize..=7) {
        let mut rng = random::rng(seed);
        let g = random::graph(&mut rng, n, 0.45);
        prop_assert_eq!(chromatic_poly(&g).unwrap(), chromatic_by_partitions(&g).unwrap());
        prop_assert_eq!(independence_poly(&g).unwrap(), independence_by_subsets(&g));
    }

    #[test]
    fn matrix_tree_at_random_points(seed in any::<u64>(), n in 2usize..=6) {
        let mut rng = random::rng(seed);
        let g = random::connected_graph(&mut rng, n);
        let point = random::positive_point(&mut rng, g.num_edges());
        prop_assert!(matrix_tree_check(&g, &point).unwrap());
    }

    #[test]
    fn sign_graded_posets_are_gamma_nonnegative(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let p = random::sign_graded_poset(&mut rng, 7);
        let w = p_eulerian(&p, DEFAULT_BUDGET).unwrap().unshift(1).unwrap();
        prop_assert!(w.is_palindromic_span());
        prop_assert!(gamma_expand(&w).unwrap().is_nonnegative());
    }

    #[test]
    fn subdivision_commutes_with_e(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let c = random::complex(&mut rng, 12);
        let sd = barycentric_sd(&c, DEFAULT_BUDGET).unwrap();
        prop_assert_eq!(sd.f_poly().unwrap(), E_operator(&c.f_poly().unwrap()));
    }

    #[test]
    fn g_lambda_preserves_interlacing(seed in any::<u64>(), n in 1usize..=4, m in 1usize..=4) {
        let mut rng = random::rng(seed);
        let seq = random::interlacing_sequence(&mut rng, n, 4);
        prop_assert!(is_interlacing_seq(&seq).unwrap());
        let l = random::lambda(&mut rng, m, n);
        let image = apply_poly_matrix(&build_g_lambda(&l, n).unwrap(), &seq).unwrap();
        prop_assert!(is_interlacing_seq(&image).unwrap());
    }

    #[test]
    fn nonpositive_rooted_products_stay_real_rooted(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let f = random::nonpositive_rooted_poly(&mut rng, 6);
        let g = random::nonpositive_rooted_poly(&mut rng, 6);
        prop_assert!(is_real_rooted(&(&f * &g)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    // Symmetric exclusion with arbitrary symmetric jump rates has a
    // negatively dependent stationary law.
    #[test]
    fn sep_stationary_is_negatively_dependent(seed in any::<u64>(), n in 1usize..=3) {
        let mut rng = random::rng(seed);
        let mut q = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let r = random::nonnegative_rat(&mut rng, 4, 3);
                q[(i, j)] = r.clone();
                q[(j, i)] = r;
            }
        }
        let b: Vec<Rat> = (0..n).map(|_| random::nonnegative_rat(&mut rng, 4, 3)).collect();
        let d: Vec<Rat> = (0..n).map(|_| random::nonnegative_rat(&mut rng, 4, 3)).collect();
        let m = SEPModel::new(q, b, d).unwrap();
        match sep_stationary(&m) {
            Ok(mu) => {
                prop_assert!(pairwise_neg_corr(&mu));
                prop_assert!(negatively_associated(&mu, 4).unwrap());
                prop_assert!(is_real_rooted(&mu.diagonal()));
            }
            Err(e) => prop_assert_eq!(e, Error::Reducible),
        }
    }

    // B^T B / (tr + 1) is a positive semidefinite contraction.
    #[test]
    fn determinantal_measures_are_negatively_associated(seed in any::<u64>(), n in 1usize..=4) {
        let mut rng = random::rng(seed);
        let rows: Vec<Vec<Rat>> = (0..n).map(|_| random::nonzero_point(&mut rng, n)).collect();
        let b = Matrix::from_rows(rows).unwrap();
        let a = b.transpose().mul(&b).unwrap();
        let tr: Rat = (0..n).map(|i| a[(i, i)].clone()).sum();
        let scale = (tr + Rat::one()).recip();
        let mut c = Matrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                c[(i, j)] = &a[(i, j)] * &scale;
            }
        }
        let mu = determinantal_measure(&c).unwrap();
        prop_assert!(pairwise_neg_corr(&mu));
        prop_assert!(negatively_associated(&mu, 4).unwrap());
    }
}

#[test]
fn orbit_identity_through_s7() {
    for n in 1..=7 {
        polypos_core::perm::for_each_permutation(n, |pi| {
            assert_eq!(orbit_des_poly(pi), orbit_closed_form(pi), "{pi:?}");
        });
    }
}

#[test]
fn zero_sequence_interlaces() {
    assert!(is_interlacing_seq(&[ExactPoly::zero(), ExactPoly::zero()]).unwrap());
}
