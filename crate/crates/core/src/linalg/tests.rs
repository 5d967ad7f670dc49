use num_complex::Complex64;
use proptest::prelude::*;

use super::*;
use crate::random::{self, trial_rng};

fn real(rows: usize, cols: usize, entries: &[f64]) -> Operator {
    Operator::from_real(rows, cols, entries).unwrap()
}

fn cfg() -> ToleranceConfig {
    ToleranceConfig::default()
}

#[test]
fn commutator_with_identity_vanishes() {
    let mut rng = trial_rng(1, 0);
    let b = random::gaussian(&mut rng, 4, 4);
    let c = commutator(&Operator::identity(4), &b).unwrap();
    assert_eq!(c.frobenius_norm(), 0.0);
}

#[test]
fn diagonal_matrices_commute() {
    let c = commutator(&Operator::diag_real(&[1.0, 2.0]), &Operator::diag_real(&[3.0, 4.0])).unwrap();
    assert_eq!(c, Operator::zeros(2, 2));
}

#[test]
fn jordan_gram_commutator() {
    // T*T = [[1,1],[1,2]], TT* = [[2,1],[1,1]]; multiplied out by hand.
    let t = real(2, 2, &[1.0, 1.0, 0.0, 1.0]);
    let c = commutator(&(&t.adjoint() * &t), &(&t * &t.adjoint())).unwrap();
    assert_eq!(c, real(2, 2, &[0.0, -2.0, 2.0, 0.0]));
}

#[test]
fn commutator_dimension_mismatch() {
    assert!(commutator(&Operator::identity(2), &Operator::identity(3)).is_err());
    assert!(commutator(&Operator::zeros(2, 3), &Operator::zeros(2, 3)).is_err());
}

#[test]
fn numerical_rank_examples() {
    assert_eq!(numerical_rank(&[3.0, 0.0], &cfg()), 1);
    assert_eq!(numerical_rank(&[0.0, 0.0], &cfg()), 0);
    assert_eq!(numerical_rank(&[1.0, 5e-13], &cfg()), 1);
    assert_eq!(numerical_rank(&[1.0, 2e-12], &cfg()), 2);
    assert_eq!(numerical_rank(&[], &cfg()), 0);
}

#[test]
fn fractional_power_examples() {
    let c = cfg();
    let root = fractional_power_psd(&Operator::diag_real(&[4.0, 9.0]), 0.5, &c).unwrap();
    assert!(approx_equal(&root, &Operator::diag_real(&[2.0, 3.0]), &c).unwrap());

    let mut rng = trial_rng(2, 0);
    let a = random::psd(&mut rng, 4, 3);
    assert!(approx_equal(&fractional_power_psd(&a, 1.0, &c).unwrap(), &a, &c).unwrap());

    let p = fractional_power_psd(&Operator::diag_real(&[0.0, 2.0]), 0.3, &c).unwrap();
    let expected = Operator::diag_real(&[0.0, 2f64.powf(0.3)]);
    assert!((&p - &expected).frobenius_norm() < 1e-14);
}

#[test]
fn fractional_power_rejects_bad_input() {
    let c = cfg();
    let skew = real(2, 2, &[1.0, 1.0, 0.0, 1.0]);
    assert!(matches!(
        fractional_power_psd(&skew, 0.5, &c),
        Err(crate::Error::NotHermitian { .. })
    ));
    let indefinite = Operator::diag_real(&[1.0, -1.0]);
    assert!(matches!(
        fractional_power_psd(&indefinite, 0.5, &c),
        Err(crate::Error::NotPositive { .. })
    ));
    assert!(fractional_power_psd(&Operator::identity(2), 0.0, &c).is_err());
    assert!(fractional_power_psd(&Operator::identity(2), f64::NAN, &c).is_err());
}

#[test]
fn fractional_power_of_zero_is_zero() {
    let z = fractional_power_psd(&Operator::zeros(3, 3), 0.5, &cfg()).unwrap();
    assert_eq!(z.frobenius_norm(), 0.0);
}

#[test]
fn range_projection_examples() {
    let c = cfg();
    assert_eq!(range_projection(&Operator::zeros(3, 3), &c), Operator::zeros(3, 3));

    let mut rng = trial_rng(3, 0);
    let t = random::gaussian(&mut rng, 4, 4);
    assert!(approx_equal(&range_projection(&t, &c), &Operator::identity(4), &c).unwrap());

    let j = real(2, 2, &[0.0, 1.0, 0.0, 0.0]);
    assert!(approx_equal(&range_projection(&j, &c), &Operator::diag_real(&[1.0, 0.0]), &c).unwrap());
}

#[test]
fn range_projection_is_projection_fixing_range() {
    let c = cfg();
    let mut rng = trial_rng(4, 0);
    let t = random::rank_deficient(&mut rng, 5, 2);
    let (p, r) = range_projection_with_rank(&t, &c);
    assert_eq!(r, 2);
    assert!(is_projection(&p, &c));
    assert!(approx_equal(&(&p * &t), &t, &c).unwrap());
}

#[test]
fn range_projection_of_rectangular() {
    let c = cfg();
    let t = real(3, 2, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    let p = range_projection(&t, &c);
    assert_eq!(p.shape(), (3, 3));
    assert!(approx_equal(&p, &Operator::diag_real(&[1.0, 0.0, 0.0]), &c).unwrap());
}

#[test]
fn approx_equal_examples() {
    let c = cfg();
    let mut rng = trial_rng(5, 0);
    let a = random::gaussian(&mut rng, 3, 3);
    assert!(approx_equal(&a, &a, &c).unwrap());
    assert!(!approx_equal(&Operator::identity(3), &Operator::identity(3).scale(2.0), &c).unwrap());
    let mut e = Operator::zeros(3, 3).into_matrix();
    e[(1, 2)] = Complex64::new(1e-15, 0.0);
    let nudged = &a + &Operator::from_matrix(e).unwrap();
    assert!(approx_equal(&a, &nudged, &c).unwrap());
    assert!(approx_equal(&a, &Operator::zeros(3, 4), &c).is_err());
}

#[test]
fn svd_reconstructs_and_sorts() {
    let c = cfg();
    let mut rng = trial_rng(6, 0);
    for (rows, cols) in [(4, 4), (5, 3), (3, 6)] {
        let m = random::gaussian(&mut rng, rows, cols);
        let s = svd(&m);
        assert!(s.singular_values.windows(2).all(|w| w[0] >= w[1]));
        assert!(s.singular_values.iter().all(|&x| x >= 0.0));
        let sigma: Vec<Complex64> = s.singular_values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        let rebuilt = &(&s.left_vectors * &Operator::diag(&sigma)) * &s.right_vectors.adjoint();
        assert!(equality_residual(&rebuilt, &m, &c).unwrap().passes());
        let p = sigma.len();
        assert!(approx_equal(&(&s.left_vectors.adjoint() * &s.left_vectors), &Operator::identity(p), &c).unwrap());
        assert!(approx_equal(&(&s.right_vectors.adjoint() * &s.right_vectors), &Operator::identity(p), &c).unwrap());
    }
}

#[test]
fn herm_eig_residuals() {
    let c = cfg();
    let mut rng = trial_rng(7, 0);
    let g = random::gaussian(&mut rng, 5, 5);
    let a = &g + &g.adjoint();
    let eig = herm_eig(&a, &c).unwrap();
    assert!(eig.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
    let scale = 1f64.max(a.frobenius_norm());
    for (i, &l) in eig.eigenvalues.iter().enumerate() {
        let v = Operator::from_matrix(eig.eigenvectors.matrix().columns(i, 1).into_owned()).unwrap();
        let res = (&(&a * &v) - &v.scale(l)).frobenius_norm();
        assert!(res <= 1e-9 * scale, "eigenpair {i} residual {res}");
    }
}

fn pair_strategy() -> impl Strategy<Value = (u64, usize, bool)> {
    (any::<u64>(), 2usize..=6, any::<bool>())
}

fn psd_pair(seed: u64, dim: usize, commuting: bool) -> (Operator, Operator) {
    let mut rng = trial_rng(seed, 0);
    if commuting {
        random::commuting_psd_pair(&mut rng, dim)
    } else {
        let ra = rng.random_range(1..=dim);
        let rb = rng.random_range(1..=dim);
        (random::psd(&mut rng, dim, ra), random::psd(&mut rng, dim, rb))
    }
}

use rand::Rng;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn powers_inherit_commutation((seed, dim, _) in pair_strategy()) {
        let c = cfg();
        let (a, b) = psd_pair(seed, dim, true);
        prop_assert!(commutes(&a, &b, &c).unwrap());
        for alpha in [0.5, 1.0 / 3.0, 2.0] {
            let pa = fractional_power_psd(&a, alpha, &c).unwrap();
            prop_assert!(commutes(&pa, &b, &c).unwrap(), "alpha {}", alpha);
        }
    }

    #[test]
    fn psd_product_iff_commuting((seed, dim, commuting) in pair_strategy()) {
        let c = cfg();
        let (a, b) = psd_pair(seed, dim, commuting);
        let ab = &a * &b;
        prop_assert_eq!(is_psd(&ab, &c), commutes(&a, &b, &c).unwrap());
        prop_assert_eq!(commutes(&a, &b, &c).unwrap(), commuting);
    }

    #[test]
    fn range_of_gram_matches_range((seed, dim, _) in pair_strategy()) {
        let c = cfg();
        let mut rng = trial_rng(seed, 1);
        let rank = rng.random_range(0..=dim);
        let t = random::rank_deficient(&mut rng, dim, rank);
        let p = range_projection(&t, &c);
        prop_assert!(approx_equal(&p, &range_projection(&(&t * &t.adjoint()), &c), &c).unwrap());
    }

    #[test]
    fn range_stable_under_powers((seed, dim, _) in pair_strategy()) {
        let c = cfg();
        let mut rng = trial_rng(seed, 2);
        let rank = rng.random_range(0..=dim);
        let a = random::psd(&mut rng, dim, rank);
        let p = range_projection(&a, &c);
        for alpha in [0.5, 1.0 / 3.0, 2.0] {
            let pa = fractional_power_psd(&a, alpha, &c).unwrap();
            prop_assert!(approx_equal(&range_projection(&pa, &c), &p, &c).unwrap());
        }
    }

    #[test]
    fn range_projections_commute_with_commuting_psd((seed, dim, _) in pair_strategy()) {
        let c = cfg();
        let (s, t) = psd_pair(seed, dim, true);
        let ps = range_projection(&s, &c);
        let pt = range_projection(&t, &c);
        prop_assert!(commutes(&s, &pt, &c).unwrap());
        prop_assert!(commutes(&t, &ps, &c).unwrap());
        prop_assert!(commutes(&ps, &pt, &c).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn svd_invariants_on_deficient_and_rectangular(seed in any::<u64>(), rows in 1usize..=8, cols in 1usize..=8) {
        let c = cfg();
        let mut rng = trial_rng(seed, 3);
        let k = rng.random_range(0..=rows.min(cols));
        let m = if k == 0 {
            Operator::zeros(rows, cols)
        } else {
            &random::gaussian(&mut rng, rows, k) * &random::gaussian(&mut rng, k, cols)
        };
        let s = svd(&m);
        let p = rows.min(cols);
        prop_assert_eq!(s.singular_values.len(), p);
        prop_assert!(s.singular_values.windows(2).all(|w| w[0] >= w[1]));
        prop_assert_eq!(numerical_rank(&s.singular_values, &c), k);
        let sigma: Vec<Complex64> = s.singular_values.iter().map(|&x| Complex64::new(x, 0.0)).collect();
        let rebuilt = &(&s.left_vectors * &Operator::diag(&sigma)) * &s.right_vectors.adjoint();
        prop_assert!(equality_residual(&rebuilt, &m, &c).unwrap().passes());
        prop_assert!(approx_equal(&(&s.left_vectors.adjoint() * &s.left_vectors), &Operator::identity(p), &c).unwrap());
        prop_assert!(approx_equal(&(&s.right_vectors.adjoint() * &s.right_vectors), &Operator::identity(p), &c).unwrap());
    }
}
