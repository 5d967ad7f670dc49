use super::*;
use crate::decomp::{polar_decompose, verify_polar};
use crate::linalg::{approx_equal, ToleranceConfig};

fn cfg() -> ToleranceConfig {
    ToleranceConfig::default()
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn det3(m: &CMatrix) -> Complex64 {
    m[(0, 0)] * (m[(1, 1)] * m[(2, 2)] - m[(1, 2)] * m[(2, 1)])
        - m[(0, 1)] * (m[(1, 0)] * m[(2, 2)] - m[(1, 2)] * m[(2, 0)])
        + m[(0, 2)] * (m[(1, 0)] * m[(2, 1)] - m[(1, 1)] * m[(2, 0)])
}

#[test]
fn angle_constants_examples() {
    let a = angle_constants();
    // π·√2/6 evaluated independently to 7 digits
    assert!((a.theta - 0.7404805).abs() < 1e-7);
    assert!(a.theta.cos() > 0.5);
    assert!(a.sin_alpha > 0.0 && a.sin_alpha < 1.0);
    assert!(a.alpha > 0.0 && a.alpha < std::f64::consts::FRAC_PI_2);
    assert!((a.sin_alpha.powi(2) + a.cos_alpha.powi(2) - 1.0).abs() <= 1e-15);
    assert!((a.sec_alpha * a.cos_alpha - 1.0).abs() <= 1e-15);
    assert!((a.tan_alpha - a.alpha.tan()).abs() <= 1e-15);
}

#[test]
fn v_is_orthogonal_with_expected_spectrum() {
    let v = v_matrix();
    assert!((&(&v * &v.adjoint()) - &Operator::identity(3)).frobenius_norm() < 1e-15);
    let m = v.matrix();
    // −1 · e^{iθ} · e^{−iθ}
    assert!((det3(m) - c(-1.0)).norm() < 1e-14);
    let (l2, l3) = v_eigenvalues();
    let id = CMatrix::identity(3, 3);
    for l in [c(-1.0), l2, l3] {
        assert!(det3(&(m - &id * l)).norm() < 1e-12, "{l} is not an eigenvalue");
    }
    // the eigenvalue written through α
    let a = angle_constants();
    let from_alpha = Complex64::new(
        (1.0 + a.sin_alpha) / 2.0,
        (3.0 - 2.0 * a.sin_alpha - a.sin_alpha.powi(2)).sqrt() / 2.0,
    );
    assert!((from_alpha - l2).norm() < 1e-12);
    assert!(((l2 + l3) - c(1.0 + a.sin_alpha)).norm() < 1e-15);
}

#[test]
fn power_entries_match_numeric_powers() {
    let v = v_matrix();
    for k in 1..=30u32 {
        let vk = v.pow(k).unwrap();
        let (v13, v33) = v_power_entries(k).unwrap();
        assert!((v13 - vk.get(0, 2)).norm() < 1e-10, "k={k} v13");
        assert!((v33 - vk.get(2, 2)).norm() < 1e-10, "k={k} v33");
    }
}

#[test]
fn power_entry_identities() {
    let (_, v33) = v_power_entries(1).unwrap();
    assert_eq!(v33.norm(), 0.0);
    for k in 1..=20 {
        let (_, v33) = v_power_entries(k).unwrap();
        let (v13_next, _) = v_power_entries(k + 1).unwrap();
        assert!((v33 - v13_next).norm() <= 1e-12);
        if k >= 2 {
            assert!(v33.norm() > 0.0, "v33({k}) vanished");
        }
    }
    assert!(v_power_entries(0).is_err());
}

#[test]
fn g_sequence_examples() {
    assert_eq!(g_sequence(2, 6).unwrap(), vec![1.0, 2.0, 3.0, 4.0, 1.0, 1.0]);
    assert_eq!(g_sequence(3, 6).unwrap(), vec![1.0, 2.0, 2.0, 2.0, 1.0, 1.0]);
    assert_eq!(g_sequence(5, 8).unwrap(), vec![1.0, 2.0, 2.0, 2.0, 2.0, 2.0, 1.0, 1.0]);
    assert_eq!(g_sequence(2, 4).unwrap(), vec![1.0, 2.0, 3.0, 4.0]);
    assert!(g_sequence(1, 6).is_err());
    assert!(g_sequence(4, 5).is_err());
    for n in 2..=8 {
        assert!(g_sequence(n, n + 5).unwrap().iter().all(|&w| w > 0.0 && w <= 4.0));
    }
}

#[test]
fn block_t_polar_structure() {
    let c = cfg();
    let g = g_sequence(2, 5).unwrap();
    let v = v_matrix();
    for m in 1..g.len() {
        let t = block_t(m, &g).unwrap();
        let gram = &t.adjoint() * &t;
        let off_diag: f64 = (0..3)
            .flat_map(|i| (0..3).map(move |j| (i, j)))
            .filter(|(i, j)| i != j)
            .map(|(i, j)| gram.get(i, j).norm())
            .sum();
        assert!(off_diag < 1e-13, "T_{m}*T_{m} not diagonal");

        let parts = polar_decompose(&t, &c);
        let modulus = block_modulus(m, &g).unwrap();
        assert!(approx_equal(&parts.modulus, &modulus, &c).unwrap());
        assert!((&parts.isometry - &v).frobenius_norm() < 1e-10);
        let closed = PolarParts { isometry: v.clone(), modulus, rank: 3, rank_margin: None };
        assert!(verify_polar(&t, &closed, &c).unwrap().passes());
    }
    assert!(block_t(0, &g).is_err());
    assert!(block_t(5, &g).is_err());
}

#[test]
fn modulus_splits_into_scalar_plus_corner() {
    let sec = angle_constants().sec_alpha;
    for n in 2..=5 {
        let g = g_sequence(n, n + 3).unwrap();
        for l in 1..g.len() {
            let split = &Operator::identity(3).scale(sec * g[l - 1]) + &block_modulus_perturbation(l, &g).unwrap();
            assert_eq!(split, block_modulus(l, &g).unwrap());
        }
    }
}

#[test]
fn truncated_shape_and_polar() {
    let c = cfg();
    for n in 2..=4 {
        let spec = ShiftSpec::recipe(n, None).unwrap();
        let t = build_truncated(&spec).unwrap();
        assert_eq!(t.shape(), (3 * (n + 3), 3 * (n + 3)));
        let predicted = predicted_polar(&spec).unwrap();
        assert!(verify_polar(&t, &predicted, &c).unwrap().passes());
        let computed = polar_decompose(&t, &c);
        assert_eq!(computed.rank, predicted.rank);
        assert!(approx_equal(&computed.isometry, &predicted.isometry, &c).unwrap());
        assert!(approx_equal(&computed.modulus, &predicted.modulus, &c).unwrap());
    }
    assert_eq!(build_truncated(&ShiftSpec::recipe(2, Some(5)).unwrap()).unwrap().rows(), 15);
}

#[test]
fn spec_validation() {
    assert!(ShiftSpec::recipe(1, None).is_err());
    assert!(ShiftSpec::recipe(3, Some(4)).is_err());
    assert!(ShiftSpec::custom(2, vec![1.0, 1.0, 1.0]).is_err());
    assert!(ShiftSpec::custom(2, vec![1.0, 1.0, 0.0, 1.0]).is_err());
    assert!(ShiftSpec::custom(2, vec![1.0, 1.0, 4.5, 1.0]).is_err());
    assert!(ShiftSpec::custom(2, vec![1.0; 4]).is_ok());
    let bad = ShiftSpec { n: 2, blocks: 5, g: vec![1.0; 4] };
    assert!(build_truncated(&bad).is_err());
}

#[test]
fn commutator_pattern_examples() {
    let spec = ShiftSpec::recipe(3, None).unwrap();
    assert!(expected_commutator_pattern(&spec, 1));
    assert!(expected_commutator_pattern(&spec, 2));
    assert!(!expected_commutator_pattern(&spec, 3));
    let flat = ShiftSpec::custom(2, vec![1.0; 7]).unwrap();
    assert!((1..10).all(|k| expected_commutator_pattern(&flat, k)));
    // past the truncation no block pairs remain
    let two = ShiftSpec::recipe(2, None).unwrap();
    assert!(!expected_commutator_pattern(&two, 2));
    assert!(expected_commutator_pattern(&two, 4));
}
