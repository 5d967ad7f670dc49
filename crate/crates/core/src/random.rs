//! Seeded operator generators for property tests and the trial runner.
//!
//! Entries are complex with independent standard-normal real and imaginary
//! parts. Every generator takes the RNG explicitly; [`trial_rng`] derives
//! an independent stream per trial so results do not depend on evaluation
//! order.

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::Serialize;

use crate::linalg::{spectral_synthesis, svd, CMatrix, Operator};

pub type TrialRng = ChaCha8Rng;

pub fn trial_rng(seed: u64, trial: u64) -> TrialRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

pub fn complex_normal<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

pub fn gaussian<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> Operator {
    Operator::from_fn(rows, cols, |_, _| complex_normal(rng))
}

/// Gaussian operator with all but the leading `rank` singular values zeroed.
pub fn rank_deficient<R: Rng + ?Sized>(rng: &mut R, dim: usize, rank: usize) -> Operator {
    let g = gaussian(rng, dim, dim);
    let s = svd(&g);
    let r = rank.min(dim);
    let mut w = s.left_vectors.matrix().columns(0, r).into_owned();
    for (j, mut col) in w.column_iter_mut().enumerate() {
        col *= Complex64::new(s.singular_values[j], 0.0);
    }
    if r == 0 {
        return Operator::zeros(dim, dim);
    }
    let x = s.right_vectors.matrix().columns(0, r).into_owned();
    Operator::from_matrix(w * x.adjoint()).expect("finite product")
}

/// Haar-distributed unitary via QR of a Gaussian matrix with the phase fix.
pub fn unitary<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Operator {
    let g = gaussian(rng, dim, dim).into_matrix();
    let qr = g.qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        let d = r[(j, j)];
        let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
        let mut col = q.column_mut(j);
        col *= phase;
    }
    Operator::from_matrix(q).expect("finite unitary")
}

/// `Q · diag(values) · Q*` for a random unitary `Q`.
pub fn with_random_eigenbasis<R: Rng + ?Sized>(rng: &mut R, values: &[f64]) -> Operator {
    let q = unitary(rng, values.len());
    spectral_synthesis(&q, values)
}

/// PSD of the given rank, `G G*` with `G` of size `dim × rank`.
pub fn psd<R: Rng + ?Sized>(rng: &mut R, dim: usize, rank: usize) -> Operator {
    if rank == 0 {
        return Operator::zeros(dim, dim);
    }
    let g = gaussian(rng, dim, rank);
    &g * &g.adjoint()
}

/// Two PSD operators diagonal in one shared random eigenbasis, each with
/// some eigenvalues zeroed.
pub fn commuting_psd_pair<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> (Operator, Operator) {
    let q = unitary(rng, dim);
    let spectrum = |rng: &mut R| -> Vec<f64> {
        (0..dim)
            .map(|_| if rng.random_bool(0.25) { 0.0 } else { rng.random_range(0.1..3.0) })
            .collect()
    };
    let a = spectral_synthesis(&q, &spectrum(rng));
    let b = spectral_synthesis(&q, &spectrum(rng));
    (a, b)
}

/// Zero with probability 1/5, otherwise modulus uniform in `[0.5, 2]` with
/// a uniform phase. Keeping nonzero moduli within a factor of four bounds
/// the condition number of the powers the classification checks form.
fn spectral_value<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    if rng.random_bool(0.2) {
        Complex64::ZERO
    } else {
        Complex64::from_polar(rng.random_range(0.5..=2.0), rng.random_range(0.0..std::f64::consts::TAU))
    }
}

/// `Q · diag(z) · Q*` with eigenvalues drawn by [`spectral_value`].
pub fn normal<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Operator {
    let q = unitary(rng, dim).into_matrix();
    let mut scaled = q.clone();
    for mut col in scaled.column_iter_mut() {
        col *= spectral_value(rng);
    }
    Operator::wrap(scaled * q.adjoint())
}

/// Nilpotent unilateral shift `e_j ↦ w_j e_{j+1}` with the given weights.
pub fn weighted_shift(weights: &[Complex64]) -> Operator {
    let dim = weights.len() + 1;
    let mut m = CMatrix::zeros(dim, dim);
    for (j, &w) in weights.iter().enumerate() {
        m[(j + 1, j)] = w;
    }
    Operator::wrap(m)
}

/// A random binormal (indeed centered) operator: a weighted shift with
/// random complex weights next to a random normal block, conjugated by a
/// random unitary.
pub fn binormal<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Operator {
    let shift_dim = if dim <= 2 { dim } else { rng.random_range(2..=dim) };
    let weights: Vec<Complex64> = (0..shift_dim - 1).map(|_| spectral_value(rng)).collect();
    let shift = weighted_shift(&weights);
    let mut m = CMatrix::zeros(dim, dim);
    m.view_mut((0, 0), (shift_dim, shift_dim)).copy_from(shift.matrix());
    for i in shift_dim..dim {
        m[(i, i)] = spectral_value(rng);
    }
    let q = unitary(rng, dim);
    &(&q * &Operator::wrap(m)) * &q.adjoint()
}

/// Strictly upper-triangular Gaussian matrix, nilpotent of index `dim`.
pub fn nilpotent<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> Operator {
    let g = gaussian(rng, dim, dim);
    Operator::from_fn(dim, dim, |i, j| if j > i { g.get(i, j) } else { Complex64::ZERO })
}

/// The operator families drawn by [`mixed`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Gaussian,
    RankDeficient,
    Nilpotent,
    Normal,
    Unitary,
    Binormal,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Gaussian,
        Family::RankDeficient,
        Family::Nilpotent,
        Family::Normal,
        Family::Unitary,
        Family::Binormal,
    ];

    pub fn sample<R: Rng + ?Sized>(self, rng: &mut R, dim: usize) -> Operator {
        match self {
            Family::Gaussian => gaussian(rng, dim, dim),
            Family::RankDeficient => {
                let rank = rng.random_range(1..dim.max(2));
                rank_deficient(rng, dim, rank)
            }
            Family::Nilpotent => nilpotent(rng, dim),
            Family::Normal => normal(rng, dim),
            Family::Unitary => unitary(rng, dim),
            Family::Binormal => binormal(rng, dim),
        }
    }
}

/// An operator from a uniformly chosen [`Family`].
pub fn mixed<R: Rng + ?Sized>(rng: &mut R, dim: usize) -> (Family, Operator) {
    let family = Family::ALL[rng.random_range(0..Family::ALL.len())];
    (family, family.sample(rng, dim))
}
