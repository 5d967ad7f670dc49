//! Dense kernels and toleranced predicates.

use nalgebra::DVector;
use num_complex::Complex64;

use super::jacobi::thin_svd;
use super::operator::{CMatrix, Operator};
use super::residual::Residual;
use super::tolerance::{ToleranceConfig, COMMUTATOR_ABS_FLOOR};
use crate::error::{Error, Result};

/// Thin singular value decomposition `M = W · diag(σ) · X*`.
#[derive(Debug, Clone)]
pub struct SvdResult {
    /// `rows × p` with orthonormal columns, `p = min(rows, cols)`.
    pub left_vectors: Operator,
    /// Nonincreasing, nonnegative.
    pub singular_values: Vec<f64>,
    /// `cols × p` with orthonormal columns.
    pub right_vectors: Operator,
}

impl SvdResult {
    /// `σ_r / σ_1` for the numerical rank `r`; `None` when the rank is zero.
    pub fn rank_margin(&self, cfg: &ToleranceConfig) -> Option<f64> {
        let r = numerical_rank(&self.singular_values, cfg);
        (r > 0).then(|| self.singular_values[r - 1] / self.singular_values[0])
    }

    /// First `r` left singular vectors.
    pub fn left_leading(&self, r: usize) -> CMatrix {
        self.left_vectors.matrix().columns(0, r).into_owned()
    }

    /// First `r` right singular vectors.
    pub fn right_leading(&self, r: usize) -> CMatrix {
        self.right_vectors.matrix().columns(0, r).into_owned()
    }
}

/// Eigendecomposition of a Hermitian operator, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct HermEigResult {
    pub eigenvalues: Vec<f64>,
    pub eigenvectors: Operator,
}

pub fn svd(m: &Operator) -> SvdResult {
    let (w, singular_values, x) = thin_svd(m.matrix());
    SvdResult {
        left_vectors: Operator::wrap(w),
        singular_values,
        right_vectors: Operator::wrap(x),
    }
}

pub fn herm_eig(a: &Operator, cfg: &ToleranceConfig) -> Result<HermEigResult> {
    a.require_square("herm_eig")?;
    let sym = hermitian_part(a, cfg)?;
    let eig = sym.symmetric_eigen();
    let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let eigenvalues = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let columns: Vec<_> = order.iter().map(|&i| eig.eigenvectors.column(i)).collect();
    Ok(HermEigResult {
        eigenvalues,
        eigenvectors: Operator::wrap(CMatrix::from_columns(&columns)),
    })
}

/// `(a + a*) / 2` after checking `a ≈ a*`.
fn hermitian_part(a: &Operator, cfg: &ToleranceConfig) -> Result<CMatrix> {
    let adj = a.adjoint();
    let res = equality_residual(a, &adj, cfg)?;
    if !res.passes() {
        return Err(Error::NotHermitian { residual: res.value });
    }
    Ok((a.matrix() + adj.matrix()).scale(0.5))
}

pub fn commutator(a: &Operator, b: &Operator) -> Result<Operator> {
    a.require_square("commutator")?;
    a.require_same_shape(b, "commutator")?;
    Ok(&(a * b) - &(b * a))
}

/// `‖[a, b]‖_F` against `max(zero_rel_tol · ‖a‖_F · ‖b‖_F, 1e-14)`.
pub fn commutator_residual(a: &Operator, b: &Operator, cfg: &ToleranceConfig) -> Result<Residual> {
    let c = commutator(a, b)?;
    let bound = (cfg.zero_rel_tol * a.frobenius_norm() * b.frobenius_norm()).max(COMMUTATOR_ABS_FLOOR);
    Ok(Residual::new(c.frobenius_norm(), bound))
}

pub fn commutes(a: &Operator, b: &Operator, cfg: &ToleranceConfig) -> Result<bool> {
    Ok(commutator_residual(a, b, cfg)?.passes())
}

/// Number of `σ_i > rank_rel_tol · σ_1`.
pub fn numerical_rank(singular_values: &[f64], cfg: &ToleranceConfig) -> usize {
    numerical_rank_at_scale(singular_values, 0.0, cfg)
}

/// Number of `σ_i > rank_rel_tol · max(σ_1, scale)`.
///
/// A product such as `T^k` carries rounding noise of order `‖T‖^k` however
/// small its own singular values come out; passing that `scale` keeps the
/// noise from being read as rank.
pub fn numerical_rank_at_scale(singular_values: &[f64], scale: f64, cfg: &ToleranceConfig) -> usize {
    let Some(&first) = singular_values.first() else {
        return 0;
    };
    if first <= 0.0 {
        return 0;
    }
    let cutoff = cfg.rank_rel_tol * first.max(scale);
    singular_values.iter().take_while(|&&s| s > cutoff).count()
}

/// Largest singular value.
pub fn spectral_norm(t: &Operator) -> f64 {
    svd(t).singular_values.first().copied().unwrap_or(0.0)
}

/// `a^alpha` for Hermitian positive semidefinite `a`, through its eigenbasis.
///
/// Eigenvalues at or below `rank_rel_tol · λ_max` are set to zero before
/// powering, so the range of the result is the numerical range of `a`.
/// Eigenvalues below `-equality_rel_tol · max(1, |λ|)` are rejected.
pub fn fractional_power_psd(a: &Operator, alpha: f64, cfg: &ToleranceConfig) -> Result<Operator> {
    if !(alpha.is_finite() && alpha > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "power must be a positive real, got {alpha}"
        )));
    }
    let eig = herm_eig(a, cfg)?;
    let magnitude = eig.eigenvalues.iter().fold(1.0f64, |m, l| m.max(l.abs()));
    let lowest = eig.eigenvalues.first().copied().unwrap_or(0.0);
    if lowest < -cfg.equality_rel_tol * magnitude {
        return Err(Error::NotPositive { eigenvalue: lowest });
    }
    let top = eig.eigenvalues.last().copied().unwrap_or(0.0).max(0.0);
    let cutoff = cfg.rank_rel_tol * top;
    let powered: Vec<f64> = eig
        .eigenvalues
        .iter()
        .map(|&l| if l <= cutoff || l <= 0.0 { 0.0 } else { l.powf(alpha) })
        .collect();
    Ok(spectral_synthesis(&eig.eigenvectors, &powered))
}

/// `Q · diag(values) · Q*`.
pub(crate) fn spectral_synthesis(q: &Operator, values: &[f64]) -> Operator {
    let q = q.matrix();
    let d = DVector::from_iterator(values.len(), values.iter().map(|&v| Complex64::new(v, 0.0)));
    let mut scaled = q.clone();
    for (j, mut col) in scaled.column_iter_mut().enumerate() {
        col *= d[j];
    }
    Operator::wrap(&scaled * q.adjoint())
}

/// Orthogonal projection onto the numerical range of `t`.
pub fn range_projection(t: &Operator, cfg: &ToleranceConfig) -> Operator {
    range_projection_with_rank(t, cfg).0
}

pub fn range_projection_with_rank(t: &Operator, cfg: &ToleranceConfig) -> (Operator, usize) {
    let s = svd(t);
    let r = numerical_rank(&s.singular_values, cfg);
    (projection_from_columns(&s.left_leading(r), t.rows()), r)
}

/// `C · C*` for a matrix with orthonormal columns; zero when `C` has none.
pub(crate) fn projection_from_columns(columns: &CMatrix, dim: usize) -> Operator {
    if columns.ncols() == 0 {
        return Operator::zeros(dim, dim);
    }
    Operator::wrap(columns * columns.adjoint())
}

/// `‖a − b‖_F` against `equality_rel_tol · max(1, ‖a‖_F, ‖b‖_F)`.
pub fn equality_residual(a: &Operator, b: &Operator, cfg: &ToleranceConfig) -> Result<Residual> {
    a.require_same_shape(b, "approx_equal")?;
    let scale = 1f64.max(a.frobenius_norm()).max(b.frobenius_norm());
    Ok(Residual::new((a - b).frobenius_norm(), cfg.equality_rel_tol * scale))
}

pub fn approx_equal(a: &Operator, b: &Operator, cfg: &ToleranceConfig) -> Result<bool> {
    Ok(equality_residual(a, b, cfg)?.passes())
}

pub fn is_hermitian(a: &Operator, cfg: &ToleranceConfig) -> bool {
    a.is_square() && approx_equal(a, &a.adjoint(), cfg).unwrap_or(false)
}

/// Hermitian and idempotent.
pub fn is_projection(p: &Operator, cfg: &ToleranceConfig) -> bool {
    is_hermitian(p, cfg) && approx_equal(&(p * p), p, cfg).unwrap_or(false)
}

/// `‖(W*W)² − W*W‖` as an equality residual; passes iff `W*W` is a projection.
pub fn partial_isometry_residual(w: &Operator, cfg: &ToleranceConfig) -> Residual {
    let g = &w.adjoint() * w;
    equality_residual(&(&g * &g), &g, cfg).expect("square gram matrix")
}

pub fn is_partial_isometry(w: &Operator, cfg: &ToleranceConfig) -> bool {
    partial_isometry_residual(w, cfg).passes()
}

/// Hermitian with no eigenvalue below `-equality_rel_tol · max(1, |λ|)`.
pub fn is_psd(a: &Operator, cfg: &ToleranceConfig) -> bool {
    let Ok(eig) = herm_eig(a, cfg) else {
        return false;
    };
    let magnitude = eig.eigenvalues.iter().fold(1.0f64, |m, l| m.max(l.abs()));
    eig.eigenvalues
        .first()
        .is_none_or(|&l| l >= -cfg.equality_rel_tol * magnitude)
}
