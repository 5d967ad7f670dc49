//! Polar decomposition with the partial-isometry range condition, absolute
//! values and Moore–Penrose inverses.
//!
//! Everything here is read off one thin SVD `T = W Σ X*` with numerical rank
//! `r`:
//!
//! * `U = W_r X_r*` (zero on the null space of `T`),
//! * `|T| = X_r Σ_r X_r*`,
//! * `T† = X_r Σ_r⁻¹ W_r*`.
//!
//! The same `r` feeds `U` and every range projection built from the same
//! factorization. Singular values below the rank cutoff are dropped, so
//! `|T|` has exactly the rank that `U*U` projects onto.

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{
    equality_residual, herm_eig, numerical_rank_at_scale, partial_isometry_residual, projection_from_columns,
    range_projection, svd, CMatrix, Operator, Residual, SvdResult, ToleranceConfig,
};

/// `T = U · P` with `U` a partial isometry and `P = |T|`.
#[derive(Debug, Clone)]
pub struct PolarParts {
    pub isometry: Operator,
    pub modulus: Operator,
    pub rank: usize,
    /// `σ_r / σ_1` of the factorization that produced the parts, when known.
    pub rank_margin: Option<f64>,
}

/// One named identity and how far it is from holding.
#[derive(Debug, Clone, Serialize)]
pub struct NamedResidual {
    pub name: &'static str,
    #[serde(flatten)]
    pub residual: Residual,
}

impl NamedResidual {
    pub fn new(name: &'static str, residual: Residual) -> Self {
        Self { name, residual }
    }

    pub fn passes(&self) -> bool {
        self.residual.passes()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PolarReport {
    pub checks: Vec<NamedResidual>,
}

impl PolarReport {
    pub fn passes(&self) -> bool {
        self.checks.iter().all(NamedResidual::passes)
    }

    pub fn get(&self, name: &str) -> Option<&Residual> {
        self.checks.iter().find(|c| c.name == name).map(|c| &c.residual)
    }

    /// Largest `value / bound` over all checks.
    pub fn worst_ratio(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| ratio(&c.residual))
            .fold(0.0, f64::max)
    }
}

fn ratio(r: &Residual) -> f64 {
    if r.bound > 0.0 {
        r.value / r.bound
    } else if r.value > 0.0 {
        f64::INFINITY
    } else {
        0.0
    }
}

fn scale_columns(m: &CMatrix, factors: impl Fn(usize) -> f64) -> CMatrix {
    let mut out = m.clone();
    for (j, mut col) in out.column_iter_mut().enumerate() {
        col *= Complex64::new(factors(j), 0.0);
    }
    out
}

fn modulus_from_svd(s: &SvdResult, r: usize, dim: usize) -> Operator {
    if r == 0 {
        return Operator::zeros(dim, dim);
    }
    let x = s.right_leading(r);
    let scaled = scale_columns(&x, |j| s.singular_values[j]);
    Operator::wrap(scaled * x.adjoint())
}

/// `|T| = (T*T)^{1/2}`.
pub fn abs_value(t: &Operator, cfg: &ToleranceConfig) -> Operator {
    abs_value_at_scale(t, 0.0, cfg)
}

/// [`abs_value`] with the rank cutoff taken against `max(σ_1, scale)`; see
/// [`numerical_rank_at_scale`].
pub fn abs_value_at_scale(t: &Operator, scale: f64, cfg: &ToleranceConfig) -> Operator {
    let s = svd(t);
    let r = numerical_rank_at_scale(&s.singular_values, scale, cfg);
    modulus_from_svd(&s, r, t.cols())
}

pub fn polar_decompose(t: &Operator, cfg: &ToleranceConfig) -> PolarParts {
    polar_decompose_at_scale(t, 0.0, cfg)
}

pub fn polar_decompose_at_scale(t: &Operator, scale: f64, cfg: &ToleranceConfig) -> PolarParts {
    let s = svd(t);
    polar_from_svd(t, &s, scale, cfg)
}

pub(crate) fn polar_from_svd(t: &Operator, s: &SvdResult, scale: f64, cfg: &ToleranceConfig) -> PolarParts {
    let r = numerical_rank_at_scale(&s.singular_values, scale, cfg);
    let isometry = if r == 0 {
        Operator::zeros(t.rows(), t.cols())
    } else {
        Operator::wrap(s.left_leading(r) * s.right_leading(r).adjoint())
    };
    PolarParts {
        isometry,
        modulus: modulus_from_svd(s, r, t.cols()),
        rank: r,
        rank_margin: s.rank_margin(cfg),
    }
}

/// `‖P − P*‖_F + max(0, −λ_min(P))`, zero exactly for Hermitian PSD `P`.
fn psd_defect(p: &Operator) -> f64 {
    let adj = p.adjoint();
    let skew = (p - &adj).frobenius_norm();
    let herm = Operator::wrap((p.matrix() + adj.matrix()).scale(0.5));
    let relaxed = ToleranceConfig::default().with_residual_tol(0.5);
    let lowest = herm_eig(&herm, &relaxed)
        .ok()
        .and_then(|e| e.eigenvalues.first().copied())
        .unwrap_or(0.0);
    skew + (-lowest).max(0.0)
}

/// Checks `T = U·P`, `P ≥ 0`, `U` a partial isometry, `U*U = P_{ran P}`,
/// `|T*| = U|T|U*` and `U|T| = |T*|U`.
pub fn verify_polar(t: &Operator, parts: &PolarParts, cfg: &ToleranceConfig) -> Result<PolarReport> {
    let (u, p) = (&parts.isometry, &parts.modulus);
    if u.shape() != t.shape() {
        return Err(Error::DimensionMismatch {
            op: "verify_polar",
            left: t.shape(),
            right: u.shape(),
        });
    }
    if p.shape() != (t.cols(), t.cols()) {
        return Err(Error::DimensionMismatch {
            op: "verify_polar",
            left: (t.cols(), t.cols()),
            right: p.shape(),
        });
    }
    let up = u * p;
    let abs_adj = abs_value(&t.adjoint(), cfg);
    let gram = &u.adjoint() * u;
    let psd_bound = cfg.equality_rel_tol * 1f64.max(p.frobenius_norm());

    let checks = vec![
        NamedResidual::new("reconstruction", equality_residual(t, &up, cfg)?),
        NamedResidual::new("modulus_psd", Residual::new(psd_defect(p), psd_bound)),
        NamedResidual::new("partial_isometry", partial_isometry_residual(u, cfg)),
        NamedResidual::new(
            "initial_projection",
            equality_residual(&gram, &range_projection(p, cfg), cfg)?,
        ),
        NamedResidual::new(
            "adjoint_modulus",
            equality_residual(&abs_adj, &(&up * &u.adjoint()), cfg)?,
        ),
        NamedResidual::new("intertwining", equality_residual(&up, &(&abs_adj * u), cfg)?),
    ];
    Ok(PolarReport { checks })
}

/// `T† = X_r Σ_r⁻¹ W_r*`.
pub fn moore_penrose(t: &Operator, cfg: &ToleranceConfig) -> Operator {
    moore_penrose_at_scale(t, 0.0, cfg)
}

pub fn moore_penrose_at_scale(t: &Operator, scale: f64, cfg: &ToleranceConfig) -> Operator {
    let s = svd(t);
    let r = numerical_rank_at_scale(&s.singular_values, scale, cfg);
    if r == 0 {
        return Operator::zeros(t.cols(), t.rows());
    }
    let x = scale_columns(&s.right_leading(r), |j| 1.0 / s.singular_values[j]);
    Operator::wrap(x * s.left_leading(r).adjoint())
}

/// Residuals of the four Penrose equations for a candidate `X ≈ T†`.
#[derive(Debug, Clone, Serialize)]
pub struct PenroseCheck {
    /// `TXT − T`, `XTX − X`, `(TX)* − TX`, `(XT)* − XT`.
    pub residuals: [Residual; 4],
}

impl PenroseCheck {
    pub const NAMES: [&'static str; 4] = ["txt_eq_t", "xtx_eq_x", "tx_hermitian", "xt_hermitian"];

    pub fn passes(&self) -> bool {
        self.residuals.iter().all(Residual::passes)
    }
}

pub fn penrose_check(t: &Operator, x: &Operator, cfg: &ToleranceConfig) -> Result<PenroseCheck> {
    if x.shape() != (t.cols(), t.rows()) {
        return Err(Error::DimensionMismatch {
            op: "penrose_check",
            left: (t.cols(), t.rows()),
            right: x.shape(),
        });
    }
    let tx = t * x;
    let xt = x * t;
    Ok(PenroseCheck {
        residuals: [
            equality_residual(&(&tx * t), t, cfg)?,
            equality_residual(&(&xt * x), x, cfg)?,
            equality_residual(&tx.adjoint(), &tx, cfg)?,
            equality_residual(&xt.adjoint(), &xt, cfg)?,
        ],
    })
}

/// Polar parts of `T†`: `(U*, |T†|)` where `T = U|T|`.
pub fn mp_polar_parts(t: &Operator, cfg: &ToleranceConfig) -> Result<PolarParts> {
    t.require_square("mp_polar_parts")?;
    let parts = polar_decompose(t, cfg);
    let modulus = abs_value(&moore_penrose(t, cfg), cfg);
    Ok(PolarParts {
        isometry: parts.isometry.adjoint(),
        modulus,
        rank: parts.rank,
        rank_margin: parts.rank_margin,
    })
}

/// Projection onto the numerical range of `T*`, from the same SVD rank as
/// [`polar_decompose`].
pub fn initial_projection(t: &Operator, cfg: &ToleranceConfig) -> Operator {
    initial_projection_at_scale(t, 0.0, cfg)
}

pub fn initial_projection_at_scale(t: &Operator, scale: f64, cfg: &ToleranceConfig) -> Operator {
    let s = svd(t);
    let r = numerical_rank_at_scale(&s.singular_values, scale, cfg);
    projection_from_columns(&s.right_leading(r), t.cols())
}
