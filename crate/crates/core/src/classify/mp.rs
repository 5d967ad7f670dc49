use serde::Serialize;

use crate::decomp::{abs_value, moore_penrose, moore_penrose_at_scale};
use crate::error::{Error, Result};
use crate::linalg::{commutator_residual, equality_residual, spectral_norm, Operator, Residual, ToleranceConfig};

use super::centered::centered_order;
use super::powers::powers_report;

#[derive(Debug, Clone, Serialize)]
pub struct MpCenteredReport {
    pub n: usize,
    /// `‖(T^k)† − (T†)^k‖_F` for `k = 1 … n`.
    pub power_residuals: Vec<Residual>,
    /// Centered order of `T†`, checked up to `n + 1`.
    pub dagger_order: usize,
    /// Centered order of `T`, checked up to `n + 1`.
    pub order: usize,
    /// `‖[P_k(T), |T|]‖_F` and `‖[P_k(T*), |T*|]‖_F` for `k = 1 … n`, when
    /// `T` is `(n+1)`-centered.
    pub projection_commutators: Option<Vec<[Residual; 2]>>,
}

impl MpCenteredReport {
    pub fn passes(&self) -> bool {
        self.power_residuals.iter().all(Residual::passes)
            && self.dagger_order >= self.n
            && self
                .projection_commutators
                .iter()
                .flatten()
                .flatten()
                .all(Residual::passes)
    }
}

/// Moore–Penrose identities for an `n`-centered `T`.
pub fn mp_centered_check(t: &Operator, n: usize, cfg: &ToleranceConfig) -> Result<MpCenteredReport> {
    t.require_square("mp_centered_check")?;
    if n == 0 {
        return Err(Error::InvalidParameter("order n must be at least 1".into()));
    }
    let order = centered_order(t, n + 1, cfg)?.verified_order;
    if order < n {
        return Err(Error::Precondition(format!(
            "operator is only {order}-centered, not {n}-centered"
        )));
    }
    let dagger = moore_penrose(t, cfg);
    let norm = spectral_norm(t);
    let mut tk = t.clone();
    let mut dk = dagger.clone();
    let mut power_residuals = Vec::with_capacity(n);
    for k in 1..=n {
        if k > 1 {
            tk = &tk * t;
            dk = &dk * &dagger;
        }
        power_residuals.push(equality_residual(&moore_penrose_at_scale(&tk, norm.powi(k as i32), cfg), &dk, cfg)?);
    }
    let dagger_order = centered_order(&dagger, n + 1, cfg)?.verified_order;

    let projection_commutators = if order > n {
        let modulus = abs_value(t, cfg);
        let adjoint_modulus = abs_value(&t.adjoint(), cfg);
        let levels = powers_report(t, n, cfg)?.levels;
        let mut out = Vec::with_capacity(n);
        for level in &levels {
            out.push([
                commutator_residual(&level.range_projection, &modulus, cfg)?,
                commutator_residual(&level.initial_projection, &adjoint_modulus, cfg)?,
            ]);
        }
        Some(out)
    } else {
        None
    };

    Ok(MpCenteredReport {
        n,
        power_residuals,
        dagger_order,
        order,
        projection_commutators,
    })
}
