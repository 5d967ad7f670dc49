use serde::Serialize;

use crate::decomp::polar_decompose;
use crate::error::{Error, Result};
use crate::linalg::{
    commutator_residual, equality_residual, partial_isometry_residual, Operator, Residual, ToleranceConfig,
};

/// The projections `P_n(T) = U^n(U^n)*`, `P_n(T*) = (U^n)*U^n` and the
/// identities tying them to `U^{n+1}` and `Ũ = U*U²`.
#[derive(Debug, Clone, Serialize)]
pub struct PowerLevel {
    pub n: usize,
    #[serde(skip)]
    pub range_projection: Operator,
    #[serde(skip)]
    pub initial_projection: Operator,
    /// `U^n` is a partial isometry.
    pub partial_isometry: bool,
    pub partial_isometry_residual: Residual,
    /// `U^{n+1}` is a partial isometry.
    pub next_partial_isometry: bool,
    /// `‖[P_n(T*), UU*]‖_F`.
    pub adjoint_commutator: Residual,
    /// `‖[P_n(T), U*U]‖_F`.
    pub commutator: Residual,
    /// `‖Ũⁿ − U*U^{n+1}‖_F`.
    pub tilde_power: Residual,
    /// `‖(Ũⁿ)*Ũⁿ − P_{n+1}(T*)‖_F`.
    pub tilde_gram: Residual,
}

impl PowerLevel {
    /// Given `U^n` a partial isometry, the three statements about
    /// `U^{n+1}` coincide.
    pub fn consistent(&self) -> bool {
        !self.partial_isometry
            || (self.next_partial_isometry == self.adjoint_commutator.passes()
                && self.next_partial_isometry == self.commutator.passes())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PowersReport {
    pub levels: Vec<PowerLevel>,
}

impl PowersReport {
    pub fn consistent(&self) -> bool {
        self.levels.iter().all(PowerLevel::consistent)
    }

    pub fn tilde_identities_hold(&self) -> bool {
        self.levels
            .iter()
            .all(|l| l.tilde_power.passes() && l.tilde_gram.passes())
    }
}

pub fn powers_report(t: &Operator, max_n: usize, cfg: &ToleranceConfig) -> Result<PowersReport> {
    t.require_square("powers_report")?;
    if max_n == 0 {
        return Err(Error::InvalidParameter("max_n must be at least 1".into()));
    }
    let u = polar_decompose(t, cfg).isometry;
    let ua = u.adjoint();
    let final_proj = &u * &ua;
    let initial_proj = &ua * &u;
    let tilde = &ua * &(&u * &u);

    let mut un = u.clone();
    let mut tilde_n = tilde.clone();
    let mut levels = Vec::with_capacity(max_n);
    for n in 1..=max_n {
        if n > 1 {
            un = &un * &u;
            tilde_n = &tilde_n * &tilde;
        }
        let next = &un * &u;
        let range_projection = &un * &un.adjoint();
        let initial_projection = &un.adjoint() * &un;
        let pi = partial_isometry_residual(&un, cfg);
        let next_pi = partial_isometry_residual(&next, cfg);
        levels.push(PowerLevel {
            n,
            adjoint_commutator: commutator_residual(&initial_projection, &final_proj, cfg)?,
            commutator: commutator_residual(&range_projection, &initial_proj, cfg)?,
            tilde_power: equality_residual(&tilde_n, &(&ua * &next), cfg)?,
            tilde_gram: equality_residual(&(&tilde_n.adjoint() * &tilde_n), &(&next.adjoint() * &next), cfg)?,
            range_projection,
            initial_projection,
            partial_isometry: pi.passes(),
            partial_isometry_residual: pi,
            next_partial_isometry: next_pi.passes(),
        });
    }
    Ok(PowersReport { levels })
}
