use serde::Serialize;

use crate::decomp::{abs_value_at_scale, polar_decompose, PolarParts};
use crate::error::{Error, Result};
use crate::linalg::{
    commutator_residual, equality_residual, numerical_rank_at_scale, partial_isometry_residual, spectral_norm, svd,
    Operator, Residual, ToleranceConfig,
};

#[derive(Debug, Clone, Copy, Serialize)]
pub struct BinormalCheck {
    pub binormal: bool,
    /// `‖[T*T, TT*]‖_F` against its scaled bound.
    pub commutator: Residual,
}

/// `[T*T, TT*] ≈ 0`.
pub fn is_binormal(t: &Operator, cfg: &ToleranceConfig) -> Result<BinormalCheck> {
    t.require_square("is_binormal")?;
    let gram = &t.adjoint() * t;
    let cogram = t * &t.adjoint();
    let commutator = commutator_residual(&gram, &cogram, cfg)?;
    Ok(BinormalCheck { binormal: commutator.passes(), commutator })
}

#[derive(Debug, Clone, Serialize)]
pub struct CenteredReport {
    pub max_order_checked: usize,
    /// Largest `n ≤ max_order_checked` for which `T` is `n`-centered.
    pub verified_order: usize,
    /// `‖[U^k|T|(U^k)*, |T|]‖_F` for `k = 1 … max_order_checked − 1`.
    pub commutator_norms: Vec<Residual>,
    pub binormal: bool,
    /// Set when every order up to `max_order_checked ≥ dim²` verified. No
    /// finite check proves centeredness; this records the bound reached.
    pub centered: bool,
    /// The definitional check agrees at `verified_order` and
    /// `verified_order + 1`.
    pub oracle_agrees: bool,
    pub rank: usize,
    pub rank_margin: Option<f64>,
}

/// `[U^k|T|(U^k)*, |T|]` for `k = 1 … count`, with `U^k` accumulated.
fn shifted_commutators(parts: &PolarParts, count: usize, cfg: &ToleranceConfig) -> Result<Vec<Residual>> {
    let u = &parts.isometry;
    let p = &parts.modulus;
    let mut uk = u.clone();
    let mut out = Vec::with_capacity(count);
    for k in 1..=count {
        if k > 1 {
            uk = &uk * u;
        }
        let conj = &(&uk * p) * &uk.adjoint();
        out.push(commutator_residual(&conj, p, cfg)?);
    }
    Ok(out)
}

/// Largest `n ≤ max_n` with `[U^k|T|(U^k)*, |T|] ≈ 0` for all `k < n`,
/// cross-checked against [`is_n_centered_definitional`].
///
/// A non-vanishing commutator ends the run; later norms are still reported.
pub fn centered_order(t: &Operator, max_n: usize, cfg: &ToleranceConfig) -> Result<CenteredReport> {
    t.require_square("centered_order")?;
    if max_n == 0 {
        return Err(Error::InvalidParameter("max_n must be at least 1".into()));
    }
    let parts = polar_decompose(t, cfg);
    // one extra commutator beyond the reported ones decides order max_n + 1
    let all = shifted_commutators(&parts, max_n, cfg)?;
    let run = all.iter().take_while(|r| r.passes()).count();
    let verified_order = (1 + run).min(max_n);
    let next_holds = run >= verified_order;

    let definitional = is_n_centered_definitional(t, verified_order + 1, cfg)?;
    let holds_at = |n: usize| definitional.steps[..n].iter().all(DefinitionalStep::passes);
    let oracle_agrees = holds_at(verified_order) && holds_at(verified_order + 1) == next_holds;

    let dim = t.rows();
    Ok(CenteredReport {
        max_order_checked: max_n,
        verified_order,
        commutator_norms: all[..max_n - 1].to_vec(),
        binormal: all[0].passes(),
        centered: verified_order == max_n && max_n >= dim * dim,
        oracle_agrees,
        rank: parts.rank,
        rank_margin: parts.rank_margin,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct DefinitionalStep {
    pub k: usize,
    /// `‖T^k − U^k|T^k|‖_F`.
    pub reconstruction: Residual,
    /// `U^k` is a partial isometry.
    pub partial_isometry: Residual,
    /// `‖(U^k)*U^k·|T^k| − |T^k|‖_F`: the range of `|T^k|` lies in the
    /// initial space of `U^k`.
    pub range_containment: Residual,
    /// Numerical rank of `T^k`.
    pub power_rank: usize,
    /// `tr (U^k)*U^k`, the dimension of the initial space.
    pub initial_dimension: f64,
}

impl DefinitionalStep {
    /// Together with containment, equal dimensions make `(U^k)*U^k` the
    /// projection onto the range of `(T^k)*`.
    pub fn dimensions_match(&self) -> bool {
        (self.initial_dimension - self.power_rank as f64).abs() < 0.5
    }

    pub fn passes(&self) -> bool {
        self.reconstruction.passes()
            && self.partial_isometry.passes()
            && self.range_containment.passes()
            && self.dimensions_match()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct DefinitionalReport {
    pub n: usize,
    pub holds: bool,
    pub steps: Vec<DefinitionalStep>,
}

/// Whether `T^k = U^k|T^k|` is the polar decomposition for every
/// `k = 1 … n`, checked directly on the powers.
///
/// The initial-space condition `(U^k)*U^k = P_{ran (T^k)*}` is checked as
/// containment plus equal dimension, which stays well conditioned when
/// `T^k` has small singular values. Ranks of `T^k` are cut off against
/// `‖T‖₂^k`, the scale of the rounding noise in the computed power.
pub fn is_n_centered_definitional(t: &Operator, n: usize, cfg: &ToleranceConfig) -> Result<DefinitionalReport> {
    t.require_square("is_n_centered_definitional")?;
    if n == 0 {
        return Err(Error::InvalidParameter("order n must be at least 1".into()));
    }
    let norm = spectral_norm(t);
    let u = polar_decompose(t, cfg).isometry;
    let mut tk = t.clone();
    let mut uk = u.clone();
    let mut steps = Vec::with_capacity(n);
    for k in 1..=n {
        if k > 1 {
            tk = &tk * t;
            uk = &uk * &u;
        }
        let s = svd(&tk);
        let power_rank = numerical_rank_at_scale(&s.singular_values, norm.powi(k as i32), cfg);
        let modulus = abs_value_at_scale(&tk, norm.powi(k as i32), cfg);
        let gram = &uk.adjoint() * &uk;
        steps.push(DefinitionalStep {
            k,
            reconstruction: equality_residual(&tk, &(&uk * &modulus), cfg)?,
            partial_isometry: partial_isometry_residual(&uk, cfg),
            range_containment: equality_residual(&(&gram * &modulus), &modulus, cfg)?,
            power_rank,
            initial_dimension: gram.trace().re,
        });
    }
    Ok(DefinitionalReport {
        n,
        holds: steps.iter().all(DefinitionalStep::passes),
        steps,
    })
}
