use serde::Serialize;

use crate::decomp::{
    abs_value, abs_value_at_scale, polar_decompose, polar_decompose_at_scale, verify_polar, PolarParts, PolarReport,
};
use crate::error::{Error, Result};
use crate::linalg::{
    commutator_residual, equality_residual, is_psd, range_projection, spectral_norm, Operator, Residual, ToleranceConfig,
};

/// The polar decomposition of a product `TS` against the factors `U`, `V`
/// of `T = U|T|` and `S = V|S|`.
#[derive(Debug, Clone, Serialize)]
pub struct ProductPolarReport {
    /// `‖[|T|, |S*|]‖_F`.
    pub commutator: Residual,
    #[serde(skip)]
    pub candidate_isometry: Operator,
    /// `‖TS − UV|TS|‖_F`.
    pub equality: Residual,
    /// `TS = UV|TS|` checked as a polar decomposition.
    pub polar_checks: PolarReport,
    pub is_polar: bool,
    #[serde(skip)]
    pub general_isometry: Operator,
    /// `‖UW₁V − U_{TS}‖_F`, where `|T||S*| = W₁ ||T||S*||`.
    pub general_factor: Residual,
}

impl ProductPolarReport {
    pub fn commutes(&self) -> bool {
        self.commutator.passes()
    }

    pub fn equation_holds(&self) -> bool {
        self.equality.passes()
    }

    /// The three booleans agree.
    pub fn consistent(&self) -> bool {
        self.commutes() == self.is_polar && self.is_polar == self.equation_holds()
    }
}

fn require_pair(t: &Operator, s: &Operator, op: &'static str) -> Result<()> {
    t.require_square(op)?;
    t.require_same_shape(s, op)
}

pub fn product_polar(t: &Operator, s: &Operator, cfg: &ToleranceConfig) -> Result<ProductPolarReport> {
    require_pair(t, s, "product_polar")?;
    let tp = polar_decompose(t, cfg);
    let sp = polar_decompose(s, cfg);
    let ts = t * s;
    // products are cut off at the scale of their rounding noise
    let scale = spectral_norm(t) * spectral_norm(s);
    let ts_mod = abs_value_at_scale(&ts, scale, cfg);
    let s_star_mod = abs_value(&s.adjoint(), cfg);

    let candidate = &tp.isometry * &sp.isometry;
    let candidate_parts = PolarParts {
        isometry: candidate.clone(),
        modulus: ts_mod.clone(),
        rank: 0,
        rank_margin: None,
    };
    let polar_checks = verify_polar(&ts, &candidate_parts, cfg)?;

    let w1 = polar_decompose_at_scale(&(&tp.modulus * &s_star_mod), scale, cfg).isometry;
    let general = &(&tp.isometry * &w1) * &sp.isometry;
    let direct = polar_decompose_at_scale(&ts, scale, cfg).isometry;

    Ok(ProductPolarReport {
        commutator: commutator_residual(&tp.modulus, &s_star_mod, cfg)?,
        equality: equality_residual(&ts, &(&candidate * &ts_mod), cfg)?,
        is_polar: polar_checks.passes(),
        polar_checks,
        candidate_isometry: candidate,
        general_factor: equality_residual(&general, &direct, cfg)?,
        general_isometry: general,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TransferReport {
    /// `UW₁V` as the polar factor of `TS`.
    pub forward: PolarReport,
    /// `U*W₂V*` as the polar factor of `|T||S*|`.
    pub backward: PolarReport,
}

impl TransferReport {
    pub fn passes(&self) -> bool {
        self.forward.passes() && self.backward.passes()
    }
}

/// Moves polar factors between `TS` and `|T||S*|` in both directions.
pub fn product_polar_transfer(t: &Operator, s: &Operator, cfg: &ToleranceConfig) -> Result<TransferReport> {
    require_pair(t, s, "product_polar_transfer")?;
    let tp = polar_decompose(t, cfg);
    let sp = polar_decompose(s, cfg);
    let (u, v) = (&tp.isometry, &sp.isometry);
    let ts = t * s;
    let moduli = &tp.modulus * &abs_value(&s.adjoint(), cfg);
    let scale = spectral_norm(t) * spectral_norm(s);

    let w1 = polar_decompose_at_scale(&moduli, scale, cfg).isometry;
    let w2 = polar_decompose_at_scale(&ts, scale, cfg).isometry;
    let forward = PolarParts {
        isometry: &(u * &w1) * v,
        modulus: abs_value_at_scale(&ts, scale, cfg),
        rank: 0,
        rank_margin: None,
    };
    let backward = PolarParts {
        isometry: &(&u.adjoint() * &w2) * &v.adjoint(),
        modulus: abs_value_at_scale(&moduli, scale, cfg),
        rank: 0,
        rank_margin: None,
    };
    Ok(TransferReport {
        forward: verify_polar(&ts, &forward, cfg)?,
        backward: verify_polar(&moduli, &backward, cfg)?,
    })
}

/// `AB = P_{ran A} P_{ran B} · AB` for commuting positive `A`, `B`.
pub fn positive_product_polar(a: &Operator, b: &Operator, cfg: &ToleranceConfig) -> Result<PolarParts> {
    require_pair(a, b, "positive_product_polar")?;
    for m in [a, b] {
        if !is_psd(m, cfg) {
            let lowest = crate::linalg::herm_eig(m, cfg)
                .map(|e| e.eigenvalues.first().copied().unwrap_or(0.0))
                .unwrap_or(f64::NAN);
            return Err(Error::NotPositive { eigenvalue: lowest });
        }
    }
    let c = commutator_residual(a, b, cfg)?;
    if !c.passes() {
        return Err(Error::NotCommuting { norm: c.value });
    }
    let ab = a * b;
    let modulus = (&ab + &ab.adjoint()).scale(0.5);
    let parts = PolarParts {
        isometry: &range_projection(a, cfg) * &range_projection(b, cfg),
        rank: 0,
        rank_margin: None,
        modulus,
    };
    let report = verify_polar(&ab, &parts, cfg)?;
    if !report.passes() {
        return Err(Error::Precondition(format!(
            "product of commuting positives failed polar checks (worst ratio {:.3e})",
            report.worst_ratio()
        )));
    }
    Ok(parts)
}
