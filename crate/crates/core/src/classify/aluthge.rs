use serde::Serialize;

use crate::decomp::{abs_value, abs_value_at_scale, polar_decompose, verify_polar, PolarParts, PolarReport};
use crate::error::{Error, Result};
use crate::linalg::{equality_residual, fractional_power_psd, spectral_norm, Operator, Residual, ToleranceConfig};

use super::centered::is_binormal;

/// `T_{α,β} = |T|^α U |T|^β` and `Ũ = U*U²`.
#[derive(Debug, Clone)]
pub struct AluthgeParts {
    pub alpha: f64,
    pub beta: f64,
    pub transform: Operator,
    pub tilde_u: Operator,
}

fn check_exponent(name: &str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{name} must be a positive real, got {value}")))
    }
}

struct Powers<'a> {
    parts: &'a PolarParts,
    cfg: &'a ToleranceConfig,
}

impl Powers<'_> {
    fn modulus(&self, p: f64) -> Result<Operator> {
        fractional_power_psd(&self.parts.modulus, p, self.cfg)
    }

    fn transform(&self, alpha: f64, beta: f64) -> Result<Operator> {
        Ok(&(&self.modulus(alpha)? * &self.parts.isometry) * &self.modulus(beta)?)
    }
}

fn tilde(u: &Operator) -> Operator {
    &u.adjoint() * &(u * u)
}

pub fn aluthge(t: &Operator, alpha: f64, beta: f64, cfg: &ToleranceConfig) -> Result<AluthgeParts> {
    t.require_square("aluthge")?;
    check_exponent("alpha", alpha)?;
    check_exponent("beta", beta)?;
    let parts = polar_decompose(t, cfg);
    let powers = Powers { parts: &parts, cfg };
    Ok(AluthgeParts {
        alpha,
        beta,
        transform: powers.transform(alpha, beta)?,
        tilde_u: tilde(&parts.isometry),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct PairCheck {
    pub alpha: f64,
    pub beta: f64,
    /// `‖T_{α,β} − Ũ|T_{α,β}|‖_F`.
    pub equation: Residual,
    /// `T_{α,β} = Ũ|T_{α,β}|` checked as a polar decomposition.
    pub polar: PolarReport,
    /// `|T_{α,β}|` against `U*|T|^αU·|T|^β` and `|T|^β·U*|T|^αU`; only
    /// evaluated for binormal `T`.
    pub modulus_closed_form: Option<[Residual; 2]>,
    /// `|T_{α,β}*|` against `|T|^α·|T*|^β` and `|T*|^β·|T|^α`.
    pub adjoint_modulus_closed_form: Option<[Residual; 2]>,
}

impl PairCheck {
    pub fn closed_forms_hold(&self) -> bool {
        self.modulus_closed_form
            .iter()
            .chain(self.adjoint_modulus_closed_form.iter())
            .flatten()
            .all(Residual::passes)
    }
}

/// The five characterizations of binormality evaluated on a finite sample
/// of exponent pairs.
#[derive(Debug, Clone, Serialize)]
pub struct BinormalEquivalents {
    /// `T² = U²|T²|` is the polar decomposition.
    pub square_polar: bool,
    pub binormal: bool,
    /// `T_{α,β} = Ũ|T_{α,β}|` is the polar decomposition for every pair.
    pub all_polar: bool,
    /// `T_{α,β} = Ũ|T_{α,β}|` for every pair.
    pub all_equation: bool,
    /// `T_{α,β} = Ũ|T_{α,β}|` for some pair.
    pub some_equation: bool,
    pub pairs: Vec<PairCheck>,
}

impl BinormalEquivalents {
    pub fn statements(&self) -> [bool; 5] {
        [
            self.square_polar,
            self.binormal,
            self.all_polar,
            self.all_equation,
            self.some_equation,
        ]
    }

    pub fn agree(&self) -> bool {
        let s = self.statements();
        s.iter().all(|&b| b == s[0])
    }

    pub fn closed_forms_hold(&self) -> bool {
        self.pairs.iter().all(PairCheck::closed_forms_hold)
    }
}

pub fn binormal_equivalents(
    t: &Operator,
    pairs: &[(f64, f64)],
    cfg: &ToleranceConfig,
) -> Result<BinormalEquivalents> {
    t.require_square("binormal_equivalents")?;
    if pairs.is_empty() {
        return Err(Error::InvalidParameter("at least one (alpha, beta) pair is required".into()));
    }
    let parts = polar_decompose(t, cfg);
    let u = &parts.isometry;
    let ua = u.adjoint();
    let powers = Powers { parts: &parts, cfg };

    let norm = spectral_norm(t);
    let t2 = t * t;
    let square = PolarParts {
        isometry: u * u,
        modulus: abs_value_at_scale(&t2, norm * norm, cfg),
        rank: 0,
        rank_margin: None,
    };
    let square_polar = verify_polar(&t2, &square, cfg)?.passes();
    let binormal = is_binormal(t, cfg)?.binormal;

    let tilde_u = tilde(u);
    let adjoint_modulus = abs_value(&t.adjoint(), cfg);
    let mut checks = Vec::with_capacity(pairs.len());
    for &(alpha, beta) in pairs {
        check_exponent("alpha", alpha)?;
        check_exponent("beta", beta)?;
        let ta = powers.modulus(alpha)?;
        let tb = powers.modulus(beta)?;
        let transform = &(&ta * u) * &tb;
        let scale = norm.powf(alpha + beta);
        let modulus = abs_value_at_scale(&transform, scale, cfg);
        let candidate = PolarParts {
            isometry: tilde_u.clone(),
            modulus: modulus.clone(),
            rank: 0,
            rank_margin: None,
        };
        let (modulus_closed_form, adjoint_modulus_closed_form) = if binormal {
            let inner = &(&ua * &ta) * u;
            let star_b = fractional_power_psd(&adjoint_modulus, beta, cfg)?;
            let adjoint_mod = abs_value_at_scale(&transform.adjoint(), scale, cfg);
            (
                Some([
                    equality_residual(&modulus, &(&inner * &tb), cfg)?,
                    equality_residual(&modulus, &(&tb * &inner), cfg)?,
                ]),
                Some([
                    equality_residual(&adjoint_mod, &(&ta * &star_b), cfg)?,
                    equality_residual(&adjoint_mod, &(&star_b * &ta), cfg)?,
                ]),
            )
        } else {
            (None, None)
        };
        checks.push(PairCheck {
            alpha,
            beta,
            equation: equality_residual(&transform, &(&tilde_u * &modulus), cfg)?,
            polar: verify_polar(&transform, &candidate, cfg)?,
            modulus_closed_form,
            adjoint_modulus_closed_form,
        });
    }

    Ok(BinormalEquivalents {
        square_polar,
        binormal,
        all_polar: checks.iter().all(|c| c.polar.passes()),
        all_equation: checks.iter().all(|c| c.equation.passes()),
        some_equation: checks.iter().any(|c| c.equation.passes()),
        pairs: checks,
    })
}
