//! Finite truncations of a block weighted shift that is `n`-centered but not
//! `(n+1)`-centered.
//!
//! The shift acts on `M` copies of `C³`. Block `m` (1-based) is sent to block
//! `m + 1` by
//!
//! ```text
//!        ⎡ 0          0           sec α·g(m+1) ⎤
//! T_m =  ⎢ g(m)       tan α·g(m)  0            ⎥   = V · |T_m|,
//!        ⎣ tan α·g(m) −g(m)       0            ⎦
//! ```
//!
//! with `V` a fixed real orthogonal matrix and
//! `|T_m| = diag(sec α·g(m), sec α·g(m), sec α·g(m+1))`. The commutator
//! `[U^k|T|(U^k)*, |T|]` vanishes iff
//! `(g(m+1) − g(m))·(g(m+k+1) − g(m+k)) = 0` for every available `m`, so
//! the weight sequence alone decides the centered order.
//!
//! Truncation keeps blocks `T_1 … T_{M−1}`; `|T|` picks up a trailing zero
//! block that the infinite operator does not have. Commutators against a
//! zero block vanish identically, so the classification is unchanged as
//! long as `M ≥ n + 2`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::Serialize;

use crate::decomp::PolarParts;
use crate::error::{Error, Result};
use crate::linalg::{CMatrix, Operator};

#[derive(Debug, Clone, Copy, Serialize)]
pub struct AngleConstants {
    /// `π·√2/6`, an irrational multiple of `π`.
    pub theta: f64,
    /// `α ∈ (0, π/2)` with `sin α = 2 cos θ − 1`.
    pub alpha: f64,
    pub sin_alpha: f64,
    pub cos_alpha: f64,
    pub sec_alpha: f64,
    pub tan_alpha: f64,
}

pub fn angle_constants() -> AngleConstants {
    let theta = PI * 2f64.sqrt() / 6.0;
    let sin_alpha = 2.0 * theta.cos() - 1.0;
    let alpha = sin_alpha.asin();
    let cos_alpha = alpha.cos();
    AngleConstants {
        theta,
        alpha,
        sin_alpha,
        cos_alpha,
        sec_alpha: 1.0 / cos_alpha,
        tan_alpha: sin_alpha / cos_alpha,
    }
}

/// `[[0, 0, 1], [cos α, sin α, 0], [sin α, −cos α, 0]]`, with eigenvalues
/// `−1, e^{iθ}, e^{−iθ}`.
pub fn v_matrix() -> Operator {
    let a = angle_constants();
    Operator::from_real(
        3,
        3,
        &[
            0.0, 0.0, 1.0, //
            a.cos_alpha, a.sin_alpha, 0.0, //
            a.sin_alpha, -a.cos_alpha, 0.0,
        ],
    )
    .expect("finite constants")
}

/// The non-real eigenvalues `(e^{iθ}, e^{−iθ})` of [`v_matrix`].
pub fn v_eigenvalues() -> (Complex64, Complex64) {
    let l2 = Complex64::from_polar(1.0, angle_constants().theta);
    (l2, l2.conj())
}

/// Closed forms of the `(1,3)` and `(3,3)` entries of `V^k`:
///
/// ```text
/// V^(k)_13 = ((−1)^{k+1}(λ₂+λ₃) + λ₂^{k−1} + λ₃^{k−1}) / (λ₂+λ₃+2)
/// V^(k)_33 = ((−1)^{k+2}(λ₂+λ₃) + λ₂^k     + λ₃^k    ) / (λ₂+λ₃+2)
/// ```
pub fn v_power_entries(k: u32) -> Result<(Complex64, Complex64)> {
    if k == 0 {
        return Err(Error::InvalidParameter("power k must be at least 1".into()));
    }
    Ok((entry_formula(k + 1, k - 1), entry_formula(k + 2, k)))
}

fn entry_formula(sign_exp: u32, power: u32) -> Complex64 {
    let (l2, l3) = v_eigenvalues();
    let sum = l2 + l3;
    let sign = if sign_exp.is_multiple_of(2) { 1.0 } else { -1.0 };
    let p = power as i32;
    (sum * sign + (l2.powi(p) + l3.powi(p))) / (sum + 2.0)
}

/// Weights for a target order `n ≥ 2` over `m_count` positions:
/// `(1, 2, 3, 4, 1, 1, …)` for `n = 2` and `(1, 2 × n, 1, 1, …)` for `n ≥ 3`.
pub fn g_sequence(n: usize, m_count: usize) -> Result<Vec<f64>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("target order n must be at least 2, got {n}")));
    }
    if m_count < n + 2 {
        return Err(Error::InvalidParameter(format!(
            "need at least n + 2 = {} positions, got {m_count}",
            n + 2
        )));
    }
    let g = (1..=m_count)
        .map(|m| match (n, m) {
            (2, 1..=4) => m as f64,
            (_, 1) => 1.0,
            (_, m) if m <= n + 1 => 2.0,
            _ => 1.0,
        })
        .collect();
    Ok(g)
}

/// Parameters of one truncated shift.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShiftSpec {
    /// Target centered order; only the built-in weight recipes guarantee it.
    pub n: usize,
    /// Number `M` of `C³` blocks.
    pub blocks: usize,
    /// `g(1) … g(M)`, each in `(0, 4]`.
    pub g: Vec<f64>,
}

impl ShiftSpec {
    pub fn default_blocks(n: usize) -> usize {
        n + 3
    }

    /// The built-in recipe for order `n` with `blocks` positions
    /// (`n + 3` when `None`).
    pub fn recipe(n: usize, blocks: Option<usize>) -> Result<Self> {
        let blocks = blocks.unwrap_or_else(|| Self::default_blocks(n));
        Ok(Self { n, blocks, g: g_sequence(n, blocks)? })
    }

    /// Arbitrary weights; the classification of the result is whatever the
    /// weights make it.
    pub fn custom(n: usize, g: Vec<f64>) -> Result<Self> {
        let spec = Self { n, blocks: g.len(), g };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidParameter(format!("target order n must be at least 2, got {}", self.n)));
        }
        if self.blocks < self.n + 2 {
            return Err(Error::InvalidParameter(format!(
                "blocks must be at least n + 2 = {}, got {}",
                self.n + 2,
                self.blocks
            )));
        }
        if self.g.len() != self.blocks {
            return Err(Error::InvalidParameter(format!(
                "expected {} weights, got {}",
                self.blocks,
                self.g.len()
            )));
        }
        if let Some(bad) = self.g.iter().find(|&&w| !(w > 0.0 && w <= 4.0)) {
            return Err(Error::InvalidParameter(format!("weight {bad} outside (0, 4]")));
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        3 * self.blocks
    }
}

fn check_block_index(m: usize, g: &[f64]) -> Result<()> {
    if m == 0 || m + 1 > g.len() {
        return Err(Error::InvalidParameter(format!(
            "block index {m} outside 1..={}",
            g.len().saturating_sub(1)
        )));
    }
    Ok(())
}

/// `T_m` for 1-based `m`, needing `g(m)` and `g(m+1)`.
pub fn block_t(m: usize, g: &[f64]) -> Result<Operator> {
    check_block_index(m, g)?;
    let a = angle_constants();
    let (gm, gn) = (g[m - 1], g[m]);
    Operator::from_real(
        3,
        3,
        &[
            0.0, 0.0, a.sec_alpha * gn, //
            gm, a.tan_alpha * gm, 0.0, //
            a.tan_alpha * gm, -gm, 0.0,
        ],
    )
}

/// Closed form `|T_m| = diag(sec α·g(m), sec α·g(m), sec α·g(m+1))`.
pub fn block_modulus(m: usize, g: &[f64]) -> Result<Operator> {
    check_block_index(m, g)?;
    let sec = angle_constants().sec_alpha;
    Ok(Operator::diag_real(&[sec * g[m - 1], sec * g[m - 1], sec * g[m]]))
}

/// `W_m = diag(0, 0, sec α·(g(m+1) − g(m)))`, so that
/// `|T_m| = sec α·g(m)·I + W_m`.
pub fn block_modulus_perturbation(m: usize, g: &[f64]) -> Result<Operator> {
    check_block_index(m, g)?;
    let sec = angle_constants().sec_alpha;
    Ok(Operator::diag_real(&[0.0, 0.0, sec * (g[m] - g[m - 1])]))
}

fn place_blocks(dim: usize, blocks: impl Iterator<Item = ((usize, usize), CMatrix)>) -> Operator {
    let mut out = CMatrix::zeros(dim, dim);
    for ((bi, bj), block) in blocks {
        out.view_mut((3 * bi, 3 * bj), (3, 3)).copy_from(&block);
    }
    Operator::from_matrix(out).expect("finite blocks")
}

/// The `3M × 3M` block lower shift with `T_1 … T_{M−1}` on the first
/// block subdiagonal.
pub fn build_truncated(spec: &ShiftSpec) -> Result<Operator> {
    spec.validate()?;
    let blocks = (1..spec.blocks)
        .map(|m| block_t(m, &spec.g).map(|t| ((m, m - 1), t.into_matrix())))
        .collect::<Result<Vec<_>>>()?;
    Ok(place_blocks(spec.dim(), blocks.into_iter()))
}

/// Polar parts predicted in closed form: `U` is the block shift of `V`'s and
/// `|T| = diag(|T_1|, …, |T_{M−1}|, 0)`.
pub fn predicted_polar(spec: &ShiftSpec) -> Result<PolarParts> {
    spec.validate()?;
    let v = v_matrix().into_matrix();
    let u = place_blocks(spec.dim(), (1..spec.blocks).map(|m| ((m, m - 1), v.clone())));
    let moduli = (1..spec.blocks)
        .map(|m| block_modulus(m, &spec.g).map(|p| ((m - 1, m - 1), p.into_matrix())))
        .collect::<Result<Vec<_>>>()?;
    Ok(PolarParts {
        isometry: u,
        modulus: place_blocks(spec.dim(), moduli.into_iter()),
        rank: 3 * (spec.blocks - 1),
        rank_margin: None,
    })
}

/// Whether `[U^k|T|(U^k)*, |T|] = 0` on the truncated operator, read off the
/// weights alone. `k = 1` always commutes because `V^(1)_33 = 0`.
pub fn expected_commutator_pattern(spec: &ShiftSpec, k: usize) -> bool {
    if k <= 1 {
        return true;
    }
    let g = &spec.g;
    let diff = |m: usize| g[m] - g[m - 1];
    // blocks m and m + k must both carry a nonzero |T_·|: m + k ≤ M − 1
    (1..spec.blocks)
        .take_while(|&m| m + k < spec.blocks)
        .all(|m| diff(m) * diff(m + k) == 0.0)
}

#[cfg(test)]
mod tests;
