use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute floor under every commutator-vanishing threshold, so that
/// products of two zero operators are still judged with a sane bound.
pub const COMMUTATOR_ABS_FLOOR: f64 = 1e-14;

/// Relative thresholds turning exact operator identities into floating-point
/// decisions.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceConfig {
    /// Singular values `σ_i ≤ rank_rel_tol · σ_1` count as zero.
    pub rank_rel_tol: f64,
    /// Commutators and residuals that should vanish.
    pub zero_rel_tol: f64,
    /// Matrix equality, `‖a − b‖_F ≤ tol · max(1, ‖a‖_F, ‖b‖_F)`.
    pub equality_rel_tol: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        Self {
            rank_rel_tol: 1e-12,
            zero_rel_tol: 1e-9,
            equality_rel_tol: 1e-9,
        }
    }
}

impl ToleranceConfig {
    pub fn new(rank_rel_tol: f64, zero_rel_tol: f64, equality_rel_tol: f64) -> Result<Self> {
        let cfg = Self {
            rank_rel_tol,
            zero_rel_tol,
            equality_rel_tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [
            ("rank_rel_tol", self.rank_rel_tol),
            ("zero_rel_tol", self.zero_rel_tol),
            ("equality_rel_tol", self.equality_rel_tol),
        ] {
            if !(0.0..1.0).contains(&value) {
                return Err(Error::InvalidTolerance { name, value });
            }
        }
        Ok(())
    }

    /// Same config with both the vanishing and the equality tolerance set to `tol`.
    pub fn with_residual_tol(mut self, tol: f64) -> Self {
        self.zero_rel_tol = tol;
        self.equality_rel_tol = tol;
        self
    }
}
