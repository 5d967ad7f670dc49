//! Dense complex-matrix kernels and numerically toleranced predicates.

mod jacobi;
mod kernels;
mod operator;
mod residual;
mod tolerance;

#[cfg(test)]
mod tests;

pub use kernels::{
    approx_equal, commutator, commutator_residual, commutes, equality_residual,
    fractional_power_psd, herm_eig, is_hermitian, is_partial_isometry, is_projection, is_psd,
    numerical_rank, numerical_rank_at_scale, partial_isometry_residual, range_projection, range_projection_with_rank, spectral_norm, svd,
    HermEigResult, SvdResult,
};
pub(crate) use kernels::{projection_from_columns, spectral_synthesis};
pub use operator::{CMatrix, Operator};
pub use residual::Residual;
pub use tolerance::{ToleranceConfig, COMMUTATOR_ABS_FLOOR};
