//! Binormality, `n`-centered order, product polar decompositions,
//! Aluthge-type transforms and the `P_n(T)` / `Ũ` algebra.
//!
//! Commutators are judged with [`crate::linalg::commutator_residual`]
//! (scaled by the operand norms, floored at `1e-14`); operator equalities
//! with [`crate::linalg::equality_residual`].

mod aluthge;
mod centered;
mod mp;
mod powers;
mod product;


pub use aluthge::{aluthge, binormal_equivalents, AluthgeParts, BinormalEquivalents, PairCheck};
pub use centered::{
    centered_order, is_binormal, is_n_centered_definitional, BinormalCheck, CenteredReport,
    DefinitionalReport, DefinitionalStep,
};
pub use mp::{mp_centered_check, MpCenteredReport};
pub use powers::{powers_report, PowerLevel, PowersReport};
pub use product::{
    product_polar_transfer, positive_product_polar, product_polar, ProductPolarReport, TransferReport,
};
