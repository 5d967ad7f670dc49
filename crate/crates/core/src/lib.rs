//! Polar decompositions, Moore–Penrose inverses and Aluthge-type transforms
//! of dense complex matrices, together with commutator tests that classify
//! operators as binormal, `n`-centered or centered.
//!
//! The polar decomposition used throughout is the partial-isometry one:
//! `T = U|T|` with `U*U` the projection onto the range of `T*`, never a
//! unitary completion.

pub mod classify;
pub mod cli;
pub mod counterexample;
pub mod decomp;
pub mod error;
pub mod linalg;
pub mod random;
pub mod suites;

pub use error::{Error, Result};
pub use linalg::{Operator, ToleranceConfig};
