//! Exp-substitution integral representations of the Riemann and Hurwitz
//! zeta functions, incomplete gamma, Kummer's `Phi`, beta and Gauss `F`,
//! each checked against an independent oracle.

#![allow(clippy::excessive_precision, clippy::neg_cmp_op_on_partial_ord)]

pub mod audit;
pub mod cx;
pub mod error;
pub mod hyper_reps;
pub mod oracles;
pub mod quadrature;
mod residual;
pub mod zeta_reps;

pub use error::{Error, Result};
pub use residual::IdentityResidual;

/// The scalar of the crate.
pub type ComplexValue = num_complex::Complex64;
