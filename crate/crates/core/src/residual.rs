use serde::{Deserialize, Serialize};

use crate::quadrature::QuadResult;
use crate::ComplexValue;

/// Both sides of an identity, evaluated independently, and their distance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IdentityResidual {
    /// The side computed from an oracle.
    pub lhs: ComplexValue,
    /// The side computed from the representation.
    pub rhs: ComplexValue,
    /// `|lhs - rhs|`.
    pub residual: f64,
    /// Diagnostics of the integral inside `rhs`, if there is one.
    pub quad: Option<QuadResult>,
}

impl IdentityResidual {
    pub fn new(lhs: ComplexValue, rhs: ComplexValue, quad: Option<QuadResult>) -> Self {
        Self {
            lhs,
            rhs,
            residual: (lhs - rhs).norm(),
            quad,
        }
    }

    /// `residual / max(1e-300, |lhs|)`.
    pub fn relative(&self) -> f64 {
        self.residual / self.lhs.norm().max(1e-300)
    }
}
