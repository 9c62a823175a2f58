//! Contour representations of incomplete gamma, Kummer's `Phi`, beta and
//! Gauss `F` obtained from `w = e^u`, the incomplete Riemann zeta function,
//! and the audit of the printed prefactors.
//!
//! Two contour families are implemented for each function:
//!
//! * closed: the strip `0 <= Im u <= 2 pi n`, whose horizontal edges carry
//!   the same integral up to `e^{2 pi i n p}`;
//! * symmetric: the strip `-pi n <= Im u <= pi n`, whose horizontal edges
//!   carry the reflected integrand (`e^{e^u}` for `e^{-e^u}`, `1 - e^u` for
//!   `1 + e^u`). The reflection only happens for odd `n`; for even `n` the
//!   edges carry the auxiliary integrand itself, see the `*_sheet`
//!   functions.
//!
//! Negative winding is evaluated through the conjugated identity: the
//! parameters are conjugated, the identity is evaluated at `|n|`, and both
//! sides are conjugated back.

mod branch;
mod izeta;
mod reps;

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::{cx, ComplexValue};

pub use branch::{integrate_branched, one_minus_cis_pow, one_plus_cis_pow, BranchPoint, Factor};
pub use izeta::{
    blackbody_fraction, blackbody_fraction_series, incomplete_zeta, incomplete_zeta_dual,
    IncompleteZeta,
};
pub use reps::{
    auxiliary_lower_gamma, beta_closed, beta_symmetric, beta_symmetric_sheet, gamma_argument_ratio,
    gauss_f_closed, gauss_f_symmetric, incomplete_gamma_closed, incomplete_gamma_symmetric,
    incomplete_gamma_symmetric_sheet, kummer_closed, kummer_symmetric, kummer_symmetric_sheet,
};

/// Radius of the guard zones around vanishing prefactors.
pub const PREFACTOR_GUARD: f64 = 1e-8;
/// Largest relative spread of the probed ratios accepted as "constant".
pub const PHASE_TOLERANCE: f64 = 1e-6;
/// Accuracy of the integrals behind the phase probes.
const PROBE_TOL: f64 = 1e-12;

/// Contour family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    /// Edges at `Im u = 0` and `2 pi n`.
    Closed,
    /// Edges at `Im u = -pi n` and `pi n`.
    Symmetric,
}

/// Winding and family of a rectangular contour.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ContourSpec {
    pub winding: i32,
    pub family: Family,
}

impl ContourSpec {
    pub fn new(winding: i32, family: Family) -> Result<Self> {
        if winding == 0 {
            return Err(Error::Domain("winding must be nonzero".into()));
        }
        Ok(Self { winding, family })
    }

    /// Integration limits of the vertical edge, in `y = Im u`.
    pub fn limits(&self) -> (f64, f64) {
        let n = self.winding.unsigned_abs() as f64;
        match self.family {
            Family::Closed => (0.0, 2.0 * std::f64::consts::PI * n),
            Family::Symmetric => (-std::f64::consts::PI * n, std::f64::consts::PI * n),
        }
    }

    /// Whether the symmetric edges land on the reflected integrand.
    pub fn reflects(&self) -> bool {
        self.family == Family::Closed || self.winding % 2 != 0
    }
}

/// The printed representations whose leading constant is audited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Equation {
    IgammaClosed,
    IgammaSymmetric,
    KummerClosed,
    KummerSymmetric,
    BetaClosed,
    BetaSymmetric,
    GaussClosed,
    GaussSymmetric,
}

impl Equation {
    pub const ALL: [Equation; 8] = [
        Equation::IgammaClosed,
        Equation::IgammaSymmetric,
        Equation::KummerClosed,
        Equation::KummerSymmetric,
        Equation::BetaClosed,
        Equation::BetaSymmetric,
        Equation::GaussClosed,
        Equation::GaussSymmetric,
    ];

    /// Leading constant as printed (`-i` for the closed family).
    pub fn printed_prefactor(self) -> ComplexValue {
        match self {
            Equation::IgammaClosed
            | Equation::KummerClosed
            | Equation::BetaClosed
            | Equation::GaussClosed => -cx::I,
            Equation::KummerSymmetric => cx::I,
            Equation::IgammaSymmetric | Equation::BetaSymmetric | Equation::GaussSymmetric => {
                cx::ONE
            }
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Equation::IgammaClosed => "igamma_closed",
            Equation::IgammaSymmetric => "igamma_symmetric",
            Equation::KummerClosed => "kummer_closed",
            Equation::KummerSymmetric => "kummer_symmetric",
            Equation::BetaClosed => "beta_closed",
            Equation::BetaSymmetric => "beta_symmetric",
            Equation::GaussClosed => "gauss_f_closed",
            Equation::GaussSymmetric => "gauss_f_symmetric",
        }
    }

    fn index(self) -> usize {
        Equation::ALL.iter().position(|e| *e == self).unwrap_or(0)
    }
}

/// Outcome of auditing the leading constant of a printed representation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AuditedPhase {
    pub printed_prefactor: ComplexValue,
    pub corrected_prefactor: ComplexValue,
    pub correction_applied: bool,
    /// Largest relative spread of `lhs / rhs_printed` over the probes.
    pub variation: f64,
    /// Printed over corrected gamma normalisation at one parameter point,
    /// for the representations whose gamma arguments are replaced.
    pub normalization_ratio: Option<ComplexValue>,
}

/// Spread and mean of a set of ratios.
pub fn ratio_spread(ratios: &[ComplexValue]) -> (ComplexValue, f64) {
    if ratios.is_empty() {
        return (cx::ONE, 0.0);
    }
    let mean = ratios.iter().sum::<ComplexValue>() / ratios.len() as f64;
    let spread =
        ratios.iter().map(|r| (r - mean).norm()).fold(0.0, f64::max) / mean.norm().max(1e-300);
    (mean, spread)
}

/// Snaps a measured unit-modulus ratio to the nearest quarter turn when it
/// is within [`PHASE_TOLERANCE`] of one.
fn snap(ratio: ComplexValue) -> ComplexValue {
    for q in [cx::ONE, cx::I, -cx::ONE, -cx::I] {
        if (ratio - q).norm() <= PHASE_TOLERANCE {
            return q;
        }
    }
    ratio
}

/// Builds the audit record from `lhs / (printed * bare)` ratios.
pub fn audit_from_ratios(equation: Equation, ratios: &[ComplexValue]) -> Result<AuditedPhase> {
    let (mean, variation) = ratio_spread(ratios);
    if variation > PHASE_TOLERANCE || (mean.norm() - 1.0).abs() > PHASE_TOLERANCE {
        return Err(Error::PhaseAudit {
            equation: equation.name().into(),
            variation: variation.max((mean.norm() - 1.0).abs()),
        });
    }
    let printed = equation.printed_prefactor();
    let factor = snap(mean);
    Ok(AuditedPhase {
        printed_prefactor: printed,
        corrected_prefactor: printed * factor,
        correction_applied: factor != cx::ONE,
        variation,
        normalization_ratio: None,
    })
}

/// Leading constant of `equation`, checked on twelve odd-winding probe
/// points the first time it is requested.
pub fn audited_phase(equation: Equation) -> Result<AuditedPhase> {
    static CACHE: [OnceLock<Result<AuditedPhase>>; 8] = [
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
        OnceLock::new(),
    ];
    CACHE[equation.index()]
        .get_or_init(|| {
            let ratios = reps::probe_ratios(equation, PROBE_TOL)?;
            audit_from_ratios(equation, &ratios)
        })
        .clone()
}
