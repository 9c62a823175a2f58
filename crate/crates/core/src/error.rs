use crate::quadrature::QuadResult;
use crate::ComplexValue;

pub type Result<T> = std::result::Result<T, Error>;

/// Failure modes shared by the quadrature engine, the oracles and the
/// representation audits.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A parameter lies outside the domain where the formula is defined.
    #[error("domain error: {0}")]
    Domain(String),

    /// The function has a pole at the requested point.
    #[error("pole: {0}")]
    Pole(String),

    /// A prefactor divides by a quantity inside its guard zone.
    #[error("near pole: {what} (|{what}| = {magnitude:e})")]
    NearPole { what: String, magnitude: f64 },

    /// An endpoint exponent makes the integral divergent.
    #[error("divergent integral: {0}")]
    Divergent(String),

    /// A bound degenerates (division by zero in its closed form).
    #[error("degenerate bound: {0}")]
    DegenerateBound(String),

    /// The integrand returned NaN or infinity.
    #[error("integrand is not finite at abscissa {abscissa}")]
    NonFinite { abscissa: f64 },

    /// The adaptive scheme ran out of budget before meeting the tolerance.
    #[error("quadrature did not converge: value {}, estimate {:e} after {} evaluations", .partial.value, .partial.err_estimate, .partial.evals)]
    NonConvergence { partial: QuadResult },

    /// A series or continued fraction failed to converge.
    #[error("accuracy error in {what}: partial value {partial}")]
    Accuracy { what: String, partial: ComplexValue },

    /// The phase audit found a parameter-dependent discrepancy.
    #[error("phase audit failed for {equation}: ratio varies by {variation:e}")]
    PhaseAudit { equation: String, variation: f64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for errors that mean "this point is outside the operation's
    /// preconditions" rather than "the computation failed".
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::Domain(_)
                | Error::Pole(_)
                | Error::NearPole { .. }
                | Error::Divergent(_)
                | Error::DegenerateBound(_)
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
