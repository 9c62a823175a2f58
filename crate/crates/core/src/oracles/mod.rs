//! Reference implementations of every target function, independent of the
//! exp-substituted representations they audit.
//!
//! * gamma family: Stirling series after upward recurrence, reflection for
//!   `Re z < 1/2`;
//! * zeta: Borwein-accelerated eta series, reflection for `Re s < 0`;
//! * Hurwitz zeta: Euler-Maclaurin summation;
//! * incomplete gamma: power series and the Legendre continued fraction;
//! * Kummer and Gauss functions: their defining series.

mod bernoulli;
mod gamma;
mod hypergeometric;
mod incgamma;
mod zeta;

pub use bernoulli::{b2k_over_factorial, B2K};
pub use gamma::{beta, gamma, gamma_ratio, log_gamma};
pub use hypergeometric::{gauss_f, kummer_phi, kummer_series};
pub use incgamma::{lower_incomplete_gamma, upper_incomplete_gamma};
pub use zeta::{eta, hurwitz_zeta, zeta, zeta_eta_route, zeta_reflection_route};
