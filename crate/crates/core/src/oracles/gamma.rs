use std::f64::consts::PI;

use super::bernoulli::B2K;
use crate::cx;
use crate::error::{Error, Result};
use crate::ComplexValue;

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_741_780_329_736_405_6;
const STIRLING_SHIFT: f64 = 15.0;
const STIRLING_TERMS: usize = 10;

fn non_positive_integer(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn check_pole(z: ComplexValue) -> Result<()> {
    if !cx::is_finite(z) {
        return Err(Error::Domain(format!(
            "log_gamma argument {z} is not finite"
        )));
    }
    if non_positive_integer(z) {
        return Err(Error::Pole(format!("gamma has a pole at {}", z.re)));
    }
    Ok(())
}

/// `ln Gamma(z)`, continuous in the right half-plane and obtained by
/// reflection for `Re z < 1/2`.
///
/// Stirling's series with ten Bernoulli terms after shifting `|z| >= 15`
/// with the recurrence.
pub fn log_gamma(z: ComplexValue) -> Result<ComplexValue> {
    check_pole(z)?;
    if z.re < 0.5 {
        // ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1 - z)
        let sin = (z * PI).sin();
        return Ok(cx::real(PI.ln()) - sin.ln() - stirling_shifted(cx::ONE - z));
    }
    Ok(stirling_shifted(z))
}

fn stirling_shifted(z: ComplexValue) -> ComplexValue {
    let mut w = z;
    let mut shift = cx::ZERO;
    while w.norm() < STIRLING_SHIFT {
        shift += w.ln();
        w += 1.0;
    }
    let ln_w = w.ln();
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut series = cx::ZERO;
    let mut pow = inv;
    for (j, b) in B2K.iter().take(STIRLING_TERMS).enumerate() {
        let k = (2 * j + 2) as f64;
        series += pow * (b / (k * (k - 1.0)));
        pow *= inv2;
    }
    (w - 0.5) * ln_w - w + HALF_LN_2PI + series - shift
}

/// `Gamma(z)`.
pub fn gamma(z: ComplexValue) -> Result<ComplexValue> {
    Ok(log_gamma(z)?.exp())
}

/// `Gamma(num) / (Gamma(den1) Gamma(den2))`, the normalization in front of
/// every Euler-type integral.
pub fn gamma_ratio(
    num: ComplexValue,
    den1: ComplexValue,
    den2: ComplexValue,
) -> Result<ComplexValue> {
    Ok((log_gamma(num)? - log_gamma(den1)? - log_gamma(den2)?).exp())
}

/// Euler's beta function through log-gamma.
pub fn beta(x: ComplexValue, y: ComplexValue) -> Result<ComplexValue> {
    for (name, v) in [("x", x), ("y", y), ("x + y", x + y)] {
        if non_positive_integer(v) {
            return Err(Error::Domain(format!("beta: {name} = {v} is a gamma pole")));
        }
    }
    Ok((log_gamma(x)? + log_gamma(y)? - log_gamma(x + y)?).exp())
}
