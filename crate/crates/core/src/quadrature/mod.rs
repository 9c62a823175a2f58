//! Adaptive quadrature for complex-valued integrands of one real variable.
//!
//! Three entry points cover every integral the representations need:
//!
//! * [`integrate_adaptive`] for finite intervals with a smooth (or merely
//!   steep) integrand,
//! * [`integrate_bi_infinite`] for `(-inf, inf)` integrals whose tails decay
//!   at a known exponential or double-exponential rate,
//! * [`integrate_endpoint_algebraic`] for finite intervals with integrable
//!   algebraic singularities `|y - endpoint|^p`, `Re p > -1`.
//!
//! All of them share one engine: a 21-point Gauss-Kronrod rule, bisection of
//! the segment with the largest error estimate, a depth budget of 60 levels
//! and a budget of 10^6 integrand evaluations. The reported error estimate
//! never drops below the roundoff floor `50 eps * integral |f|`.

mod kronrod;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ComplexValue;

/// Value, absolute error estimate and evaluation count of one integral.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadResult {
    pub value: ComplexValue,
    pub err_estimate: f64,
    pub evals: usize,
}

impl QuadResult {
    /// Combines results of integrals over adjacent pieces.
    pub fn combine(parts: &[QuadResult]) -> QuadResult {
        let value = parts
            .iter()
            .map(|p| p.value)
            .collect::<crate::cx::CompensatedSum>()
            .value();
        QuadResult {
            value,
            err_estimate: parts.iter().map(|p| p.err_estimate).sum(),
            evals: parts.iter().map(|p| p.evals).sum(),
        }
    }

    pub fn scaled(self, factor: ComplexValue) -> QuadResult {
        QuadResult {
            value: self.value * factor,
            err_estimate: self.err_estimate * factor.norm(),
            evals: self.evals,
        }
    }
}

/// Budgets for the adaptive engine.
#[derive(Debug, Clone, Copy)]
pub struct QuadConfig {
    pub max_depth: u32,
    pub max_evals: usize,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            max_depth: 60,
            max_evals: 1_000_000,
        }
    }
}

/// How the integrand decays as `u -> +inf`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RightDecay {
    /// `|f(u)| <= exp(rate * u - e^u)`.
    DoubleExponential,
    /// `|f(u)| <= exp(-rate * u)`, `rate > 0`.
    Exponential,
}

/// Tail envelope of a bi-infinite integrand: `|f(u)| <= exp(left_rate * u)`
/// as `u -> -inf`, and the `right_kind` envelope as `u -> +inf`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecayProfile {
    pub left_rate: f64,
    pub right_kind: RightDecay,
    pub right_rate: f64,
}

impl DecayProfile {
    /// Envelope of `e^{su} / (e^{e^u} + 1)` and its relatives: `e^{sigma u}`
    /// on the left, `e^{sigma u - e^u}` on the right.
    pub fn exp_substituted(sigma: f64) -> Self {
        Self {
            left_rate: sigma,
            right_kind: RightDecay::DoubleExponential,
            right_rate: sigma,
        }
    }

    /// Cutoffs `(lo, hi)` and the corresponding tail bounds `(left, right)`,
    /// each tail bounded by `tol / 4`.
    pub fn cutoffs(&self, tol: f64) -> Result<((f64, f64), (f64, f64))> {
        if !(self.left_rate > 0.0) || !self.left_rate.is_finite() {
            return Err(Error::Domain(format!(
                "left decay rate must be positive, got {}",
                self.left_rate
            )));
        }
        check_tol(tol)?;
        let quarter = 0.25 * tol;
        let lr = self.left_rate;
        let lo = (lr * quarter).ln() / lr;
        let left_tail = (lr * lo).exp() / lr;

        let (hi, right_tail) = match self.right_kind {
            RightDecay::Exponential => {
                let r = self.right_rate;
                if !(r > 0.0) || !r.is_finite() {
                    return Err(Error::Domain(format!(
                        "exponential right decay needs a positive rate, got {r}"
                    )));
                }
                let hi = -(r * quarter).ln() / r;
                (hi, (-r * hi).exp() / r)
            }
            RightDecay::DoubleExponential => {
                let rho = self.right_rate;
                let target = -quarter.ln();
                // Solve e^U - rho U = target by fixed point U = ln(target + rho U).
                let mut u = target.ln().max(1.0);
                for _ in 0..64 {
                    let next = (target + rho * u).max(f64::MIN_POSITIVE).ln();
                    if (next - u).abs() < 1e-14 {
                        u = next;
                        break;
                    }
                    u = next;
                }
                u = u.max(1.0);
                while rho * u - u.exp() > -target {
                    u += 0.01;
                }
                (u, (rho * u - u.exp()).exp())
            }
        };
        if lo >= hi {
            return Err(Error::Domain(format!(
                "decay cutoffs collapse: lower {lo} >= upper {hi}"
            )));
        }
        Ok(((lo, hi), (left_tail, right_tail)))
    }
}

fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "tolerance must be positive, got {tol}"
        )))
    }
}

fn check_interval(lo: f64, hi: f64) -> Result<()> {
    if lo.is_finite() && hi.is_finite() && lo < hi {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "need finite lo < hi, got [{lo}, {hi}]"
        )))
    }
}

/// Integrates `f` over `[lo, hi]`.
///
/// Stops once the summed error estimate is below `tol * max(1, |value|)`, or
/// once it is dominated by the roundoff floor.
pub fn integrate_adaptive<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> ComplexValue,
{
    integrate_piecewise(f, &[lo, hi], tol)
}

/// Like [`integrate_adaptive`], but starts from the given breakpoints
/// (strictly increasing). Useful when the integrand has known steep spots.
pub fn integrate_piecewise<F>(f: F, points: &[f64], tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> ComplexValue,
{
    integrate_with_config(f, points, tol, &QuadConfig::default())
}

pub fn integrate_with_config<F>(
    f: F,
    points: &[f64],
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult>
where
    F: Fn(f64) -> ComplexValue,
{
    check_tol(tol)?;
    if points.len() < 2 {
        return Err(Error::Domain("need at least two breakpoints".into()));
    }
    for w in points.windows(2) {
        check_interval(w[0], w[1])?;
    }
    kronrod::adaptive(&f, points, tol, cfg)
}

/// Integrates over the whole real line, truncating at cutoffs derived from
/// `profile` so that each discarded tail is below `tol / 4`.
///
/// The tail bounds are added to the returned error estimate.
pub fn integrate_bi_infinite<F>(f: F, profile: DecayProfile, tol: f64) -> Result<QuadResult>
where
    F: Fn(f64) -> ComplexValue,
{
    let ((lo, hi), (left_tail, right_tail)) = profile.cutoffs(tol)?;
    let mut points = vec![lo];
    // Split at the origin so the double-exponential cliff gets its own piece.
    if lo < 0.0 && hi > 0.0 {
        points.push(0.0);
    }
    points.push(hi);
    let mut res = integrate_piecewise(f, &points, 0.5 * tol)?;
    res.err_estimate += left_tail + right_tail;
    Ok(res)
}

/// Power of the endpoint map for a `|y - end|^p` singularity.
fn map_power(p: ComplexValue) -> i32 {
    (2.0 / (p.re + 1.0)).ceil().clamp(2.0, 40.0) as i32
}

/// Abscissa handed to integrands with endpoint singularities. `from_lo` and
/// `to_hi` are the distances to the interval ends, computed without the
/// cancellation that `y - lo` would suffer next to an endpoint.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EndpointPoint {
    pub y: f64,
    pub from_lo: f64,
    pub to_hi: f64,
}

/// Integrates `f` over `[lo, hi]` where `f` behaves like
/// `(y - lo)^lo_exponent` and `(hi - y)^hi_exponent` at the ends.
pub fn integrate_endpoint_algebraic<F>(
    f: F,
    lo: f64,
    hi: f64,
    lo_exponent: ComplexValue,
    hi_exponent: ComplexValue,
    tol: f64,
) -> Result<QuadResult>
where
    F: Fn(f64) -> ComplexValue,
{
    integrate_endpoint_algebraic_at(
        |p: EndpointPoint| f(p.y),
        lo,
        hi,
        lo_exponent,
        hi_exponent,
        tol,
    )
}

/// [`integrate_endpoint_algebraic`] for integrands that need the accurate
/// endpoint distances of [`EndpointPoint`].
///
/// Each half of the interval is mapped by `y = end +- h tau^m`, which turns a
/// `|y - end|^p` singularity into `tau^(m(p + 1) - 1)` and keeps every
/// abscissa off the endpoint itself. `m` is the smallest power, at least 2,
/// that makes the mapped integrand vanish linearly at `tau = 0`.
pub fn integrate_endpoint_algebraic_at<F>(
    f: F,
    lo: f64,
    hi: f64,
    lo_exponent: ComplexValue,
    hi_exponent: ComplexValue,
    tol: f64,
) -> Result<QuadResult>
where
    F: Fn(EndpointPoint) -> ComplexValue,
{
    check_tol(tol)?;
    check_interval(lo, hi)?;
    for (name, p) in [("lower", lo_exponent), ("upper", hi_exponent)] {
        if !(p.re > -1.0) {
            return Err(Error::Divergent(format!(
                "{name} endpoint exponent {p} has real part <= -1"
            )));
        }
    }
    let width = hi - lo;
    let half = 0.5 * width;
    let (m_lo, m_hi) = (map_power(lo_exponent), map_power(hi_exponent));
    let left = integrate_adaptive(
        |tau: f64| {
            let d = half * tau.powi(m_lo);
            let p = EndpointPoint {
                y: lo + d,
                from_lo: d,
                to_hi: width - d,
            };
            f(p) * (m_lo as f64 * half * tau.powi(m_lo - 1))
        },
        0.0,
        1.0,
        0.5 * tol,
    )?;
    let right = integrate_adaptive(
        |tau: f64| {
            let d = half * tau.powi(m_hi);
            let p = EndpointPoint {
                y: hi - d,
                from_lo: width - d,
                to_hi: d,
            };
            f(p) * (m_hi as f64 * half * tau.powi(m_hi - 1))
        },
        0.0,
        1.0,
        0.5 * tol,
    )?;
    Ok(QuadResult::combine(&[left, right]))
}
