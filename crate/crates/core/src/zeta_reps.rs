//! Zeta-side representations obtained from `w = e^u`.
//!
//! * [`zeta_exp_integral`]: `(1 - 2^{1-s}) Gamma(s) zeta(s)` as an integral
//!   over the real line.
//! * [`vertical_correction`] and [`partial_sum_identity`]: the partial sum
//!   over odd integers plus the vertical edge of a rectangle of width
//!   `ln(2 pi N)`, for `zeta(1 - s)` or `zeta(s)`.
//! * [`approx_functional_equation`]: the midpoint sum with its power-law
//!   correction, and the bounds [`denominator_lower_bound`] and
//!   [`quadrant_integral_bound`] used to control it.
//! * [`hurwitz_formula`]: the Fourier series of `zeta(s, a)` for `Re s < 0`.

use std::f64::consts::{FRAC_PI_2, PI};

use serde::{Deserialize, Serialize};

use crate::cx::{self, CompensatedSum};
use crate::error::{Error, Result};
use crate::oracles;
use crate::quadrature::{self, DecayProfile, QuadResult};
use crate::{ComplexValue, IdentityResidual};

/// Radius of the guard zones around the zeros of the divided-by factors.
pub const POLE_GUARD: f64 = 1e-8;
/// The constant `C > 1` in the height condition `|t| < 4x / C`.
pub const AFE_C: f64 = 2.0;

/// Point and contour size of the partial-sum identities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaRepParams {
    pub s: ComplexValue,
    /// Contour width parameter: the right edge sits at `ln(2 pi N)`.
    pub n: u32,
    pub tol: f64,
}

impl ZetaRepParams {
    pub fn new(s: ComplexValue, n: u32, tol: f64) -> Self {
        Self { s, n, tol }
    }
}

/// Which side of the functional equation the partial-sum identity targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Variant {
    /// `(1 - 2^{s-1}) zeta(1 - s) = sum (2n+1)^{s-1} - I2`.
    ForZetaOf1MinusS,
    /// `(1 - 2^{-s}) zeta(s) = sum (2n+1)^{-s} - I2`, the `s -> 1 - s` image.
    ForZetaOfS,
}

fn guard(what: &str, value: ComplexValue) -> Result<()> {
    let magnitude = value.norm();
    if magnitude < POLE_GUARD {
        return Err(Error::NearPole {
            what: what.into(),
            magnitude,
        });
    }
    Ok(())
}

fn check_finite_s(s: ComplexValue) -> Result<()> {
    if cx::is_finite(s) {
        Ok(())
    } else {
        Err(Error::Domain(format!("s = {s} is not finite")))
    }
}

/// `1 / (e^w + 1)` without overflow when `Re w` is large.
fn fermi(w: ComplexValue) -> ComplexValue {
    if w.re > 0.0 {
        let e = (-w).exp();
        e / (e + 1.0)
    } else {
        (w.exp() + 1.0).inv()
    }
}

/// Integrand of the exp-substituted eta integral, `e^{su} / (e^{e^u} + 1)`.
pub fn eta_integrand(s: ComplexValue, u: f64) -> ComplexValue {
    (s * u).exp() * fermi(cx::real(u.exp()))
}

/// `int_{-inf}^{inf} e^{su} / (e^{e^u} + 1) du` against
/// `(1 - 2^{1-s}) Gamma(s) zeta(s)`.
///
/// At `s = 1` the right side is taken as `Gamma(s) eta(s)`, which stays
/// regular.
pub fn zeta_exp_integral(s: ComplexValue, tol: f64) -> Result<IdentityResidual> {
    check_finite_s(s)?;
    if !(s.re > 0.0) {
        return Err(Error::Domain(format!(
            "the eta integral needs Re s > 0, got {}",
            s.re
        )));
    }
    let quad = quadrature::integrate_bi_infinite(
        |u| eta_integrand(s, u),
        DecayProfile::exp_substituted(s.re),
        tol,
    )?;
    let oracle = if (s - cx::ONE).norm() < POLE_GUARD {
        oracles::gamma(s)? * oracles::eta(s)?
    } else {
        let factor = -cx::expm1((cx::ONE - s) * std::f64::consts::LN_2);
        factor * oracles::gamma(s)? * oracles::zeta(s)?
    };
    Ok(IdentityResidual::new(oracle, quad.value, Some(quad)))
}

fn check_params(params: &ZetaRepParams) -> Result<()> {
    check_finite_s(params.s)?;
    if params.n == 0 {
        return Err(Error::Domain("contour parameter N must be >= 1".into()));
    }
    guard("s - 1", params.s - cx::ONE)
}

/// `int_0^{2 pi} e^{i nu y} / (e^{2 pi N e^{iy}} + 1) dy`, split where
/// `cos y` changes sign.
pub fn vertical_integral(nu: ComplexValue, n: u32, tol: f64) -> Result<QuadResult> {
    let scale = 2.0 * PI * n as f64;
    quadrature::integrate_piecewise(
        |y| (cx::I * nu * y).exp() * fermi(cx::cis(y) * scale),
        &[0.0, FRAC_PI_2, 1.5 * PI, 2.0 * PI],
        tol,
    )
}

fn vertical_with_integral(
    params: &ZetaRepParams,
    variant: Variant,
) -> Result<(ComplexValue, QuadResult)> {
    check_params(params)?;
    let s = params.s;
    let n = params.n as f64;
    match variant {
        Variant::ForZetaOf1MinusS => {
            let sin_half = (s * FRAC_PI_2).sin();
            guard("sin(pi s / 2)", sin_half)?;
            let quad = vertical_integral(s, params.n, params.tol)?;
            let prefactor = cx::pow_real_base(2.0, s - 2.0) * cx::pow_real_base(n, s)
                / (sin_half * (cx::I * PI * s).exp());
            Ok((prefactor * quad.value, quad.scaled(prefactor)))
        }
        Variant::ForZetaOfS => {
            let cos_half = (s * FRAC_PI_2).cos();
            guard("cos(pi s / 2)", cos_half)?;
            let quad = vertical_integral(cx::ONE - s, params.n, params.tol)?;
            let prefactor = -cx::pow_real_base(2.0, -s - 1.0)
                * cx::pow_real_base(n, cx::ONE - s)
                * (cx::I * PI * s).exp()
                / cos_half;
            Ok((prefactor * quad.value, quad.scaled(prefactor)))
        }
    }
}

/// The vertical-edge term `I2` of the partial-sum identity.
///
/// The `s -> 1 - s` image divides by `cos(pi s / 2)`.
pub fn vertical_correction(params: ZetaRepParams, variant: Variant) -> Result<ComplexValue> {
    Ok(vertical_with_integral(&params, variant)?.0)
}

/// The `s -> 1 - s` image with the denominator read literally as
/// `cos(s / 2)`. Kept for the audit: it does not close.
pub fn vertical_correction_cos_s_half(params: ZetaRepParams) -> Result<ComplexValue> {
    check_params(&params)?;
    let s = params.s;
    let cos_half = (s * 0.5).cos();
    guard("cos(s / 2)", cos_half)?;
    let quad = vertical_integral(cx::ONE - s, params.n, params.tol)?;
    let prefactor = -cx::pow_real_base(2.0, -s - 1.0)
        * cx::pow_real_base(params.n as f64, cx::ONE - s)
        * (cx::I * PI * s).exp()
        / cos_half;
    Ok(prefactor * quad.value)
}

/// Leading-order value of `I2` for `ForZetaOf1MinusS`: the integrand replaced
/// by `0` where `cos y > 0` and by `e^{isy}` where `cos y < 0`, which gives
/// `2^{s-1} N^s / s`.
pub fn vertical_correction_leading(s: ComplexValue, n: u32) -> ComplexValue {
    cx::pow_real_base(2.0, s - 1.0) * cx::pow_real_base(n as f64, s) / s
}

fn odd_partial_sum(exponent: ComplexValue, n: u32) -> ComplexValue {
    (0..n)
        .map(|k| cx::pow_real_base((2 * k + 1) as f64, exponent))
        .collect::<CompensatedSum>()
        .value()
}

fn partial_sum_lhs(s: ComplexValue, variant: Variant) -> Result<ComplexValue> {
    match variant {
        Variant::ForZetaOf1MinusS => {
            // 1 - 2^{s-1}
            let factor = -cx::expm1((s - 1.0) * std::f64::consts::LN_2);
            Ok(factor * oracles::zeta(cx::ONE - s)?)
        }
        Variant::ForZetaOfS => {
            let factor = -cx::expm1(-s * std::f64::consts::LN_2);
            Ok(factor * oracles::zeta(s)?)
        }
    }
}

/// Oracle side against `sum_{n<N} (2n+1)^{e} - I2`, with `e = s - 1` or `-s`.
///
/// The identity neglects the part of the real axis beyond `ln(2 pi N)`, so
/// the residual carries an `O(e^{-2 pi N})` truncation term.
pub fn partial_sum_identity(params: ZetaRepParams, variant: Variant) -> Result<IdentityResidual> {
    let (correction, quad) = vertical_with_integral(&params, variant)?;
    let exponent = match variant {
        Variant::ForZetaOf1MinusS => params.s - 1.0,
        Variant::ForZetaOfS => -params.s,
    };
    let rhs = odd_partial_sum(exponent, params.n) - correction;
    let lhs = partial_sum_lhs(params.s, variant)?;
    Ok(IdentityResidual::new(lhs, rhs, Some(quad)))
}

/// [`partial_sum_identity`] for `ForZetaOfS` using
/// [`vertical_correction_cos_s_half`].
pub fn partial_sum_identity_cos_s_half(params: ZetaRepParams) -> Result<IdentityResidual> {
    let correction = vertical_correction_cos_s_half(params)?;
    let rhs = odd_partial_sum(-params.s, params.n) - correction;
    let lhs = partial_sum_lhs(params.s, Variant::ForZetaOfS)?;
    Ok(IdentityResidual::new(lhs, rhs, None))
}

/// `(2^s - 1) zeta(s)` against `-x^{1-s}/(1-s) + sum_{n <= x} (n - 1/2)^{-s}`.
///
/// The error term is `O(x^{-sigma})` uniformly for `|t| < 4x / C`, `C = 2`.
pub fn approx_functional_equation(s: ComplexValue, x: f64) -> Result<IdentityResidual> {
    check_finite_s(s)?;
    if !(s.re > 0.0) {
        return Err(Error::Domain(format!("needs Re s > 0, got {}", s.re)));
    }
    guard("s - 1", s - cx::ONE)?;
    if !(x >= 1.0) || !x.is_finite() {
        return Err(Error::Domain(format!("needs a finite cut x >= 1, got {x}")));
    }
    if !(s.im.abs() < 4.0 * x / AFE_C) {
        return Err(Error::Domain(format!(
            "|t| = {} is not below 4x/C = {}",
            s.im.abs(),
            4.0 * x / AFE_C
        )));
    }
    let terms = x.floor() as u64;
    let mut sum: CompensatedSum = (1..=terms)
        .map(|n| cx::pow_real_base(n as f64 - 0.5, -s))
        .collect();
    let one_minus_s = cx::ONE - s;
    sum.add(-cx::pow_real_base(x, one_minus_s) / one_minus_s);
    let lhs = cx::expm1(s * std::f64::consts::LN_2) * oracles::zeta(s)?;
    Ok(IdentityResidual::new(lhs, sum.value(), None))
}

/// `2 Gamma(1-s) (2 pi)^{s-1}`, the prefactor of the Hurwitz series.
fn hurwitz_prefactor(s: ComplexValue) -> Result<ComplexValue> {
    Ok(2.0 * oracles::gamma(cx::ONE - s)? * cx::pow_real_base(2.0 * PI, s - 1.0))
}

fn check_hurwitz(s: ComplexValue, a: f64) -> Result<()> {
    check_finite_s(s)?;
    if !(s.re < 0.0) {
        return Err(Error::Domain(format!(
            "the Hurwitz series diverges for Re s >= 0, got {}",
            s.re
        )));
    }
    if !(a > 0.0 && a <= 1.0) {
        return Err(Error::Domain(format!("needs 0 < a <= 1, got {a}")));
    }
    Ok(())
}

/// Bound on the dropped tail `n > terms` of [`hurwitz_formula`]:
/// `|prefactor| cosh(pi t / 2) terms^sigma / |sigma|`.
pub fn hurwitz_tail_bound(s: ComplexValue, terms: u64) -> Result<f64> {
    check_hurwitz(s, 1.0)?;
    let m = terms.max(1) as f64;
    let pref = hurwitz_prefactor(s)?.norm();
    Ok(pref * (FRAC_PI_2 * s.im).cosh() * m.powf(s.re) / s.re.abs())
}

/// `zeta(s, a)` against `2 Gamma(1-s) (2 pi)^{s-1} sum_{n=1}^{terms}
/// n^{s-1} sin(2 pi n a + pi s / 2)` for `Re s < 0`, `0 < a <= 1`.
pub fn hurwitz_formula(s: ComplexValue, a: f64, terms: u64) -> Result<IdentityResidual> {
    check_hurwitz(s, a)?;
    if terms == 0 {
        return Err(Error::Domain("need at least one series term".into()));
    }
    let shift = s * FRAC_PI_2;
    let mut sum = CompensatedSum::new();
    for n in 1..=terms {
        let nf = n as f64;
        // 2 pi n a reduced mod 2 pi before it meets the complex sine
        let phase = 2.0 * PI * (nf * a).fract();
        sum.add(cx::pow_real_base(nf, s - 1.0) * (shift + phase).sin());
    }
    let rhs = hurwitz_prefactor(s)? * sum.value();
    let lhs = oracles::hurwitz_zeta(s, a)?;
    Ok(IdentityResidual::new(lhs, rhs, None))
}

/// Outcome of a pointwise inequality check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

/// `a^2 + 1 + 2a cos(2 pi N cos y) >= a^2 / 4` with `a = e^{2 pi N sin y}`,
/// the squared modulus of the denominator on the lower-right quarter of the
/// vertical edge.
pub fn denominator_lower_bound(n: u32, y_tilde: f64) -> Result<BoundCheck> {
    if n == 0 {
        return Err(Error::Domain("N must be >= 1".into()));
    }
    if !(0.0..=FRAC_PI_2).contains(&y_tilde) {
        return Err(Error::Domain(format!(
            "y must lie in [0, pi/2], got {y_tilde}"
        )));
    }
    let scale = 2.0 * PI * n as f64;
    let a = (scale * y_tilde.sin()).exp();
    let lhs = a * a + 1.0 + 2.0 * a * (scale * y_tilde.cos()).cos();
    let rhs = 0.25 * a * a;
    Ok(BoundCheck {
        lhs,
        rhs,
        holds: lhs >= rhs,
    })
}

/// The quarter integral `S4` and its closed-form bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadrantBound {
    pub value: ComplexValue,
    pub bound: f64,
    pub holds: bool,
    pub quad: QuadResult,
}

/// `S4 = int_0^{pi/2} e^{is y} / (e^{2 pi N (sin y - i cos y)} + 1) dy`
/// against `2 / |T - 4N| * |e^{(T - 4N) pi / 2} - 1|`, `T = |Im s|`.
pub fn quadrant_integral_bound(s: ComplexValue, n: u32) -> Result<QuadrantBound> {
    check_finite_s(s)?;
    if n == 0 {
        return Err(Error::Domain("N must be >= 1".into()));
    }
    let t = s.im.abs();
    let gap = t - 4.0 * n as f64;
    if gap.abs() < 1e-12 {
        return Err(Error::DegenerateBound(format!("|Im s| = 4N = {t}")));
    }
    let scale = 2.0 * PI * n as f64;
    let quad = quadrature::integrate_adaptive(
        |y| {
            let w = ComplexValue::new(y.sin(), -y.cos()) * scale;
            (cx::I * s * y).exp() * fermi(w)
        },
        0.0,
        FRAC_PI_2,
        1e-12,
    )?;
    let bound = 2.0 / gap.abs() * (gap * FRAC_PI_2).exp_m1().abs();
    Ok(QuadrantBound {
        value: quad.value,
        bound,
        holds: quad.value.norm() <= bound,
        quad,
    })
}
