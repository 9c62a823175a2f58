use std::f64::consts::PI;

use super::branch::{integrate_branched, integrate_smooth, Factor};
use super::{audited_phase, Equation, PREFACTOR_GUARD};
use crate::cx::{self, CompensatedSum};
use crate::error::{Error, Result};
use crate::oracles;
use crate::quadrature::{self, QuadResult};
use crate::{ComplexValue, IdentityResidual};

/// Oracle side, representation side without its leading constant, and the
/// diagnostics of the integral.
struct Parts {
    lhs: ComplexValue,
    bare: ComplexValue,
    quad: QuadResult,
}

/// What the symmetric contour is compared with.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Target {
    /// The function itself, as printed.
    Printed,
    /// The function for odd winding, the auxiliary integral for even.
    Sheet,
}

fn guard(what: &str, value: ComplexValue) -> Result<()> {
    let magnitude = value.norm();
    if magnitude < PREFACTOR_GUARD {
        return Err(Error::NearPole {
            what: what.into(),
            magnitude,
        });
    }
    Ok(())
}

fn finite(values: &[ComplexValue], what: &str) -> Result<()> {
    if values.iter().all(|v| cx::is_finite(*v)) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what}: non-finite parameter")))
    }
}

/// `1 - e^{2 pi i n p}`.
fn closed_prefactor(p: ComplexValue, n: u32) -> ComplexValue {
    -cx::expm1(cx::I * (2.0 * PI * n as f64) * p)
}

/// `sin(pi n p)`.
fn symmetric_sine(p: ComplexValue, n: u32) -> ComplexValue {
    (p * (PI * n as f64)).sin()
}

fn split_winding(winding: i32) -> Result<(u32, bool)> {
    if winding == 0 {
        return Err(Error::Domain("winding must be nonzero".into()));
    }
    Ok((winding.unsigned_abs(), winding < 0))
}

fn conjugated(r: IdentityResidual) -> IdentityResidual {
    let quad = r.quad.map(|q| QuadResult {
        value: q.value.conj(),
        ..q
    });
    IdentityResidual::new(r.lhs.conj(), r.rhs.conj(), quad)
}

fn finish(equation: Equation, parts: Parts) -> Result<IdentityResidual> {
    let phase = audited_phase(equation)?;
    let k = phase.corrected_prefactor;
    Ok(IdentityResidual::new(
        parts.lhs,
        k * parts.bare,
        Some(parts.quad.scaled(k)),
    ))
}

fn check_x_right_half(x: ComplexValue) -> Result<()> {
    if !(x.re > 0.0) {
        return Err(Error::Domain(format!(
            "x = {x} must satisfy |arg x| < pi/2"
        )));
    }
    Ok(())
}

fn igamma_closed_parts(s: ComplexValue, x: ComplexValue, n: u32, tol: f64) -> Result<Parts> {
    finite(&[s, x], "incomplete_gamma_closed")?;
    check_x_right_half(x)?;
    let pref = closed_prefactor(s, n);
    guard("1 - e^{2 pi i s n}", pref)?;
    let lhs = pref * oracles::lower_incomplete_gamma(s, x)?;
    let quad = integrate_smooth(0.0, 2.0 * PI * n as f64, tol, |y| {
        (cx::I * s * y - x * cx::cis(y)).exp()
    })?;
    let xs = cx::pow(x, s);
    Ok(Parts {
        lhs,
        bare: xs * quad.value,
        quad: quad.scaled(xs),
    })
}

/// `int_0^x e^w w^{s-1} dw = x^s sum_k x^k / (k! (s + k))`, the target of
/// the symmetric incomplete gamma contour at even winding.
pub fn auxiliary_lower_gamma(s: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    finite(&[s, x], "auxiliary_lower_gamma")?;
    if s.im == 0.0 && s.re <= 0.0 && s.re == s.re.round() {
        return Err(Error::Pole(format!("auxiliary gamma at s = {}", s.re)));
    }
    let mut sum = CompensatedSum::new();
    let mut power = cx::ONE;
    sum.add(s.inv());
    let mut quiet = 0;
    for k in 1..20_000 {
        power *= x / k as f64;
        let term = power / (s + k as f64);
        sum.add(term);
        if term.norm() <= 1e-17 * sum.value().norm() {
            quiet += 1;
            if quiet >= 2 && k as f64 > x.norm() {
                return Ok(cx::pow(x, s) * sum.value());
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::Accuracy {
        what: "auxiliary gamma series".into(),
        partial: cx::pow(x, s) * sum.value(),
    })
}

fn igamma_symmetric_parts(
    s: ComplexValue,
    x: ComplexValue,
    n: u32,
    tol: f64,
    target: Target,
) -> Result<Parts> {
    finite(&[s, x], "incomplete_gamma_symmetric")?;
    if x == cx::ZERO {
        return Err(Error::Domain("x must be nonzero".into()));
    }
    let sine = symmetric_sine(s, n);
    guard("sin(pi n s)", sine)?;
    let lhs = if target == Target::Sheet && n.is_multiple_of(2) {
        auxiliary_lower_gamma(s, x)?
    } else {
        oracles::lower_incomplete_gamma(s, x)?
    };
    let quad = integrate_smooth(0.0, PI * n as f64, tol, |t| {
        (x * t.cos()).exp() * (s * t + x * t.sin()).cos()
    })?;
    let factor = cx::pow(x, s) / sine;
    Ok(Parts {
        lhs,
        bare: factor * quad.value,
        quad: quad.scaled(factor),
    })
}

/// `(1 - e^{2 pi i s n}) gamma(s, x)` against
/// `-i x^s int_0^{2 pi n} e^{isy} e^{-x e^{iy}} dy`, for `|arg x| < pi/2`.
pub fn incomplete_gamma_closed(
    s: ComplexValue,
    x: ComplexValue,
    winding: i32,
    tol: f64,
) -> Result<IdentityResidual> {
    let (n, flip) = split_winding(winding)?;
    if flip {
        return Ok(conjugated(incomplete_gamma_closed(
            s.conj(),
            x.conj(),
            n as i32,
            tol,
        )?));
    }
    finish(Equation::IgammaClosed, igamma_closed_parts(s, x, n, tol)?)
}

/// `gamma(s, x)` against
/// `x^s / sin(pi n s) int_0^{pi n} e^{x cos t} cos(s t + x sin t) dt`.
pub fn incomplete_gamma_symmetric(
    s: ComplexValue,
    x: ComplexValue,
    winding: i32,
    tol: f64,
) -> Result<IdentityResidual> {
    let (n, flip) = split_winding(winding)?;
    if flip {
        return Ok(conjugated(incomplete_gamma_symmetric(
            s.conj(),
            x.conj(),
            n as i32,
            tol,
        )?));
    }
    finish(
        Equation::IgammaSymmetric,
        igamma_symmetric_parts(s, x, n, tol, Target::Printed)?,
    )
}

/// [`incomplete_gamma_symmetric`] compared with the integral its contour
/// actually encloses: `gamma(s, x)` for odd winding,
/// [`auxiliary_lower_gamma`] for even winding.
pub fn incomplete_gamma_symmetric_sheet(
    s: ComplexValue,
    x: ComplexValue,
    winding: i32,
    tol: f64,
) -> Result<IdentityResidual> {
    let (n, flip) = split_winding(winding)?;
    if flip {
        return Ok(conjugated(incomplete_gamma_symmetric_sheet(
            s.conj(),
            x.conj(),
            n as i32,
            tol,
        )?));
    }
    finish(
        Equation::IgammaSymmetric,
        igamma_symmetric_parts(s, x, n, tol, Target::Sheet)?,
    )
}

fn check_euler(
    lower: ComplexValue,
    upper_minus_lower: ComplexValue,
    names: (&str, &str),
) -> Result<()> {
    if !(upper_minus_lower.re > 0.0) {
        return Err(Error::Divergent(format!(
            "Re({}) must be positive, got {}",
            names.1, upper_minus_lower.re
        )));
    }
    if !(lower.re > 0.0) {
        return Err(Error::Domain(format!(
            "Re {} must be positive, got {}",
            names.0, lower.re
        )));
    }
    Ok(())
}

fn kummer_closed_parts(
    a: ComplexValue,
    c: ComplexValue,
    x: ComplexValue,
    n: u32,
    tol: f64,
) -> Result<Parts> {
    finite(&[a, c, x], "kummer_closed")?;
    check_euler(a, c - a, ("a", "c - a"))?;
    let pref = closed_prefactor(a, n);
    guard("1 - e^{2 pi i a n}", pref)?;
    let norm = oracles::gamma_ratio(c, a, c - a)?;
    let lhs = pref * oracles::kummer_phi(a, c, x)?;
    let p = c - a - 1.0;
    let quad = integrate_branched(Factor::OneMinus, p, 0.0, 2.0 * PI * n as f64, tol, |bp| {
        (x * cx::cis(bp.y) + cx::I * a * bp.y).exp() * bp.power(p)
    })?;
    Ok(Parts {
        lhs,
        bare: norm * quad.value,
        quad: quad.scaled(norm),
    })
}

/// `int_0^1 e^{-xw} w^{a-1} (1+w)^{c-a-1} dw`.
fn kummer_auxiliary(
    a: ComplexValue,
    c: ComplexValue,
    x: ComplexValue,
    tol: f64,
) -> Result<ComplexValue> {
    let p = c - a - 1.0;
    let r = quadrature::integrate_endpoint_algebraic_at(
        |pt| {
            let w = pt.from_lo;
            (-x * w).exp() * cx::pow_real_base(w, a - 1.0) * cx::pow_real_base(1.0 + pt.y, p)
        },
        0.0,
        1.0,
        a - 1.0,
        cx::ZERO,
        tol,
    )?;
    Ok(r.value)
}

fn kummer_symmetric_parts(
    a: ComplexValue,
    c: ComplexValue,
    x: ComplexValue,
    n: u32,
    tol: f64,
    target: Target,
) -> Result<Parts> {
    finite(&[a, c, x], "kummer_symmetric")?;
    check_euler(a, c - a, ("a", "c - a"))?;
    let sine = symmetric_sine(a, n);
    guard("sin(pi n a)", sine)?;
    let norm = oracles::gamma_ratio(c, a, c - a)?;
    let value = if target == Target::Sheet && n.is_multiple_of(2) {
        norm * kummer_auxiliary(a, c, x, 0.1 * tol)?
    } else {
        oracles::kummer_phi(a, c, x)?
    };
    let lhs = 2.0 * sine * value;
    let p = c - a - 1.0;
    let half = PI * n as f64;
    let quad = integrate_branched(Factor::OnePlus, p, -half, half, tol, |bp| {
        (-x * cx::cis(bp.y) + cx::I * a * bp.y).exp() * bp.power(p)
    })?;
    Ok(Parts {
        lhs,
        bare: norm * quad.value,
        quad: quad.scaled(norm),
    })
}

/// `(1 - e^{2 pi i a n}) Phi(a, c; x)` against
/// `-i Gamma(c)/(Gamma(a) Gamma(c-a)) int_0^{2 pi n} e^{x e^{iy}} e^{iay}
/// (1 - e^{iy})^{c-a-1} dy`, for `Re c > Re a > 0`.
pub fn kummer_closed(
    a: ComplexValue,
    c: ComplexValue,
    x: ComplexValue,
    winding: i32,
    tol: f64,
) -> Result<IdentityResidual> {
    let (n, flip) = split_winding(winding)?;
    if flip {
        return Ok(conjugated(kummer_closed(
            a.conj(),
            c.conj(),
            x.conj(),
            n as i32,
            tol,
        )?));
    }
    finish(
        Equation::KummerClosed,
        kummer_closed_parts(a, c, x, n, tol)?,
    )
}

/// `2 sin(pi n a) Phi(a, c; x)` against
/// `k Gamma(c)/(Gamma(a) Gamma(c-a)) int_{-pi n}^{pi n} e^{-x e^{iy}} e^{iay}
/// (1 + e^{iy})^{c-a-1} dy` with the audited constant `k`.
pub fn kummer_symmetric(
    a: ComplexValue,
    c: ComplexValue,
    x: ComplexValue,
    winding: i32,
    tol: f64,
) -> Result<IdentityResidual> {
    let (n, flip) = split_winding(winding)?;
    if flip {
        return Ok(conjugated(kummer_symmetric(
            a.conj(),
            c.conj(),
            x.conj(),
            n as i32,
            tol,
        )?));
    }
    finish(
        Equation::KummerSymmetric,
        kummer_symmetric_parts(a, c, x, n, tol, Target::Printed)?,
    )
}

/// [`kummer_symmetric`] compared with `Phi` for odd winding and with the
/// normalised auxiliary integral `int_0^1 e^{-xw} w^{a-1} (1+w)^{c-a-1} dw`
/// for even winding.
pub fn kummer_symmetric_sheet(
    a: ComplexValue,
    c: ComplexValue,
    x: ComplexValue,
    winding: i32,
    tol: f64,
) -> Result<IdentityResidual> {
    let (n, flip) = split_winding(winding)?;
    if flip {
        return Ok(conjugated(kummer_symmetric_sheet(
            a.conj(),
            c.conj(),
            x.conj(),
            n as i32,
            tol,
        )?));
    }
    finish(
        Equation::KummerSymmetric,
        kummer_symmetric_parts(a, c, x, n, tol, Target::Sheet)?,
    )
}

fn beta_closed_parts(x: ComplexValue, y: ComplexValue, n: u32, tol: f64) -> Result<Parts> {
    finite(&[x, y], "beta_closed")?;
    check_euler(x, y, ("x", "y"))?;
    let pref = closed_prefactor(x, n);
    guard("1 - e^{2 pi i x n}", pref)?;
    let lhs = pref * oracles::beta(x, y)?;
    let p = y - 1.0;
    let quad = integrate_branched(Factor::OneMinus, p, 0.0, 2.0 * PI * n as f64, tol, |bp| {
        (cx::I * x * bp.y).exp() * bp.power(p)
    })?;
    Ok(Parts {
        lhs,
        bare: quad.value,
        quad,
    })
}

/// `int_0^1 w^{x-1} (1+w)^{y-1} dw`.
fn beta_auxiliary(x: ComplexValue, y: ComplexValue, tol: f64) -> Result<ComplexValue> {
    let r = quadrature::integrate_endpoint_algebraic_at(
        |pt| cx::pow_real_base(pt.from_lo, x - 1.0) * cx::pow_real_base(1.0 + pt.y, y - 1.0),
        0.0,
        1.0,
        x - 1.0,
        cx::ZERO,
        tol,
    )?;
    Ok(r.value)
}

fn beta_symmetric_parts(
    x: ComplexValue,
    y: ComplexValue,
    n: u32,
    tol: f64,
    target: Target,
) -> Result<Parts> {
    finite(&[x, y], "beta_symmetric")?;
    check_euler(x, y, ("x", "y"))?;
    let sine = symmetric_sine(x, n);
    guard("sin(pi n x)", sine)?;
    let value = if target == Target::Sheet && n.is_multiple_of(2) {
        beta_auxiliary(x, y, 0.1 * tol)?
    } else {
        oracles::beta(x, y)?
    };
    let lhs = 2.0 * sine * value;
    let p = y - 1.0;
    let half = PI * n as f64;
    let quad = integrate_branched(Factor::OnePlus, p, -half, half, tol, |bp| {
        (cx::I * x * bp.y).exp() * bp.power(p)
    })?;
    Ok(Parts {
        lhs,
        bare: quad.value,
        quad,
    })
}

/// `(1 - e^{2 pi i x n}) B(x, y)` against
/// `-i int_0^{2 pi n} e^{ixt} (1 - e^{it})^{y-1} dt`, for `Re x, Re y > 0`.
pub fn beta_closed(
    x: ComplexValue,
    y: ComplexValue,
    winding: i32,
    tol: f64,
) -> Result<IdentityResidual> {
    let (n, flip) = split_winding(winding)?;
    if flip {
        return Ok(conjugated(beta_closed(x.conj(), y.conj(), n as i32, tol)?));
    }
    finish(Equation::BetaClosed, beta_closed_parts(x, y, n, tol)?)
}

/// `2 sin(pi n x) B(x, y)` against
/// `int_{-pi n}^{pi n} e^{ixt} (1 + e^{it})^{y-1} dt`.
pub fn beta_symmetric(
    x: ComplexValue,
    y: ComplexValue,
    winding: i32,
    tol: f64,
) -> Result<IdentityResidual> {
    let (n, flip) = split_winding(winding)?;
    if flip {
        return Ok(conjugated(beta_symmetric(
            x.conj(),
            y.conj(),
            n as i32,
            tol,
        )?));
    }
    finish(
        Equation::BetaSymmetric,
        beta_symmetric_parts(x, y, n, tol, Target::Printed)?,
    )
}

/// [`beta_symmetric`] compared with `B(x, y)` for odd winding and with
/// `int_0^1 w^{x-1} (1+w)^{y-1} dw` for even winding.
pub fn beta_symmetric_sheet(
    x: ComplexValue,
    y: ComplexValue,
    winding: i32,
    tol: f64,
) -> Result<IdentityResidual> {
    let (n, flip) = split_winding(winding)?;
    if flip {
        return Ok(conjugated(beta_symmetric_sheet(
            x.conj(),
            y.conj(),
            n as i32,
            tol,
        )?));
    }
    finish(
        Equation::BetaSymmetric,
        beta_symmetric_parts(x, y, n, tol, Target::Sheet)?,
    )
}

fn check_gauss(a: ComplexValue, b: ComplexValue, c: ComplexValue, z: ComplexValue) -> Result<()> {
    finite(&[a, b, c, z], "gauss_f")?;
    check_euler(b, c - b, ("b", "c - b"))?;
    if !(z.norm() < 0.9) {
        return Err(Error::Domain(format!("needs |z| < 0.9, got {}", z.norm())));
    }
    Ok(())
}

/// Printed over corrected normalisation of the Gauss representations:
/// `[Gamma(c)/(Gamma(a) Gamma(c-a))] / [Gamma(c)/(Gamma(b) Gamma(c-b))]`.
pub fn gamma_argument_ratio(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
) -> Result<ComplexValue> {
    Ok(oracles::gamma_ratio(c, a, c - a)? / oracles::gamma_ratio(c, b, c - b)?)
}

fn gauss_closed_parts(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    z: ComplexValue,
    tol: f64,
) -> Result<Parts> {
    check_gauss(a, b, c, z)?;
    let pref = closed_prefactor(b, 1);
    guard("1 - e^{2 pi i b}", pref)?;
    let norm = oracles::gamma_ratio(c, b, c - b)?;
    let lhs = pref * oracles::gauss_f(a, b, c, z)?;
    let p = c - b - 1.0;
    let quad = integrate_branched(Factor::OneMinus, p, 0.0, 2.0 * PI, tol, |bp| {
        let e = cx::cis(bp.y);
        (cx::I * b * bp.y).exp() * bp.power(p) * cx::pow(cx::ONE - z * e, -a)
    })?;
    Ok(Parts {
        lhs,
        bare: norm * quad.value,
        quad: quad.scaled(norm),
    })
}

fn gauss_symmetric_parts(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    z: ComplexValue,
    tol: f64,
) -> Result<Parts> {
    check_gauss(a, b, c, z)?;
    let sine = symmetric_sine(b, 1);
    guard("sin(pi b)", sine)?;
    let norm = oracles::gamma_ratio(c, b, c - b)?;
    let lhs = 2.0 * sine * oracles::gauss_f(a, b, c, z)?;
    let p = c - b - 1.0;
    let quad = integrate_branched(Factor::OnePlus, p, -PI, PI, tol, |bp| {
        let e = cx::cis(bp.y);
        (cx::I * b * bp.y).exp() * bp.power(p) * cx::pow(cx::ONE + z * e, -a)
    })?;
    Ok(Parts {
        lhs,
        bare: norm * quad.value,
        quad: quad.scaled(norm),
    })
}

/// `(1 - e^{2 pi i b}) F(a, b; c; z)` against
/// `-i Gamma(c)/(Gamma(b) Gamma(c-b)) int_0^{2 pi} e^{iby} (1 - e^{iy})^{c-b-1}
/// (1 - z e^{iy})^{-a} dy`, for `Re c > Re b > 0`, `|z| < 0.9`.
///
/// The normalisation is the one of the Euler integral; see
/// [`gamma_argument_ratio`] for the printed one.
pub fn gauss_f_closed(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    z: ComplexValue,
    tol: f64,
) -> Result<IdentityResidual> {
    finish(Equation::GaussClosed, gauss_closed_parts(a, b, c, z, tol)?)
}

/// `2 sin(pi b) F(a, b; c; z)` against
/// `Gamma(c)/(Gamma(b) Gamma(c-b)) int_{-pi}^{pi} e^{iby} (1 + e^{iy})^{c-b-1}
/// (1 + z e^{iy})^{-a} dy`.
pub fn gauss_f_symmetric(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    z: ComplexValue,
    tol: f64,
) -> Result<IdentityResidual> {
    finish(
        Equation::GaussSymmetric,
        gauss_symmetric_parts(a, b, c, z, tol)?,
    )
}

fn r(x: f64) -> ComplexValue {
    cx::real(x)
}

/// `lhs / (printed * bare)` on twelve odd-winding points.
pub(super) fn probe_ratios(equation: Equation, tol: f64) -> Result<Vec<ComplexValue>> {
    let printed = equation.printed_prefactor();
    let s_set = [r(0.5), r(1.7), ComplexValue::new(2.3, 1.1)];
    let a_set = [r(0.3), r(0.7), ComplexValue::new(0.3, 0.2)];
    let bx_set = [r(0.3), r(0.45), ComplexValue::new(0.4, 0.1)];
    let triples = [
        (r(0.5), r(0.3), r(1.7)),
        (r(1.2), r(0.4), r(2.1)),
        (r(0.8), r(0.45), r(1.6)),
        (ComplexValue::new(0.5, 0.2), r(0.45), r(1.8)),
    ];
    let z_set = [r(0.3), r(-0.5), ComplexValue::new(0.2, 0.1)];
    let mut parts = Vec::with_capacity(12);
    match equation {
        Equation::IgammaClosed | Equation::IgammaSymmetric => {
            for s in s_set {
                for x in [r(0.5), r(2.0)] {
                    for n in [1, 3] {
                        parts.push(if equation == Equation::IgammaClosed {
                            igamma_closed_parts(s, x, n, tol)?
                        } else {
                            igamma_symmetric_parts(s, x, n, tol, Target::Printed)?
                        });
                    }
                }
            }
        }
        Equation::KummerClosed | Equation::KummerSymmetric => {
            for a in a_set {
                for c in [r(1.9), r(2.6)] {
                    for (x, n) in [(r(-2.0), 1), (r(3.0), 3)] {
                        parts.push(if equation == Equation::KummerClosed {
                            kummer_closed_parts(a, c, x, n, tol)?
                        } else {
                            kummer_symmetric_parts(a, c, x, n, tol, Target::Printed)?
                        });
                    }
                }
            }
        }
        Equation::BetaClosed | Equation::BetaSymmetric => {
            for x in bx_set {
                for y in [r(0.8), r(2.5)] {
                    for n in [1, 3] {
                        parts.push(if equation == Equation::BetaClosed {
                            beta_closed_parts(x, y, n, tol)?
                        } else {
                            beta_symmetric_parts(x, y, n, tol, Target::Printed)?
                        });
                    }
                }
            }
        }
        Equation::GaussClosed | Equation::GaussSymmetric => {
            for (a, b, c) in triples {
                for z in z_set {
                    parts.push(if equation == Equation::GaussClosed {
                        gauss_closed_parts(a, b, c, z, tol)?
                    } else {
                        gauss_symmetric_parts(a, b, c, z, tol)?
                    });
                }
            }
        }
    }
    Ok(parts.iter().map(|p| p.lhs / (printed * p.bare)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    #[test]
    fn igamma_closed_points() {
        let res = incomplete_gamma_closed(r(0.5), r(2.0), 1, 1e-12).unwrap();
        assert!((res.lhs.re - 2.0 * 1.691_806_732_945_198_3).abs() < 1e-12);
        assert!(res.residual < 1e-9);
        let res = incomplete_gamma_closed(c(0.7, 0.3), r(1.0), 2, 1e-12).unwrap();
        assert!(res.residual < 1e-8, "{res:?}");
    }

    #[test]
    fn igamma_symmetric_points() {
        let res = incomplete_gamma_symmetric(r(0.5), r(2.0), 1, 1e-12).unwrap();
        assert!((res.rhs.re - 1.691_806_732_945_198_3).abs() < 1e-10);
        let res = incomplete_gamma_symmetric(r(0.7), r(5.0), 3, 1e-12).unwrap();
        assert!(res.residual < 1e-8, "{res:?}");
    }

    #[test]
    fn even_winding_symmetric_encloses_auxiliary_integral() {
        let printed = incomplete_gamma_symmetric(r(0.7), r(2.0), 2, 1e-12).unwrap();
        assert!(printed.relative() > 1e-3);
        let sheet = incomplete_gamma_symmetric_sheet(r(0.7), r(2.0), 2, 1e-12).unwrap();
        assert!(sheet.relative() < 1e-9, "{sheet:?}");
        let sheet = kummer_symmetric_sheet(r(0.3), r(1.9), r(0.5), 2, 1e-12).unwrap();
        assert!(sheet.relative() < 1e-8, "{sheet:?}");
        let sheet = beta_symmetric_sheet(r(0.3), r(1.2), 2, 1e-12).unwrap();
        assert!(sheet.relative() < 1e-9, "{sheet:?}");
    }

    #[test]
    fn kummer_points() {
        let res = kummer_closed(r(0.5), r(2.0), cx::ZERO, 1, 1e-12).unwrap();
        assert!((res.rhs - r(2.0)).norm() < 1e-10, "{res:?}");
        let res = kummer_closed(r(0.3), r(1.9), r(1.5), 1, 1e-12).unwrap();
        assert!(res.residual < 1e-8);
        let res = kummer_closed(c(0.3, 0.2), r(2.6), r(-2.0), 2, 1e-12).unwrap();
        assert!(res.residual < 1e-7);
        let res = kummer_symmetric(r(0.5), r(2.0), cx::ZERO, 1, 1e-12).unwrap();
        assert!((res.rhs - r(2.0)).norm() < 1e-10, "{res:?}");
        let res = kummer_symmetric(r(0.7), r(1.9), r(0.5), 1, 1e-12).unwrap();
        assert!(res.residual < 1e-8);
    }

    #[test]
    fn kummer_divergent_endpoint() {
        assert!(matches!(
            kummer_closed(r(1.5), r(1.2), r(1.0), 1, 1e-10),
            Err(Error::Divergent(_))
        ));
    }

    #[test]
    fn beta_points() {
        let res = beta_closed(r(0.5), r(1.0), 1, 1e-12).unwrap();
        assert!((res.lhs - r(4.0)).norm() < 1e-13 && (res.rhs - r(4.0)).norm() < 1e-11);
        let res = beta_symmetric(r(0.5), r(1.0), 1, 1e-12).unwrap();
        assert!((res.lhs - r(4.0)).norm() < 1e-13 && (res.rhs - r(4.0)).norm() < 1e-11);
        assert!(beta_closed(r(0.3), r(2.5), 1, 1e-12).unwrap().residual < 1e-9);
        assert!(beta_closed(c(0.4, 0.1), r(1.2), 2, 1e-12).unwrap().residual < 1e-8);
        assert!(beta_symmetric(r(0.3), r(0.8), 1, 1e-12).unwrap().residual < 1e-9);
        assert!(beta_symmetric(r(0.35), r(1.4), 3, 1e-12).unwrap().residual < 1e-8);
    }

    #[test]
    fn gauss_points() {
        assert!(
            gauss_f_closed(r(0.5), r(0.3), r(1.7), r(0.3), 1e-12)
                .unwrap()
                .residual
                < 1e-7
        );
        assert!(
            gauss_f_closed(r(1.2), r(0.4), r(2.1), r(-0.5), 1e-12)
                .unwrap()
                .residual
                < 1e-7
        );
        assert!(
            gauss_f_symmetric(r(0.8), r(0.3), r(1.6), r(0.4), 1e-12)
                .unwrap()
                .residual
                < 1e-7
        );
        let res = gauss_f_symmetric(c(0.5, 0.2), r(0.45), r(1.8), c(0.2, 0.1), 1e-12).unwrap();
        assert!(res.residual < 1e-6);
        let res = gauss_f_symmetric(r(0.7), r(0.5), r(2.0), cx::ZERO, 1e-12).unwrap();
        assert!((res.lhs - r(2.0)).norm() < 1e-13 && (res.rhs - r(2.0)).norm() < 1e-10);
    }

    #[test]
    fn gauss_at_zero_is_kummer_at_zero() {
        let (a, b, cc) = (r(0.9), r(0.35), r(1.7));
        let g = gauss_f_closed(a, b, cc, cx::ZERO, 1e-12).unwrap();
        let k = kummer_closed(b, cc, cx::ZERO, 1, 1e-12).unwrap();
        assert!((g.rhs - k.rhs).norm() < 1e-10);
        assert!((g.lhs - closed_prefactor(b, 1)).norm() < 1e-14);
    }

    #[test]
    fn negative_winding_is_conjugate_identity() {
        let pos = beta_closed(c(0.4, 0.1), r(1.2), 2, 1e-12).unwrap();
        let neg = beta_closed(c(0.4, -0.1), r(1.2), -2, 1e-12).unwrap();
        assert!((pos.lhs - neg.lhs.conj()).norm() < 1e-14);
        assert!(neg.residual < 1e-8);
        assert!(matches!(
            beta_closed(r(0.4), r(1.2), 0, 1e-12),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn gamma_argument_ratio_is_one_when_a_equals_b() {
        let v = gamma_argument_ratio(r(0.4), r(0.4), r(1.3)).unwrap();
        assert!((v - cx::ONE).norm() < 1e-15);
    }

    #[test]
    fn guard_zone() {
        assert!(matches!(
            incomplete_gamma_closed(r(1.0), r(1.0), 1, 1e-10),
            Err(Error::NearPole { .. })
        ));
        assert!(matches!(
            beta_symmetric(r(1.0), r(1.0), 1, 1e-10),
            Err(Error::NearPole { .. })
        ));
    }
}
