//! Incomplete Riemann zeta `Gamma(s) zeta~(s, x) = int_0^x w^{s-1}/(e^w - 1) dw`
//! and the blackbody fraction built on it.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::cx::{self, CompensatedSum};
use crate::error::{Error, Result};
use crate::oracles::{self, b2k_over_factorial};
use crate::quadrature;
use crate::ComplexValue;

/// Upper end of the interval handled by the Bernoulli expansion of
/// `w / (e^w - 1)`; its radius of convergence is `2 pi`.
const HEAD: f64 = 1.0;

/// Both routes to `zeta~(s, x)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IncompleteZeta {
    /// Head series plus adaptive quadrature of the defining integral.
    pub quadrature: ComplexValue,
    /// `zeta(s) - sum_k Gamma(s, kx) k^{-s} / Gamma(s)`.
    pub series: ComplexValue,
    pub quad_evals: usize,
}

fn check(s: ComplexValue, x: f64) -> Result<()> {
    if !cx::is_finite(s) || !x.is_finite() {
        return Err(Error::Domain("incomplete_zeta: non-finite argument".into()));
    }
    if !(s.re > 1.0) {
        return Err(Error::Domain(format!(
            "incomplete_zeta needs Re s > 1, got {}",
            s.re
        )));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!(
            "incomplete_zeta needs x > 0, got {x}"
        )));
    }
    Ok(())
}

/// `int_0^h w^{s-2} (w / (e^w - 1)) dw` from `w/(e^w - 1) = sum B_n w^n / n!`.
fn head_integral(s: ComplexValue, h: f64) -> ComplexValue {
    let e = s - 1.0;
    let mut sum = CompensatedSum::new();
    sum.add(e.inv());
    sum.add(-0.5 * h / (e + 1.0));
    let mut power = 1.0;
    for (k, b) in b2k_over_factorial().iter().enumerate() {
        power *= h * h;
        sum.add(b * power / (e + (2 * k + 2) as f64));
        if (b * power).abs() < 1e-18 {
            break;
        }
    }
    cx::pow_real_base(h, e) * sum.value()
}

/// `Gamma(s) zeta~(s, x)` by quadrature, and the evaluation count.
fn integral(s: ComplexValue, x: f64, tol: f64) -> Result<(ComplexValue, usize)> {
    let h = x.min(HEAD);
    let head = head_integral(s, h);
    if x <= HEAD {
        return Ok((head, 0));
    }
    let f = |w: f64| cx::pow_real_base(w, s - 1.0) * ((-w).exp() / -(-w).exp_m1());
    let pieces = ((x - h) / 2.0).ceil().max(1.0) as usize;
    let step = (x - h) / pieces as f64;
    let mut points: Vec<f64> = (0..pieces).map(|k| h + step * k as f64).collect();
    points.push(x);
    let scale = oracles::gamma(s)?.norm().max(1.0);
    let r = quadrature::integrate_piecewise(f, &points, tol * scale)?;
    Ok((head + r.value, r.evals))
}

/// `zeta(s) - sum_k Gamma(s, kx) k^{-s} / Gamma(s)`.
fn series(s: ComplexValue, x: f64) -> Result<ComplexValue> {
    let gs = oracles::gamma(s)?;
    let z = oracles::zeta(s)?;
    let mut tail = CompensatedSum::new();
    for k in 1..1_000_000u64 {
        let kf = k as f64;
        let term =
            oracles::upper_incomplete_gamma(s, cx::real(kf * x))? * cx::pow_real_base(kf, -s);
        tail.add(term);
        if kf * x > s.norm() + 1.0 && term.norm() <= 1e-18 * gs.norm() {
            return Ok(z - tail.value() / gs);
        }
    }
    Err(Error::Accuracy {
        what: "incomplete zeta series".into(),
        partial: z - tail.value() / gs,
    })
}

/// Both routes, without the agreement check.
pub fn incomplete_zeta_dual(s: ComplexValue, x: f64, tol: f64) -> Result<IncompleteZeta> {
    check(s, x)?;
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tol must be positive, got {tol}")));
    }
    let (value, quad_evals) = integral(s, x, tol)?;
    Ok(IncompleteZeta {
        quadrature: value / oracles::gamma(s)?,
        series: series(s, x)?,
        quad_evals,
    })
}

/// `zeta~(s, x)` for `Re s > 1`, `x > 0`: the quadrature value, after
/// checking it against the incomplete-gamma series to `10 tol`.
pub fn incomplete_zeta(s: ComplexValue, x: f64, tol: f64) -> Result<ComplexValue> {
    let dual = incomplete_zeta_dual(s, x, tol)?;
    if (dual.quadrature - dual.series).norm() > 10.0 * tol {
        return Err(Error::Accuracy {
            what: format!(
                "incomplete zeta routes disagree by {:.3e}",
                (dual.quadrature - dual.series).norm()
            ),
            partial: dual.quadrature,
        });
    }
    Ok(dual.quadrature)
}

/// Fraction of blackbody energy below `x = h nu / kT`:
/// `int_0^x w^3/(e^w - 1) dw / (pi^4 / 15)`.
pub fn blackbody_fraction(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!(
            "blackbody_fraction needs x >= 0, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    if x <= 30.0 {
        let z4 = PI.powi(4) / 90.0;
        return Ok(incomplete_zeta(cx::real(4.0), x, 1e-13)?.re / z4);
    }
    blackbody_fraction_series(x)
}

/// [`blackbody_fraction`] as `1 - (15/pi^4) sum_k Gamma(4, kx)/k^4` with
/// `Gamma(4, y) = e^{-y}(y^3 + 3y^2 + 6y + 6)`.
pub fn blackbody_fraction_series(x: f64) -> Result<f64> {
    if !(x >= 0.0) {
        return Err(Error::Domain(format!(
            "blackbody_fraction needs x >= 0, got {x}"
        )));
    }
    if x == 0.0 {
        return Ok(0.0);
    }
    let mut tail = 0.0;
    for k in 1..=10_000_000u64 {
        let y = k as f64 * x;
        let term = (-y).exp() * (((y + 3.0) * y + 6.0) * y + 6.0) / (k as f64).powi(4);
        tail += term;
        if term < 1e-18 * tail {
            return Ok(1.0 - tail * 15.0 / PI.powi(4));
        }
    }
    Err(Error::Accuracy {
        what: "blackbody series".into(),
        partial: cx::real(1.0 - tail * 15.0 / PI.powi(4)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn saturates_to_zeta() {
        let v = incomplete_zeta(cx::real(4.0), 50.0, 1e-12).unwrap();
        assert!((v.re - PI.powi(4) / 90.0).abs() < 1e-10);
    }

    #[test]
    fn small_x_leading_order() {
        let v = incomplete_zeta(cx::real(4.0), 0.01, 1e-14).unwrap();
        let lead = 1e-6 / 18.0;
        assert!((v.re - lead).abs() < 1e-2 * lead);
    }

    #[test]
    fn routes_agree_on_grid() {
        for s in [
            cx::real(2.0),
            cx::real(3.0),
            cx::real(4.0),
            ComplexValue::new(2.5, 1.0),
        ] {
            for x in [0.1, 1.0, 5.0, 20.0] {
                let d = incomplete_zeta_dual(s, x, 1e-10).unwrap();
                assert!(
                    (d.quadrature - d.series).norm() < 1e-9,
                    "s={s} x={x}: {d:?}"
                );
            }
        }
    }

    #[test]
    fn reference_values() {
        // mpmath: quad(w/(e^w-1), [0,1]) and quad(w^3/(e^w-1), [0,5]) / 6
        let v = incomplete_zeta(cx::real(2.0), 1.0, 1e-12).unwrap();
        assert!((v.re - 0.777_504_634_112_248_3).abs() < 1e-12, "{v}");
        let v = incomplete_zeta(cx::real(4.0), 5.0, 1e-12).unwrap();
        assert!((v.re - 0.816_648_693_055_097_0).abs() < 1e-11, "{v}");
    }

    #[test]
    fn blackbody_endpoints_and_shape() {
        assert_eq!(blackbody_fraction(0.0).unwrap(), 0.0);
        assert!((blackbody_fraction(50.0).unwrap() - 1.0).abs() < 1e-10);
        let f10 = blackbody_fraction(10.0).unwrap();
        assert!(f10 > 0.99 && f10 < 1.0);
        let mut prev = 0.0;
        for k in 1..=100 {
            let f = blackbody_fraction(0.5 * k as f64).unwrap();
            assert!(f >= prev);
            prev = f;
        }
        assert!(incomplete_zeta(cx::real(1.0), 1.0, 1e-10).is_err());
        for x in [0.5, 2.0, 10.0, 30.0] {
            let d = blackbody_fraction(x).unwrap() - blackbody_fraction_series(x).unwrap();
            assert!(d.abs() < 1e-12, "x = {x}: {d:e}");
        }
    }
}
