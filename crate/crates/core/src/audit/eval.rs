//! One grid point of one function id.

use std::f64::consts::FRAC_PI_2;

use super::{Check, ComparisonRecord, FunctionId, Param, SweepConfig};
use crate::cx;
use crate::error::{Error, Result};
use crate::hyper_reps::{self as hr, Equation};
use crate::zeta_reps::{self as zr, Variant, ZetaRepParams};
use crate::{ComplexValue, IdentityResidual};

/// Parameter names each function reads.
pub(super) fn required(id: FunctionId) -> &'static [&'static str] {
    match id {
        FunctionId::ZetaEq5 => &["s"],
        FunctionId::ZetaEq7a | FunctionId::ZetaEq7b => &["s", "N"],
        FunctionId::AfeThm1 => &["s", "x"],
        FunctionId::HurwitzEq13 => &["s", "a", "terms"],
        FunctionId::IgammaEq14 | FunctionId::IgammaEq15_16 => &["s", "x", "n"],
        FunctionId::PhiEq19_20 | FunctionId::PhiEq21 => &["a", "c", "x", "n"],
        FunctionId::BetaEq23 | FunctionId::BetaEq25 => &["x", "y", "n"],
        FunctionId::FEq26 | FunctionId::FEq27 => &["a", "b", "c", "z"],
        FunctionId::Izeta => &["s", "x"],
        FunctionId::Blackbody => &["x"],
        FunctionId::BoundEq11 => &["N", "samples"],
        FunctionId::BoundEq12 => &["s", "N"],
    }
}

pub(super) fn check_axes(config: &SweepConfig) -> Result<()> {
    for name in required(config.function_id) {
        if !config
            .axes
            .iter()
            .any(|a| a.names.iter().any(|n| n == name))
        {
            return Err(Error::Config(format!(
                "{} needs a `{name}` axis",
                config.function_id
            )));
        }
    }
    Ok(())
}

fn get(params: &[Param], name: &str) -> Result<ComplexValue> {
    params
        .iter()
        .find(|p| p.name == name)
        .map(|p| p.value)
        .ok_or_else(|| Error::Config(format!("missing parameter `{name}`")))
}

fn get_real(params: &[Param], name: &str) -> Result<f64> {
    let v = get(params, name)?;
    if v.im != 0.0 {
        return Err(Error::Config(format!("`{name}` must be real, got {v}")));
    }
    Ok(v.re)
}

fn get_int(params: &[Param], name: &str) -> Result<i64> {
    let v = get_real(params, name)?;
    if v.fract() != 0.0 || v.abs() > i32::MAX as f64 {
        return Err(Error::Config(format!(
            "`{name}` must be an integer, got {v}"
        )));
    }
    Ok(v as i64)
}

fn get_count(params: &[Param], name: &str) -> Result<u32> {
    let v = get_int(params, name)?;
    u32::try_from(v).map_err(|_| Error::Config(format!("`{name}` must be non-negative, got {v}")))
}

fn from_residual(id: FunctionId, r: IdentityResidual, check: Check) -> ComparisonRecord {
    let mut record = ComparisonRecord::new(id, Vec::new(), r.rhs, r.lhs, check);
    record.quad_evals = r.quad.map_or(0, |q| q.evals);
    record
}

fn rel(limit: f64) -> Check {
    Check::Relative { limit }
}

fn abs(limit: f64) -> Check {
    Check::Absolute { limit }
}

/// Pass limits of each function, pinned to the acceptance thresholds.
pub(super) fn limit(id: FunctionId, tol: f64) -> f64 {
    match id {
        FunctionId::ZetaEq5 => 1e-8,
        FunctionId::ZetaEq7a | FunctionId::ZetaEq7b => 1e-7,
        FunctionId::HurwitzEq13 => 1e-6,
        FunctionId::IgammaEq14 | FunctionId::IgammaEq15_16 => 1e-8,
        FunctionId::PhiEq19_20 | FunctionId::PhiEq21 => 1e-7,
        FunctionId::BetaEq23 | FunctionId::BetaEq25 => 1e-9,
        FunctionId::FEq26 | FunctionId::FEq27 => 1e-7,
        FunctionId::Izeta => 10.0 * tol,
        FunctionId::Blackbody => 1e-10,
        FunctionId::AfeThm1 | FunctionId::BoundEq11 | FunctionId::BoundEq12 => f64::NAN,
    }
}

fn with_phase(mut record: ComparisonRecord, equation: Equation) -> Result<ComparisonRecord> {
    record.phase_audit = Some(hr::audited_phase(equation)?);
    Ok(record)
}

/// Evaluates one point. The returned record carries no parameters and no
/// timing; the caller fills both in.
pub(super) fn evaluate(id: FunctionId, p: &[Param], tol: f64) -> Result<ComparisonRecord> {
    let lim = limit(id, tol);
    match id {
        FunctionId::ZetaEq5 => Ok(from_residual(
            id,
            zr::zeta_exp_integral(get(p, "s")?, tol)?,
            rel(lim),
        )),
        FunctionId::ZetaEq7a | FunctionId::ZetaEq7b => {
            let variant = if id == FunctionId::ZetaEq7a {
                Variant::ForZetaOf1MinusS
            } else {
                Variant::ForZetaOfS
            };
            let params = ZetaRepParams::new(get(p, "s")?, get_count(p, "N")?, tol);
            Ok(from_residual(
                id,
                zr::partial_sum_identity(params, variant)?,
                abs(lim),
            ))
        }
        FunctionId::AfeThm1 => {
            let s = get(p, "s")?;
            let x = get_real(p, "x")?;
            // Working constant of the O(x^{-sigma}) error term.
            let bound = (1.0 + s.norm()) * x.powf(-s.re);
            Ok(from_residual(
                id,
                zr::approx_functional_equation(s, x)?,
                abs(bound),
            ))
        }
        FunctionId::HurwitzEq13 => {
            let terms = get_count(p, "terms")? as u64;
            let r = zr::hurwitz_formula(get(p, "s")?, get_real(p, "a")?, terms)?;
            Ok(from_residual(id, r, abs(lim)))
        }
        FunctionId::IgammaEq14 | FunctionId::IgammaEq15_16 => {
            let (s, x) = (get(p, "s")?, get(p, "x")?);
            let n = get_int(p, "n")? as i32;
            let r = if id == FunctionId::IgammaEq14 {
                hr::incomplete_gamma_closed(s, x, n, tol)?
            } else {
                hr::incomplete_gamma_symmetric(s, x, n, tol)?
            };
            Ok(from_residual(id, r, rel(lim)))
        }
        FunctionId::PhiEq19_20 | FunctionId::PhiEq21 => {
            let (a, c, x) = (get(p, "a")?, get(p, "c")?, get(p, "x")?);
            let n = get_int(p, "n")? as i32;
            if id == FunctionId::PhiEq19_20 {
                let r = hr::kummer_closed(a, c, x, n, tol)?;
                with_phase(from_residual(id, r, rel(lim)), Equation::KummerClosed)
            } else {
                let r = hr::kummer_symmetric(a, c, x, n, tol)?;
                with_phase(from_residual(id, r, rel(lim)), Equation::KummerSymmetric)
            }
        }
        FunctionId::BetaEq23 | FunctionId::BetaEq25 => {
            let (x, y) = (get(p, "x")?, get(p, "y")?);
            let n = get_int(p, "n")? as i32;
            if id == FunctionId::BetaEq23 {
                let r = hr::beta_closed(x, y, n, tol)?;
                with_phase(from_residual(id, r, rel(lim)), Equation::BetaClosed)
            } else {
                let r = hr::beta_symmetric(x, y, n, tol)?;
                with_phase(from_residual(id, r, rel(lim)), Equation::BetaSymmetric)
            }
        }
        FunctionId::FEq26 | FunctionId::FEq27 => {
            let (a, b, c, z) = (get(p, "a")?, get(p, "b")?, get(p, "c")?, get(p, "z")?);
            let (r, eq) = if id == FunctionId::FEq26 {
                (hr::gauss_f_closed(a, b, c, z, tol)?, Equation::GaussClosed)
            } else {
                (
                    hr::gauss_f_symmetric(a, b, c, z, tol)?,
                    Equation::GaussSymmetric,
                )
            };
            let mut record = with_phase(from_residual(id, r, rel(lim)), eq)?;
            if let Some(phase) = record.phase_audit.as_mut() {
                phase.normalization_ratio = Some(hr::gamma_argument_ratio(a, b, c)?);
            }
            Ok(record)
        }
        FunctionId::Izeta => {
            let (s, x) = (get(p, "s")?, get_real(p, "x")?);
            if x == 0.0 {
                // The empty integral: both routes vanish.
                if !(s.re > 1.0) {
                    return Err(Error::Domain(format!("needs Re s > 1, got {}", s.re)));
                }
                return Ok(ComparisonRecord::new(
                    id,
                    Vec::new(),
                    cx::ZERO,
                    cx::ZERO,
                    abs(lim),
                ));
            }
            let d = hr::incomplete_zeta_dual(s, x, tol)?;
            let mut record =
                ComparisonRecord::new(id, Vec::new(), d.quadrature, d.series, abs(lim));
            record.quad_evals = d.quad_evals;
            Ok(record)
        }
        FunctionId::Blackbody => {
            let x = get_real(p, "x")?;
            let rep = hr::blackbody_fraction(x)?;
            let oracle = hr::blackbody_fraction_series(x)?;
            Ok(ComparisonRecord::new(
                id,
                Vec::new(),
                cx::real(rep),
                cx::real(oracle),
                abs(lim),
            ))
        }
        FunctionId::BoundEq11 => {
            let n = get_count(p, "N")?;
            let samples = get_count(p, "samples")?;
            if samples < 2 {
                return Err(Error::Domain("need at least two samples".into()));
            }
            let mut worst = f64::INFINITY;
            let mut holds = true;
            for k in 0..samples {
                let y = FRAC_PI_2 * k as f64 / (samples - 1) as f64;
                let b = zr::denominator_lower_bound(n, y)?;
                holds &= b.holds;
                worst = worst.min(b.lhs / b.rhs);
            }
            // Smallest lhs/rhs over the samples against the bound ratio 1.
            Ok(ComparisonRecord::new(
                id,
                Vec::new(),
                cx::real(worst),
                cx::ONE,
                Check::Bound { holds },
            ))
        }
        FunctionId::BoundEq12 => {
            let q = zr::quadrant_integral_bound(get(p, "s")?, get_count(p, "N")?)?;
            let mut record = ComparisonRecord::new(
                id,
                Vec::new(),
                q.value,
                cx::real(q.bound),
                Check::Bound { holds: q.holds },
            );
            record.quad_evals = q.quad.evals;
            Ok(record)
        }
    }
}
