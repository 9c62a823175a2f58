//! Branches of `(1 - e^{iy})^p` and `(1 + e^{iy})^p`, and integration over
//! intervals split at their branch points.

use std::f64::consts::{PI, TAU};

use crate::cx;
use crate::error::Result;
use crate::quadrature::{self, EndpointPoint, QuadResult};
use crate::ComplexValue;

/// Which factor carries the branch points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Factor {
    /// `(1 - e^{iy})^p`, branch points at `y = 2 pi k`.
    OneMinus,
    /// `(1 + e^{iy})^p`, branch points at `y = (2k + 1) pi`.
    OnePlus,
}

/// `exp(p [ln(2 sin(d/2)) + i phase])`, where `d` is the distance to the
/// nearest branch point and `phase` the argument of the base.
fn branch_power(p: ComplexValue, d: f64, phase: f64) -> ComplexValue {
    let log_mod = (2.0 * (0.5 * d).sin()).ln();
    (p * ComplexValue::new(log_mod, phase)).exp()
}

/// `(1 - e^{iy})^p`, principal on `(0, 2 pi)` and repeated with period
/// `2 pi`: `exp(p [ln(2 sin(y/2)) + i (y - pi)/2])`.
pub fn one_minus_cis_pow(p: ComplexValue, y: f64) -> ComplexValue {
    let yy = y.rem_euclid(TAU);
    branch_power(p, yy.min(TAU - yy), 0.5 * (yy - PI))
}

/// `(1 + e^{iy})^p`, principal on `(-pi, pi)` and repeated with period
/// `2 pi`: `exp(p [ln(2 cos(y/2)) + i y/2])`.
pub fn one_plus_cis_pow(p: ComplexValue, y: f64) -> ComplexValue {
    let yy = (y + PI).rem_euclid(TAU) - PI;
    branch_power(p, PI - yy.abs(), 0.5 * yy)
}

/// Abscissa inside one piece, with the distance to the nearest branch
/// point computed without cancellation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BranchPoint {
    pub y: f64,
    /// Distance to the nearest branch point.
    pub d: f64,
    /// Argument of `1 -+ e^{iy}` on the principal sheet.
    pub phase: f64,
}

impl BranchPoint {
    pub fn power(&self, p: ComplexValue) -> ComplexValue {
        branch_power(p, self.d, self.phase)
    }
}

#[derive(Debug, Clone, Copy)]
struct Piece {
    lo: f64,
    hi: f64,
    /// Centre of the period the piece lies in: `2 pi k + pi` for
    /// `OneMinus`, `2 pi k` for `OnePlus`.
    centre: f64,
    lo_branch: bool,
    hi_branch: bool,
}

fn pieces(factor: Factor, lo: f64, hi: f64) -> Vec<Piece> {
    let offset = match factor {
        Factor::OneMinus => 0.0,
        Factor::OnePlus => PI,
    };
    // Branch points sit at offset + 2 pi k.
    let first = ((lo - offset) / TAU).floor() as i64;
    let last = ((hi - offset) / TAU).ceil() as i64;
    let mut out = Vec::new();
    for k in first..last {
        let a = offset + TAU * k as f64;
        let b = a + TAU;
        let plo = a.max(lo);
        let phi = b.min(hi);
        if phi - plo <= 1e-12 * TAU {
            continue;
        }
        out.push(Piece {
            lo: plo,
            hi: phi,
            centre: a + PI,
            lo_branch: (plo - a).abs() <= 1e-12 * TAU.max(a.abs()),
            hi_branch: (phi - b).abs() <= 1e-12 * TAU.max(b.abs()),
        });
    }
    out
}

fn locate(piece: &Piece, pt: EndpointPoint) -> BranchPoint {
    let rel = pt.y - piece.centre;
    // A branch end closer than pi is the nearest branch point.
    let d = if piece.lo_branch && pt.from_lo <= PI {
        pt.from_lo
    } else if piece.hi_branch && pt.to_hi <= PI {
        pt.to_hi
    } else {
        PI - rel.abs()
    };
    // Both arguments are half the offset from the centre of the period:
    // (y - 2 pi k - pi)/2 for OneMinus, (y - 2 pi k)/2 for OnePlus.
    BranchPoint {
        y: pt.y,
        d,
        phase: 0.5 * rel,
    }
}

/// Integrates `f` over `[lo, hi]` for an integrand with a factor
/// `(1 -+ e^{iy})^p`: the interval is cut at every branch point and each
/// piece is mapped so the branch point is never evaluated.
pub fn integrate_branched<F>(
    factor: Factor,
    p: ComplexValue,
    lo: f64,
    hi: f64,
    tol: f64,
    f: F,
) -> Result<QuadResult>
where
    F: Fn(BranchPoint) -> ComplexValue,
{
    let parts = pieces(factor, lo, hi);
    let share = tol / parts.len().max(1) as f64;
    let mut results = Vec::with_capacity(parts.len());
    for piece in &parts {
        let lo_exp = if piece.lo_branch { p } else { cx::ZERO };
        let hi_exp = if piece.hi_branch { p } else { cx::ZERO };
        let r = quadrature::integrate_endpoint_algebraic_at(
            |pt| f(locate(piece, pt)),
            piece.lo,
            piece.hi,
            lo_exp,
            hi_exp,
            share,
        )?;
        results.push(r);
    }
    Ok(QuadResult::combine(&results))
}

/// Integrates a smooth integrand over `[lo, hi]` with breakpoints every
/// quarter period.
pub fn integrate_smooth<F>(lo: f64, hi: f64, tol: f64, f: F) -> Result<QuadResult>
where
    F: Fn(f64) -> ComplexValue,
{
    let quarters = (((hi - lo) / (0.5 * PI)).round() as usize).max(1);
    let step = (hi - lo) / quarters as f64;
    let mut points: Vec<f64> = (0..quarters).map(|k| lo + step * k as f64).collect();
    points.push(hi);
    quadrature::integrate_piecewise(f, &points, tol)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_values_match_direct_powers() {
        let p = ComplexValue::new(0.3, -0.7);
        for y in [0.1, 1.0, 3.0, 5.5, 6.2] {
            let direct = cx::pow(cx::ONE - cx::cis(y), p);
            assert!((one_minus_cis_pow(p, y) - direct).norm() < 1e-13, "y = {y}");
        }
        for y in [-3.0, -1.0, 0.0, 2.0, 3.1] {
            let direct = cx::pow(cx::ONE + cx::cis(y), p);
            assert!((one_plus_cis_pow(p, y) - direct).norm() < 1e-13, "y = {y}");
        }
    }

    #[test]
    fn periodic_extension() {
        let p = ComplexValue::new(-0.4, 0.2);
        for y in [0.7, 2.0, 4.0] {
            assert!((one_minus_cis_pow(p, y) - one_minus_cis_pow(p, y + 2.0 * TAU)).norm() < 1e-12);
            assert!((one_plus_cis_pow(p, y - PI) - one_plus_cis_pow(p, y + PI)).norm() < 1e-12);
        }
    }

    #[test]
    fn piece_layout() {
        let ps = pieces(Factor::OnePlus, -2.0 * TAU / 2.0, 2.0 * TAU / 2.0);
        assert_eq!(ps.len(), 3);
        assert!(!ps[0].lo_branch && ps[0].hi_branch);
        assert!(ps[1].lo_branch && ps[1].hi_branch);
        assert!(ps[2].lo_branch && !ps[2].hi_branch);
        let ps = pieces(Factor::OneMinus, 0.0, 3.0 * TAU);
        assert_eq!(ps.len(), 3);
        assert!(ps.iter().all(|p| p.lo_branch && p.hi_branch));
    }

    #[test]
    fn half_power_integral() {
        // int_0^{2 pi} (2 sin(y/2))^{1/2} dy = 2 int_0^pi (2 sin u)^{1/2} du
        //   = 2 sqrt(2) B(3/4, 1/2)
        let p = cx::real(0.5);
        let r = integrate_branched(Factor::OneMinus, p, 0.0, TAU, 1e-12, |bp| {
            (p * (2.0 * (0.5 * bp.d).sin()).ln()).exp()
        })
        .unwrap();
        let b = crate::oracles::beta(cx::real(0.75), cx::real(0.5)).unwrap();
        let want = 2.0 * 2f64.sqrt() * b.re;
        assert!((r.value.re - want).abs() < 1e-11, "{} vs {want}", r.value);
    }
}
