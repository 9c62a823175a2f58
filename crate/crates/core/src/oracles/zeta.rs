use std::f64::consts::{LN_2, PI};

use super::bernoulli::b2k_over_factorial;
use super::gamma::gamma;
use crate::cx::{self, CompensatedSum};
use crate::error::{Error, Result};
use crate::ComplexValue;

/// Minimum depth of the accelerated eta series.
pub const ETA_MIN_TERMS: usize = 48;
const LN_3_PLUS_SQRT8: f64 = 1.762_747_174_039_086;

/// Depth needed for ~1e-16 relative truncation at height `t`. The Borwein
/// error bound grows like `(1 + 2|t|) e^{pi |t|}` against `(3 + sqrt 8)^n`.
fn eta_terms(t: f64) -> usize {
    let t = t.abs();
    let need = (37.0 + (3.0 * (1.0 + 2.0 * t)).ln() + PI * t) / LN_3_PLUS_SQRT8;
    ETA_MIN_TERMS.max(need.ceil() as usize)
}

/// Dirichlet eta `sum (-1)^{k} (k+1)^{-s}`, accelerated with Borwein's
/// Chebyshev-derived weights. Regular everywhere; intended for `Re s >= 0`.
pub fn eta(s: ComplexValue) -> Result<ComplexValue> {
    if !cx::is_finite(s) {
        return Err(Error::Domain(format!("eta argument {s} is not finite")));
    }
    let n = eta_terms(s.im);
    // d_k = n sum_{i<=k} (n+i-1)! 4^i / ((n-i)! (2i)!), normalised by d_n.
    let mut partial = Vec::with_capacity(n + 1);
    let mut term = 1.0f64;
    let mut acc = term;
    partial.push(acc);
    for i in 1..=n {
        let fi = i as f64;
        let fnn = n as f64;
        term *= 4.0 * (fnn + fi - 1.0) * (fnn - fi + 1.0) / ((2.0 * fi) * (2.0 * fi - 1.0));
        acc += term;
        partial.push(acc);
    }
    let dn = partial[n];
    let mut sum = CompensatedSum::new();
    for (k, dk) in partial.iter().take(n).enumerate() {
        let weight = 1.0 - dk / dn;
        let signed = if k % 2 == 0 { weight } else { -weight };
        let power = (-s * ((k + 1) as f64).ln()).exp();
        sum.add(power * signed);
    }
    Ok(sum.value())
}

fn check_zeta_pole(s: ComplexValue) -> Result<()> {
    if !cx::is_finite(s) {
        return Err(Error::Domain(format!("zeta argument {s} is not finite")));
    }
    if (s - cx::ONE).norm() < 1e-14 {
        return Err(Error::Pole("zeta has a pole at s = 1".into()));
    }
    Ok(())
}

/// `1 - 2^{1-s}` without cancellation near `s = 1`.
fn eta_factor(s: ComplexValue) -> ComplexValue {
    -cx::expm1((cx::ONE - s) * LN_2)
}

/// `zeta(s) = eta(s) / (1 - 2^{1-s})`.
///
/// Loses accuracy next to the zeros `s = 1 + 2 pi i k / ln 2` (`k != 0`) of
/// the denominator; [`zeta`] avoids those.
pub fn zeta_eta_route(s: ComplexValue) -> Result<ComplexValue> {
    check_zeta_pole(s)?;
    Ok(eta(s)? / eta_factor(s))
}

/// `zeta(s) = 2^s pi^{s-1} sin(pi s / 2) Gamma(1-s) zeta(1-s)` with the
/// right side from [`zeta_eta_route`].
pub fn zeta_reflection_route(s: ComplexValue) -> Result<ComplexValue> {
    check_zeta_pole(s)?;
    let t = cx::ONE - s;
    let factor =
        cx::pow_real_base(2.0, s) * cx::pow_real_base(PI, s - 1.0) * (s * (0.5 * PI)).sin();
    if factor == cx::ZERO {
        return Ok(cx::ZERO);
    }
    Ok(factor * gamma(t)? * zeta_eta_route(t)?)
}

/// Riemann zeta.
///
/// `Re s >= 0`: accelerated eta series, or Euler-Maclaurin next to the zeros
/// of `1 - 2^{1-s}`. `Re s < 0`: functional equation.
pub fn zeta(s: ComplexValue) -> Result<ComplexValue> {
    check_zeta_pole(s)?;
    if s.re >= 0.0 {
        if eta_factor(s).norm() < 0.05 && (s - cx::ONE).norm() > 0.05 {
            return hurwitz_zeta(s, 1.0);
        }
        zeta_eta_route(s)
    } else {
        zeta_reflection_route(s)
    }
}

/// Number of directly summed terms in the Euler-Maclaurin evaluation.
pub const HURWITZ_SHIFT: usize = 25;
/// Number of Bernoulli correction terms.
pub const HURWITZ_ORDER: usize = 12;

/// Hurwitz zeta `sum_{k>=0} (k + a)^{-s}` for `a > 0` by Euler-Maclaurin.
pub fn hurwitz_zeta(s: ComplexValue, a: f64) -> Result<ComplexValue> {
    check_zeta_pole(s)?;
    if !(a > 0.0) || !a.is_finite() {
        return Err(Error::Domain(format!("hurwitz_zeta needs a > 0, got {a}")));
    }
    let m = HURWITZ_SHIFT + s.norm().ceil() as usize;
    let mut sum = CompensatedSum::new();
    for k in 0..m {
        sum.add((-s * (k as f64 + a).ln()).exp());
    }
    let big = m as f64 + a;
    let ln_big = big.ln();
    let pow_neg_s = (-s * ln_big).exp();
    sum.add(pow_neg_s * big / (s - 1.0));
    sum.add(pow_neg_s * 0.5);

    let coeffs = b2k_over_factorial();
    let inv_big2 = 1.0 / (big * big);
    // (s)_{2j-1} big^{-s-2j+1}
    let mut poch = s;
    let mut power = pow_neg_s / big;
    for (j, coeff) in coeffs.iter().take(HURWITZ_ORDER).enumerate() {
        sum.add(poch * power * *coeff);
        let base = s + (2 * j + 1) as f64;
        poch *= base * (base + 1.0);
        power *= inv_big2;
    }
    Ok(sum.value())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn special_values() {
        assert!(rel(zeta(cx::real(2.0)).unwrap(), cx::real(PI * PI / 6.0)) < 1e-14);
        assert!((zeta(cx::ZERO).unwrap() - cx::real(-0.5)).norm() < 1e-14);
        assert!((zeta(cx::real(-1.0)).unwrap() - cx::real(-1.0 / 12.0)).norm() < 1e-14);
        assert!((eta(cx::ONE).unwrap().re - LN_2).abs() < 1e-15);
    }

    #[test]
    fn pole_at_one() {
        assert!(matches!(zeta(cx::ONE), Err(Error::Pole(_))));
        assert!(matches!(hurwitz_zeta(cx::ONE, 0.5), Err(Error::Pole(_))));
    }

    #[test]
    fn values_against_mpmath() {
        let cases = [
            (
                c(0.5, 30.0),
                c(-0.120_642_287_590_043_7, -0.583_691_214_763_706_29),
            ),
            (
                c(0.5, 14.0),
                c(0.022_241_142_609_993_589, -0.103_258_123_266_450_06),
            ),
            (
                c(-5.0, 3.0),
                c(-0.094_993_880_747_888_371, -0.026_534_735_139_453_046),
            ),
            (
                c(1.0, 9.064_720_283_654_388),
                c(1.346_579_542_836_317_1, 0.109_883_136_796_269_5),
            ),
            (
                c(2.5, -20.0),
                c(0.967_573_451_295_827_23, 0.193_722_895_275_806_15),
            ),
            (c(0.5, 0.0), c(-1.460_354_508_809_586_8, 0.0)),
        ];
        for (s, want) in cases {
            let got = zeta(s).unwrap();
            assert!(rel(got, want) < 1e-11, "zeta({s}) = {got}, want {want}");
        }
    }

    #[test]
    fn hurwitz_against_mpmath() {
        let cases = [
            (
                c(-1.5, 2.0),
                0.25,
                c(-0.064_343_223_760_079_038, -0.141_267_293_153_175_69),
            ),
            (
                c(3.0, 1.0),
                0.9,
                c(1.495_719_991_004_239_6, -0.016_558_575_957_141_501),
            ),
            (c(-0.5, 0.0), 0.5, c(0.060_888_465_580_594_92, 0.0)),
            (
                c(0.5, 5.0),
                0.3,
                c(1.969_563_921_242_412_1, -0.957_707_171_287_694_12),
            ),
        ];
        for (s, a, want) in cases {
            let got = hurwitz_zeta(s, a).unwrap();
            assert!(
                rel(got, want) < 1e-10,
                "zeta({s}, {a}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn hurwitz_special_values() {
        let z2 = hurwitz_zeta(cx::real(2.0), 1.0).unwrap();
        assert!(rel(z2, cx::real(PI * PI / 6.0)) < 1e-13);
        let half = hurwitz_zeta(cx::real(2.0), 0.5).unwrap();
        assert!(rel(half, cx::real(PI * PI / 2.0)) < 1e-13);
        // -B_2(1/4) / 2 with B_2(x) = x^2 - x + 1/6
        let b2 = 1.0 / 16.0 - 0.25 + 1.0 / 6.0;
        let v = hurwitz_zeta(cx::real(-1.0), 0.25).unwrap();
        assert!((v.re + b2 / 2.0).abs() < 1e-13, "{v}");
    }

    #[test]
    fn hurwitz_rejects_non_positive_a() {
        assert!(matches!(
            hurwitz_zeta(cx::real(2.0), 0.0),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            hurwitz_zeta(cx::real(2.0), -0.5),
            Err(Error::Domain(_))
        ));
    }
}
