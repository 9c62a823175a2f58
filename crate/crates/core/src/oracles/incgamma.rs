use super::gamma::gamma;
use crate::cx::{self, CompensatedSum};
use crate::error::{Error, Result};
use crate::ComplexValue;

const MAX_TERMS: usize = 20_000;
const SERIES_EPS: f64 = 1e-17;
/// Beyond this modulus (with `Re x > 0`) the lower function is taken as the
/// complement of the continued fraction.
const COMPLEMENT_RADIUS: f64 = 40.0;

fn check_args(s: ComplexValue, x: ComplexValue, what: &str) -> Result<()> {
    if !cx::is_finite(s) || !cx::is_finite(x) {
        return Err(Error::Domain(format!("{what}: non-finite argument")));
    }
    Ok(())
}

fn non_positive_integer(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// `x^s e^{-x} sum_k x^k / (s)_{k+1}`: all terms share the sign of `x^k`, so
/// it is well conditioned for `Re x >= 0`.
fn series_positive(s: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    let mut term = s.inv();
    let mut sum = CompensatedSum::new();
    sum.add(term);
    let mut quiet = 0;
    for k in 1..MAX_TERMS {
        term *= x / (s + k as f64);
        sum.add(term);
        if term.norm() <= SERIES_EPS * sum.value().norm() {
            quiet += 1;
            if quiet >= 2 && k as f64 > x.norm() {
                return Ok(cx::pow(x, s) * (-x).exp() * sum.value());
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::Accuracy {
        what: "lower incomplete gamma series".into(),
        partial: cx::pow(x, s) * (-x).exp() * sum.value(),
    })
}

/// `x^s sum_k (-x)^k / (k! (s + k))`, for `Re x < 0` where it no longer
/// alternates.
fn series_negative(s: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    let mut sum = CompensatedSum::new();
    let mut power = cx::ONE;
    sum.add(power / s);
    let mut quiet = 0;
    for k in 1..MAX_TERMS {
        power *= -x / k as f64;
        let term = power / (s + k as f64);
        sum.add(term);
        if term.norm() <= SERIES_EPS * sum.value().norm() {
            quiet += 1;
            if quiet >= 2 && k as f64 > x.norm() {
                return Ok(cx::pow(x, s) * sum.value());
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::Accuracy {
        what: "lower incomplete gamma series".into(),
        partial: cx::pow(x, s) * sum.value(),
    })
}

/// Legendre continued fraction for `Gamma(s, x)` by the modified Lentz
/// method. Converges for `Re x > 0`, quickly once `|x| > |s|`.
fn continued_fraction(s: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    // Complex division squares moduli, so the guard stays well above 1e-300.
    let tiny = cx::real(1e-150);
    let mut b = x + 1.0 - s;
    let mut c = cx::real(1e150);
    let mut d = b.inv();
    let mut h = d;
    for i in 1..MAX_TERMS {
        let fi = i as f64;
        let an = (s - fi) * fi;
        b += 2.0;
        d = an * d + b;
        if d.norm() < 1e-150 {
            d = tiny;
        }
        c = b + an / c;
        if c.norm() < 1e-150 {
            c = tiny;
        }
        d = d.inv();
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            return Ok((-x).exp() * cx::pow(x, s) * h);
        }
    }
    Err(Error::Accuracy {
        what: "upper incomplete gamma continued fraction".into(),
        partial: (-x).exp() * cx::pow(x, s) * h,
    })
}

/// Lower incomplete gamma `gamma(s, x) = int_0^x e^{-w} w^{s-1} dw`, with the
/// principal branch of `x^s`.
pub fn lower_incomplete_gamma(s: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    check_args(s, x, "lower_incomplete_gamma")?;
    if non_positive_integer(s) {
        return Err(Error::Pole(format!("gamma(s, x) at s = {}", s.re)));
    }
    if x == cx::ZERO {
        return if s.re > 0.0 {
            Ok(cx::ZERO)
        } else {
            Err(Error::Domain(format!(
                "gamma({s}, 0) diverges for Re s <= 0"
            )))
        };
    }
    if x.re > 0.0 && x.norm() > COMPLEMENT_RADIUS {
        return Ok(gamma(s)? - continued_fraction(s, x)?);
    }
    if x.re >= 0.0 {
        series_positive(s, x)
    } else {
        series_negative(s, x)
    }
}

/// Upper incomplete gamma `Gamma(s, x) = int_x^inf e^{-w} w^{s-1} dw`.
pub fn upper_incomplete_gamma(s: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    check_args(s, x, "upper_incomplete_gamma")?;
    if x.re > 0.0 && x.norm() >= s.norm() + 1.0 {
        return continued_fraction(s, x);
    }
    Ok(gamma(s)? - lower_incomplete_gamma(s, x)?)
}
