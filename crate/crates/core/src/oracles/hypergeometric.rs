use crate::cx::{self, CompensatedSum};
use crate::error::{Error, Result};
use crate::ComplexValue;

const MAX_TERMS: usize = 100_000;
const SERIES_EPS: f64 = 1e-17;

fn non_positive_integer(z: ComplexValue) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

fn check_finite(values: &[ComplexValue], what: &str) -> Result<()> {
    if values.iter().all(|v| cx::is_finite(*v)) {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what}: non-finite argument")))
    }
}

/// Sums a hypergeometric-type series given the ratio of consecutive terms.
/// Stops after two consecutive negligible terms past `min_terms`.
fn ratio_series<R>(ratio: R, min_terms: usize, what: &str) -> Result<ComplexValue>
where
    R: Fn(usize) -> ComplexValue,
{
    let mut term = cx::ONE;
    let mut sum = CompensatedSum::new();
    sum.add(term);
    let mut quiet = 0;
    for k in 0..MAX_TERMS {
        term *= ratio(k);
        sum.add(term);
        if term.norm() <= SERIES_EPS * sum.value().norm() {
            quiet += 1;
            if quiet >= 2 && k >= min_terms {
                return Ok(sum.value());
            }
        } else {
            quiet = 0;
        }
        if !cx::is_finite(term) {
            break;
        }
    }
    Err(Error::Accuracy {
        what: what.into(),
        partial: sum.value(),
    })
}

/// The defining Kummer series `sum (a)_k x^k / ((c)_k k!)`, summed as is.
pub fn kummer_series(a: ComplexValue, c: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    check_finite(&[a, c, x], "kummer_series")?;
    if non_positive_integer(c) {
        return Err(Error::Domain(format!(
            "kummer: c = {c} is a non-positive integer"
        )));
    }
    ratio_series(
        |k| {
            let k = k as f64;
            (a + k) * x / ((c + k) * (k + 1.0))
        },
        x.norm().ceil() as usize,
        "kummer series",
    )
}

/// Confluent hypergeometric `Phi(a, c; x) = 1F1(a; c; x)`.
///
/// For `Re x < 0` the series alternates and cancels, so Kummer's
/// transformation `Phi(a, c; x) = e^x Phi(c - a, c; -x)` is applied first.
pub fn kummer_phi(a: ComplexValue, c: ComplexValue, x: ComplexValue) -> Result<ComplexValue> {
    if x.re < 0.0 {
        return Ok(x.exp() * kummer_series(c - a, c, -x)?);
    }
    kummer_series(a, c, x)
}

/// Gauss hypergeometric `F(a, b; c; z)` by its power series, `|z| < 1`.
pub fn gauss_f(
    a: ComplexValue,
    b: ComplexValue,
    c: ComplexValue,
    z: ComplexValue,
) -> Result<ComplexValue> {
    check_finite(&[a, b, c, z], "gauss_f")?;
    if z.norm() >= 1.0 {
        return Err(Error::Domain(format!(
            "gauss_f series needs |z| < 1, got |z| = {}",
            z.norm()
        )));
    }
    if non_positive_integer(c) {
        return Err(Error::Domain(format!(
            "gauss_f: c = {c} is a non-positive integer"
        )));
    }
    ratio_series(
        |k| {
            let k = k as f64;
            (a + k) * (b + k) * z / ((c + k) * (k + 1.0))
        },
        (a.norm() + b.norm()).ceil() as usize,
        "gauss series",
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> ComplexValue {
        ComplexValue::new(re, im)
    }

    fn r(x: f64) -> ComplexValue {
        cx::real(x)
    }

    fn rel(a: ComplexValue, b: ComplexValue) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn kummer_closed_forms() {
        let v = kummer_phi(r(0.7), r(0.7), r(1.3)).unwrap();
        assert!(rel(v, r(1.3f64.exp())) < 1e-15);
        let v = kummer_phi(r(1.0), r(2.0), r(2.0)).unwrap();
        assert!(rel(v, r((2f64.exp() - 1.0) / 2.0)) < 1e-15);
        assert_eq!(kummer_phi(r(0.3), r(1.9), cx::ZERO).unwrap(), cx::ONE);
    }

    #[test]
    fn kummer_against_mpmath() {
        let cases = [
            (
                c(0.3, 0.2),
                r(2.6),
                r(-2.0),
                c(0.826_118_537_010_968_97, -0.104_353_683_489_798_79),
            ),
            (r(0.7), r(1.9), r(3.0), r(4.428_083_978_466_224_6)),
            (r(0.25), r(1.5), r(-20.0), r(0.460_863_991_701_613_38)),
        ];
        for (a, cc, x, want) in cases {
            let got = kummer_phi(a, cc, x).unwrap();
            assert!(
                rel(got, want) < 1e-12,
                "Phi({a}, {cc}; {x}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn kummer_pole_in_c() {
        assert!(matches!(
            kummer_phi(r(0.5), r(-2.0), r(1.0)),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn gauss_closed_forms() {
        assert_eq!(gauss_f(r(0.3), r(0.2), r(1.5), cx::ZERO).unwrap(), cx::ONE);
        let v = gauss_f(r(1.0), r(1.0), r(2.0), r(0.5)).unwrap();
        assert!(rel(v, r(-(0.5f64.ln()) / 0.5)) < 1e-14);
        let v = gauss_f(r(0.4), r(0.8), r(0.8), r(0.3)).unwrap();
        assert!(rel(v, r(0.7f64.powf(-0.4))) < 1e-14);
    }

    #[test]
    fn gauss_against_mpmath() {
        let cases = [
            (r(0.5), r(0.3), r(1.7), r(0.3), r(1.029_887_477_628_678_7)),
            (
                c(0.5, 0.2),
                r(0.45),
                r(1.8),
                c(0.2, 0.1),
                c(1.020_171_432_423_181_9, 0.025_433_259_219_404_414),
            ),
            (
                r(1.2),
                r(0.4),
                r(2.1),
                r(-0.85),
                r(0.860_156_836_316_582_64),
            ),
        ];
        for (a, b, cc, z, want) in cases {
            let got = gauss_f(a, b, cc, z).unwrap();
            assert!(
                rel(got, want) < 1e-12,
                "F({a}, {b}; {cc}; {z}) = {got}, want {want}"
            );
        }
    }

    #[test]
    fn gauss_outside_disc_is_domain_error() {
        assert!(matches!(
            gauss_f(r(0.5), r(0.5), r(1.5), r(1.0)),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            gauss_f(r(0.5), r(0.5), r(1.5), c(0.0, -1.2)),
            Err(Error::Domain(_))
        ));
    }
}
