//! Closed-form integrals for checking the quadrature engine's error
//! estimates. Reference values from mpmath at 30 digits.

use std::f64::consts::{E, FRAC_PI_4, LN_2, PI};

use serde::Serialize;

use crate::cx;
use crate::error::Result;
use crate::quadrature::{
    integrate_adaptive, integrate_bi_infinite, integrate_endpoint_algebraic, DecayProfile,
    QuadResult, RightDecay,
};
use crate::zeta_reps::eta_integrand;
use crate::ComplexValue;

pub struct CorpusCase {
    pub name: &'static str,
    pub exact: ComplexValue,
    pub run: fn(f64) -> Result<QuadResult>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusOutcome {
    pub name: &'static str,
    pub value: Option<ComplexValue>,
    pub exact: ComplexValue,
    pub err_estimate: f64,
    pub true_error: f64,
    /// `true_error <= max(err_estimate, tol)`.
    pub passed: bool,
    pub error: Option<String>,
}

fn r(x: f64) -> ComplexValue {
    cx::real(x)
}

fn gamma_profile(sigma: f64) -> DecayProfile {
    DecayProfile {
        left_rate: sigma,
        right_kind: RightDecay::DoubleExponential,
        right_rate: sigma,
    }
}

pub fn quadrature_corpus() -> Vec<CorpusCase> {
    vec![
        CorpusCase {
            name: "cubic",
            exact: r(0.25),
            run: |tol| integrate_adaptive(|x| r(x * x * x), 0.0, 1.0, tol),
        },
        CorpusCase {
            name: "sine",
            exact: r(2.0),
            run: |tol| integrate_adaptive(|x| r(x.sin()), 0.0, PI, tol),
        },
        CorpusCase {
            name: "exponential",
            exact: r(E - 1.0),
            run: |tol| integrate_adaptive(|x| r(x.exp()), 0.0, 1.0, tol),
        },
        CorpusCase {
            name: "arctan",
            exact: r(FRAC_PI_4),
            run: |tol| integrate_adaptive(|x| r(1.0 / (1.0 + x * x)), 0.0, 1.0, tol),
        },
        CorpusCase {
            name: "half_frequency",
            exact: ComplexValue::new(0.0, 4.0),
            run: |tol| integrate_adaptive(|y| cx::cis(0.5 * y), 0.0, 2.0 * PI, tol),
        },
        CorpusCase {
            name: "log",
            exact: r(-1.0),
            run: |tol| {
                integrate_endpoint_algebraic(|x| r(x.ln()), 0.0, 1.0, cx::ZERO, cx::ZERO, tol)
            },
        },
        CorpusCase {
            name: "inverse_sqrt",
            exact: r(2.0),
            run: |tol| {
                integrate_endpoint_algebraic(|x| r(x.powf(-0.5)), 0.0, 1.0, r(-0.5), cx::ZERO, tol)
            },
        },
        CorpusCase {
            name: "power_minus_0.9",
            exact: r(10.0),
            run: |tol| {
                integrate_endpoint_algebraic(|x| r(x.powf(-0.9)), 0.0, 1.0, r(-0.9), cx::ZERO, tol)
            },
        },
        CorpusCase {
            name: "beta_0.6_1.3",
            exact: r(1.389_638_059_635_963_2),
            run: |tol| {
                integrate_endpoint_algebraic(
                    |x| r(x.powf(-0.4) * (1.0 - x).powf(0.3)),
                    0.0,
                    1.0,
                    r(-0.4),
                    r(0.3),
                    tol,
                )
            },
        },
        CorpusCase {
            name: "complex_power",
            exact: ComplexValue::new(0.117_647_058_823_529_41, -0.470_588_235_294_117_65),
            run: |tol| {
                let p = ComplexValue::new(-0.5, 2.0);
                integrate_endpoint_algebraic(
                    |x| cx::pow_real_base(x, p),
                    0.0,
                    1.0,
                    p,
                    cx::ZERO,
                    tol,
                )
            },
        },
        CorpusCase {
            name: "gaussian",
            exact: r(1.772_453_850_905_516),
            run: |tol| {
                let profile = DecayProfile {
                    left_rate: 1.0,
                    right_kind: RightDecay::Exponential,
                    right_rate: 1.0,
                };
                integrate_bi_infinite(|u| r((-u * u).exp()), profile, tol)
            },
        },
        CorpusCase {
            name: "eta_integral_s2",
            exact: r(0.822_467_033_424_113_2),
            run: |tol| {
                integrate_bi_infinite(
                    |u| eta_integrand(r(2.0), u),
                    DecayProfile::exp_substituted(2.0),
                    tol,
                )
            },
        },
        CorpusCase {
            name: "eta_integral_s1",
            exact: r(LN_2),
            run: |tol| {
                integrate_bi_infinite(
                    |u| eta_integrand(r(1.0), u),
                    DecayProfile::exp_substituted(1.0),
                    tol,
                )
            },
        },
        CorpusCase {
            name: "gamma_1.5",
            exact: r(0.886_226_925_452_758),
            run: |tol| {
                integrate_bi_infinite(|u| r((1.5 * u - u.exp()).exp()), gamma_profile(1.5), tol)
            },
        },
        CorpusCase {
            name: "gamma_0.5+3i",
            exact: ComplexValue::new(0.021_445_670_552_430_646, 0.006_865_364_837_261_678),
            run: |tol| {
                let s = ComplexValue::new(0.5, 3.0);
                integrate_bi_infinite(|u| (s * u - u.exp()).exp(), gamma_profile(0.5), tol)
            },
        },
        CorpusCase {
            name: "oscillatory_cosine",
            exact: r(-0.043_664_864_860_699_73),
            run: |tol| integrate_adaptive(|x| r((20.0 * x).cos()), 0.0, 10.0, tol),
        },
        CorpusCase {
            name: "sqrt",
            exact: r(2.0 / 3.0),
            run: |tol| integrate_adaptive(|x| r(x.sqrt()), 0.0, 1.0, tol),
        },
        CorpusCase {
            name: "abs_kink",
            exact: r(1.0),
            run: |tol| integrate_adaptive(|x| r(x.abs()), -1.0, 1.0, tol),
        },
        CorpusCase {
            name: "periodic_rational",
            exact: r(3.627_598_728_468_435_7),
            run: |tol| integrate_adaptive(|t| r(1.0 / (2.0 + t.cos())), 0.0, 2.0 * PI, tol),
        },
        CorpusCase {
            name: "narrow_peak",
            exact: r(156.079_666_010_823_14),
            run: |tol| integrate_adaptive(|x| r(1.0 / (x * x + 1e-4)), 0.0, 1.0, tol),
        },
    ]
}

/// Runs every corpus integral at `tol`.
pub fn run_corpus(tol: f64) -> Vec<CorpusOutcome> {
    quadrature_corpus()
        .into_iter()
        .map(|case| match (case.run)(tol) {
            Ok(q) => {
                let true_error = (q.value - case.exact).norm();
                CorpusOutcome {
                    name: case.name,
                    value: Some(q.value),
                    exact: case.exact,
                    err_estimate: q.err_estimate,
                    true_error,
                    passed: true_error <= q.err_estimate.max(tol),
                    error: None,
                }
            }
            Err(e) => CorpusOutcome {
                name: case.name,
                value: None,
                exact: case.exact,
                err_estimate: f64::NAN,
                true_error: f64::NAN,
                passed: false,
                error: Some(e.to_string()),
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_has_twenty_cases_and_passes() {
        assert_eq!(quadrature_corpus().len(), 20);
        for tol in [1e-8, 1e-10, 1e-12] {
            for o in run_corpus(tol) {
                assert!(o.passed, "tol {tol}: {o:?}");
            }
        }
    }
}
