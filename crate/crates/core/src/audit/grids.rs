//! Compiled-in default grids, one per function id.
//!
//! | id | grid | tol |
//! |---|---|---|
//! | `zeta_eq5` | `s = sigma + it`, sigma in {0.5, 1, 2, 3}, t in {0, 3, 10} | 1e-14 |
//! | `zeta_eq7a`, `zeta_eq7b` | sigma in {0.3, 0.5, 0.7}, t in {0, 1, 3}, N = 4 | 1e-12 |
//! | `afe_thm1` | s in {0.6, 0.6+5i}, x in {20, 40, 80, 160, 320} | - |
//! | `hurwitz_eq13` | s in {-0.5, -1.5, -0.5+2i}, a in {0.25, 0.5, 0.9}, 10^5 terms | - |
//! | `igamma_*` | s in {0.5, 1.7, 2.3+1.1i}, x in {0.5, 2, 10}, n in {1, 2, 3} | 1e-12 |
//! | `phi_*` | a in {0.3, 0.7, 0.3+0.2i}, c in {1.9, 2.6}, x in {-2, 0.5, 3}, n in {1, 2} | 1e-12 |
//! | `beta_*` | x in {0.3, 0.45, 0.4+0.1i}, y in {0.8, 1.2, 2.5}, plus (1/2, 1); n in {1, 2, 3} | 1e-12 |
//! | `f_*` | (a, b, c) in {(0.5, 0.3, 1.7), (1.2, 0.4, 2.1), (0.8, 0.45, 1.6)}, z in {0.3, -0.5, 0.2+0.1i} | 1e-12 |
//! | `izeta` | s in {2, 3, 4, 2.5+i}, x in {0, 0.1, 1, 5, 20, 50} | 1e-10 |
//! | `blackbody` | x in {0, 0.5, ..., 50} | - |
//! | `bound_eq11` | N in {1..20}, 10^4 samples of y in [0, pi/2] | - |
//! | `bound_eq12` | s in {0.5, 0.5+2i}, N in {5, 10, 20} | - |

use super::{Axis, FunctionId, SweepConfig};
use crate::ComplexValue;

/// Tolerance used when a function has no entry of its own.
pub const DEFAULT_TOL: f64 = 1e-10;

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn strip(sigmas: &[f64], ts: &[f64]) -> Vec<ComplexValue> {
    sigmas
        .iter()
        .flat_map(|&s| ts.iter().map(move |&t| c(s, t)))
        .collect()
}

fn config(function_id: FunctionId, axes: Vec<Axis>, tol: f64) -> SweepConfig {
    SweepConfig {
        function_id,
        axes,
        tol,
        timing: true,
    }
}

/// The grid `audit <id>` runs without further flags.
pub fn default_config(id: FunctionId) -> SweepConfig {
    let s_igamma = [c(0.5, 0.0), c(1.7, 0.0), c(2.3, 1.1)];
    let a_phi = [c(0.3, 0.0), c(0.7, 0.0), c(0.3, 0.2)];
    match id {
        FunctionId::ZetaEq5 => config(
            id,
            vec![Axis::complex(
                "s",
                &strip(&[0.5, 1.0, 2.0, 3.0], &[0.0, 3.0, 10.0]),
            )],
            1e-14,
        ),
        FunctionId::ZetaEq7a | FunctionId::ZetaEq7b => config(
            id,
            vec![
                Axis::complex("s", &strip(&[0.3, 0.5, 0.7], &[0.0, 1.0, 3.0])),
                Axis::real("N", &[4.0]),
            ],
            1e-12,
        ),
        FunctionId::AfeThm1 => config(
            id,
            vec![
                Axis::complex("s", &[c(0.6, 0.0), c(0.6, 5.0)]),
                Axis::real("x", &[20.0, 40.0, 80.0, 160.0, 320.0]),
            ],
            DEFAULT_TOL,
        ),
        FunctionId::HurwitzEq13 => config(
            id,
            vec![
                Axis::complex("s", &[c(-0.5, 0.0), c(-1.5, 0.0), c(-0.5, 2.0)]),
                Axis::real("a", &[0.25, 0.5, 0.9]),
                Axis::real("terms", &[1e5]),
            ],
            DEFAULT_TOL,
        ),
        FunctionId::IgammaEq14 | FunctionId::IgammaEq15_16 => config(
            id,
            vec![
                Axis::complex("s", &s_igamma),
                Axis::real("x", &[0.5, 2.0, 10.0]),
                Axis::real("n", &[1.0, 2.0, 3.0]),
            ],
            1e-12,
        ),
        FunctionId::PhiEq19_20 | FunctionId::PhiEq21 => config(
            id,
            vec![
                Axis::complex("a", &a_phi),
                Axis::real("c", &[1.9, 2.6]),
                Axis::real("x", &[-2.0, 0.5, 3.0]),
                Axis::real("n", &[1.0, 2.0]),
            ],
            1e-12,
        ),
        FunctionId::BetaEq23 | FunctionId::BetaEq25 => {
            let mut pairs = Vec::new();
            for x in [c(0.3, 0.0), c(0.45, 0.0), c(0.4, 0.1)] {
                for y in [0.8, 1.2, 2.5] {
                    pairs.push(vec![x, c(y, 0.0)]);
                }
            }
            pairs.push(vec![c(0.5, 0.0), c(1.0, 0.0)]);
            config(
                id,
                vec![
                    Axis {
                        names: vec!["x".into(), "y".into()],
                        values: pairs,
                    },
                    Axis::real("n", &[1.0, 2.0, 3.0]),
                ],
                1e-12,
            )
        }
        FunctionId::FEq26 | FunctionId::FEq27 => config(
            id,
            vec![
                Axis::joint(
                    &["a", "b", "c"],
                    &[&[0.5, 0.3, 1.7], &[1.2, 0.4, 2.1], &[0.8, 0.45, 1.6]],
                ),
                Axis::complex("z", &[c(0.3, 0.0), c(-0.5, 0.0), c(0.2, 0.1)]),
            ],
            1e-12,
        ),
        FunctionId::Izeta => config(
            id,
            vec![
                Axis::complex("s", &[c(2.0, 0.0), c(3.0, 0.0), c(4.0, 0.0), c(2.5, 1.0)]),
                Axis::real("x", &[0.0, 0.1, 1.0, 5.0, 20.0, 50.0]),
            ],
            1e-10,
        ),
        FunctionId::Blackbody => {
            let xs: Vec<f64> = (0..=100).map(|k| 0.5 * k as f64).collect();
            config(id, vec![Axis::real("x", &xs)], DEFAULT_TOL)
        }
        FunctionId::BoundEq11 => {
            let ns: Vec<f64> = (1..=20).map(f64::from).collect();
            config(
                id,
                vec![Axis::real("N", &ns), Axis::real("samples", &[1e4])],
                DEFAULT_TOL,
            )
        }
        FunctionId::BoundEq12 => config(
            id,
            vec![
                Axis::complex("s", &[c(0.5, 0.0), c(0.5, 2.0)]),
                Axis::real("N", &[5.0, 10.0, 20.0]),
            ],
            DEFAULT_TOL,
        ),
    }
}
