//! Representation-versus-oracle audits over parameter grids, the error
//! scaling sweep of the approximate functional equation, and CSV/JSON
//! reports.

mod corpus;
mod eval;
mod grids;
mod report;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hyper_reps::AuditedPhase;
use crate::ComplexValue;

pub use corpus::{quadrature_corpus, run_corpus, CorpusCase, CorpusOutcome};
pub use grids::{default_config, DEFAULT_TOL};
pub use report::{emit_report, render_report, Destination, Format, CSV_HEADER};

/// Every audited identity, bound and cross-check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FunctionId {
    ZetaEq5,
    ZetaEq7a,
    ZetaEq7b,
    AfeThm1,
    HurwitzEq13,
    IgammaEq14,
    IgammaEq15_16,
    PhiEq19_20,
    PhiEq21,
    BetaEq23,
    BetaEq25,
    FEq26,
    FEq27,
    Izeta,
    Blackbody,
    BoundEq11,
    BoundEq12,
}

impl FunctionId {
    pub const ALL: [FunctionId; 17] = [
        FunctionId::ZetaEq5,
        FunctionId::ZetaEq7a,
        FunctionId::ZetaEq7b,
        FunctionId::AfeThm1,
        FunctionId::HurwitzEq13,
        FunctionId::IgammaEq14,
        FunctionId::IgammaEq15_16,
        FunctionId::PhiEq19_20,
        FunctionId::PhiEq21,
        FunctionId::BetaEq23,
        FunctionId::BetaEq25,
        FunctionId::FEq26,
        FunctionId::FEq27,
        FunctionId::Izeta,
        FunctionId::Blackbody,
        FunctionId::BoundEq11,
        FunctionId::BoundEq12,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            FunctionId::ZetaEq5 => "zeta_eq5",
            FunctionId::ZetaEq7a => "zeta_eq7a",
            FunctionId::ZetaEq7b => "zeta_eq7b",
            FunctionId::AfeThm1 => "afe_thm1",
            FunctionId::HurwitzEq13 => "hurwitz_eq13",
            FunctionId::IgammaEq14 => "igamma_eq14",
            FunctionId::IgammaEq15_16 => "igamma_eq15_16",
            FunctionId::PhiEq19_20 => "phi_eq19_20",
            FunctionId::PhiEq21 => "phi_eq21",
            FunctionId::BetaEq23 => "beta_eq23",
            FunctionId::BetaEq25 => "beta_eq25",
            FunctionId::FEq26 => "f_eq26",
            FunctionId::FEq27 => "f_eq27",
            FunctionId::Izeta => "izeta",
            FunctionId::Blackbody => "blackbody",
            FunctionId::BoundEq11 => "bound_eq11",
            FunctionId::BoundEq12 => "bound_eq12",
        }
    }
}

impl fmt::Display for FunctionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FunctionId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FunctionId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::Config(format!("unknown function id `{s}`")))
    }
}

/// One named parameter of a grid point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Param {
    pub name: String,
    pub value: ComplexValue,
}

impl Param {
    pub fn new(name: &str, value: ComplexValue) -> Self {
        Self {
            name: name.to_string(),
            value,
        }
    }

    pub fn real(name: &str, value: f64) -> Self {
        Self::new(name, crate::cx::real(value))
    }
}

impl fmt::Display for Param {
    /// `name=re+imi`, shortest round-trip digits.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (re, im) = (self.value.re, self.value.im);
        if im < 0.0 || (im == 0.0 && im.is_sign_negative()) {
            write!(f, "{}={re:?}-{:?}i", self.name, -im)
        } else {
            write!(f, "{}={re:?}+{im:?}i", self.name)
        }
    }
}

/// Pass criterion of a record.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Check {
    /// `rel_err <= limit`.
    Relative { limit: f64 },
    /// `abs_err <= limit`.
    Absolute { limit: f64 },
    /// A pointwise inequality, evaluated when the record was made.
    Bound { holds: bool },
}

/// One (function, parameter point) audit row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ComparisonRecord {
    pub function_id: FunctionId,
    pub params: Vec<Param>,
    pub rep_value: ComplexValue,
    pub oracle_value: ComplexValue,
    pub abs_err: f64,
    pub rel_err: f64,
    pub phase_audit: Option<AuditedPhase>,
    pub quad_evals: usize,
    pub elapsed_ms: f64,
    pub check: Check,
}

impl ComparisonRecord {
    pub fn new(
        function_id: FunctionId,
        params: Vec<Param>,
        rep_value: ComplexValue,
        oracle_value: ComplexValue,
        check: Check,
    ) -> Self {
        let abs_err = (rep_value - oracle_value).norm();
        Self {
            function_id,
            params,
            rep_value,
            oracle_value,
            abs_err,
            rel_err: abs_err / oracle_value.norm().max(1e-300),
            phase_audit: None,
            quad_evals: 0,
            elapsed_ms: 0.0,
            check,
        }
    }

    pub fn passed(&self) -> bool {
        match self.check {
            Check::Relative { limit } => self.rel_err <= limit,
            Check::Absolute { limit } => self.abs_err <= limit,
            Check::Bound { holds } => holds,
        }
    }

    pub fn phase_corrected(&self) -> bool {
        self.phase_audit.is_some_and(|p| p.correction_applied)
    }

    pub fn param(&self, name: &str) -> Option<ComplexValue> {
        self.params.iter().find(|p| p.name == name).map(|p| p.value)
    }
}

/// A grid point outside the preconditions of its operation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Skipped {
    pub function_id: FunctionId,
    pub params: Vec<Param>,
    pub reason: String,
}

/// A grid point whose evaluation failed for a reason other than its
/// preconditions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Failed {
    pub function_id: FunctionId,
    pub params: Vec<Param>,
    pub error: String,
}

/// One axis of a grid. Several names make a joint axis whose entries are
/// tuples, e.g. the `(a, b, c)` triples of the Gauss audits.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Axis {
    pub names: Vec<String>,
    pub values: Vec<Vec<ComplexValue>>,
}

impl Axis {
    pub fn complex(name: &str, values: &[ComplexValue]) -> Self {
        Self {
            names: vec![name.to_string()],
            values: values.iter().map(|v| vec![*v]).collect(),
        }
    }

    pub fn real(name: &str, values: &[f64]) -> Self {
        Self {
            names: vec![name.to_string()],
            values: values.iter().map(|v| vec![crate::cx::real(*v)]).collect(),
        }
    }

    pub fn joint(names: &[&str], tuples: &[&[f64]]) -> Self {
        Self {
            names: names.iter().map(|n| n.to_string()).collect(),
            values: tuples
                .iter()
                .map(|t| t.iter().map(|v| crate::cx::real(*v)).collect())
                .collect(),
        }
    }
}

/// Grid specification of an audit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub function_id: FunctionId,
    /// Cartesian product, first axis outermost.
    pub axes: Vec<Axis>,
    pub tol: f64,
    /// Record wall-clock time per point.
    pub timing: bool,
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tol > 0.0) || !self.tol.is_finite() {
            return Err(Error::Config(format!(
                "tol must be positive, got {}",
                self.tol
            )));
        }
        for axis in &self.axes {
            if axis.values.is_empty() {
                return Err(Error::Config(format!("axis {:?} is empty", axis.names)));
            }
            if axis.values.iter().any(|t| t.len() != axis.names.len()) {
                return Err(Error::Config(format!(
                    "axis {:?} has ragged tuples",
                    axis.names
                )));
            }
        }
        Ok(())
    }

    /// Replaces whatever axis carries `axis`'s single name. A joint axis
    /// that loses a member is split into one axis per remaining name, each
    /// holding that name's distinct values.
    pub fn override_axis(&mut self, axis: Axis) {
        let name = axis.names[0].clone();
        let Some(i) = self.axes.iter().position(|a| a.names.contains(&name)) else {
            self.axes.push(axis);
            return;
        };
        let old = self.axes.remove(i);
        let mut replacement = Vec::new();
        for (k, other) in old.names.iter().enumerate() {
            if *other == name {
                replacement.push(axis.clone());
                continue;
            }
            let mut values: Vec<ComplexValue> = Vec::new();
            for tuple in &old.values {
                if !values.contains(&tuple[k]) {
                    values.push(tuple[k]);
                }
            }
            replacement.push(Axis::complex(other, &values));
        }
        self.axes.splice(i..i, replacement);
    }

    /// Grid points in lexicographic order of the axis indices.
    pub fn points(&self) -> Vec<Vec<Param>> {
        let mut points = vec![Vec::new()];
        for axis in &self.axes {
            let mut next = Vec::with_capacity(points.len() * axis.values.len());
            for p in &points {
                for tuple in &axis.values {
                    let mut q: Vec<Param> = p.clone();
                    q.extend(axis.names.iter().zip(tuple).map(|(n, v)| Param::new(n, *v)));
                    next.push(q);
                }
            }
            points = next;
        }
        points
    }
}

/// Records in grid order, plus the points that were skipped or failed.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct AuditOutcome {
    pub records: Vec<ComparisonRecord>,
    pub skipped: Vec<Skipped>,
    pub failed: Vec<Failed>,
}

impl AuditOutcome {
    /// True when every record passes and no evaluation failed.
    pub fn all_passed(&self) -> bool {
        self.failed.is_empty() && self.records.iter().all(ComparisonRecord::passed)
    }

    pub fn extend(&mut self, other: AuditOutcome) {
        self.records.extend(other.records);
        self.skipped.extend(other.skipped);
        self.failed.extend(other.failed);
    }
}

fn pool() -> Result<rayon::ThreadPool> {
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Ok(v) = std::env::var("THREADS") {
        let n: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::Config(format!("THREADS must be a positive integer, got `{v}`")))?;
        if n == 0 {
            return Err(Error::Config("THREADS must be positive".into()));
        }
        builder = builder.num_threads(n);
    }
    builder.build().map_err(|e| Error::Config(e.to_string()))
}

enum PointResult {
    Record(ComparisonRecord),
    Skipped(Skipped),
    Failed(Failed),
}

fn run_point(config: &SweepConfig, params: Vec<Param>) -> PointResult {
    let start = Instant::now();
    match eval::evaluate(config.function_id, &params, config.tol) {
        Ok(mut record) => {
            record.params = params;
            if config.timing {
                record.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
            }
            PointResult::Record(record)
        }
        Err(e) if e.is_precondition() => PointResult::Skipped(Skipped {
            function_id: config.function_id,
            params,
            reason: e.to_string(),
        }),
        Err(e) => PointResult::Failed(Failed {
            function_id: config.function_id,
            params,
            error: e.to_string(),
        }),
    }
}

/// Evaluates every grid point, in parallel, and returns the records in grid
/// order. Points outside an operation's preconditions become skipped rows;
/// a grid with no admissible point is a configuration error.
pub fn run_audit(config: &SweepConfig) -> Result<AuditOutcome> {
    config.validate()?;
    eval::check_axes(config)?;
    let points = config.points();
    let results: Vec<PointResult> = pool()?.install(|| {
        points
            .into_par_iter()
            .map(|p| run_point(config, p))
            .collect()
    });
    let mut out = AuditOutcome::default();
    for r in results {
        match r {
            PointResult::Record(r) => out.records.push(r),
            PointResult::Skipped(s) => out.skipped.push(s),
            PointResult::Failed(f) => out.failed.push(f),
        }
    }
    if out.records.is_empty() && out.failed.is_empty() {
        let reason = out.skipped.first().map_or("", |s| s.reason.as_str());
        return Err(Error::Config(format!(
            "every point of the {} grid was skipped ({reason})",
            config.function_id
        )));
    }
    Ok(out)
}

/// Default grids of every function, in [`FunctionId::ALL`] order.
pub fn run_all(timing: bool) -> Result<AuditOutcome> {
    let mut out = AuditOutcome::default();
    for id in FunctionId::ALL {
        let mut config = default_config(id);
        config.timing = timing;
        out.extend(run_audit(&config)?);
    }
    Ok(out)
}

/// Least-squares fit `residual ~ constant * x^{-exponent}`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AfeFit {
    pub exponent: f64,
    pub constant: f64,
}

/// Records of an error-scaling sweep and the fitted power law.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AfeSweep {
    pub outcome: AuditOutcome,
    /// `None` when fewer than two residuals are usable.
    pub fit: Option<AfeFit>,
    pub warning: Option<String>,
}

/// Residuals below this are treated as quadrature noise by the fit.
pub const FIT_FLOOR: f64 = 1e-12;

/// Log-log least squares of `ys` against `xs`: `(slope, intercept)`.
fn log_log_fit(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let lx: Vec<f64> = xs.iter().map(|x| x.ln()).collect();
    let ly: Vec<f64> = ys.iter().map(|y| y.ln()).collect();
    let mx = lx.iter().sum::<f64>() / n;
    let my = ly.iter().sum::<f64>() / n;
    let sxy: f64 = lx.iter().zip(&ly).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = lx.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = sxy / sxx;
    (slope, my - slope * mx)
}

/// Runs [`crate::zeta_reps::approx_functional_equation`] over `x_grid` and
/// fits `|residual| ~ K x^{-p}`.
pub fn sweep_afe(s: ComplexValue, x_grid: &[f64], timing: bool) -> Result<AfeSweep> {
    let config = SweepConfig {
        function_id: FunctionId::AfeThm1,
        axes: vec![Axis::complex("s", &[s]), Axis::real("x", x_grid)],
        tol: 1e-10,
        timing,
    };
    let outcome = run_audit(&config)?;
    let mut xs = Vec::new();
    let mut ys = Vec::new();
    let mut floor_hit = false;
    for r in &outcome.records {
        let x = r.param("x").map(|v| v.re).unwrap_or(f64::NAN);
        if r.abs_err < FIT_FLOOR {
            floor_hit = true;
        } else {
            xs.push(x);
            ys.push(r.abs_err);
        }
    }
    let (fit, warning) = if floor_hit {
        (
            None,
            Some(format!(
                "residuals below {FIT_FLOOR:e} are at the noise floor; fit is degenerate"
            )),
        )
    } else if xs.len() < 2 {
        (
            None,
            Some("fewer than two admissible grid points; no fit".to_string()),
        )
    } else {
        let (slope, intercept) = log_log_fit(&xs, &ys);
        (
            Some(AfeFit {
                exponent: -slope,
                constant: intercept.exp(),
            }),
            None,
        )
    };
    Ok(AfeSweep {
        outcome,
        fit,
        warning,
    })
}
