//! `expsub-audit`: representation-versus-oracle audits from the command line.
//!
//! Exit codes: 0 when every residual is within tolerance, 2 on a closure
//! failure, 3 on a configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use expsub::audit::{
    self, default_config, emit_report, run_audit, sweep_afe, AuditOutcome, Axis, Destination,
    Format, FunctionId, SweepConfig,
};
use expsub::hyper_reps::blackbody_fraction;
use expsub::{ComplexValue, Error};

const CLOSURE_FAILURE: u8 = 2;
const CONFIG_ERROR: u8 = 3;

#[derive(Parser)]
#[command(
    name = "expsub-audit",
    version,
    about = "Audit exp-substitution representations against oracles"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one parameter point.
    Eval {
        function_id: String,
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Run a function's grid (`all` runs every default grid).
    Audit {
        function_id: String,
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Fit the error decay of the approximate functional equation.
    SweepAfe {
        #[command(flatten)]
        params: ParamFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Fraction of blackbody energy below x = h nu / kT.
    Blackbody {
        #[arg(long)]
        x: f64,
    },
    /// Every default grid.
    All {
        #[command(flatten)]
        output: OutputFlags,
    },
}

/// One flag per symbol; comma-separated lists make grid axes.
#[derive(Args, Default)]
struct ParamFlags {
    #[arg(long = "s-re", value_delimiter = ',', allow_negative_numbers = true)]
    s_re: Vec<f64>,
    #[arg(long = "s-im", value_delimiter = ',', allow_negative_numbers = true)]
    s_im: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    a: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    b: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    c: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    x: Vec<f64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    y: Vec<f64>,
    #[arg(long = "z-re", value_delimiter = ',', allow_negative_numbers = true)]
    z_re: Vec<f64>,
    #[arg(long = "z-im", value_delimiter = ',', allow_negative_numbers = true)]
    z_im: Vec<f64>,
    /// Winding number of the contour.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    n: Vec<i32>,
    /// Contour width parameter of the zeta identities.
    #[arg(long = "N", value_delimiter = ',')]
    big_n: Vec<u32>,
    /// Integration tolerance [default: 1e-10, or the grid's own tolerance].
    #[arg(long)]
    tol: Option<f64>,
}

#[derive(Args)]
struct OutputFlags {
    #[arg(long, default_value = "csv")]
    format: String,
    /// Output file (standard output when omitted).
    #[arg(long)]
    out: Option<PathBuf>,
    /// Write 0 in the elapsed_ms column.
    #[arg(long)]
    no_timing: bool,
}

fn complex_axis(name: &str, re: &[f64], im: &[f64]) -> Result<Option<Axis>, Error> {
    if re.is_empty() && im.is_empty() {
        return Ok(None);
    }
    if re.is_empty() {
        return Err(Error::Config(format!("--{name}-im needs --{name}-re")));
    }
    let im = if im.is_empty() { &[0.0][..] } else { im };
    let values: Vec<ComplexValue> = re
        .iter()
        .flat_map(|&r| im.iter().map(move |&i| ComplexValue::new(r, i)))
        .collect();
    Ok(Some(Axis::complex(name, &values)))
}

impl ParamFlags {
    fn apply(&self, config: &mut SweepConfig) -> Result<(), Error> {
        let mut axes = Vec::new();
        axes.extend(complex_axis("s", &self.s_re, &self.s_im)?);
        axes.extend(complex_axis("z", &self.z_re, &self.z_im)?);
        for (name, values) in [
            ("a", &self.a),
            ("b", &self.b),
            ("c", &self.c),
            ("x", &self.x),
            ("y", &self.y),
        ] {
            if !values.is_empty() {
                axes.push(Axis::real(name, values));
            }
        }
        if !self.n.is_empty() {
            let n: Vec<f64> = self.n.iter().map(|&v| f64::from(v)).collect();
            axes.push(Axis::real("n", &n));
        }
        if !self.big_n.is_empty() {
            let n: Vec<f64> = self.big_n.iter().map(|&v| f64::from(v)).collect();
            axes.push(Axis::real("N", &n));
        }
        for axis in axes {
            config.override_axis(axis);
        }
        if let Some(tol) = self.tol {
            config.tol = tol;
        }
        config.validate()
    }
}

impl OutputFlags {
    fn destination(&self) -> Destination {
        self.out
            .clone()
            .map_or(Destination::Stdout, Destination::Path)
    }
}

fn summarize(outcome: &AuditOutcome) {
    let failing = outcome.records.iter().filter(|r| !r.passed()).count();
    eprintln!(
        "{} records, {} failing, {} skipped, {} failed to evaluate",
        outcome.records.len(),
        failing,
        outcome.skipped.len(),
        outcome.failed.len()
    );
    for f in &outcome.failed {
        eprintln!("failed: {} {}", f.function_id, f.error);
    }
}

fn report(outcome: &AuditOutcome, output: &OutputFlags) -> Result<u8, Error> {
    let format: Format = output.format.parse()?;
    summarize(outcome);
    if !outcome.records.is_empty() {
        emit_report(&outcome.records, format, &output.destination())?;
    }
    Ok(if outcome.all_passed() {
        0
    } else {
        CLOSURE_FAILURE
    })
}

fn run_grid(
    function_id: &str,
    params: &ParamFlags,
    output: &OutputFlags,
    single: bool,
) -> Result<u8, Error> {
    if function_id == "all" && !single {
        output.format.parse::<Format>()?;
        return report(&audit::run_all(!output.no_timing)?, output);
    }
    let id: FunctionId = function_id.parse()?;
    let mut config = default_config(id);
    config.timing = !output.no_timing;
    params.apply(&mut config)?;
    if single && config.points().len() != 1 {
        return Err(Error::Config(format!(
            "eval needs exactly one point, the flags give {}",
            config.points().len()
        )));
    }
    report(&run_audit(&config)?, output)
}

fn run(cli: Cli) -> Result<u8, Error> {
    match cli.command {
        Command::Eval {
            function_id,
            params,
            output,
        } => run_grid(&function_id, &params, &output, true),
        Command::Audit {
            function_id,
            params,
            output,
        } => run_grid(&function_id, &params, &output, false),
        Command::All { output } => run_grid("all", &ParamFlags::default(), &output, false),
        Command::SweepAfe { params, output } => {
            let s = complex_axis("s", &params.s_re, &params.s_im)?
                .map_or(ComplexValue::new(0.6, 0.0), |a| a.values[0][0]);
            let xs = if params.x.is_empty() {
                vec![20.0, 40.0, 80.0, 160.0, 320.0]
            } else {
                params.x.clone()
            };
            let sweep = sweep_afe(s, &xs, !output.no_timing)?;
            match (&sweep.fit, &sweep.warning) {
                (Some(fit), _) => eprintln!(
                    "fit: exponent {:.6} constant {:.6e}",
                    fit.exponent, fit.constant
                ),
                (None, Some(w)) => eprintln!("warning: {w}"),
                (None, None) => {}
            }
            report(&sweep.outcome, &output)
        }
        Command::Blackbody { x } => {
            println!("{:.16e}", blackbody_fraction(x)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(CONFIG_ERROR);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_precondition() || matches!(e, Error::Config(_) | Error::Io(_)) {
                ExitCode::from(CONFIG_ERROR)
            } else {
                ExitCode::from(CLOSURE_FAILURE)
            }
        }
    }
}
