//! CSV and JSON reports.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use super::ComparisonRecord;
use crate::error::{Error, Result};

pub const CSV_HEADER: &str =
    "function_id,params,rep_re,rep_im,oracle_re,oracle_im,abs_err,rel_err,phase_corrected,quad_evals,elapsed_ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(Error::Config(format!("unknown format `{s}` (csv or json)"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Destination {
    Stdout,
    Path(PathBuf),
}

fn csv(records: &[ComparisonRecord]) -> String {
    let mut out = String::with_capacity(160 * (records.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in records {
        let params: Vec<String> = r.params.iter().map(|p| p.to_string()).collect();
        let _ = writeln!(
            out,
            "{},{},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{:.16e},{},{},{:.16e}",
            r.function_id,
            params.join(";"),
            r.rep_value.re,
            r.rep_value.im,
            r.oracle_value.re,
            r.oracle_value.im,
            r.abs_err,
            r.rel_err,
            u8::from(r.phase_corrected()),
            r.quad_evals,
            r.elapsed_ms,
        );
    }
    out
}

/// The report as a string.
pub fn render_report(records: &[ComparisonRecord], format: Format) -> Result<String> {
    if records.is_empty() {
        return Err(Error::Config("no records to report".into()));
    }
    match format {
        Format::Csv => Ok(csv(records)),
        Format::Json => {
            let mut s =
                serde_json::to_string_pretty(records).map_err(|e| Error::Io(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
    }
}

/// Writes the report to a file or standard output.
pub fn emit_report(
    records: &[ComparisonRecord],
    format: Format,
    destination: &Destination,
) -> Result<()> {
    let text = render_report(records, format)?;
    match destination {
        Destination::Stdout => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
        Destination::Path(p) => {
            std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?
        }
    }
    Ok(())
}
