//! A small audit grid written as CSV to standard output.

use expsub::audit::{emit_report, run_audit, Axis, Destination, Format, FunctionId, SweepConfig};
use expsub::ComplexValue;

fn main() -> expsub::Result<()> {
    let config = SweepConfig {
        function_id: FunctionId::BetaEq25,
        axes: vec![
            Axis::complex(
                "x",
                &[ComplexValue::new(0.3, 0.0), ComplexValue::new(0.4, 0.1)],
            ),
            Axis::real("y", &[0.8, 2.5]),
            Axis::real("n", &[1.0, 2.0]),
        ],
        tol: 1e-12,
        timing: false,
    };
    let outcome = run_audit(&config)?;
    emit_report(&outcome.records, Format::Csv, &Destination::Stdout)?;
    let failing = outcome.records.iter().filter(|r| !r.passed()).count();
    eprintln!(
        "{failing} of {} rows miss the tolerance (even winding on the symmetric contour)",
        outcome.records.len()
    );
    Ok(())
}
