//! Contour representations of Kummer's `Phi(a, c; x)` and the audited
//! leading constant of the symmetric one.

use expsub::hyper_reps::{audited_phase, kummer_closed, kummer_symmetric, Equation};
use expsub::ComplexValue;

fn main() -> expsub::Result<()> {
    let a = ComplexValue::new(0.3, 0.2);
    let c = ComplexValue::new(2.6, 0.0);
    for x in [-2.0, 0.5, 3.0] {
        let x = ComplexValue::new(x, 0.0);
        let closed = kummer_closed(a, c, x, 1, 1e-12)?;
        let sym = kummer_symmetric(a, c, x, 1, 1e-12)?;
        println!(
            "x = {:>4}: closed rel {:.1e}  symmetric rel {:.1e}",
            x.re,
            closed.relative(),
            sym.relative()
        );
    }
    let phase = audited_phase(Equation::KummerSymmetric)?;
    println!(
        "symmetric leading constant: printed {}, corrected {}, spread {:.1e}",
        phase.printed_prefactor, phase.corrected_prefactor, phase.variation
    );
    Ok(())
}
