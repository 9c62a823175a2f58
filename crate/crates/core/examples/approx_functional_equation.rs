//! The midpoint sum for `(2^s - 1) zeta(s)` and the fitted decay of its error.

use expsub::audit::sweep_afe;
use expsub::zeta_reps::approx_functional_equation;
use expsub::ComplexValue;

fn main() -> expsub::Result<()> {
    let s = ComplexValue::new(0.6, 5.0);
    for x in [20.0, 40.0, 80.0, 160.0, 320.0] {
        let r = approx_functional_equation(s, x)?;
        println!(
            "x = {x:>5}: residual {:.3e}  residual * x^0.6 {:.3e}",
            r.residual,
            r.residual * x.powf(0.6)
        );
    }
    let sweep = sweep_afe(s, &[20.0, 40.0, 80.0, 160.0, 320.0], false)?;
    if let Some(fit) = sweep.fit {
        println!(
            "fitted residual ~ {:.3e} x^-{:.3}",
            fit.constant, fit.exponent
        );
    }
    Ok(())
}
