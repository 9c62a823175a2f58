//! `(1 - 2^{1-s}) Gamma(s) zeta(s)` as an integral over the real line.

use expsub::zeta_reps::zeta_exp_integral;
use expsub::ComplexValue;

fn main() -> expsub::Result<()> {
    for s in [
        ComplexValue::new(1.0, 0.0),
        ComplexValue::new(2.0, 0.0),
        ComplexValue::new(0.5, 10.0),
    ] {
        let r = zeta_exp_integral(s, 1e-14)?;
        println!(
            "s = {s:<8} integral {:.14}  oracle {:.14}  rel {:.1e}",
            r.rhs,
            r.lhs,
            r.relative()
        );
    }
    Ok(())
}
