//! Contour representations of Gauss's `F(a, b; c; z)`.

use expsub::hyper_reps::{gamma_argument_ratio, gauss_f_closed, gauss_f_symmetric};
use expsub::ComplexValue;

fn main() -> expsub::Result<()> {
    let (a, b, c) = (
        ComplexValue::new(1.2, 0.0),
        ComplexValue::new(0.4, 0.0),
        ComplexValue::new(2.1, 0.0),
    );
    for z in [
        ComplexValue::new(0.3, 0.0),
        ComplexValue::new(-0.5, 0.0),
        ComplexValue::new(0.2, 0.1),
    ] {
        let closed = gauss_f_closed(a, b, c, z, 1e-12)?;
        let sym = gauss_f_symmetric(a, b, c, z, 1e-12)?;
        println!(
            "z = {z}: closed rel {:.1e}  symmetric rel {:.1e}",
            closed.relative(),
            sym.relative()
        );
    }
    println!(
        "normalization with Gamma(a) Gamma(c-a) would be off by {:.6}",
        gamma_argument_ratio(a, b, c)?
    );
    Ok(())
}
