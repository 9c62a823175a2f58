//! The incomplete Riemann zeta function and the blackbody energy fraction.

use expsub::hyper_reps::{blackbody_fraction, incomplete_zeta_dual};
use expsub::ComplexValue;

fn main() -> expsub::Result<()> {
    for x in [0.1, 1.0, 5.0, 20.0] {
        let d = incomplete_zeta_dual(ComplexValue::new(4.0, 0.0), x, 1e-10)?;
        println!(
            "zeta~(4, {x:>4}) = {:.14}  routes differ by {:.1e}",
            d.quadrature.re,
            (d.quadrature - d.series).norm()
        );
    }
    for x in [1.0, 2.821, 5.0, 10.0, 50.0] {
        println!("fraction below x = {x:>6}: {:.10}", blackbody_fraction(x)?);
    }
    Ok(())
}
