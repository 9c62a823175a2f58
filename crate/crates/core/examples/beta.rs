//! Contour representations of the beta function, including winding 3.

use expsub::hyper_reps::{beta_closed, beta_symmetric};
use expsub::ComplexValue;

fn main() -> expsub::Result<()> {
    let half = ComplexValue::new(0.5, 0.0);
    let one = ComplexValue::new(1.0, 0.0);
    let r = beta_closed(half, one, 1, 1e-12)?;
    println!("x = 1/2, y = 1: lhs {:.12}  rhs {:.12}", r.lhs, r.rhs);

    let x = ComplexValue::new(0.4, 0.1);
    let y = ComplexValue::new(1.2, 0.0);
    for n in [1, 3, -1] {
        let closed = beta_closed(x, y, n, 1e-12)?;
        let sym = beta_symmetric(x, y, n, 1e-12)?;
        println!(
            "n = {n:>2}: closed rel {:.1e}  symmetric rel {:.1e}",
            closed.relative(),
            sym.relative()
        );
    }
    Ok(())
}
