//! Both contour representations of the lower incomplete gamma function.

use expsub::hyper_reps::{
    incomplete_gamma_closed, incomplete_gamma_symmetric, incomplete_gamma_symmetric_sheet,
};
use expsub::ComplexValue;

fn main() -> expsub::Result<()> {
    let s = ComplexValue::new(0.5, 0.0);
    let x = ComplexValue::new(2.0, 0.0);
    let r = incomplete_gamma_symmetric(s, x, 1, 1e-12)?;
    println!("gamma(1/2, 2) = {:.12} (sqrt(pi) erf(sqrt 2))", r.rhs.re);

    let s = ComplexValue::new(2.3, 1.1);
    for n in [1, 2, 3] {
        let closed = incomplete_gamma_closed(s, x, n, 1e-12)?;
        let sym = incomplete_gamma_symmetric(s, x, n, 1e-12)?;
        let sheet = incomplete_gamma_symmetric_sheet(s, x, n, 1e-12)?;
        println!(
            "n = {n}: closed rel {:.1e}  symmetric rel {:.1e}  symmetric vs enclosed integral rel {:.1e}",
            closed.relative(),
            sym.relative(),
            sheet.relative()
        );
    }
    Ok(())
}
