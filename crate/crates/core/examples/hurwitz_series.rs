//! The Fourier series of `zeta(s, a)` for `Re s < 0`.

use expsub::zeta_reps::{hurwitz_formula, hurwitz_tail_bound};
use expsub::ComplexValue;

fn main() -> expsub::Result<()> {
    let s = ComplexValue::new(-1.0, 0.0);
    for terms in [10, 1_000, 100_000] {
        let r = hurwitz_formula(s, 0.25, terms)?;
        println!(
            "zeta(-1, 1/4), {terms:>6} terms: {:.12}  residual {:.1e}",
            r.rhs.re, r.residual
        );
    }
    let s = ComplexValue::new(-0.5, 2.0);
    let r = hurwitz_formula(s, 0.9, 100_000)?;
    println!(
        "zeta({s}, 0.9): residual {:.1e}, tail bound {:.1e}",
        r.residual,
        hurwitz_tail_bound(s, 100_000)?
    );
    Ok(())
}
