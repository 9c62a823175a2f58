//! Partial sums over odd integers plus the vertical edge of the rectangle.
//! The truncation error falls like `e^{-2 pi N}`.

use expsub::zeta_reps::{
    partial_sum_identity, partial_sum_identity_cos_s_half, Variant, ZetaRepParams,
};
use expsub::ComplexValue;

fn main() -> expsub::Result<()> {
    let s = ComplexValue::new(0.5, 1.0);
    for n in [1, 2, 3, 4] {
        let p = ZetaRepParams::new(s, n, 1e-12);
        let a = partial_sum_identity(p, Variant::ForZetaOf1MinusS)?;
        let b = partial_sum_identity(p, Variant::ForZetaOfS)?;
        println!(
            "N = {n}: residual zeta(1-s) {:.2e}  zeta(s) {:.2e}",
            a.residual, b.residual
        );
    }
    let p = ZetaRepParams::new(ComplexValue::new(0.5, 0.0), 4, 1e-12);
    let literal = partial_sum_identity_cos_s_half(p)?;
    println!(
        "zeta(s) identity with cos(s/2) in place of cos(pi s/2): residual {:.2e}",
        literal.residual
    );
    Ok(())
}
