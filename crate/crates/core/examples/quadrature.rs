//! The integration engine on a smooth integrand, an endpoint singularity and
//! a bi-infinite integral, then the closed-form corpus.

use expsub::cx;
use expsub::quadrature::{
    integrate_adaptive, integrate_bi_infinite, integrate_endpoint_algebraic, DecayProfile,
};

fn main() -> expsub::Result<()> {
    let r = integrate_adaptive(|y| cx::cis(0.5 * y), 0.0, 2.0 * std::f64::consts::PI, 1e-12)?;
    println!(
        "int_0^2pi e^(iy/2) dy      = {:.15} (estimate {:.1e}, {} evals)",
        r.value, r.err_estimate, r.evals
    );

    let p = cx::real(-0.9);
    let r =
        integrate_endpoint_algebraic(|x| cx::pow_real_base(x, p), 0.0, 1.0, p, cx::ZERO, 1e-12)?;
    println!("int_0^1 x^-0.9 dx          = {:.15}", r.value.re);

    let s = cx::real(2.0);
    let r = integrate_bi_infinite(
        |u| expsub::zeta_reps::eta_integrand(s, u),
        DecayProfile::exp_substituted(s.re),
        1e-12,
    )?;
    println!("int e^(2u)/(e^(e^u)+1) du  = {:.15} (pi^2/12)", r.value.re);

    println!("\ncorpus at tol 1e-10:");
    for o in expsub::audit::run_corpus(1e-10) {
        println!(
            "  {:<20} true error {:.1e}  estimate {:.1e}  {}",
            o.name,
            o.true_error,
            o.err_estimate,
            if o.passed { "ok" } else { "MISS" }
        );
    }
    Ok(())
}
