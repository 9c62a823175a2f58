//! One PASS/FAIL line per acceptance criterion.
//!
//! Criteria 3, 6, 7 and 8 are known to fail as stated (see the README); the
//! process fails only when the set of failing criteria differs from that.

use std::collections::BTreeSet;
use std::f64::consts::PI;
use std::process::Command;

use expsub::audit::{default_config, run_audit, run_corpus, sweep_afe, AuditOutcome, FunctionId};
use expsub::hyper_reps::{
    audited_phase, blackbody_fraction, gauss_f_closed, gauss_f_symmetric, incomplete_zeta,
    kummer_closed, kummer_symmetric, ratio_spread, Equation,
};
use expsub::zeta_reps::{partial_sum_identity, Variant, ZetaRepParams};
use expsub::{ComplexValue, Result};

const KNOWN_RED: [u32; 4] = [3, 6, 7, 8];

fn c(re: f64, im: f64) -> ComplexValue {
    ComplexValue::new(re, im)
}

fn grid(id: FunctionId) -> Result<AuditOutcome> {
    let mut cfg = default_config(id);
    cfg.timing = false;
    run_audit(&cfg)
}

fn worst_rel(out: &AuditOutcome) -> f64 {
    out.records.iter().map(|r| r.rel_err).fold(0.0, f64::max)
}

fn worst_abs(out: &AuditOutcome) -> f64 {
    out.records.iter().map(|r| r.abs_err).fold(0.0, f64::max)
}

fn clean(out: &AuditOutcome) -> bool {
    out.failed.is_empty() && out.records.iter().all(|r| r.passed())
}

fn failing_points(out: &AuditOutcome) -> usize {
    out.records.iter().filter(|r| !r.passed()).count() + out.failed.len()
}

type Verdict = (bool, String);
type Criterion = (u32, &'static str, fn() -> Result<Verdict>);

fn c1() -> Result<Verdict> {
    let out = grid(FunctionId::ZetaEq5)?;
    let at_one = out
        .records
        .iter()
        .find(|r| r.param("s") == Some(c(1.0, 0.0)))
        .map(|r| (r.rep_value.re - std::f64::consts::LN_2).abs())
        .unwrap_or(f64::INFINITY);
    let ok = out.records.len() == 12 && worst_rel(&out) <= 1e-8 && clean(&out) && at_one <= 1e-8;
    Ok((
        ok,
        format!(
            "12 points, max rel {:.1e}, |I(1) - ln 2| = {at_one:.1e}",
            worst_rel(&out)
        ),
    ))
}

fn c2() -> Result<Verdict> {
    let mut max4: f64 = 0.0;
    let mut monotone = true;
    for sigma in [0.3, 0.5, 0.7] {
        for t in [0.0, 1.0, 3.0] {
            let s = c(sigma, t);
            let r4 =
                partial_sum_identity(ZetaRepParams::new(s, 4, 1e-12), Variant::ForZetaOf1MinusS)?
                    .residual;
            let r2 =
                partial_sum_identity(ZetaRepParams::new(s, 2, 1e-12), Variant::ForZetaOf1MinusS)?
                    .residual;
            max4 = max4.max(r4);
            monotone &= r4 <= r2;
        }
    }
    Ok((
        max4 <= 1e-7 && monotone,
        format!("max residual at N=4 {max4:.1e}, N=4 below N=2 everywhere: {monotone}"),
    ))
}

fn c3() -> Result<Verdict> {
    let xs = [20.0, 40.0, 80.0, 160.0, 320.0];
    let mut ok = true;
    let mut notes = Vec::new();
    for s in [c(0.6, 0.0), c(0.6, 5.0)] {
        let sweep = sweep_afe(s, &xs, false)?;
        let scaled: Vec<f64> = sweep
            .outcome
            .records
            .iter()
            .map(|r| r.abs_err * r.param("x").unwrap().re.powf(0.6))
            .collect();
        let max = scaled.iter().copied().fold(0.0, f64::max);
        let min = scaled.iter().copied().fold(f64::INFINITY, f64::min);
        let exponent = sweep.fit.map_or(f64::NAN, |f| f.exponent);
        ok &= scaled.len() == xs.len() && max / min <= 4.0 && exponent >= 0.45;
        notes.push(format!(
            "s={s}: max/min {:.2}, exponent {exponent:.3}",
            max / min
        ));
    }
    Ok((ok, notes.join("; ")))
}

fn c4() -> Result<Verdict> {
    let out = grid(FunctionId::HurwitzEq13)?;
    let bernoulli = out
        .records
        .iter()
        .find(|r| r.param("s") == Some(c(-1.0, 0.0)) && r.param("a") == Some(c(0.25, 0.0)));
    // zeta(-1, 1/4) = -B_2(1/4)/2 = 1/96; the grid has no s = -1, so evaluate it.
    let b = match bernoulli {
        Some(r) => r.rep_value.re,
        None => {
            expsub::zeta_reps::hurwitz_formula(c(-1.0, 0.0), 0.25, 100_000)?
                .rhs
                .re
        }
    };
    let dev = (b - 1.0 / 96.0).abs();
    let ok = out.records.len() == 9 && worst_abs(&out) <= 1e-6 && clean(&out) && dev <= 1e-8;
    Ok((
        ok,
        format!(
            "9 points, max abs {:.1e}, |zeta(-1,1/4) - 1/96| = {dev:.1e}",
            worst_abs(&out)
        ),
    ))
}

fn c5() -> Result<Verdict> {
    let bound11 = grid(FunctionId::BoundEq11)?;
    let samples: f64 = bound11
        .records
        .iter()
        .map(|r| r.param("samples").unwrap().re)
        .sum();
    let ok11 = bound11.records.len() == 20 && clean(&bound11);
    let bound12 = grid(FunctionId::BoundEq12)?;
    let mut decay = true;
    for s in [c(0.5, 0.0), c(0.5, 2.0)] {
        let at = |n: f64| {
            bound12
                .records
                .iter()
                .find(|r| r.param("s") == Some(s) && r.param("N") == Some(c(n, 0.0)))
                .map(|r| r.rep_value.norm())
                .unwrap_or(f64::NAN)
        };
        decay &= at(20.0) <= at(5.0);
    }
    let ok12 = bound12.records.len() == 6 && clean(&bound12) && decay;
    Ok((
        ok11 && ok12,
        format!(
            "{} denominator predicates all hold: {ok11}; |S4| within bound on 6 points and N=20 below N=5: {ok12}",
            samples as u64
        ),
    ))
}

fn c6() -> Result<Verdict> {
    let closed = grid(FunctionId::IgammaEq14)?;
    let sym = grid(FunctionId::IgammaEq15_16)?;
    let erf_point = sym
        .records
        .iter()
        .find(|r| {
            r.param("s") == Some(c(0.5, 0.0))
                && r.param("x") == Some(c(2.0, 0.0))
                && r.param("n") == Some(c(1.0, 0.0))
        })
        .map(|r| (r.rep_value.re - 1.691_806_732_945_198_3).abs())
        .unwrap_or(f64::INFINITY);
    let ok = clean(&closed) && clean(&sym) && erf_point <= 1e-9;
    Ok((
        ok,
        format!(
            "closed: {} points, max rel {:.1e}, {} failing; symmetric: {} points, {} failing (even winding); erf check {erf_point:.1e}",
            closed.records.len(),
            worst_rel(&closed),
            failing_points(&closed),
            sym.records.len(),
            failing_points(&sym)
        ),
    ))
}

fn c7() -> Result<Verdict> {
    let closed = grid(FunctionId::PhiEq19_20)?;
    let sym = grid(FunctionId::PhiEq21)?;
    let phase = audited_phase(Equation::KummerSymmetric)?;
    let mut ratios = Vec::new();
    for a in [c(0.3, 0.0), c(0.7, 0.0), c(0.3, 0.2)] {
        for cc in [1.9, 2.6] {
            for x in [-2.0, 0.5, 3.0] {
                for n in [1, 2] {
                    let r = kummer_symmetric(a, c(cc, 0.0), c(x, 0.0), n, 1e-12)?;
                    // lhs over the representation with the printed constant.
                    ratios.push(
                        r.lhs * phase.corrected_prefactor / (phase.printed_prefactor * r.rhs),
                    );
                }
            }
        }
    }
    let (mean, spread) = ratio_spread(&ratios);
    let ok = clean(&closed) && clean(&sym) && spread <= 1e-6;
    Ok((
        ok,
        format!(
            "closed: max rel {:.1e}; symmetric: {} of {} failing (even winding); printed-constant ratio mean {mean:.3}, spread {spread:.1e}",
            worst_rel(&closed),
            failing_points(&sym),
            sym.records.len()
        ),
    ))
}

fn c8() -> Result<Verdict> {
    let closed = grid(FunctionId::BetaEq23)?;
    let sym = grid(FunctionId::BetaEq25)?;
    let mut four = 0.0f64;
    for out in [&closed, &sym] {
        for r in &out.records {
            if r.param("x") == Some(c(0.5, 0.0)) && r.param("n") == Some(c(1.0, 0.0)) {
                four = four
                    .max((r.rep_value - 4.0).norm())
                    .max((r.oracle_value - 4.0).norm());
            }
        }
    }
    let ok = clean(&closed) && clean(&sym) && four <= 1e-9;
    Ok((
        ok,
        format!(
            "closed: max rel {:.1e}; symmetric: {} of {} failing (even winding); x=1/2,y=1 off 4 by {four:.1e}",
            worst_rel(&closed),
            failing_points(&sym),
            sym.records.len()
        ),
    ))
}

fn c9() -> Result<Verdict> {
    let closed = grid(FunctionId::FEq26)?;
    let sym = grid(FunctionId::FEq27)?;
    let triples = [(0.5, 0.3, 1.7), (1.2, 0.4, 2.1), (0.8, 0.45, 1.6)];
    let zs = [c(0.3, 0.0), c(-0.5, 0.0), c(0.2, 0.1)];
    let mut spread: f64 = 0.0;
    let mut degeneration: f64 = 0.0;
    for (eq, f) in [
        (
            Equation::GaussClosed,
            gauss_f_closed as fn(_, _, _, _, _) -> _,
        ),
        (Equation::GaussSymmetric, gauss_f_symmetric),
    ] {
        let phase = audited_phase(eq)?;
        let mut ratios = Vec::new();
        for (a, b, cc) in triples {
            for z in zs {
                let r = f(c(a, 0.0), c(b, 0.0), c(cc, 0.0), z, 1e-12)?;
                ratios.push(r.lhs * phase.corrected_prefactor / (phase.printed_prefactor * r.rhs));
            }
        }
        spread = spread.max(ratio_spread(&ratios).1);
    }
    for (a, b, cc) in triples {
        let g = gauss_f_closed(c(a, 0.0), c(b, 0.0), c(cc, 0.0), c(0.0, 0.0), 1e-12)?;
        let k = kummer_closed(c(b, 0.0), c(cc, 0.0), c(0.0, 0.0), 1, 1e-12)?;
        degeneration = degeneration.max((g.rhs - k.rhs).norm());
    }
    let ok = clean(&closed) && clean(&sym) && spread <= 1e-6 && degeneration <= 1e-10;
    Ok((
        ok,
        format!(
            "max rel {:.1e} / {:.1e}; constant spread {spread:.1e}; z=0 vs Kummer {degeneration:.1e}",
            worst_rel(&closed),
            worst_rel(&sym)
        ),
    ))
}

fn c10() -> Result<Verdict> {
    let out = grid(FunctionId::Izeta)?;
    let dual = out.records.iter().map(|r| r.abs_err).fold(0.0, f64::max);
    let z4 = (incomplete_zeta(c(4.0, 0.0), 50.0, 1e-12)?.re - PI.powi(4) / 90.0).abs();
    let mut prev = -1.0;
    let mut monotone = true;
    for k in 0..=100 {
        let f = blackbody_fraction(0.5 * k as f64)?;
        monotone &= f >= prev;
        prev = f;
    }
    let ends = blackbody_fraction(0.0)? == 0.0 && (blackbody_fraction(50.0)? - 1.0).abs() <= 1e-10;
    let ok = clean(&out) && dual <= 1e-9 && z4 <= 1e-10 && monotone && ends;
    Ok((
        ok,
        format!("dual routes {dual:.1e}; |zeta~(4,50) - pi^4/90| {z4:.1e}; monotone {monotone}; endpoints {ends}"),
    ))
}

fn c11() -> Result<Verdict> {
    let outcomes = run_corpus(1e-10);
    let passed = outcomes.iter().filter(|o| o.passed).count();
    Ok((
        passed == 20 && outcomes.len() == 20,
        format!("{passed}/{} within max(estimate, tol)", outcomes.len()),
    ))
}

fn c12(expect_zero: bool) -> Result<Verdict> {
    let bin = env!("CARGO_BIN_EXE_expsub-audit");
    let run = || {
        Command::new(bin)
            .args(["audit", "all", "--no-timing"])
            .output()
    };
    let first = run()?;
    let second = run()?;
    let same = first.stdout == second.stdout && !first.stdout.is_empty();
    let code = first.status.code();
    let expected = if expect_zero { 0 } else { 2 };
    Ok((
        same && code == Some(expected),
        format!(
            "{} bytes, identical: {same}; exit {code:?} (expected {expected} given criteria 1-11)",
            first.stdout.len()
        ),
    ))
}

fn line(failed: &mut BTreeSet<u32>, k: u32, name: &str, v: Result<Verdict>) {
    let (ok, note) = v.unwrap_or_else(|e| (false, format!("error: {e}")));
    println!("{} {k:>2} {name}: {note}", if ok { "PASS" } else { "FAIL" });
    if !ok {
        failed.insert(k);
    }
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "eta integral closure", c1),
        (2, "partial sums plus vertical edge", c2),
        (3, "approximate functional equation error scaling", c3),
        (4, "Hurwitz series", c4),
        (5, "denominator and quarter-integral bounds", c5),
        (6, "incomplete gamma contours", c6),
        (7, "Kummer Phi contours", c7),
        (8, "beta contours", c8),
        (9, "Gauss F contours", c9),
        (10, "incomplete zeta and blackbody", c10),
        (11, "quadrature corpus", c11),
    ];
    let mut failed = BTreeSet::new();
    for (k, name, f) in criteria {
        line(&mut failed, k, name, f());
    }
    let first_eleven_pass = failed.is_empty();
    line(
        &mut failed,
        12,
        "CLI determinism and exit code",
        c12(first_eleven_pass),
    );

    let known: BTreeSet<u32> = KNOWN_RED.into_iter().collect();
    let unexpected_fail: Vec<_> = failed.difference(&known).collect();
    let unexpected_pass: Vec<_> = known.difference(&failed).collect();
    println!("known red: {KNOWN_RED:?}");
    if !unexpected_fail.is_empty() || !unexpected_pass.is_empty() {
        println!("unexpected failures {unexpected_fail:?}, unexpected passes {unexpected_pass:?}");
        std::process::exit(1);
    }
}
