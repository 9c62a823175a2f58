//! 21-point Gauss-Kronrod rule with its embedded 10-point Gauss rule, and the
//! globally adaptive bisection driver built on it.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::{QuadConfig, QuadResult};
use crate::cx::{self, CompensatedSum};
use crate::error::{Error, Result};
use crate::ComplexValue;

// Abscissae of the 21-point Kronrod rule on [-1, 1] (positive half, the last
// entry is the centre). Odd indices are shared with the 10-point Gauss rule.
const XGK: [f64; 11] = [
    0.995_657_163_025_808_080_735_527_280_689_003,
    0.973_906_528_517_171_720_077_964_012_084_452,
    0.930_157_491_355_708_226_001_207_180_059_508,
    0.865_063_366_688_984_510_732_096_688_423_493,
    0.780_817_726_586_416_897_063_717_578_345_042,
    0.679_409_568_299_024_406_234_327_365_114_874,
    0.562_757_134_668_604_683_339_000_099_272_694,
    0.433_395_394_129_247_190_799_265_943_165_784,
    0.294_392_862_701_460_198_131_126_603_103_866,
    0.148_874_338_981_631_210_884_826_001_129_720,
    0.0,
];

const WGK: [f64; 11] = [
    0.011_694_638_867_371_874_278_064_396_062_192,
    0.032_558_162_307_964_727_478_818_972_459_390,
    0.054_755_896_574_351_996_031_381_300_244_580,
    0.075_039_674_810_919_952_767_043_140_916_190,
    0.093_125_454_583_697_605_535_065_465_083_366,
    0.109_387_158_802_297_641_899_210_590_325_805,
    0.123_491_976_262_065_851_077_208_980_297_871,
    0.134_709_217_311_473_325_928_054_001_771_707,
    0.142_775_938_577_060_080_797_094_273_138_717,
    0.147_739_104_901_338_491_374_841_515_972_068,
    0.149_445_554_002_916_905_664_936_468_389_821,
];

const WG: [f64; 5] = [
    0.066_671_344_308_688_137_593_568_809_893_332,
    0.149_451_349_150_580_593_145_776_339_657_697,
    0.219_086_362_515_982_043_995_534_934_228_163,
    0.269_266_719_309_996_355_091_226_921_569_469,
    0.295_524_224_714_752_870_173_892_994_651_338,
];

pub(crate) const EVALS_PER_RULE: usize = 21;

/// One application of the rule on `[a, b]`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct Segment {
    pub a: f64,
    pub b: f64,
    pub depth: u32,
    pub value: ComplexValue,
    pub err: f64,
    /// Roundoff floor `50 eps * integral of |f|` for this segment.
    pub floor: f64,
}

fn eval<F: Fn(f64) -> ComplexValue>(f: &F, x: f64) -> Result<ComplexValue> {
    let v = f(x);
    if cx::is_finite(v) {
        Ok(v)
    } else {
        Err(Error::NonFinite { abscissa: x })
    }
}

pub(crate) fn gauss_kronrod_21<F: Fn(f64) -> ComplexValue>(
    f: &F,
    a: f64,
    b: f64,
    depth: u32,
) -> Result<Segment> {
    let centre = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let abs_half = half.abs();

    let fc = eval(f, centre)?;
    let mut res_g = cx::ZERO;
    let mut res_k = fc * WGK[10];
    let mut res_abs = WGK[10] * fc.norm();
    let mut fv1 = [cx::ZERO; 10];
    let mut fv2 = [cx::ZERO; 10];

    for (j, wg) in WG.iter().enumerate() {
        let jtw = 2 * j + 1;
        let dx = half * XGK[jtw];
        let f1 = eval(f, centre - dx)?;
        let f2 = eval(f, centre + dx)?;
        fv1[jtw] = f1;
        fv2[jtw] = f2;
        let sum = f1 + f2;
        res_g += sum * wg;
        res_k += sum * WGK[jtw];
        res_abs += WGK[jtw] * (f1.norm() + f2.norm());
    }
    for j in 0..5 {
        let jtwm1 = 2 * j;
        let dx = half * XGK[jtwm1];
        let f1 = eval(f, centre - dx)?;
        let f2 = eval(f, centre + dx)?;
        fv1[jtwm1] = f1;
        fv2[jtwm1] = f2;
        res_k += (f1 + f2) * WGK[jtwm1];
        res_abs += WGK[jtwm1] * (f1.norm() + f2.norm());
    }

    let mean = res_k * 0.5;
    let mut res_asc = WGK[10] * (fc - mean).norm();
    for j in 0..10 {
        res_asc += WGK[j] * ((fv1[j] - mean).norm() + (fv2[j] - mean).norm());
    }

    let value = res_k * half;
    res_abs *= abs_half;
    res_asc *= abs_half;
    let mut err = ((res_k - res_g) * half).norm();
    if res_asc != 0.0 && err != 0.0 {
        err = res_asc * (200.0 * err / res_asc).powf(1.5).min(1.0);
    }
    let floor = 50.0 * f64::EPSILON * res_abs;
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(floor);
    }
    Ok(Segment {
        a,
        b,
        depth,
        value,
        err,
        floor,
    })
}

#[derive(Debug, Clone, Copy)]
struct Keyed {
    err: f64,
    idx: usize,
}

impl PartialEq for Keyed {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
impl Eq for Keyed {}
impl PartialOrd for Keyed {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Keyed {
    // Ties broken on index so the split order is deterministic.
    fn cmp(&self, other: &Self) -> Ordering {
        self.err
            .total_cmp(&other.err)
            .then_with(|| other.idx.cmp(&self.idx))
    }
}

fn splittable(seg: &Segment, cfg: &QuadConfig) -> bool {
    if seg.depth >= cfg.max_depth {
        return false;
    }
    let scale = seg.a.abs().max(seg.b.abs()).max(f64::MIN_POSITIVE);
    (seg.b - seg.a) > 8.0 * f64::EPSILON * scale
}

fn summarize(segments: &[Segment], evals: usize) -> QuadResult {
    let mut ordered: Vec<&Segment> = segments.iter().collect();
    ordered.sort_by(|x, y| x.a.total_cmp(&y.a));
    let value = ordered
        .iter()
        .map(|s| s.value)
        .collect::<CompensatedSum>()
        .value();
    let err_estimate = ordered.iter().map(|s| s.err).sum();
    QuadResult {
        value,
        err_estimate,
        evals,
    }
}

/// Globally adaptive integration over the consecutive pieces delimited by
/// `points` (strictly increasing, at least two entries).
pub(crate) fn adaptive<F: Fn(f64) -> ComplexValue>(
    f: &F,
    points: &[f64],
    tol: f64,
    cfg: &QuadConfig,
) -> Result<QuadResult> {
    let mut segments = Vec::with_capacity(64);
    let mut heap = BinaryHeap::new();
    let mut evals = 0usize;
    for w in points.windows(2) {
        let seg = gauss_kronrod_21(f, w[0], w[1], 0)?;
        evals += EVALS_PER_RULE;
        heap.push(Keyed {
            err: seg.err,
            idx: segments.len(),
        });
        segments.push(seg);
    }

    let mut total_err: f64 = segments.iter().map(|s| s.err).sum();
    let mut total_floor: f64 = segments.iter().map(|s| s.floor).sum();
    let mut total_val: ComplexValue = segments.iter().map(|s| s.value).sum();
    let mut refreshes = 0usize;

    loop {
        let target = tol * total_val.norm().max(1.0);
        if total_err <= target || total_err <= 2.0 * total_floor {
            // The running sums drift; confirm against a fresh summation.
            let fresh = summarize(&segments, evals);
            total_err = fresh.err_estimate;
            total_floor = segments.iter().map(|s| s.floor).sum();
            total_val = fresh.value;
            let target = tol * total_val.norm().max(1.0);
            if total_err <= target || total_err <= 2.0 * total_floor {
                return Ok(fresh);
            }
            refreshes += 1;
            if refreshes > 64 {
                return Err(Error::NonConvergence { partial: fresh });
            }
        }
        if evals + 2 * EVALS_PER_RULE > cfg.max_evals {
            return Err(Error::NonConvergence {
                partial: summarize(&segments, evals),
            });
        }

        let Some(Keyed { idx, .. }) = next_splittable(&mut heap, &segments, cfg) else {
            return Err(Error::NonConvergence {
                partial: summarize(&segments, evals),
            });
        };
        let seg = segments[idx];
        let mid = 0.5 * (seg.a + seg.b);
        let left = gauss_kronrod_21(f, seg.a, mid, seg.depth + 1)?;
        let right = gauss_kronrod_21(f, mid, seg.b, seg.depth + 1)?;
        evals += 2 * EVALS_PER_RULE;

        total_err += left.err + right.err - seg.err;
        total_floor += left.floor + right.floor - seg.floor;
        total_val += left.value + right.value - seg.value;

        segments[idx] = left;
        heap.push(Keyed { err: left.err, idx });
        heap.push(Keyed {
            err: right.err,
            idx: segments.len(),
        });
        segments.push(right);
    }
}

fn next_splittable(
    heap: &mut BinaryHeap<Keyed>,
    segments: &[Segment],
    cfg: &QuadConfig,
) -> Option<Keyed> {
    // Segments at the depth or width limit are dropped from the heap for good;
    // their error still counts toward the total.
    while let Some(top) = heap.pop() {
        if splittable(&segments[top.idx], cfg) {
            return Some(top);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights_sum_to_two() {
        let k: f64 = 2.0 * WGK[..10].iter().sum::<f64>() + WGK[10];
        let g: f64 = 2.0 * WG.iter().sum::<f64>();
        assert!((k - 2.0).abs() < 1e-15, "kronrod weights {k}");
        assert!((g - 2.0).abs() < 1e-15, "gauss weights {g}");
    }

    #[test]
    fn kronrod_exact_to_degree_31_gauss_to_19() {
        // Monomials x^d on [-1, 1]; exact integral 2/(d+1) for even d.
        for d in (0..=30).step_by(2) {
            let f = |x: f64| cx::real(x.powi(d));
            let seg = gauss_kronrod_21(&f, -1.0, 1.0, 0).unwrap();
            let exact = 2.0 / (d as f64 + 1.0);
            assert!(
                (seg.value.re - exact).abs() < 1e-14,
                "degree {d}: {} vs {exact}",
                seg.value.re
            );
        }
        for d in (0..=18).step_by(2) {
            let mut g = 0.0;
            for j in 0..5 {
                g += 2.0 * WG[j] * XGK[2 * j + 1].powi(d);
            }
            let exact = 2.0 / (d as f64 + 1.0);
            assert!((g - exact).abs() < 1e-14, "gauss degree {d}");
        }
    }

    #[test]
    fn rule_never_touches_endpoints() {
        let f = |x: f64| {
            assert!(x > 0.0 && x < 1.0);
            cx::real(1.0 / x.sqrt())
        };
        gauss_kronrod_21(&f, 0.0, 1.0, 0).unwrap();
    }
}
