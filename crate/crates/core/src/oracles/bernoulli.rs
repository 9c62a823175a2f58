//! Even-index Bernoulli numbers, shared by Stirling's series, Euler-Maclaurin
//! summation and the small-argument expansion of `w / (e^w - 1)`.

/// `B_2, B_4, ..., B_30`.
pub const B2K: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// `B_2k / (2k)!` for `k = 1..=15`.
pub fn b2k_over_factorial() -> [f64; 15] {
    let mut out = [0.0; 15];
    let mut fact = 1.0;
    for (k, slot) in out.iter_mut().enumerate() {
        let n = 2 * (k + 1);
        fact *= (n - 1) as f64 * n as f64;
        *slot = B2K[k] / fact;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scaled_values_match_reference() {
        let b = b2k_over_factorial();
        assert!((b[0] - 1.0 / 12.0).abs() < 1e-17);
        assert!((b[1] + 1.0 / 720.0).abs() < 1e-18);
        assert!((b[9] / -2.174868698558062e-16 - 1.0).abs() < 1e-14);
        assert!((b[14] / 2.267952452337683e-24 - 1.0).abs() < 1e-14);
    }
}
