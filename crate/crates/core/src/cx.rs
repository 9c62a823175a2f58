//! Small complex-arithmetic helpers used across the crate.

use crate::ComplexValue;

pub const I: ComplexValue = ComplexValue::new(0.0, 1.0);
pub const ONE: ComplexValue = ComplexValue::new(1.0, 0.0);
pub const ZERO: ComplexValue = ComplexValue::new(0.0, 0.0);

#[inline]
pub fn real(x: f64) -> ComplexValue {
    ComplexValue::new(x, 0.0)
}

#[inline]
pub fn is_finite(z: ComplexValue) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `e^z - 1` without cancellation for small `|z|`.
pub fn expm1(z: ComplexValue) -> ComplexValue {
    let (s, c) = z.im.sin_cos();
    let half = (0.5 * z.im).sin();
    let cos_m1 = -2.0 * half * half;
    let em1 = z.re.exp_m1();
    // (e^x - 1) cos y + (cos y - 1) + i e^x sin y
    ComplexValue::new(em1 * c + cos_m1, z.re.exp() * s)
}

/// Principal power `base^p = exp(p ln base)` for a positive real base.
#[inline]
pub fn pow_real_base(base: f64, p: ComplexValue) -> ComplexValue {
    (p * base.ln()).exp()
}

/// Principal power `z^p = exp(p Ln z)`, with `0^p = 0` for `Re p > 0`.
pub fn pow(z: ComplexValue, p: ComplexValue) -> ComplexValue {
    if z == ZERO {
        if p == ZERO {
            return ONE;
        }
        return ZERO;
    }
    (p * z.ln()).exp()
}

/// `e^{i theta}` for real `theta`.
#[inline]
pub fn cis(theta: f64) -> ComplexValue {
    let (s, c) = theta.sin_cos();
    ComplexValue::new(c, s)
}

/// Neumaier-compensated complex accumulator.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: ComplexValue,
    comp: ComplexValue,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, v: ComplexValue) {
        let (s_re, c_re) = two_sum(self.sum.re, v.re);
        let (s_im, c_im) = two_sum(self.sum.im, v.im);
        self.sum = ComplexValue::new(s_re, s_im);
        self.comp += ComplexValue::new(c_re, c_im);
    }

    pub fn value(&self) -> ComplexValue {
        self.sum + self.comp
    }
}

impl std::iter::FromIterator<ComplexValue> for CompensatedSum {
    fn from_iter<T: IntoIterator<Item = ComplexValue>>(iter: T) -> Self {
        let mut acc = CompensatedSum::new();
        for v in iter {
            acc.add(v);
        }
        acc
    }
}

#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    (s, err)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expm1_small_argument_keeps_digits() {
        let z = ComplexValue::new(1e-12, -2e-12);
        let v = expm1(z);
        // Re = e^x cos y - 1 = x - y^2/2 + x^2/2 + ...
        assert!((v.re - (1e-12 - 1.5e-24)).abs() < 1e-27);
        assert!((v.im - (-2e-12 - 2e-24)).abs() < 1e-27);
    }

    #[test]
    fn compensated_sum_recovers_small_terms() {
        let mut acc = CompensatedSum::new();
        acc.add(real(1e16));
        for _ in 0..10 {
            acc.add(real(1.0));
        }
        acc.add(real(-1e16));
        assert_eq!(acc.value().re, 10.0);
    }

    #[test]
    fn pow_zero_base() {
        assert_eq!(pow(ZERO, ComplexValue::new(0.5, 1.0)), ZERO);
        assert_eq!(pow(ZERO, ZERO), ONE);
    }
}
