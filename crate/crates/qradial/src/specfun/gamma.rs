//! Gamma function with exact fast paths for integer and half-integer
//! arguments; a Lanczos approximation covers everything else.
//!
//! Half-integer arguments dominate the oscillator normalization formulas,
//! so they are computed as exact products of the recurrence
//! Gamma(x + 1) = x Gamma(x) seeded with Gamma(1/2) = sqrt(pi), which keeps
//! them accurate to a few ulp. The same treatment applies to integers.

use std::f64::consts::PI;

pub(crate) const SQRT_PI: f64 = 1.772_453_850_905_516_f64;

// Lanczos g = 7, 9 coefficients (GSL / Numerical Recipes set).
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)] // published coefficient set
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Gamma(x). Poles at the non-positive integers return NaN.
pub fn gamma(x: f64) -> f64 {
    if x.is_nan() || (x <= 0.0 && x == x.floor()) {
        return f64::NAN;
    }
    if x == x.floor() && x <= 171.0 {
        return factorial((x as u32) - 1);
    }
    let half_offset = x - 0.5;
    if half_offset == half_offset.floor() && x.abs() < 171.0 {
        return gamma_half_integer(x);
    }
    lanczos(x)
}

/// 1/Gamma(x); zero at the poles. Entire, so no error cases.
pub fn gamma_recip(x: f64) -> f64 {
    if x <= 0.0 && x == x.floor() {
        0.0
    } else {
        1.0 / gamma(x)
    }
}

/// k! as f64, exact up to rounding for k <= 170.
pub fn factorial(k: u32) -> f64 {
    let mut product = 1.0;
    for i in 2..=k as u64 {
        product *= i as f64;
    }
    product
}

/// (2k + 1)!! as f64; used by the small-argument Bessel series.
pub(crate) fn odd_double_factorial(k: u32) -> f64 {
    let mut product = 1.0;
    let mut factor = 3.0;
    for _ in 0..k {
        product *= factor;
        factor += 2.0;
    }
    product
}

fn gamma_half_integer(x: f64) -> f64 {
    // Walk negative half-integers up to 1/2, then multiply back up.
    let mut scale = 1.0;
    let mut t = x;
    while t < 0.5 {
        scale /= t;
        t += 1.0;
    }
    let mut value = SQRT_PI;
    let mut factor = 0.5;
    while factor + 0.25 < t {
        value *= factor;
        factor += 1.0;
    }
    scale * value
}

fn lanczos(x: f64) -> f64 {
    if x < 0.5 {
        // Reflection for the left half-plane.
        return PI / ((PI * x).sin() * lanczos(1.0 - x));
    }
    let z = x - 1.0;
    let mut acc = LANCZOS[0];
    for (i, c) in LANCZOS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (2.0 * PI).sqrt() * t.powf(z + 0.5) * (-t).exp() * acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integers_are_factorials() {
        assert_eq!(gamma(1.0), 1.0);
        assert_eq!(gamma(6.0), 120.0);
        assert_eq!(gamma(13.0), 479_001_600.0);
    }

    #[test]
    fn half_integers_match_double_factorial_identity() {
        // Gamma(r + 1/2) = (2r)! / (4^r r!) sqrt(pi)
        for r in 0..20u32 {
            let expected = factorial(2 * r) / (4f64.powi(r as i32) * factorial(r)) * SQRT_PI;
            let got = gamma(r as f64 + 0.5);
            assert!(
                (got - expected).abs() <= 1e-13 * expected,
                "r={r}: {got} vs {expected}"
            );
        }
        assert!((gamma(1.5) - SQRT_PI / 2.0).abs() < 1e-15);
        assert!((gamma(1.5) - 0.886_226_9).abs() < 1e-7);
    }

    #[test]
    fn poles_return_nan() {
        assert!(gamma(0.0).is_nan());
        assert!(gamma(-3.0).is_nan());
        assert_eq!(gamma_recip(0.0), 0.0);
        assert_eq!(gamma_recip(-7.0), 0.0);
    }

    #[test]
    fn negative_half_integers() {
        // Gamma(-1/2) = -2 sqrt(pi)
        assert!((gamma(-0.5) + 2.0 * SQRT_PI).abs() < 1e-13);
        // Gamma(-3/2) = 4/3 sqrt(pi)
        assert!((gamma(-1.5) - 4.0 / 3.0 * SQRT_PI).abs() < 1e-13);
    }

    #[test]
    fn lanczos_recurrence_consistency() {
        for i in 0..200 {
            let x = 0.13 + i as f64 * 0.37;
            let lhs = gamma(x + 1.0);
            let rhs = x * gamma(x);
            assert!(
                (lhs - rhs).abs() <= 1e-12 * lhs.abs(),
                "x={x}: {lhs} vs {rhs}"
            );
        }
    }
}
