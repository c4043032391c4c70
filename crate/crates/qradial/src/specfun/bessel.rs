//! Spherical Bessel functions j_l and their positive zeros.
//!
//! Above the turning point (z >= l) the upward recurrence from j_0, j_1 is
//! stable; below it the values are generated by a Miller-style downward
//! sweep normalized against j_0 (or j_1 when z sits on a zero of j_0).
//! Zeros are located by walking the interlacing ladder up from the exact
//! l = 0 zeros at n pi, bisecting each bracket and polishing with a
//! derivative-free secant step.

use std::f64::consts::PI;

use super::gamma::odd_double_factorial;
use crate::error::{Error, Result};

/// Largest order the zero scanner accepts.
pub const MAX_ZERO_ORDER: u32 = 25;
/// Largest zero index the scanner accepts.
pub const MAX_ZERO_INDEX: u32 = 50;

/// j_l(z) for z >= 0. The origin takes the series limit: j_0(0) = 1 and
/// j_l(0) = 0 for l >= 1.
pub fn spherical_bessel_j(l: u32, z: f64) -> f64 {
    assert!(
        z >= 0.0 && z.is_finite(),
        "spherical Bessel argument must be finite and non-negative, got {z}"
    );
    if z == 0.0 {
        return if l == 0 { 1.0 } else { 0.0 };
    }
    if l == 0 {
        return z.sin() / z;
    }
    if z < 0.5 {
        return small_argument_series(l, z);
    }
    if z >= l as f64 {
        upward(l, z)
    } else {
        downward(l, z)
    }
}

/// j_l'(z) for z > 0, via j_l' = j_{l-1} - (l + 1)/z j_l (and j_0' = -j_1).
pub fn spherical_bessel_j_derivative(l: u32, z: f64) -> f64 {
    assert!(z > 0.0, "derivative requires z > 0, got {z}");
    if l == 0 {
        -spherical_bessel_j(1, z)
    } else {
        spherical_bessel_j(l - 1, z) - (l as f64 + 1.0) / z * spherical_bessel_j(l, z)
    }
}

fn upward(l: u32, z: f64) -> f64 {
    let mut jm = z.sin() / z;
    if l == 0 {
        return jm;
    }
    let mut j = z.sin() / (z * z) - z.cos() / z;
    for k in 1..l {
        let next = (2.0 * k as f64 + 1.0) / z * j - jm;
        jm = j;
        j = next;
    }
    j
}

fn downward(l: u32, z: f64) -> f64 {
    let start = l + 16 + (2.0 * l as f64).sqrt().ceil() as u32;
    let mut upper = 0.0_f64; // j_{k+1}
    let mut current = 1e-30_f64; // j_k (arbitrary seed)
    let mut at_l = 0.0;
    let mut at_one = 0.0;
    let at_zero;
    let mut k = start;
    loop {
        if k == l {
            at_l = current;
        }
        if k == 1 {
            at_one = current;
        }
        if k == 0 {
            at_zero = current;
            break;
        }
        let lower = (2.0 * k as f64 + 1.0) / z * current - upper;
        upper = current;
        current = lower;
        if current.abs() > 1e250 {
            current /= 1e250;
            upper /= 1e250;
            at_l /= 1e250;
            at_one /= 1e250;
        }
        k -= 1;
    }
    let j0 = z.sin() / z;
    if at_zero.abs() >= at_one.abs() {
        at_l * (j0 / at_zero)
    } else {
        let j1 = z.sin() / (z * z) - z.cos() / z;
        at_l * (j1 / at_one)
    }
}

fn small_argument_series(l: u32, z: f64) -> f64 {
    // j_l(z) = z^l/(2l+1)!! * sum_k (-z^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
    let leading = z.powi(l as i32) / odd_double_factorial(l);
    let z2 = z * z;
    let mut term = 1.0;
    let mut sum = 1.0;
    for k in 1..40u32 {
        term *= -z2 / (2.0 * k as f64 * (2.0 * (l + k) as f64 + 1.0));
        sum += term;
        if term.abs() < f64::EPSILON {
            break;
        }
    }
    leading * sum
}

/// The n-th positive zero of j_l.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselZero {
    pub l: u32,
    pub n: u32,
    pub value: f64,
}

/// Locates z_{n,l}, the n-th positive zero of j_l (n counts from 1).
///
/// The l = 0 zeros are exactly n pi. Higher orders are reached by the
/// interlacing ladder: the n-th zero of j_{k+1} sits strictly between the
/// n-th and (n+1)-th zeros of j_k.
pub fn spherical_bessel_zero(l: u32, n: u32) -> Result<BesselZero> {
    if n == 0 || n > MAX_ZERO_INDEX {
        return Err(Error::Domain(format!(
            "zero index must satisfy 1 <= n <= {MAX_ZERO_INDEX}, got {n}"
        )));
    }
    if l > MAX_ZERO_ORDER {
        return Err(Error::Domain(format!(
            "zero order must satisfy l <= {MAX_ZERO_ORDER}, got {l}"
        )));
    }
    if l == 0 {
        return Ok(BesselZero {
            l,
            n,
            value: n as f64 * PI,
        });
    }
    let mut row: Vec<f64> = (1..=n + l).map(|k| k as f64 * PI).collect();
    for order in 1..=l {
        let mut next = Vec::with_capacity(row.len() - 1);
        for i in 0..row.len() - 1 {
            next.push(refine_zero(order, i as u32 + 1, row[i], row[i + 1])?);
        }
        row = next;
    }
    Ok(BesselZero {
        l,
        n,
        value: row[(n - 1) as usize],
    })
}

fn refine_zero(l: u32, n: u32, mut lo: f64, mut hi: f64) -> Result<f64> {
    let f = |x: f64| spherical_bessel_j(l, x);
    let mut flo = f(lo);
    let mut fhi = f(hi);
    if flo == 0.0 {
        return Ok(lo);
    }
    if fhi == 0.0 {
        return Ok(hi);
    }
    if flo.signum() == fhi.signum() {
        return Err(Error::BracketFailure { l, n });
    }
    // Bisect to a narrow bracket, then polish with secant steps.
    while hi - lo > 1e-8 {
        let mid = 0.5 * (lo + hi);
        let fmid = f(mid);
        if fmid == 0.0 {
            return Ok(mid);
        }
        if fmid.signum() == flo.signum() {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
            fhi = fmid;
        }
    }
    let mut a = lo;
    let mut fa = flo;
    let mut b = hi;
    let mut fb = fhi;
    for _ in 0..30 {
        let step = fb * (b - a) / (fb - fa);
        let mut candidate = b - step;
        if !(lo..=hi).contains(&candidate) {
            candidate = 0.5 * (lo + hi);
        }
        let fc = f(candidate);
        a = b;
        fa = fb;
        b = candidate;
        fb = fc;
        if fb == 0.0 || (b - a).abs() < 1e-13 * b.abs() {
            break;
        }
        if fc.signum() == flo.signum() {
            lo = candidate;
        } else {
            hi = candidate;
        }
    }
    if f(b).abs() > 1e-12 {
        return Err(Error::BracketFailure { l, n });
    }
    Ok(b)
}
