//! Adaptive Gauss-Legendre quadrature over finite and semi-infinite
//! intervals. This is the independent oracle that every closed-form
//! observable in the library is checked against.
//!
//! Each panel is evaluated with a fixed 15-point Gauss rule; the error
//! estimate is the difference against an embedded 7-point rule, and the
//! worst panel is split until the summed estimate meets the tolerance.
//! Semi-infinite integrals are truncated by extending geometrically growing
//! segments until two consecutive segments contribute below tolerance.

use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Relative tolerance used by the oracle integrations.
pub const ORACLE_REL_TOL: f64 = 1e-10;
/// Evaluation budget before an integration reports non-convergence.
pub const DEFAULT_MAX_EVALUATIONS: u64 = 1_000_000;
/// Absolute floor added to every tolerance so near-zero integrals terminate.
pub const ABS_FLOOR: f64 = 1e-14;

/// Value, error estimate, and evaluation count of one integration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub error_estimate: f64,
    pub evaluations: u64,
}

/// Fixed-order Gauss-Legendre rule. Nodes and weights are generated by
/// Newton iteration on the Legendre recurrence, so the rule is exact for
/// polynomials up to degree 2n - 1 without transcribed tables.
pub struct GaussLegendre {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussLegendre {
    pub fn new(order: usize) -> Self {
        assert!(order >= 2, "Gauss rule needs at least two nodes");
        let mut nodes = vec![0.0; order];
        let mut weights = vec![0.0; order];
        let n = order as f64;
        for i in 0..order {
            // Chebyshev-like initial guess, refined by Newton.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n + 0.5)).cos();
            for _ in 0..100 {
                let (p, dp) = legendre_with_derivative(order, x);
                let dx = p / dp;
                x -= dx;
                if dx.abs() < 2.0 * f64::EPSILON {
                    break;
                }
            }
            let (_, dp) = legendre_with_derivative(order, x);
            nodes[i] = x;
            weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
        Self { nodes, weights }
    }

    pub fn order(&self) -> usize {
        self.nodes.len()
    }

    /// Integrates f over [a, b] with the fixed rule.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F, a: f64, b: f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut sum = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            sum += w * f(mid + half * x);
        }
        half * sum
    }
}

fn legendre_with_derivative(order: usize, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut p = x;
    for k in 1..order {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        p_prev = p;
        p = p_next;
    }
    let dp = order as f64 * (x * p - p_prev) / (x * x - 1.0);
    (p, dp)
}

fn rules() -> &'static (GaussLegendre, GaussLegendre) {
    static RULES: OnceLock<(GaussLegendre, GaussLegendre)> = OnceLock::new();
    RULES.get_or_init(|| (GaussLegendre::new(7), GaussLegendre::new(15)))
}

struct Region {
    error: f64,
    a: f64,
    b: f64,
    value: f64,
}

impl PartialEq for Region {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error && self.a == other.a
    }
}
impl Eq for Region {}
impl PartialOrd for Region {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Region {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then(self.a.total_cmp(&other.a))
    }
}

fn estimate<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Region {
    let (low, high) = rules();
    let coarse = low.integrate(f, a, b);
    let fine = high.integrate(f, a, b);
    Region {
        error: (fine - coarse).abs(),
        a,
        b,
        value: fine,
    }
}

const EVALS_PER_REGION: u64 = 22;

/// Adaptive integration of a piecewise-smooth f over [a, b].
pub fn integrate_finite<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    rel_tol: f64,
) -> Result<QuadratureResult> {
    if a.partial_cmp(&b) != Some(Ordering::Less) {
        return Err(Error::Domain(format!(
            "integration interval needs a < b, got [{a}, {b}]"
        )));
    }
    let mut heap = BinaryHeap::new();
    let mut narrow: Vec<Region> = Vec::new();
    let mut evaluations = EVALS_PER_REGION;
    let first = estimate(&f, a, b);
    let mut value_sum = first.value;
    let mut error_sum = first.error;
    heap.push(first);
    loop {
        if error_sum <= rel_tol * value_sum.abs() + ABS_FLOOR {
            break;
        }
        let Some(worst) = heap.pop() else {
            break; // every region hit the width floor; report what we have
        };
        let width_floor = 16.0 * f64::EPSILON * worst.a.abs().max(worst.b.abs()).max(1.0);
        if worst.b - worst.a < width_floor {
            narrow.push(worst);
            continue;
        }
        if evaluations + 2 * EVALS_PER_REGION > DEFAULT_MAX_EVALUATIONS {
            return Err(Error::NonConvergence {
                evaluations,
                error_estimate: error_sum,
            });
        }
        let mid = 0.5 * (worst.a + worst.b);
        let left = estimate(&f, worst.a, mid);
        let right = estimate(&f, mid, worst.b);
        evaluations += 2 * EVALS_PER_REGION;
        value_sum += left.value + right.value - worst.value;
        error_sum += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum in spatial order for a deterministic, drift-free total.
    let mut regions: Vec<Region> = heap.into_vec();
    regions.append(&mut narrow);
    regions.sort_by(|p, q| p.a.total_cmp(&q.a));
    let mut value = 0.0;
    let mut error = 0.0;
    for region in &regions {
        value += region.value;
        error += region.error;
    }
    Ok(QuadratureResult {
        value,
        error_estimate: error,
        evaluations,
    })
}

/// Adaptive integration of f over [0, infinity) for integrands with at
/// least exponential decay (f(x) e^{x/2} polynomially bounded).
///
/// Segments [0, 32], [32, 64], [64, 128], ... are integrated until two
/// consecutive segments contribute below tolerance; the decay hypothesis
/// bounds the truncated remainder by the last segment.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, rel_tol: f64) -> Result<QuadratureResult> {
    let mut value = 0.0;
    let mut error = 0.0;
    let mut evaluations = 0;
    let mut lower = 0.0_f64;
    let mut width = 32.0_f64;
    let mut negligible_streak = 0;
    let mut last_segment = 0.0_f64;
    while negligible_streak < 2 {
        if lower > 1e7 {
            return Err(Error::NonConvergence {
                evaluations,
                error_estimate: error,
            });
        }
        let segment = integrate_finite(&f, lower, lower + width, rel_tol)?;
        value += segment.value;
        error += segment.error_estimate;
        evaluations += segment.evaluations;
        last_segment = segment.value.abs();
        let threshold = rel_tol * value.abs() * 1e-2 + 1e-16;
        if last_segment <= threshold {
            negligible_streak += 1;
        } else {
            negligible_streak = 0;
        }
        lower += width;
        width *= 2.0;
    }
    Ok(QuadratureResult {
        value,
        error_estimate: error + last_segment,
        evaluations,
    })
}
