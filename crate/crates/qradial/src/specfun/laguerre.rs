//! Generalized (associated) Laguerre polynomials L^a_b.
//!
//! Convention fixed by the weight x^a e^{-x} orthogonality with squared norm
//! Gamma(a + b + 1) / Gamma(b + 1). Evaluation uses the ascending three-term
//! recurrence in the degree, which is stable on x >= 0.

/// Degree `b` and superscript `a` of a generalized Laguerre polynomial.
///
/// The superscript is an integer for hydrogenic states and a half-integer
/// for oscillator states; any non-negative real is accepted.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreIndex {
    pub degree: u32,
    pub alpha: f64,
}

impl LaguerreIndex {
    pub fn new(degree: u32, alpha: f64) -> Self {
        assert!(
            alpha.is_finite() && alpha >= 0.0,
            "Laguerre superscript must be finite and non-negative, got {alpha}"
        );
        Self { degree, alpha }
    }
}

/// L^a_b(x) for x >= 0.
///
/// Seeded with L^a_0 = 1 and L^a_1 = 1 + a - x, then
/// (k + 1) L^a_{k+1} = (2k + 1 + a - x) L^a_k - (k + a) L^a_{k-1}.
pub fn assoc_laguerre(idx: LaguerreIndex, x: f64) -> f64 {
    assert!(x >= 0.0, "Laguerre argument must be non-negative, got {x}");
    let a = idx.alpha;
    if idx.degree == 0 {
        return 1.0;
    }
    let mut previous = 1.0;
    let mut current = 1.0 + a - x;
    for k in 1..idx.degree {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 + a - x) * current - (kf + a) * previous) / (kf + 1.0);
        previous = current;
        current = next;
    }
    current
}

/// d/dx L^a_b(x) for x > 0, via x L' = b L^a_b - (b + a) L^a_{b-1}.
pub fn assoc_laguerre_deriv(idx: LaguerreIndex, x: f64) -> f64 {
    assert!(
        x > 0.0,
        "Laguerre derivative identity requires x > 0, got {x}"
    );
    if idx.degree == 0 {
        return 0.0;
    }
    let b = idx.degree as f64;
    let lower = LaguerreIndex::new(idx.degree - 1, idx.alpha);
    (b * assoc_laguerre(idx, x) - (b + idx.alpha) * assoc_laguerre(lower, x)) / x
}
