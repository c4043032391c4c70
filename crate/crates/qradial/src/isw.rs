//! Infinite spherical well of radius R: Bessel-zero spectrum, normalized
//! wavefunctions, dimensionless shape factors, and radial observables.
//!
//! The well radius is fixed at R = 1 internally; lengths are reported in R
//! and momenta in hbar/R. The shape factors are produced by adaptive
//! quadrature of the elementary Bessel integrands -- the hypergeometric
//! closed forms only serve as a certification-gated cross-check because the
//! series cancels catastrophically at the larger zeros.

use crate::error::{Error, Result};
use crate::observables::RadialObservables;
use crate::quadrature::{integrate_finite, ORACLE_REL_TOL};
use crate::specfun::{spherical_bessel_j, spherical_bessel_j_derivative, spherical_bessel_zero};

/// Scan cap on the azimuthal quantum number.
pub const MAX_L: u32 = 10;

/// A validated well state (n >= 1, l <= MAX_L) with its located zero z_{nl}.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IswState {
    n: u32,
    l: u32,
    zero: f64,
}

/// Dimensionless moment factors of a well state: `a` = <r>/R,
/// `b` = <r^2>/R^2, and `d` = the orbital share of <p_r^2> in units of
/// (z hbar/R)^2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShapeFactors {
    pub a: f64,
    pub b: f64,
    pub d: f64,
}

impl IswState {
    pub fn new(n: u32, l: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidQuantumNumbers(
                "well index n must be at least 1".into(),
            ));
        }
        if l > MAX_L {
            return Err(Error::InvalidQuantumNumbers(format!(
                "well scan is capped at l <= {MAX_L}, got {l}"
            )));
        }
        let zero = spherical_bessel_zero(l, n)?.value;
        Ok(Self { n, l, zero })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn l(&self) -> u32 {
        self.l
    }
    /// The located zero z_{nl} of j_l.
    pub fn zero(&self) -> f64 {
        self.zero
    }

    /// E in units of hbar^2/(2 m R^2): exactly z_{nl}^2.
    pub fn energy(&self) -> f64 {
        self.zero * self.zero
    }

    /// C_{nl} = 1/|j_{l+1}(z_{nl})|; equals z_{nl} for l = 0.
    pub fn norm_coefficient(&self) -> f64 {
        1.0 / spherical_bessel_j(self.l + 1, self.zero).abs()
    }

    /// N_{nl} = sqrt(2/R^3) C_{nl} with R = 1.
    pub fn normalization_constant(&self) -> f64 {
        std::f64::consts::SQRT_2 * self.norm_coefficient()
    }

    /// R_{nl}(r) for r in [0, 1]; identically zero outside the well.
    pub fn radial_wavefunction(&self, r: f64) -> f64 {
        assert!(r >= 0.0, "radius must be non-negative, got {r}");
        if r > 1.0 {
            return 0.0;
        }
        self.normalization_constant() * spherical_bessel_j(self.l, self.zero * r)
    }

    /// dR_{nl}/dr for 0 < r <= 1; zero outside the well.
    pub fn radial_wavefunction_derivative(&self, r: f64) -> f64 {
        assert!(r > 0.0, "derivative requires r > 0, got {r}");
        if r > 1.0 {
            return 0.0;
        }
        self.normalization_constant()
            * self.zero
            * spherical_bessel_j_derivative(self.l, self.zero * r)
    }

    /// Shape factors by adaptive quadrature of the elementary integrands.
    pub fn shape_factors(&self) -> Result<ShapeFactors> {
        let z = self.zero;
        let l = self.l;
        let j_next = spherical_bessel_j(l + 1, z);
        let w2 = j_next * j_next;
        let third = integrate_finite(
            |rho| rho.powi(3) * spherical_bessel_j(l, rho).powi(2),
            0.0,
            z,
            ORACLE_REL_TOL,
        )?;
        let fourth = integrate_finite(
            |rho| rho.powi(4) * spherical_bessel_j(l, rho).powi(2),
            0.0,
            z,
            ORACLE_REL_TOL,
        )?;
        let a = 2.0 / (z.powi(4) * w2) * third.value;
        let b = 2.0 / (z.powi(5) * w2) * fourth.value;
        let d = if l == 0 {
            0.0
        } else {
            let ll = (l * (l + 1)) as f64;
            let plain = integrate_finite(
                |rho| spherical_bessel_j(l, rho).powi(2),
                0.0,
                z,
                ORACLE_REL_TOL,
            )?;
            2.0 * ll / (z.powi(3) * w2) * plain.value
        };
        Ok(ShapeFactors { a, b, d })
    }

    /// <1/r^2> in units of 1/R^2.
    pub fn mean_inverse_square_radius(&self) -> Result<f64> {
        let z = self.zero;
        let j_next = spherical_bessel_j(self.l + 1, z);
        let plain = integrate_finite(
            |rho| spherical_bessel_j(self.l, rho).powi(2),
            0.0,
            z,
            ORACLE_REL_TOL,
        )?;
        Ok(2.0 / (z * j_next * j_next) * plain.value)
    }

    /// The closed-form observable bundle (lengths in R, momenta in hbar/R).
    pub fn observables(&self) -> Result<RadialObservables> {
        let z = self.zero;
        let sf = self.shape_factors()?;
        let delta_r = (sf.b - sf.a * sf.a).sqrt();
        let delta_pr = z * (1.0 - sf.d).sqrt();
        Ok(RadialObservables {
            mean_r: sf.a,
            mean_r2: sf.b,
            mean_inv_r: None,
            mean_inv_r2: Some(self.mean_inverse_square_radius()?),
            delta_r,
            mean_pr: 0.0,
            mean_pr2: z * z * (1.0 - sf.d),
            delta_pr,
            sigma_r: delta_r / sf.a,
            product: delta_r * delta_pr,
        })
    }
}

/// Peak of the ground-state radial density: R/2.
pub fn most_probable_radius_ground() -> f64 {
    0.5
}
