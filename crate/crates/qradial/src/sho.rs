//! Isotropic three-dimensional harmonic oscillator in the radial picture:
//! parity-constrained states, wavefunctions, moment integrals, observables,
//! and the degeneracy/parity bookkeeping.
//!
//! Natural units: lengths in sqrt(hbar/(m omega)), momenta in
//! sqrt(m hbar omega), energies in hbar omega. The internal oscillator
//! parameter alpha = m omega / hbar is 1 unless a caller passes its own.

use crate::error::{Error, Result};
use crate::observables::RadialObservables;
use crate::quadrature::integrate_semi_infinite;
use crate::specfun::{
    assoc_laguerre, assoc_laguerre_deriv, factorial, gamma, LaguerreIndex,
};

const INTEGRAL_REL_TOL: f64 = 1e-13;

/// A validated oscillator state: n >= 0 and l in {n, n-2, ..., l_min}, i.e.
/// (n - l) even and non-negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShoState {
    n: u32,
    l: u32,
}

/// The dimensionless ingredients of the oscillator observables:
/// `norm_ratio` = q!/Gamma(p + 3/2) (reciprocal of the normalization
/// integral), `first_moment` = the eta^{l+1}-weighted Laguerre-square
/// integral behind <r>, and `inv_sq_moment` = the eta^{l-1/2}-weighted one
/// behind <1/r^2>.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShoIntegrals {
    pub norm_ratio: f64,
    pub first_moment: f64,
    pub inv_sq_moment: f64,
}

impl ShoState {
    pub fn new(n: u32, l: u32) -> Result<Self> {
        if l > n || !(n - l).is_multiple_of(2) {
            return Err(Error::ParityViolation { n, l });
        }
        Ok(Self { n, l })
    }

    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn l(&self) -> u32 {
        self.l
    }

    /// Radial quantum number q = (n - l)/2: the node count.
    pub fn radial_nodes(&self) -> u32 {
        (self.n - self.l) / 2
    }

    fn p(&self) -> u32 {
        (self.n + self.l) / 2
    }

    fn laguerre_index(&self) -> LaguerreIndex {
        LaguerreIndex::new(self.radial_nodes(), self.l as f64 + 0.5)
    }

    /// E in units of hbar omega: n + 3/2.
    pub fn energy(&self) -> f64 {
        self.n as f64 + 1.5
    }

    /// q!/Gamma(p + 3/2) -- exact gamma arithmetic.
    pub fn norm_ratio(&self) -> f64 {
        factorial(self.radial_nodes()) / gamma(self.p() as f64 + 1.5)
    }

    /// N_{nl} = sqrt(2 alpha^{3/2} q!/Gamma(p + 3/2)).
    pub fn normalization_constant(&self, alpha: f64) -> f64 {
        assert!(alpha > 0.0, "oscillator parameter must be positive");
        (2.0 * alpha.powf(1.5) * self.norm_ratio()).sqrt()
    }

    /// R_{nl}(r) = N (sqrt(alpha) r)^l e^{-alpha r^2/2} L^{l+1/2}_q(alpha r^2).
    pub fn radial_wavefunction(&self, r: f64, alpha: f64) -> f64 {
        assert!(r >= 0.0, "radius must be non-negative, got {r}");
        let eta = alpha * r * r;
        self.normalization_constant(alpha)
            * (alpha.sqrt() * r).powi(self.l as i32)
            * (-0.5 * eta).exp()
            * assoc_laguerre(self.laguerre_index(), eta)
    }

    /// dR_{nl}/dr for r > 0.
    pub fn radial_wavefunction_derivative(&self, r: f64, alpha: f64) -> f64 {
        assert!(r > 0.0, "derivative requires r > 0, got {r}");
        let eta = alpha * r * r;
        let idx = self.laguerre_index();
        let lag = assoc_laguerre(idx, eta);
        let dlag = if self.radial_nodes() == 0 {
            0.0
        } else {
            assoc_laguerre_deriv(idx, eta)
        };
        let x = alpha.sqrt() * r;
        let lf = self.l as f64;
        let envelope = x.powi(self.l as i32) * (-0.5 * eta).exp();
        // Product rule in r: d eta/dr = 2 alpha r.
        let bracket = (lf / r - alpha * r) * lag + 2.0 * alpha * r * dlag;
        self.normalization_constant(alpha) * envelope * bracket
    }

    /// The moment integrals by semi-infinite quadrature. Substituting
    /// eta = t^2 removes the eta^{-1/2} endpoint singularity of the
    /// inverse-square moment, leaving smooth Gaussian-decay integrands.
    pub fn integrals(&self) -> Result<ShoIntegrals> {
        let idx = self.laguerre_index();
        let l = self.l as i32;
        let first = integrate_semi_infinite(
            move |t| {
                let eta = t * t;
                2.0 * t.powi(2 * l + 3) * (-eta).exp() * assoc_laguerre(idx, eta).powi(2)
            },
            INTEGRAL_REL_TOL,
        )?;
        let inv_sq = integrate_semi_infinite(
            move |t| {
                let eta = t * t;
                2.0 * t.powi(2 * l) * (-eta).exp() * assoc_laguerre(idx, eta).powi(2)
            },
            INTEGRAL_REL_TOL,
        )?;
        Ok(ShoIntegrals {
            norm_ratio: self.norm_ratio(),
            first_moment: first.value,
            inv_sq_moment: inv_sq.value,
        })
    }

    /// Gamma closed form of the first-moment integral, available for
    /// q <= 3 node counts.
    pub fn first_moment_closed_form(&self) -> Option<f64> {
        let n = self.n as f64;
        match self.radial_nodes() {
            0 => Some(gamma(2.0 + n)),
            1 => Some((0.25 + n) * gamma(n)),
            2 => Some((33.0 + 16.0 * n * (-5.0 + 2.0 * n)) / 64.0 * gamma(n - 2.0)),
            3 => Some(
                (-1965.0 + 4.0 * n * (667.0 + 8.0 * n * (-33.0 + 4.0 * n))) / 768.0
                    * gamma(n - 4.0),
            ),
            _ => None,
        }
    }

    /// The three pieces of the <p_r> integral; they sum to zero.
    pub fn mean_pr_terms(&self) -> Result<[f64; 3]> {
        let idx = self.laguerre_index();
        let l = self.l as i32;
        let q = self.radial_nodes();
        let square = move |power: i32| {
            integrate_semi_infinite(
                move |eta: f64| eta.powi(power) * (-eta).exp() * assoc_laguerre(idx, eta).powi(2),
                1e-12,
            )
        };
        let plain = square(l)?.value;
        let weighted = square(l + 1)?.value;
        let first = (self.l as f64 / 2.0 + q as f64 + 0.5) * plain;
        let second = -0.5 * weighted;
        let third = if q == 0 {
            0.0
        } else {
            let lower = LaguerreIndex::new(q - 1, idx.alpha);
            let cross = integrate_semi_infinite(
                move |eta: f64| {
                    eta.powi(l)
                        * (-eta).exp()
                        * assoc_laguerre(idx, eta)
                        * assoc_laguerre(lower, eta)
                },
                1e-12,
            )?
            .value;
            -(q as f64 + idx.alpha) * cross
        };
        Ok([first, second, third])
    }

    /// The closed-form observable bundle in oscillator natural units.
    pub fn observables(&self) -> Result<RadialObservables> {
        let ints = self.integrals()?;
        let mean_r = ints.norm_ratio * ints.first_moment;
        let mean_r2 = self.energy(); // virial route: <r^2> = n + 3/2
        let mean_inv_r2 = ints.norm_ratio * ints.inv_sq_moment;
        let ll = (self.l * (self.l + 1)) as f64;
        let delta_r = (mean_r2 - mean_r * mean_r).sqrt();
        let mean_pr2 = self.energy() - ll * mean_inv_r2;
        let delta_pr = mean_pr2.sqrt();
        Ok(RadialObservables {
            mean_r,
            mean_r2,
            mean_inv_r: None,
            mean_inv_r2: Some(mean_inv_r2),
            delta_r,
            mean_pr: 0.0,
            mean_pr2,
            delta_pr,
            sigma_r: delta_r / mean_r,
            product: delta_r * delta_pr,
        })
    }
}

/// The admissible azimuthal numbers for level n, descending:
/// n, n-2, ..., down to 1 (n odd) or 0 (n even).
pub fn allowed_ell(n: u32) -> Vec<u32> {
    let mut values = Vec::with_capacity((n as usize) / 2 + 1);
    let mut l = n as i64;
    while l >= 0 {
        values.push(l as u32);
        l -= 2;
    }
    values
}

/// Level degeneracy Sigma (2l + 1) over the allowed l, and parity (-1)^n.
pub fn degeneracy_parity(n: u32) -> (u64, i8) {
    let d = allowed_ell(n).iter().map(|&l| 2 * l as u64 + 1).sum();
    let parity = if n.is_multiple_of(2) { 1 } else { -1 };
    (d, parity)
}

/// Peak of the ground-state radial density: 1/sqrt(alpha).
pub fn most_probable_radius_ground(alpha: f64) -> f64 {
    assert!(alpha > 0.0);
    1.0 / alpha.sqrt()
}
