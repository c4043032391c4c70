//! One-electron (hydrogenic) bound states: wavefunctions, closed-form radial
//! observables, level energies, and degeneracy counting.
//!
//! Observables are computed in natural units -- lengths in a0/Z, momenta in
//! Z hbar/a0, the uncertainty product in hbar -- which makes every bundle
//! independent of the atomic number. SI only enters through [`HydrogenicState::energy`].

use crate::constants::{self, ReducedMassEntry};
use crate::error::{Error, Result};
use crate::observables::RadialObservables;
use crate::specfun::{assoc_laguerre, assoc_laguerre_deriv, factorial, LaguerreIndex};

/// A validated hydrogenic state: atomic number Z >= 1, principal quantum
/// number n >= 1, and azimuthal quantum number 0 <= l <= n - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HydrogenicState {
    z: u32,
    n: u32,
    l: u32,
}

impl HydrogenicState {
    pub fn new(z: u32, n: u32, l: u32) -> Result<Self> {
        if z == 0 {
            return Err(Error::InvalidQuantumNumbers(
                "atomic number Z must be at least 1".into(),
            ));
        }
        if n == 0 {
            return Err(Error::InvalidQuantumNumbers(
                "principal quantum number n must be at least 1".into(),
            ));
        }
        if l >= n {
            return Err(Error::InvalidQuantumNumbers(format!(
                "azimuthal quantum number must satisfy 0 <= l <= n - 1, got n={n}, l={l}"
            )));
        }
        Ok(Self { z, n, l })
    }

    pub fn z(&self) -> u32 {
        self.z
    }
    pub fn n(&self) -> u32 {
        self.n
    }
    pub fn l(&self) -> u32 {
        self.l
    }

    fn laguerre_index(&self) -> LaguerreIndex {
        LaguerreIndex::new(self.n - self.l - 1, 2.0 * self.l as f64 + 1.0)
    }

    /// 2Z/(n a0) with a0 = 1: converts r in a0 units to the dimensionless
    /// Laguerre argument.
    fn rho_scale(&self) -> f64 {
        2.0 * self.z as f64 / self.n as f64
    }

    /// N_{nl} in units of a0^{-3/2}.
    pub fn normalization_constant(&self) -> f64 {
        let s = self.rho_scale();
        let n = self.n;
        let l = self.l;
        (s.powi(3) * factorial(n - l - 1) / (2.0 * n as f64 * factorial(n + l))).sqrt()
    }

    /// R_{nl}(r) with r in units of a0, in units of a0^{-3/2}.
    pub fn radial_wavefunction(&self, r: f64) -> f64 {
        assert!(r >= 0.0, "radius must be non-negative, got {r}");
        let rho = self.rho_scale() * r;
        self.normalization_constant()
            * (-0.5 * rho).exp()
            * rho.powi(self.l as i32)
            * assoc_laguerre(self.laguerre_index(), rho)
    }

    /// dR_{nl}/dr for r > 0, from the Laguerre derivative identity.
    pub fn radial_wavefunction_derivative(&self, r: f64) -> f64 {
        assert!(r > 0.0, "derivative requires r > 0, got {r}");
        let s = self.rho_scale();
        let rho = s * r;
        let idx = self.laguerre_index();
        let lag = assoc_laguerre(idx, rho);
        let dlag = assoc_laguerre_deriv(idx, rho);
        let lf = self.l as f64;
        let envelope = (-0.5 * rho).exp() * rho.powi(self.l as i32);
        // d/drho of e^{-rho/2} rho^l L(rho), then chain rule by s.
        let d_rho = envelope * (-0.5 * lag + lf / rho * lag + dlag);
        self.normalization_constant() * d_rho * s
    }

    /// The closed-form observable bundle. Independent of Z by construction.
    pub fn observables(&self) -> RadialObservables {
        let n = self.n as f64;
        let ll = (self.l * (self.l + 1)) as f64;
        let two_l_plus_1 = 2.0 * self.l as f64 + 1.0;
        let mean_r = 0.5 * (3.0 * n * n - ll);
        let mean_r2 = 0.5 * n * n * (5.0 * n * n - 3.0 * ll + 1.0);
        let delta_r = 0.5 * (n * n * (n * n + 2.0) - ll * ll).sqrt();
        let pr_factor = 1.0 - 2.0 * ll / (n * two_l_plus_1);
        let delta_pr = pr_factor.sqrt() / n;
        RadialObservables {
            mean_r,
            mean_r2,
            mean_inv_r: Some(1.0 / (n * n)),
            mean_inv_r2: Some(2.0 / (two_l_plus_1 * n * n * n)),
            delta_r,
            mean_pr: 0.0,
            mean_pr2: pr_factor / (n * n),
            delta_pr,
            sigma_r: delta_r / mean_r,
            product: delta_r * delta_pr,
        }
    }

    /// Level energy E_n = -Z^2 hbar^2 / (2 mu n^2 a0^2) with a0 derived from
    /// the same reduced mass, reported in joules and electron volts.
    pub fn energy(&self, entry: &ReducedMassEntry) -> Result<EnergyLevel> {
        if entry.z != self.z {
            return Err(Error::ReducedMassMismatch {
                state_z: self.z,
                entry_z: entry.z,
            });
        }
        let mu = entry.mass_kg;
        let hbar = constants::HBAR;
        let ke2 = constants::coulomb_constant() * constants::ELEMENTARY_CHARGE.powi(2);
        let bohr = hbar * hbar / (mu * ke2);
        let n = self.n as f64;
        let z = self.z as f64;
        let joules = -z * z * hbar * hbar / (2.0 * mu * n * n * bohr * bohr);
        Ok(EnergyLevel {
            joules,
            electron_volts: joules / constants::ELECTRON_VOLT,
        })
    }
}

/// A bound-level energy in SI and electron volts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyLevel {
    pub joules: f64,
    pub electron_volts: f64,
}

/// Peak of the ground-state radial density, a0/Z in units of a0.
pub fn most_probable_radius_ground(z: u32) -> f64 {
    assert!(z >= 1);
    1.0 / z as f64
}

/// Number of (l, m) states sharing level n, summed as Sigma (2l + 1) = n^2.
pub fn degeneracy(n: u32) -> u64 {
    assert!(n >= 1);
    (0..n).map(|l| 2 * l as u64 + 1).sum()
}

/// Degeneracy including the two spin orientations, 2 n^2.
pub fn degeneracy_with_spin(n: u32) -> u64 {
    2 * degeneracy(n)
}
