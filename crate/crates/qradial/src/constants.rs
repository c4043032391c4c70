//! Physical constants (CODATA 2018) and the bundled reduced masses for
//! one-electron systems.
//!
//! The natural-unit core of the library never touches these values; they
//! only enter when converting hydrogenic level energies to SI.

use std::f64::consts::PI;

/// Reduced Planck constant, J s. CODATA 2018 (h = 6.626 070 15e-34 exact).
pub const HBAR: f64 = 1.054_571_817e-34;

/// Elementary charge, C. CODATA 2018 (exact).
pub const ELEMENTARY_CHARGE: f64 = 1.602_176_634e-19;

/// Vacuum permittivity, F/m. CODATA 2018.
pub const VACUUM_PERMITTIVITY: f64 = 8.854_187_812_8e-12;

/// Electron rest mass, kg. CODATA 2018.
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;

/// One electron volt, J. CODATA 2018 (exact).
pub const ELECTRON_VOLT: f64 = 1.602_176_634e-19;

/// Coulomb constant 1/(4 pi eps0), N m^2 C^-2.
pub fn coulomb_constant() -> f64 {
    1.0 / (4.0 * PI * VACUUM_PERMITTIVITY)
}

/// Reduced mass of the electron-nucleus two-body problem for a one-electron
/// system with atomic number `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedMassEntry {
    pub label: &'static str,
    pub z: u32,
    pub mass_kg: f64,
}

/// Bundled reduced masses for H, He+, Li2+, Be3+ (table I of the reference
/// data). All below the electron rest mass and increasing with nuclear mass.
pub const REDUCED_MASSES: [ReducedMassEntry; 4] = [
    ReducedMassEntry {
        label: "H",
        z: 1,
        mass_kg: 9.104_878e-31,
    },
    ReducedMassEntry {
        label: "He+",
        z: 2,
        mass_kg: 9.108_597e-31,
    },
    ReducedMassEntry {
        label: "Li2+",
        z: 3,
        mass_kg: 9.109_010e-31,
    },
    ReducedMassEntry {
        label: "Be3+",
        z: 4,
        mass_kg: 9.109_272e-31,
    },
];

/// Looks up the bundled reduced-mass entry for atomic number `z`.
pub fn reduced_mass_for(z: u32) -> Option<&'static ReducedMassEntry> {
    REDUCED_MASSES.iter().find(|entry| entry.z == z)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_masses_below_electron_mass_and_monotone() {
        let mut previous = 0.0;
        for entry in &REDUCED_MASSES {
            assert!(entry.mass_kg < ELECTRON_MASS);
            assert!(entry.mass_kg > previous);
            previous = entry.mass_kg;
        }
    }

    #[test]
    fn lookup_by_z() {
        assert_eq!(reduced_mass_for(2).unwrap().label, "He+");
        assert!(reduced_mass_for(5).is_none());
    }
}
