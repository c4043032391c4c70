//! Radial wavefunctions, expectation values, and uncertainty products for
//! three spherically symmetric quantum systems -- hydrogenic atoms, the
//! infinite spherical well, and the isotropic harmonic oscillator -- with a
//! built-in quadrature oracle that re-derives every closed form from the
//! defining integrals.
//!
//! ```
//! use qradial::hydrogenic::HydrogenicState;
//!
//! let ground = HydrogenicState::new(1, 1, 0).unwrap();
//! let obs = ground.observables();
//! assert!((obs.mean_r - 1.5).abs() < 1e-12);        // <r> = 3/2 a0
//! assert!(obs.product > 0.5);                        // Delta r Delta p_r > hbar/2
//! ```

pub mod cli;
pub mod constants;
pub mod error;
pub mod hydrogenic;
pub mod isw;
pub mod observables;
pub mod output;
pub mod quadrature;
pub mod sho;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use observables::RadialObservables;

// The guide chapters under book/src double as doctests, so every snippet
// in the book compiles and passes against the current API.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/radial-operators.md")]
    mod radial_operators {}
    #[doc = include_str!("../../../book/src/special-functions.md")]
    mod special_functions {}
    #[doc = include_str!("../../../book/src/quadrature.md")]
    mod quadrature {}
    #[doc = include_str!("../../../book/src/hydrogenic.md")]
    mod hydrogenic {}
    #[doc = include_str!("../../../book/src/spherical-well.md")]
    mod spherical_well {}
    #[doc = include_str!("../../../book/src/harmonic-oscillator.md")]
    mod harmonic_oscillator {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
