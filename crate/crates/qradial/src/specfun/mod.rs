//! Special functions shared by the three physical systems: gamma,
//! generalized Laguerre polynomials, spherical Bessel functions with their
//! zeros, and the generalized hypergeometric 2F3.
//!
//! Everything here is a pure function of its arguments and safe to call
//! concurrently.

mod bessel;
mod gamma;
mod hyp2f3;
mod laguerre;

pub use bessel::{
    spherical_bessel_j, spherical_bessel_j_derivative, spherical_bessel_zero, BesselZero,
    MAX_ZERO_INDEX, MAX_ZERO_ORDER,
};
pub use gamma::{factorial, gamma, gamma_recip};
pub use hyp2f3::{hyp2f3, hyp2f3_regularized, hyp2f3_series, Hyp2F3Params, SeriesEval};
pub use laguerre::{assoc_laguerre, assoc_laguerre_deriv, LaguerreIndex};
