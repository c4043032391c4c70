use std::fmt;

/// Errors surfaced by state construction, special-function evaluation, and
/// the quadrature oracle.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Quantum numbers violate the constraints of the requested system.
    InvalidQuantumNumbers(String),
    /// Oscillator states require (n - l) to be an even non-negative integer.
    ParityViolation { n: u32, l: u32 },
    /// Argument outside the supported domain.
    Domain(String),
    /// A root bracket did not straddle a sign change.
    BracketFailure { l: u32, n: u32 },
    /// Series summation lost too many digits to cancellation to certify the
    /// result. The best-effort value is carried along.
    PrecisionLoss { value: f64, significant_digits: f64 },
    /// Adaptive quadrature exceeded its evaluation budget.
    NonConvergence { evaluations: u64, error_estimate: f64 },
    /// Reduced-mass entry does not belong to the requested nucleus.
    ReducedMassMismatch { state_z: u32, entry_z: u32 },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidQuantumNumbers(msg) => write!(f, "invalid quantum numbers: {msg}"),
            Error::ParityViolation { n, l } => write!(
                f,
                "parity violation: oscillator states need n - l even and non-negative, got n={n}, l={l}"
            ),
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::BracketFailure { l, n } => write!(
                f,
                "root bracket for zero n={n} of spherical Bessel j_{l} does not straddle a sign change"
            ),
            Error::PrecisionLoss {
                value,
                significant_digits,
            } => write!(
                f,
                "series cancellation left only {significant_digits:.1} significant digits (value {value:e})"
            ),
            Error::NonConvergence {
                evaluations,
                error_estimate,
            } => write!(
                f,
                "quadrature did not converge after {evaluations} evaluations (error estimate {error_estimate:e})"
            ),
            Error::ReducedMassMismatch { state_z, entry_z } => write!(
                f,
                "reduced-mass entry is for Z={entry_z}, state has Z={state_z}"
            ),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
