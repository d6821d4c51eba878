//! Error types shared by all modules.

use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: String, actual: String },

    #[error("matrix entries must be finite")]
    NonFiniteEntries,

    #[error("matrix is not Hermitian (max |a - a\u{2020}| entry = {deviation:.3e})")]
    NotHermitian { deviation: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {off:.3e})")]
    EigenNoConvergence { sweeps: usize, off: f64 },

    #[error("eigenvalue {value:.3e} below the PSD tolerance")]
    NegativeEigenvalue { value: f64 },

    #[error("invalid density matrix: {reason}")]
    InvalidDensityMatrix { reason: String },

    #[error("state vector is not normalized (norm = {norm})")]
    NotNormalized { norm: f64 },

    #[error("{name} out of range: got {value}, need {requirement}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        requirement: &'static str,
    },

    #[error("channel `{kind}` not supported here: {reason}")]
    UnsupportedChannel { kind: String, reason: &'static str },

    #[error("unknown {what} `{token}`")]
    UnknownToken { what: &'static str, token: String },

    #[error("undivided-channel state is already separable (E_F = 0); eta is undefined")]
    SeparableReference,

    #[error("yield of the undivided channel is zero; eta is undefined")]
    ZeroReferenceYield,

    #[error("no sign change over bracket [{lo}, {hi}]")]
    NoSignChange { lo: f64, hi: f64 },

    #[error("grid must be non-empty and strictly ascending")]
    InvalidGrid,

    #[error("section count must be at least 1")]
    ZeroSections,
}

impl Error {
    /// True for failures of the numerics themselves, as opposed to bad
    /// arguments. The CLI maps these to a distinct exit code.
    pub fn is_numerical(&self) -> bool {
        matches!(
            self,
            Error::NotHermitian { .. }
                | Error::EigenNoConvergence { .. }
                | Error::NegativeEigenvalue { .. }
                | Error::InvalidDensityMatrix { .. }
                | Error::SeparableReference
                | Error::ZeroReferenceYield
                | Error::NoSignChange { .. }
        )
    }
}
