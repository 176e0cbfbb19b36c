//! Error type shared by all modules.

use std::fmt;

/// Precondition violations surfaced by the toolkit.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A projective operation received the zero vector.
    ZeroVector,
    /// A matrix does not preserve the Hermitian form within tolerance.
    NotFormPreserving { deviation: f64 },
    /// A lift was expected to be a null vector but is not.
    NotNull { form_value: f64 },
    /// A finite Heisenberg point was required but `∞` was supplied.
    InfinitePoint,
    /// The Cartan angular invariant needs three distinct points.
    CoincidentPoints,
    /// The element fixes `∞` (entry `g = 0`), so it has no isometric sphere.
    FixesInfinity,
    /// Generator data `(s, t) = (0, 0)` describes a trivial translation.
    TrivialTranslation,
    /// Criterion evaluation requires `θ₁ − θ₂ ∈ [−π/2, π/2]`.
    NotNormalized { delta_theta: f64 },
    /// A fan operation was given a fan with the wrong direction angle.
    FanAngleMismatch { expected: f64, got: f64 },
    /// Generic out-of-range argument.
    InvalidParameter(&'static str),
    /// The word-nesting basepoint is not in the common exterior.
    BasepointOutsideDomain { margin: f64 },
    /// A sampling verifier needs more samples to be meaningful.
    TooFewSamples { required: usize, got: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::ZeroVector => write!(f, "zero vector has no projective class"),
            Error::NotFormPreserving { deviation } => {
                write!(f, "matrix does not preserve the Hermitian form (|P*HP - H| = {deviation:.3e})")
            }
            Error::NotNull { form_value } => {
                write!(f, "vector is not null (<z,z> = {form_value:.3e})")
            }
            Error::InfinitePoint => write!(f, "operation requires finite Heisenberg points"),
            Error::CoincidentPoints => write!(f, "points must be pairwise distinct"),
            Error::FixesInfinity => {
                write!(f, "element fixes infinity and has no isometric sphere")
            }
            Error::TrivialTranslation => {
                write!(f, "(s, t) = (0, 0) is a trivial Heisenberg translation")
            }
            Error::NotNormalized { delta_theta } => {
                write!(f, "parameters not normalized: theta1 - theta2 = {delta_theta} outside [-pi/2, pi/2]")
            }
            Error::FanAngleMismatch { expected, got } => {
                write!(f, "fan direction {got} does not match generator angle {expected}")
            }
            Error::InvalidParameter(what) => write!(f, "invalid parameter: {what}"),
            Error::BasepointOutsideDomain { margin } => {
                write!(f, "basepoint is not in the common exterior (margin {margin:.3e})")
            }
            Error::TooFewSamples { required, got } => {
                write!(f, "need at least {required} samples, got {got}")
            }
        }
    }
}

impl std::error::Error for Error {}
