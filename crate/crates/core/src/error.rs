use thiserror::Error;

use crate::units::Dimension;

/// Everything that can go wrong inside the library.
///
/// Numeric payloads are carried as `f64` regardless of the scalar type the
/// computation ran in; they are for messages only.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum EsfiError {
    #[error("value must be finite, got {0}")]
    NonFinite(f64),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: Dimension, found: Dimension },

    #[error("Gaussian conversion only supports charge and field, not {0}")]
    UnsupportedGaussianDimension(Dimension),

    #[error("charge number Z must be positive, got {0}")]
    NonPositiveZ(f64),

    #[error("ionization energy must be positive, got {0} eV")]
    NonPositiveIonizationEnergy(f64),

    #[error("field must be positive, got {0}")]
    NonPositiveField(f64),

    #[error("coordinate must be positive, got {0}")]
    NonPositiveCoordinate(f64),

    #[error("parabolic coordinate must be non-negative, got {0}")]
    NegativeCoordinate(f64),

    #[error(
        "field {field} is at or above the deep-tunnelling guard {guard} \
         (set the extrapolation override to evaluate anyway)"
    )]
    ShallowTunnellingRegime { field: f64, guard: f64 },

    #[error("barrier suppressed at field {field}: turning points merge at suppression field {suppression_field}")]
    BarrierSuppressed { field: f64, suppression_field: f64 },

    #[error("could not bracket {what} on [{lo}, {hi}]")]
    BracketingFailure { what: &'static str, lo: f64, hi: f64 },

    #[error("adaptive quadrature did not converge: estimated error {error} after {intervals} intervals")]
    QuadratureNonConvergence { error: f64, intervals: usize },

    #[error("target rate {target:e} outside attainable range [{min:e}, {max:e}] over the bracket")]
    TargetUnattainable { target: f64, min: f64, max: f64 },

    #[error("rate not monotone in field over bracket [{lo}, {hi}]")]
    NonMonotoneBracket { lo: f64, hi: f64 },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("{what} did not converge within {iterations} iterations")]
    NoConvergence { what: &'static str, iterations: usize },
}

pub type Result<T, E = EsfiError> = std::result::Result<T, E>;
