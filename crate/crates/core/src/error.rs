//! Error types shared by the series model and the recursion engines.

use core::fmt;

/// Rejections raised while building or transforming Puiseux-series data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelError {
    /// The support contains the same exponent (pair) twice; supports are sets.
    DuplicateExponent,
    /// A curve exponent is zero or negative.
    NonPositiveExponent,
    /// A surface exponent pair has a negative component.
    NegativeExponent,
    /// The given list violates the characteristic-data invariants
    /// (ordering or the lattice-independence condition).
    InvalidCharacteristics,
    /// The support cannot come from a normalized quasi-ordinary branch:
    /// a non-characteristic pair is not generated by the characteristic
    /// pairs below it, or the characteristic pairs are incomparable.
    NotQuasiOrdinary,
    /// Every characteristic pair has vanishing second exponent, so the
    /// germ is not singular along a transverse slice and the reduction
    /// of the non-reduced case does not apply.
    AllHorizontalPairs,
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::DuplicateExponent => write!(f, "duplicate exponent in support"),
            ModelError::NonPositiveExponent => {
                write!(f, "curve exponents must be strictly positive")
            }
            ModelError::NegativeExponent => write!(f, "exponents must be nonnegative"),
            ModelError::InvalidCharacteristics => {
                write!(f, "list violates the characteristic-data invariants")
            }
            ModelError::NotQuasiOrdinary => {
                write!(f, "support does not satisfy the quasi-ordinary conditions")
            }
            ModelError::AllHorizontalPairs => write!(
                f,
                "every characteristic pair has second exponent 0; no transverse singularity"
            ),
        }
    }
}

impl core::error::Error for ModelError {}

/// Rejections raised by the truncation/derivation engines.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EngineError {
    /// The operation needs at least one characteristic exponent or pair.
    EmptyCharacteristics,
    /// The surface recursion requires reduced input (first pair has μ > 0);
    /// apply the reduction first.
    NotReduced,
    /// Truncation parameters violate their constraints (coprimality or
    /// positivity).
    InvalidParameters(&'static str),
}

impl fmt::Display for EngineError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EngineError::EmptyCharacteristics => {
                write!(f, "operation requires nonempty characteristic data")
            }
            EngineError::NotReduced => {
                write!(f, "surface is not reduced; apply the reduction first")
            }
            EngineError::InvalidParameters(msg) => write!(f, "invalid parameters: {msg}"),
        }
    }
}

impl core::error::Error for EngineError {}
