//! Errors raised by formula construction and transformation.

use thiserror::Error;

/// Malformed input to a formula constructor or transformation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    /// A literal names a variable outside `1..=n`.
    #[error("variable index {var} out of range 1..={n}")]
    VarOutOfRange { var: u32, n: u32 },

    /// A cube was given a contrary pair of literals; such a conjunction
    /// is false everywhere and is not a valid cube.
    #[error("contrary pair on variable {var} in cube literals")]
    ContraryInCube { var: u32 },

    /// Expansion to pairwise-alternative full-width cubes was refused:
    /// the result may hold up to 2^n cubes, which is unacceptably large
    /// above the cap.
    #[error(
        "refusing to expand over {n} variables (cap {cap}): \
         the result may hold up to 2^{n} full-width cubes"
    )]
    ExpansionCapExceeded { n: u32, cap: u32 },
}
