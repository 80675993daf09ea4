//! Error type shared by every module of the crate.

use thiserror::Error;

/// Errors produced by spectrum construction, model validation and the
/// numerical verification routines.
#[derive(Debug, Error)]
pub enum SpectraError {
    /// A precondition on an argument was violated.
    #[error("invalid input: {0}")]
    InvalidInput(String),

    /// An operation that needs a smallest line was handed an empty spectrum.
    #[error("empty spectrum: no minimum exists")]
    EmptySpectrum,

    /// A request reached past the certified completeness cutoff.
    #[error("incomplete spectrum: certified complete only below {cutoff}: {detail}")]
    IncompleteSpectrum { cutoff: f64, detail: String },

    /// Hermite evaluation past the double-precision safety limit.
    #[error("Hermite degree {degree} exceeds the supported limit {limit}")]
    DegreeLimit { degree: u32, limit: u32 },

    /// A factor-spectrum document failed validation; every violated
    /// invariant is listed.
    #[error("spectrum file rejected: {}", violations.join("; "))]
    InvalidSpectrumFile { violations: Vec<String> },

    /// Eigenfunction mode and sign of the soliton constant disagree.
    #[error("sign mismatch: {0}")]
    SignMismatch(String),

    /// A multiplicity computation exceeded the integer range.
    #[error("multiplicity overflow: {0}")]
    MultiplicityOverflow(String),

    /// Malformed spectrum document.
    #[error("spectrum file parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, SpectraError>;
