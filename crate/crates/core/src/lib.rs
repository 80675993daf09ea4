//! Spectra of drift Laplacians on rigid gradient Ricci solitons.
//!
//! The library enumerates the full discrete spectrum of the drift
//! Laplacian on products of a compact Einstein factor with a Gaussian
//! factor, exactly where the factor spectrum is analytic and with
//! certified completeness cutoffs throughout. Around that core it
//! provides:
//!
//! - [`spectrum`]: the sorted-multiset spectrum type and the
//!   product-spectrum (Minkowski-sum) enumerator;
//! - [`hermite`]: Hermite polynomials, Gaussian-factor eigenfunctions and
//!   Gaussian-weighted quadrature;
//! - [`factor`]: round-sphere spectra and validated ingestion of external
//!   factor spectra (hyperbolic surfaces and synthetic data);
//! - [`rigid`]: rigid-soliton models, their spectra, the second-eigenvalue
//!   trichotomy for expanders, and soliton identity checks;
//! - [`surface`]: genus-dependent eigenvalue bounds for hyperbolic
//!   surfaces and the genus-threshold scan;
//! - [`verify`]: finite-difference discretizations of the equivalent
//!   one-dimensional operators, a deterministic tridiagonal eigensolver,
//!   convergence studies and the conjugation-identity residual.
//!
//! Everything is pure and deterministic: identical inputs produce
//! identical outputs, and all values are immutable once constructed, so
//! they can be shared freely across threads.

pub mod comb;
pub mod error;
pub mod factor;
pub mod hermite;
pub mod rigid;
pub mod scalar;
pub mod spectrum;
pub mod surface;
pub mod tridiag;
pub mod verify;

pub use error::{Result, SpectraError};
pub use factor::{
    hyperbolic_bottom, load_factor_spectrum, sphere_spectrum, write_factor_spectrum,
    FactorSpectrum, SpectrumFile, SpectrumFileLine,
};
pub use hermite::{
    drift_residual, he_eval, weighted_inner_product, GaussHermiteRule, GaussianEigenfunction,
    GaussianMode, SampleGrid,
};
pub use rigid::{
    normalization_constant, potential_growth_check, rigid_spectrum, schrodinger_potential,
    second_eigenvalue_case, EigenfunctionDescriptor, GrowthReport, LowerBoundStatus,
    NormalizationCheck, PotentialProfile, SecondEigenvalue, SecondEigenvalueCase, SolitonModel,
};
pub use scalar::ScalarValue;
pub use spectrum::{DiscreteSpectrum, Provenance, SpectralLine};
pub use surface::{
    genus_threshold, kv_bound, yang_yau_bound, GenusRow, GenusThresholdReport, SurfaceData,
};
pub use verify::conjugation::{
    conjugation_residual, standard_profile_pairs, standard_test_functions, PolyGaussian,
    QuadraticProfile,
};
pub use verify::{
    assemble, convergence_study, eigen_smallest, equivalence_check, schrodinger_potential_value,
    ConvergenceReport, DiscretizedOperator, EigenResult, EquivalenceReport, OperatorForm,
    OperatorGrid,
};
