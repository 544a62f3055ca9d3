//! Error type shared across the crate.

use thiserror::Error;

/// Everything that can go wrong while assembling or evaluating field
/// quantities. Degree bookkeeping errors are caller bugs surfaced as values
/// rather than panics so the CLI can report them cleanly.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("wedge degree overflow: {p} + {q} exceeds 4")]
    DegreeOverflow { p: usize, q: usize },
    #[error("interior product of a 0-form is not defined")]
    InteriorOfScalar,
    #[error("expected a {expected}-form, got a {found}-form")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("exterior derivative of a 4-form is not defined in four dimensions")]
    DerivativeOfTopForm,
    #[error("finite-difference step must be positive, got {0}")]
    NonPositiveStep(f64),
    #[error("finite-difference step {0:e} is below the cancellation guard 1e-10")]
    StepTooSmall(f64),
    #[error("metric is not symmetric (max asymmetry {0:e})")]
    AsymmetricMetric(f64),
    #[error("metric is degenerate (|det g| = {0:e})")]
    DegenerateMetric(f64),
    #[error("metric signature is not (-,+,+,+)")]
    NotLorentzian,
    #[error("metric inverse failed the identity check (residual {0:e})")]
    InverseResidual(f64),
    #[error("velocity is not unit timelike: g(U,U) = {0}")]
    NotUnitTimelike(f64),
    #[error("velocity is not future-pointing: U^0 = {0}")]
    NotFuturePointing(f64),
    #[error("three-velocity at or above light speed: |v|/c = {0}")]
    Superluminal(f64),
    #[error("candidate velocity is not timelike: g(u,u) = {0}")]
    NotTimelike(f64),
    #[error("form is not spatial for the given velocity: |i_V w| = {violation:e} against scale {scale:e}")]
    NotSpatial { violation: f64, scale: f64 },
    #[error("constitutive map is not spatial for its velocity (violation {0:e})")]
    NonSpatialZeta(f64),
    #[error("relative permeability must be non-vanishing")]
    ZeroPermeability,
    #[error("variation step {0:e} is outside [1e-6, 1e-2]")]
    VariationStepOutOfRange(f64),
    #[error("perturbation direction {0} is not symmetric")]
    AsymmetricPerturbation(usize),
    #[error("metric-variation extraction is ill-conditioned (condition number {0:.3e})")]
    IllConditioned(f64),
    #[error("need 10 independent symmetric perturbation directions, got {0}")]
    InsufficientDirections(usize),
    #[error("plane-wave axes must be distinct spatial indices in 1..=3, got propagation {propagation} and polarization {polarization}")]
    BadWaveAxes { propagation: usize, polarization: usize },
    #[error("observer basis extraction failed: spatial subspace is rank-deficient")]
    DegenerateSpatialBasis,
}

pub type Result<T> = std::result::Result<T, Error>;
