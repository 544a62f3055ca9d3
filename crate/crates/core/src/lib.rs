//! Exterior-calculus electromagnetism in linear moving media.
//!
//! This crate provides the pointwise tensor algebra needed to describe an
//! electromagnetic field in a linear (possibly magneto-electric) medium on a
//! four-dimensional Lorentzian background, together with the stress-energy
//! tensors that arise from two different assumptions about how the medium's
//! constitutive tensor responds to changes of the metric. A finite-difference
//! metric-variation routine ([`variation::metric_variation_oracle`]) recovers
//! both tensors directly from the action density, so each closed-form
//! constructor in [`stress`] can be cross-checked against an independent
//! numerical derivative.
//!
//! # Conventions
//!
//! All conventions are fixed once, here, and every sign downstream inherits
//! them:
//!
//! * metric signature `(-,+,+,+)`, coordinate index 0 timelike;
//! * unit timelike vectors satisfy `g(U,U) = -1`, future-pointing means
//!   `U^0 > 0` in the chart;
//! * orientation `eps_{0123} = +1`, so the Hodge map obeys
//!   `star(1) = sqrt|g| dx0^dx1^dx2^dx3`;
//! * a k-form stores its C(4,k) independent components in lexicographic
//!   index order, e.g. a 2-form as `(01, 02, 03, 12, 13, 23)`;
//! * every operation takes a [`constants::Constants`] record (or a model
//!   carrying one) where factors of `c`, `eps0`, `mu0` enter; nothing reads
//!   global state.
//!
//! The test suites run in the natural-unit preset (`c = eps0 = 1`) to keep
//! conditioning sane; the SI path is exercised separately to catch factor
//! drift.

pub mod constants;
pub mod constitutive;
pub mod error;
pub mod fdiff;
pub mod forms;
pub mod maxwell;
pub mod metric;
pub mod observer;
pub mod sampling;
pub mod stress;
pub mod variation;
pub mod verify;

pub use constants::Constants;
pub use constitutive::{ConstitutiveModel, ConstitutiveTensor, SpatialLinearMap, ZetaBlock};
pub use error::{Error, Result};
pub use fdiff::FormField;
pub use forms::{KForm, Rank2Tensor, Vector4};
pub use metric::Metric;
pub use observer::{FrameFields, Observer};
pub use stress::StressEnergy;
pub use variation::{MetricResponse, VariationSpec};
