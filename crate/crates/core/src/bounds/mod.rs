//! Degree bounds for the defining equations of Rees algebras of ideals of
//! minors and Pfaffians, and the structural conclusions that follow.
//!
//! The engine has three layers: [`generic_status`] reports what is known
//! for the generic matrix, [`hypothesis_check`] verifies the height
//! conditions on a concrete matrix with Groebner bases, and
//! [`degree_bounds`] and [`classify`] turn verified hypotheses into bounds
//! and conclusions. Every output names its [`Source`].

mod classify;
mod degree;
mod hypotheses;
mod source;
mod status;
mod value;

use thiserror::Error;

use crate::groebner::{ExtendedHeight, GroebnerError};
use crate::instance::InstanceError;
use crate::resolutions::ResolutionError;

pub use classify::{classify, Claim, ClassificationReport, Conclusion};
pub use degree::{degree_bounds, Attestation, BoundTheorem, BoundsOutcome, DegreeBounds};
pub use hypotheses::{
    hypothesis_check, lower_heights, matrix_instance, required_height, specialization_check, specialization_source,
    CohenMacaulay, HeightRequirement, HypothesisMode, HypothesisReport, LowerHeights, SpecializationReport,
};
pub use source::Source;
pub use status::{generic_status, GenericStatus};
pub use value::{BoundValue, GenericTerm};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BoundsError {
    #[error("ideal is not of generic height: height {actual} < expected {expected}")]
    NotGenericHeight { expected: u64, actual: ExtendedHeight },
    #[error("no height hypotheses apply to {0}")]
    NoApplicableCase(String),
    #[error("no degree bound applies to {0}")]
    NoApplicableTheorem(String),
    #[error("{theorem} requires characteristic zero, got characteristic {characteristic}")]
    CharacteristicNotZero { theorem: Source, characteristic: u64 },
    #[error("hypotheses were verified for {attested}, not for {requested}")]
    AttestationMismatch { attested: String, requested: String },
    #[error("power k = {0} out of range k >= 1")]
    PowerOutOfRange(u32),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
    #[error(transparent)]
    Resolution(#[from] ResolutionError),
}
