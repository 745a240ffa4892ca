//! Groebner bases, dimension and height of ideals, and the ideals of minors
//! and Pfaffians attached to a matrix.
//!
//! Heights are computed as `nvars - dim R/LT(I)`, which equals the height of
//! `I` because a polynomial ring over a field degenerates flatly to the
//! leading-term ideal. Over a prime field the answer is the height in that
//! characteristic; use the rationals for characteristic 0.

mod buchberger;
mod dimension;
mod ideal;

use std::fmt;

use thiserror::Error;

use crate::matrix::MatrixError;

pub use buchberger::{buchberger, buchberger_with, normal_form, verify, ComputeOptions};
pub use dimension::monomial_ideal_dimension;
pub use ideal::{
    determinantal_ideal, expected_generic_height, ideal_of_minors, ideal_of_pfaffians, is_generic_height,
    GenericHeightReport, GroebnerData, IdealHandle,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    #[error("generators belong to different polynomial rings")]
    RingMismatch,
    #[error("Groebner basis computation exceeded its time limit")]
    Timeout,
    #[error("size {size} out of range {range}")]
    OutOfRange { size: i64, range: String },
    #[error(transparent)]
    Matrix(#[from] MatrixError),
}

/// Height of an ideal: a non-negative integer, or infinity for the unit
/// ideal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedHeight {
    Finite(u32),
    Infinite,
}

impl ExtendedHeight {
    pub fn finite(self) -> Option<u32> {
        match self {
            ExtendedHeight::Finite(h) => Some(h),
            ExtendedHeight::Infinite => None,
        }
    }

    /// `self >= bound`.
    pub fn at_least(self, bound: u64) -> bool {
        match self {
            ExtendedHeight::Finite(h) => u64::from(h) >= bound,
            ExtendedHeight::Infinite => true,
        }
    }
}

impl fmt::Display for ExtendedHeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedHeight::Finite(h) => write!(f, "{h}"),
            ExtendedHeight::Infinite => f.write_str("inf"),
        }
    }
}
