//! The condition G_s for ideals of minors and Pfaffians.
//!
//! For `I = I_t(A)` (or `Pf_2t(A)`) of generic height, G_s holds exactly when
//! each lower ideal `I_j`, `1 <= j < t`, has height at least
//! `min{threshold(j), s}`. Hence the largest such `s` is the least height
//! among the lower ideals that miss their threshold, or infinity if none do.

use std::fmt;

use thiserror::Error;

use crate::groebner::{determinantal_ideal, is_generic_height, ComputeOptions, ExtendedHeight, GroebnerError};
use crate::instance::{InstanceError, ProblemInstance};
use crate::math::binomial;
use crate::matrix::{MatrixKind, PolyMatrix};

/// A positive integer or infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SValue {
    Finite(u64),
    Infinite,
}

impl SValue {
    pub fn min_with(self, bound: u64) -> u64 {
        match self {
            SValue::Finite(s) => s.min(bound),
            SValue::Infinite => bound,
        }
    }
}

impl fmt::Display for SValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SValue::Finite(s) => write!(f, "{s}"),
            SValue::Infinite => f.write_str("inf"),
        }
    }
}

impl std::str::FromStr for SValue {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "inf" | "infinity" | "oo" => Ok(SValue::Infinite),
            _ => match s.parse::<u64>() {
                Ok(v) if v >= 1 => Ok(SValue::Finite(v)),
                _ => Err(format!("expected a positive integer or `inf`, got `{s}`")),
            },
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GsError {
    #[error("lower index j = {j} out of range 1..={max}")]
    LowerIndexOutOfRange { j: u32, max: u32 },
    #[error("ideal is not of generic height: height {actual} < expected {expected}")]
    NotGenericHeight { expected: u64, actual: ExtendedHeight },
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Groebner(#[from] GroebnerError),
}

/// Threshold that the height of the `j`-th lower ideal is compared with.
pub fn gs_threshold(inst: &ProblemInstance, j: u32) -> Result<u64, GsError> {
    if j == 0 || j >= inst.t {
        return Err(GsError::LowerIndexOutOfRange { j, max: inst.t.saturating_sub(1) });
    }
    let (m, n, t, j) = (inst.m as i64, inst.n as i64, inst.t as i64, j as i64);
    Ok(match inst.kind {
        MatrixKind::Ordinary => binomial(m - j + 1, m - t) * binomial(n - j + 1, n - t),
        MatrixKind::Symmetric => {
            let num = binomial(n - j + 2, n - t) * binomial(n - j + 2, n - t + 1);
            let den = (n - j + 2) as u64;
            assert_eq!(num % den, 0, "symmetric threshold is integral");
            num / den
        }
        MatrixKind::Alternating => binomial(n - 2 * j + 2, n - 2 * t),
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerIdealCheck {
    pub j: u32,
    pub threshold: u64,
    pub actual: ExtendedHeight,
    /// `min{threshold, s}`.
    pub required: u64,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsReport {
    pub generic_height_ok: bool,
    pub requested_s: SValue,
    pub per_j: Vec<LowerIdealCheck>,
    /// Whether G_s holds for the requested `s`.
    pub satisfied: bool,
    pub max_s: SValue,
}

/// Decides G_s for `I_t(M)` (`Pf_2t(M)` for alternating `M`, with `t` half
/// the Pfaffian size) from Groebner heights of the lower ideals.
pub fn check_gs(m: &PolyMatrix, t: u32, s: SValue, opts: &ComputeOptions) -> Result<GsReport, GsError> {
    let generic = is_generic_height(m, t as usize, opts)?;
    if !generic.holds {
        return Err(GsError::NotGenericHeight { expected: generic.expected, actual: generic.actual });
    }
    let inst = ProblemInstance::shape(m.kind(), m.nrows() as u32, m.ncols() as u32, t)?;
    let mut per_j = Vec::new();
    for j in 1..t {
        let threshold = gs_threshold(&inst, j)?;
        let actual = determinantal_ideal(m, j as i64)?.height_with(opts)?;
        let required = s.min_with(threshold);
        per_j.push(LowerIdealCheck { j, threshold, actual, required, satisfied: actual.at_least(required) });
    }
    let max_s = max_s_from_heights(per_j.iter().map(|c| (c.threshold, c.actual)));
    Ok(GsReport { generic_height_ok: true, requested_s: s, satisfied: per_j.iter().all(|c| c.satisfied), per_j, max_s })
}

fn max_s_from_heights(checks: impl Iterator<Item = (u64, ExtendedHeight)>) -> SValue {
    checks
        .filter(|(theta, h)| !h.at_least(*theta))
        .filter_map(|(_, h)| h.finite())
        .map(|h| SValue::Finite(u64::from(h)))
        .min()
        .unwrap_or(SValue::Infinite)
}

/// Largest `s` such that the ideal of a generic matrix satisfies G_s.
pub fn max_gs_generic(inst: &ProblemInstance) -> SValue {
    let (m, n, t) = (inst.m as i64, inst.n as i64, inst.t as i64);
    match inst.kind {
        MatrixKind::Ordinary => {
            let infinite = t == 1
                || (t == m && m == n)
                || (m == n && t == n - 1)
                || (n == m + 1 && t == m)
                || (n == m + 2 && t == m)
                || (m == 2 && n == 5 && t == 2);
            if infinite {
                SValue::Infinite
            } else if t >= 3 && t == m && n == m + 3 {
                SValue::Finite(18)
            } else {
                SValue::Finite(((m - t + 2) * (n - t + 2)) as u64)
            }
        }
        MatrixKind::Symmetric => {
            if t == 1 || t == n || t == n - 1 {
                SValue::Infinite
            } else {
                SValue::Finite(binomial(n - t + 3, 2))
            }
        }
        MatrixKind::Alternating => {
            let two_t = 2 * t;
            if two_t == 2 || two_t == n || two_t == n - 1 || two_t == n - 2 {
                SValue::Infinite
            } else {
                SValue::Finite(binomial(n - two_t + 4, 2))
            }
        }
    }
}

/// Minimal number of generators of the ideal of a generic matrix.
pub fn min_gens_generic(inst: &ProblemInstance) -> u64 {
    let (m, n, t) = (inst.m as i64, inst.n as i64, inst.t as i64);
    match inst.kind {
        MatrixKind::Ordinary => binomial(m, t) * binomial(n, t),
        MatrixKind::Symmetric => {
            let num = binomial(n + 1, t + 1) * binomial(n + 1, t);
            assert_eq!(num % (n + 1) as u64, 0, "generator count is integral");
            num / (n + 1) as u64
        }
        MatrixKind::Alternating => binomial(n, 2 * t),
    }
}
