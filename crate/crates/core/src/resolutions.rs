//! Closed-form data about resolutions of powers of generic determinantal and
//! Pfaffian ideals: generation degrees of the linear resolutions of maximal
//! minors and of submaximal Pfaffians, maximal projective dimensions,
//! containment thresholds, regularities and the constants derived from them.

use std::fmt;

use thiserror::Error;

use crate::instance::ProblemInstance;
use crate::math::binomial;
use crate::matrix::MatrixKind;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ResolutionError {
    #[error("{what} = {value} out of range {range}")]
    OutOfRange { what: &'static str, value: i64, range: String },
    #[error("submaximal Pfaffian resolutions need an odd size, got {0}")]
    EvenSize(u32),
    #[error("not covered: {0}")]
    NotCovered(String),
    #[error("regularity values are only known in characteristic zero, got characteristic {0}")]
    CharacteristicNotZero(u64),
}

fn out_of_range(what: &'static str, value: impl Into<i64>, range: impl Into<String>) -> ResolutionError {
    ResolutionError::OutOfRange { what, value: value.into(), range: range.into() }
}

/// Generation degree of a free module; `NegInfinity` for the zero module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DegreeEntry {
    NegInfinity,
    Finite(i64),
}

impl DegreeEntry {
    pub fn finite(self) -> Option<i64> {
        match self {
            DegreeEntry::Finite(v) => Some(v),
            DegreeEntry::NegInfinity => None,
        }
    }
}

impl fmt::Display for DegreeEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DegreeEntry::NegInfinity => f.write_str("-inf"),
            DegreeEntry::Finite(v) => write!(f, "{v}"),
        }
    }
}

/// The five shapes for which powers of the generic ideal are understood well
/// enough to specialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenericCase {
    /// Ordinary, `t = m`.
    MaximalMinors,
    /// Ordinary, `t < m`.
    Minors,
    /// Symmetric, any `t`.
    Symmetric,
    /// Alternating, `2t = n - 1`.
    SubmaximalPfaffians,
    /// Alternating, `2t < n - 1`.
    Pfaffians,
}

impl GenericCase {
    /// `None` only for the principal Pfaffian ideal `2t = n`.
    pub fn of(inst: &ProblemInstance) -> Option<GenericCase> {
        match inst.kind {
            MatrixKind::Ordinary if inst.t == inst.m => Some(GenericCase::MaximalMinors),
            MatrixKind::Ordinary => Some(GenericCase::Minors),
            MatrixKind::Symmetric => Some(GenericCase::Symmetric),
            MatrixKind::Alternating if 2 * inst.t + 1 == inst.n => Some(GenericCase::SubmaximalPfaffians),
            MatrixKind::Alternating if 2 * inst.t + 1 < inst.n => Some(GenericCase::Pfaffians),
            MatrixKind::Alternating => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GenericCase::MaximalMinors => "maximal minors",
            GenericCase::Minors => "minors",
            GenericCase::Symmetric => "symmetric minors",
            GenericCase::SubmaximalPfaffians => "submaximal Pfaffians",
            GenericCase::Pfaffians => "Pfaffians",
        }
    }
}

impl fmt::Display for GenericCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn case_of(inst: &ProblemInstance) -> Result<GenericCase, ResolutionError> {
    GenericCase::of(inst).ok_or_else(|| ResolutionError::NotCovered(format!("{inst}: the ideal is principal")))
}

/// Generation degree of the `i`-th module in the linear resolution of
/// `J^k(mk)` for the maximal minors `J` of a generic `m x n` matrix.
pub fn abw_generation_degree(m: u32, n: u32, k: u32, i: u32) -> Result<DegreeEntry, ResolutionError> {
    if m == 0 || m > n {
        return Err(out_of_range("m", m, format!("1..={n}")));
    }
    if k == 0 {
        return Err(out_of_range("k", k, "k >= 1"));
    }
    let length = i64::from(k.min(m)) * i64::from(n - m);
    Ok(if i == 0 || i64::from(i) <= length { DegreeEntry::Finite(i.into()) } else { DegreeEntry::NegInfinity })
}

/// Generation degree of the `i`-th module in the resolution of `J^k` for the
/// submaximal Pfaffians `J` of a generic alternating `n x n` matrix.
pub fn ku_generation_degree(n: u32, k: u32, i: u32) -> Result<DegreeEntry, ResolutionError> {
    if n.is_multiple_of(2) {
        return Err(ResolutionError::EvenSize(n));
    }
    if n < 3 {
        return Err(out_of_range("n", n, "odd n >= 3"));
    }
    if k == 0 {
        return Err(out_of_range("k", k, "k >= 1"));
    }
    let (n, k, i) = (i64::from(n), i64::from(k), i64::from(i));
    Ok(if i <= k.min(n - 1) {
        DegreeEntry::Finite(i)
    } else if i == k + 1 && i < n && k % 2 == 1 {
        let excess = n - i + 1;
        assert_eq!(excess % 2, 0, "exceptional degree is integral");
        DegreeEntry::Finite(i - 1 + excess / 2)
    } else {
        DegreeEntry::NegInfinity
    })
}

/// Largest projective dimension of a power of the generic ideal.
pub fn max_pdim_powers(inst: &ProblemInstance) -> Result<u64, ResolutionError> {
    let (m, n, t) = (u64::from(inst.m), u64::from(inst.n), inst.t);
    match case_of(inst)? {
        GenericCase::MaximalMinors => Ok(m * (n - m)),
        GenericCase::Minors => Ok(m * n - 1),
        GenericCase::Symmetric if t < inst.n => Ok(binomial(n as i64 + 1, 2) - 1),
        GenericCase::Symmetric => Err(ResolutionError::NotCovered(format!("{inst}: the ideal is principal"))),
        GenericCase::SubmaximalPfaffians => Ok(n - 1),
        GenericCase::Pfaffians => Ok(binomial(n as i64, 2) - 1),
    }
}

/// Least homological position from which the lower ideal `I_j` (or
/// `Pf_2j`) is contained up to radical in every Fitting ideal of the
/// resolutions of all powers.
pub fn sigma_threshold(inst: &ProblemInstance, j: u32) -> Result<u64, ResolutionError> {
    if j == 0 || j >= inst.t {
        return Err(out_of_range("j", j, format!("1..={}", inst.t.saturating_sub(1))));
    }
    let (m, n, j) = (i64::from(inst.m), i64::from(inst.n), i64::from(j));
    Ok(match case_of(inst)? {
        GenericCase::MaximalMinors => ((m - j) * (n - m) + 1) as u64,
        GenericCase::Minors => ((m - j) * (n - j)) as u64,
        GenericCase::Symmetric => binomial(n - j + 1, 2),
        GenericCase::SubmaximalPfaffians => (n - 2 * j) as u64,
        GenericCase::Pfaffians => binomial(n - 2 * j, 2),
    })
}

/// A regularity value with the label of the result it comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regularity {
    Known { value: u64, source: &'static str },
    NotKnown,
}

/// Regularity of `J^k` for the generic ideal, where a closed form is known.
pub fn regularity_power(inst: &ProblemInstance, k: u32) -> Result<Regularity, ResolutionError> {
    if inst.characteristic != 0 {
        return Err(ResolutionError::CharacteristicNotZero(inst.characteristic));
    }
    if k == 0 {
        return Err(out_of_range("k", k, "k >= 1"));
    }
    if inst.kind != MatrixKind::Ordinary {
        return Ok(Regularity::NotKnown);
    }
    let (m, n, t, k) = (u64::from(inst.m), u64::from(inst.n), u64::from(inst.t), u64::from(k));
    if t == 2 && t < m {
        if 2 <= k && k + 2 <= m {
            return Ok(Regularity::Known { value: k + m - 1, source: "regularity-2x2-minors" });
        }
        if k + 1 >= m {
            return Ok(Regularity::Known { value: 2 * k, source: "regularity-2x2-minors" });
        }
        return Ok(Regularity::NotKnown);
    }
    if m == n && t + 1 == n && k + 1 >= n {
        let value = k * (n - 1) + n_constant(NConstant::SquareSubmaximal, inst.n)?;
        return Ok(Regularity::Known { value, source: "regularity-submaximal-square-minors" });
    }
    if 2 < t && t < m && k + 1 >= m {
        let value = t * k + n_constant(NConstant::OrdinaryMinors, inst.t)?;
        return Ok(Regularity::Known { value, source: "regularity-minors" });
    }
    Ok(Regularity::NotKnown)
}

/// The correction terms by which the regularity of high powers exceeds the
/// linear part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NConstant {
    /// Submaximal minors of an `n x n` matrix; argument `n >= 2`.
    SquareSubmaximal,
    /// `t`-minors of an ordinary matrix; argument `t >= 3`.
    OrdinaryMinors,
    /// Size `n - 2` Pfaffians; argument even `n >= 4`.
    CorankTwoPfaffians,
    /// `2t`-Pfaffians; argument `t >= 3`.
    GeneralPfaffians,
}

fn exact_div(num: u64, den: u64) -> u64 {
    assert_eq!(num % den, 0, "{num}/{den} is integral");
    num / den
}

pub fn n_constant(which: NConstant, arg: u32) -> Result<u64, ResolutionError> {
    let a = u64::from(arg);
    match which {
        NConstant::SquareSubmaximal => {
            if a < 2 {
                return Err(out_of_range("n", arg, "n >= 2"));
            }
            Ok(if a % 2 == 0 { exact_div((a - 2) * (a - 2), 4) } else { exact_div((a - 3) * (a - 1), 4) })
        }
        NConstant::OrdinaryMinors => {
            if a < 3 {
                return Err(out_of_range("t", arg, "t >= 3"));
            }
            Ok(if a % 2 == 1 { exact_div((a - 1) * (a - 1), 4) } else { exact_div((a - 2) * a, 4) })
        }
        NConstant::CorankTwoPfaffians => {
            if a < 4 || a % 2 == 1 {
                return Err(out_of_range("n", arg, "even n >= 4"));
            }
            Ok(if a % 4 == 0 { exact_div((a - 4) * (a - 4), 8) } else { exact_div((a - 2) * (a - 6), 8) })
        }
        NConstant::GeneralPfaffians => {
            if a < 3 {
                return Err(out_of_range("t", arg, "t >= 3"));
            }
            Ok(if a % 2 == 0 { a * (a / 2 - 1) } else { exact_div((a - 1) * (a - 1), 2) })
        }
    }
}
