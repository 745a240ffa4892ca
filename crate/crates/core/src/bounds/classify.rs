use std::fmt;

use crate::groebner::ComputeOptions;
use crate::instance::{InstanceError, ProblemInstance};
use crate::matrix::{MatrixKind, PolyMatrix};
use crate::resolutions::GenericCase;

use super::hypotheses::{lower_heights, matrix_instance, require_generic_height};
use super::{BoundsError, CohenMacaulay, HypothesisMode, HypothesisReport, Source, SpecializationReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    LinearType,
    FiberType,
    ReesSpecializes,
    ReesCohenMacaulay,
    /// The maximal homogeneous ideal of the base ring annihilates the ideal
    /// of defining equations.
    AnnihilatedByMaximalIdeal,
    /// `A_k(I) = 0` for every `k` up to the given power.
    VanishesThroughPower(u32),
}

impl Claim {
    pub fn tag(self) -> &'static str {
        match self {
            Claim::LinearType => "linear_type",
            Claim::FiberType => "fiber_type",
            Claim::ReesSpecializes => "rees_specializes",
            Claim::ReesCohenMacaulay => "rees_cohen_macaulay",
            Claim::AnnihilatedByMaximalIdeal => "ideal_annihilated_by_maximal_ideal",
            Claim::VanishesThroughPower(_) => "vanishes_through_power",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Claim::LinearType => f.write_str("I is of linear type"),
            Claim::FiberType => f.write_str("I is of fiber type"),
            Claim::ReesSpecializes => f.write_str("the generic Rees algebra specializes to R(I)"),
            Claim::ReesCohenMacaulay => f.write_str("R(I) is Cohen-Macaulay"),
            Claim::AnnihilatedByMaximalIdeal => f.write_str("(x_1, ..., x_d) A(I) = 0"),
            Claim::VanishesThroughPower(k) => write!(f, "A_k(I) = 0 for all k <= {k}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Conclusion {
    pub claim: Claim,
    pub source: Source,
    pub hypotheses_verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub instance: ProblemInstance,
    pub specialization: Option<SpecializationReport>,
    pub bounds: Option<HypothesisReport>,
    pub conclusions: Vec<Conclusion>,
}

impl ClassificationReport {
    pub fn has(&self, claim: Claim) -> bool {
        self.conclusions.iter().any(|c| c.claim == claim)
    }
}

/// Runs every structural result whose shape matches `I_t(M)` (resp.
/// `Pf_2t(M)`), verifies its height hypotheses, and lists the conclusions
/// that follow. Requires homogeneous entries of one degree and `I` of
/// generic height.
pub fn classify(m: &PolyMatrix, t: u32, opts: &ComputeOptions) -> Result<ClassificationReport, BoundsError> {
    if m.entry_degree().is_none() {
        return Err(InstanceError::NonUniformDegree.into());
    }
    let instance = matrix_instance(m, t)?;
    if GenericCase::of(&instance).is_none() {
        require_generic_height(m, t, opts)?;
        return Ok(ClassificationReport { instance, specialization: None, bounds: None, conclusions: Vec::new() });
    }
    let heights = lower_heights(m, t, opts)?;
    let specialization = heights.specialization();
    let bounds = heights.report(HypothesisMode::Bounds);
    let conclusions = conclusions(&instance, &specialization, &bounds);
    debug_assert!(conclusions.iter().all(|c| c.hypotheses_verified));
    Ok(ClassificationReport { instance, specialization: Some(specialization), bounds: Some(bounds), conclusions })
}

fn conclusions(i: &ProblemInstance, specialized: &SpecializationReport, bounds: &HypothesisReport) -> Vec<Conclusion> {
    let mut out = Vec::new();
    let mut emit = |claim, source| out.push(Conclusion { claim, source, hypotheses_verified: true });
    let (m, n, t, d, delta, ch) = (i.m, i.n, i.t, i.d, i.delta, i.characteristic);
    let ordinary = i.kind == MatrixKind::Ordinary;
    let alternating = i.kind == MatrixKind::Alternating;

    if specialized.specializes {
        emit(Claim::ReesSpecializes, specialized.source);
        if specialized.cohen_macaulay == CohenMacaulay::Yes {
            emit(Claim::ReesCohenMacaulay, specialized.source);
        }
        if ordinary && t == m && n == m + 1 {
            emit(Claim::LinearType, Source::LinearTypeAlmostSquareMaximalMinors);
        }
        if ordinary && m == n && t + 1 == n {
            emit(Claim::LinearType, Source::LinearTypeSubmaximalSquareMinors);
        }
        if i.kind == MatrixKind::Symmetric && n >= 2 && t + 1 == n {
            emit(Claim::LinearType, Source::LinearTypeSymmetricSubmaximalMinors);
        }
        if alternating && 2 * t + 1 == n {
            emit(Claim::LinearType, Source::LinearTypeSubmaximalPfaffians);
        }
        if alternating && ch != 2 && n >= 4 && 2 * t + 2 == n {
            emit(Claim::LinearType, Source::LinearTypeCorankTwoPfaffians);
        }
        if ordinary && t == m {
            emit(Claim::FiberType, Source::FiberTypeMaximalMinors);
        }
        if ordinary && ch == 0 && m == 3 && t == 2 {
            emit(Claim::FiberType, Source::FiberTypeThreeRowTwoMinors);
        }
    }

    if !bounds.all_satisfied {
        return out;
    }
    if ordinary && t == m {
        if delta == 1 {
            emit(Claim::FiberType, Source::MaximalMinorsLinearEntriesFiberType);
        }
        if n == m + 1 && d > m {
            emit(Claim::LinearType, Source::MaximalMinorsAlmostSquareLinearType);
        }
        if n == m + 1 && d <= m && delta == 1 {
            emit(Claim::AnnihilatedByMaximalIdeal, Source::MaximalMinorsAlmostSquareAnnihilated);
        }
        if n >= m + 2 && u64::from(d) > u64::from(m) * u64::from(n - m) + 1 {
            emit(Claim::FiberType, Source::MaximalMinorsManyVariablesFiberType);
        }
    }
    if ordinary && ch == 0 && m == 3 && t == 2 && delta == 1 {
        emit(Claim::FiberType, Source::ThreeRowTwoMinorsLinearEntries);
        if n == 3 {
            emit(Claim::FiberType, Source::ThreeByThreeTwoMinorsLinearEntries);
            emit(Claim::AnnihilatedByMaximalIdeal, Source::ThreeByThreeTwoMinorsLinearEntries);
        }
    }
    if alternating && 2 * t + 1 == n {
        if d >= n {
            emit(Claim::LinearType, Source::SubmaximalPfaffiansManyVariablesLinearType);
        }
        if delta == 1 {
            emit(Claim::FiberType, Source::SubmaximalPfaffiansLinearEntriesFiberType);
        }
        if d >= 3 {
            emit(Claim::VanishesThroughPower(d - 2), Source::SubmaximalPfaffiansLowPowersVanish);
        }
        if d % 2 == 1 && d >= 3 {
            emit(Claim::VanishesThroughPower(d - 1), Source::SubmaximalPfaffiansOddVariablesVanish);
        }
        if d % 2 == 1 && delta == 1 {
            emit(Claim::AnnihilatedByMaximalIdeal, Source::SubmaximalPfaffiansOddVariablesAnnihilated);
        }
    }
    if alternating && ch == 0 && n == 6 && t == 2 && delta == 1 {
        emit(Claim::FiberType, Source::SixBySixFourPfaffiansLinearEntries);
        emit(Claim::AnnihilatedByMaximalIdeal, Source::SixBySixFourPfaffiansLinearEntries);
    }
    out
}
