use std::fmt;

use crate::groebner::{determinantal_ideal, is_generic_height, ComputeOptions, ExtendedHeight, GroebnerError};
use crate::instance::ProblemInstance;
use crate::math::binomial;
use crate::matrix::PolyMatrix;
use crate::resolutions::GenericCase;

use super::{BoundsError, Source};

/// Whether the required heights are compared as stated or capped at the
/// number of variables `d` of the base ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HypothesisMode {
    Specialization,
    Bounds,
}

impl HypothesisMode {
    pub fn name(self) -> &'static str {
        match self {
            HypothesisMode::Specialization => "specialization",
            HypothesisMode::Bounds => "bounds",
        }
    }
}

impl fmt::Display for HypothesisMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HeightRequirement {
    /// Index of the lower ideal `I_j` (`Pf_2j` for alternating matrices).
    pub j: u32,
    pub required: u64,
    pub actual: ExtendedHeight,
    pub satisfied: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HypothesisReport {
    pub instance: ProblemInstance,
    pub case: GenericCase,
    pub mode: HypothesisMode,
    pub per_j: Vec<HeightRequirement>,
    pub all_satisfied: bool,
}

/// Uncapped height the lower ideal `I_j` must reach.
pub fn required_height(case: GenericCase, inst: &ProblemInstance, j: u32) -> u64 {
    let (m, n, j) = (i64::from(inst.m), i64::from(inst.n), i64::from(j));
    match case {
        GenericCase::MaximalMinors => ((m - j + 1) * (n - m) + 1) as u64,
        GenericCase::Minors => ((m - j + 1) * (n - j + 1)) as u64,
        GenericCase::Symmetric => binomial(n - j + 2, 2),
        GenericCase::SubmaximalPfaffians => (n - 2 * j + 2) as u64,
        GenericCase::Pfaffians => binomial(n - 2 * j + 2, 2),
    }
}

/// Heights of the lower ideals `I_1, ..., I_{t-1}` of a matrix whose ideal
/// `I_t` has generic height. Both hypothesis modes are read off these.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerHeights {
    pub instance: ProblemInstance,
    pub case: GenericCase,
    pub heights: Vec<(u32, ExtendedHeight)>,
}

/// The instance of `M`; `delta` is the common entry degree, or 0 if the
/// entries are not homogeneous of one degree.
pub fn matrix_instance(m: &PolyMatrix, t: u32) -> Result<ProblemInstance, BoundsError> {
    Ok(ProblemInstance::new(
        m.kind(),
        m.nrows() as u32,
        m.ncols() as u32,
        t,
        m.ring().nvars() as u32,
        m.entry_degree().unwrap_or(0),
        m.ring().field().characteristic(),
    )?)
}

/// Fails unless `I_t(M)` (resp. `Pf_2t(M)`) has generic height.
pub fn require_generic_height(m: &PolyMatrix, t: u32, opts: &ComputeOptions) -> Result<(), BoundsError> {
    let report = is_generic_height(m, t as usize, opts)?;
    if report.holds {
        Ok(())
    } else {
        Err(BoundsError::NotGenericHeight { expected: report.expected, actual: report.actual })
    }
}

pub fn lower_heights(m: &PolyMatrix, t: u32, opts: &ComputeOptions) -> Result<LowerHeights, BoundsError> {
    let instance = matrix_instance(m, t)?;
    let case = GenericCase::of(&instance)
        .ok_or_else(|| BoundsError::NoApplicableCase(format!("{instance}: the ideal is principal")))?;
    require_generic_height(m, t, opts)?;
    let heights: Result<Vec<_>, GroebnerError> = std::thread::scope(|scope| {
        let handles: Vec<_> = (1..t)
            .map(|j| scope.spawn(move || determinantal_ideal(m, i64::from(j))?.height_with(opts).map(|h| (j, h))))
            .collect();
        handles.into_iter().map(|h| h.join().expect("height worker panicked")).collect()
    });
    Ok(LowerHeights { instance, case, heights: heights? })
}

impl LowerHeights {
    pub fn report(&self, mode: HypothesisMode) -> HypothesisReport {
        let d = u64::from(self.instance.d);
        let per_j: Vec<_> = self
            .heights
            .iter()
            .map(|&(j, actual)| {
                let uncapped = required_height(self.case, &self.instance, j);
                let required = match mode {
                    HypothesisMode::Specialization => uncapped,
                    HypothesisMode::Bounds => uncapped.min(d),
                };
                HeightRequirement { j, required, actual, satisfied: actual.at_least(required) }
            })
            .collect();
        HypothesisReport {
            instance: self.instance,
            case: self.case,
            mode,
            all_satisfied: per_j.iter().all(|r| r.satisfied),
            per_j,
        }
    }
}

/// Verifies the height conditions on the lower ideals of `M`.
pub fn hypothesis_check(
    m: &PolyMatrix,
    t: u32,
    mode: HypothesisMode,
    opts: &ComputeOptions,
) -> Result<HypothesisReport, BoundsError> {
    Ok(lower_heights(m, t, opts)?.report(mode))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CohenMacaulay {
    Yes,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecializationReport {
    pub hypotheses: HypothesisReport,
    /// The Rees algebra of the generic ideal specializes to that of `I`.
    pub specializes: bool,
    pub cohen_macaulay: CohenMacaulay,
    pub source: Source,
}

pub fn specialization_source(case: GenericCase) -> Source {
    match case {
        GenericCase::MaximalMinors => Source::SpecializationMaximalMinors,
        GenericCase::Minors => Source::SpecializationMinors,
        GenericCase::Symmetric => Source::SpecializationSymmetric,
        GenericCase::SubmaximalPfaffians => Source::SpecializationSubmaximalPfaffians,
        GenericCase::Pfaffians => Source::SpecializationPfaffians,
    }
}

fn char_exceeds(characteristic: u64, bound: u32) -> bool {
    characteristic == 0 || characteristic > u64::from(bound)
}

impl LowerHeights {
    pub fn specialization(&self) -> SpecializationReport {
        let hypotheses = self.report(HypothesisMode::Specialization);
        let specializes = hypotheses.all_satisfied;
        let i = &self.instance;
        let cm_known = match self.case {
            GenericCase::MaximalMinors | GenericCase::SubmaximalPfaffians => true,
            GenericCase::Minors => char_exceeds(i.characteristic, i.t.min(i.m - i.t)),
            GenericCase::Pfaffians => char_exceeds(i.characteristic, (2 * i.t).min(i.n - 2 * i.t)),
            GenericCase::Symmetric => false,
        };
        SpecializationReport {
            hypotheses,
            specializes,
            cohen_macaulay: if specializes && cm_known { CohenMacaulay::Yes } else { CohenMacaulay::Unknown },
            source: specialization_source(self.case),
        }
    }
}

/// Decides whether the Rees algebra of the generic ideal specializes to
/// that of `I_t(M)` (resp. `Pf_2t(M)`), and whether the result is known to
/// be Cohen-Macaulay.
pub fn specialization_check(
    m: &PolyMatrix,
    t: u32,
    opts: &ComputeOptions,
) -> Result<SpecializationReport, BoundsError> {
    Ok(lower_heights(m, t, opts)?.specialization())
}
