use std::fmt;

/// The result a conclusion or bound is drawn from, named by what it says.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Source {
    SpecializationMaximalMinors,
    SpecializationMinors,
    SpecializationSymmetric,
    SpecializationSubmaximalPfaffians,
    SpecializationPfaffians,

    LinearTypeAlmostSquareMaximalMinors,
    LinearTypeSubmaximalSquareMinors,
    LinearTypeSymmetricSubmaximalMinors,
    LinearTypeSubmaximalPfaffians,
    LinearTypeCorankTwoPfaffians,
    FiberTypeMaximalMinors,
    FiberTypeThreeRowTwoMinors,

    MaximalMinorsBound,
    TwoMinorsBound,
    SubmaximalSquareMinorsBound,
    MinorsBound,
    SymmetricSubmaximalBound,
    SubmaximalPfaffiansBound,
    CorankTwoPfaffiansBound,
    FourPfaffiansBound,
    PfaffiansBound,

    MaximalMinorsLinearEntriesFiberType,
    MaximalMinorsAlmostSquareLinearType,
    MaximalMinorsAlmostSquareAnnihilated,
    MaximalMinorsManyVariablesFiberType,
    ThreeRowTwoMinorsLinearEntries,
    ThreeByThreeTwoMinorsLinearEntries,
    SubmaximalPfaffiansManyVariablesLinearType,
    SubmaximalPfaffiansLinearEntriesFiberType,
    SubmaximalPfaffiansLowPowersVanish,
    SubmaximalPfaffiansOddVariablesVanish,
    SubmaximalPfaffiansOddVariablesAnnihilated,
    SixBySixFourPfaffiansLinearEntries,
}

impl Source {
    pub const ALL: [Source; 33] = [
        Source::SpecializationMaximalMinors,
        Source::SpecializationMinors,
        Source::SpecializationSymmetric,
        Source::SpecializationSubmaximalPfaffians,
        Source::SpecializationPfaffians,
        Source::LinearTypeAlmostSquareMaximalMinors,
        Source::LinearTypeSubmaximalSquareMinors,
        Source::LinearTypeSymmetricSubmaximalMinors,
        Source::LinearTypeSubmaximalPfaffians,
        Source::LinearTypeCorankTwoPfaffians,
        Source::FiberTypeMaximalMinors,
        Source::FiberTypeThreeRowTwoMinors,
        Source::MaximalMinorsBound,
        Source::TwoMinorsBound,
        Source::SubmaximalSquareMinorsBound,
        Source::MinorsBound,
        Source::SymmetricSubmaximalBound,
        Source::SubmaximalPfaffiansBound,
        Source::CorankTwoPfaffiansBound,
        Source::FourPfaffiansBound,
        Source::PfaffiansBound,
        Source::MaximalMinorsLinearEntriesFiberType,
        Source::MaximalMinorsAlmostSquareLinearType,
        Source::MaximalMinorsAlmostSquareAnnihilated,
        Source::MaximalMinorsManyVariablesFiberType,
        Source::ThreeRowTwoMinorsLinearEntries,
        Source::ThreeByThreeTwoMinorsLinearEntries,
        Source::SubmaximalPfaffiansManyVariablesLinearType,
        Source::SubmaximalPfaffiansLinearEntriesFiberType,
        Source::SubmaximalPfaffiansLowPowersVanish,
        Source::SubmaximalPfaffiansOddVariablesVanish,
        Source::SubmaximalPfaffiansOddVariablesAnnihilated,
        Source::SixBySixFourPfaffiansLinearEntries,
    ];

    /// Stable kebab-case label used in reports.
    pub fn label(self) -> &'static str {
        match self {
            Source::SpecializationMaximalMinors => "specialization-maximal-minors",
            Source::SpecializationMinors => "specialization-minors",
            Source::SpecializationSymmetric => "specialization-symmetric-minors",
            Source::SpecializationSubmaximalPfaffians => "specialization-submaximal-pfaffians",
            Source::SpecializationPfaffians => "specialization-pfaffians",
            Source::LinearTypeAlmostSquareMaximalMinors => "linear-type-almost-square-maximal-minors",
            Source::LinearTypeSubmaximalSquareMinors => "linear-type-submaximal-square-minors",
            Source::LinearTypeSymmetricSubmaximalMinors => "linear-type-symmetric-submaximal-minors",
            Source::LinearTypeSubmaximalPfaffians => "linear-type-submaximal-pfaffians",
            Source::LinearTypeCorankTwoPfaffians => "linear-type-corank-two-pfaffians",
            Source::FiberTypeMaximalMinors => "fiber-type-maximal-minors",
            Source::FiberTypeThreeRowTwoMinors => "fiber-type-three-row-2-minors",
            Source::MaximalMinorsBound => "maximal-minors-bound",
            Source::TwoMinorsBound => "2-minors-bound",
            Source::SubmaximalSquareMinorsBound => "submaximal-square-minors-bound",
            Source::MinorsBound => "minors-bound",
            Source::SymmetricSubmaximalBound => "symmetric-submaximal-minors-bound",
            Source::SubmaximalPfaffiansBound => "submaximal-pfaffians-bound",
            Source::CorankTwoPfaffiansBound => "corank-two-pfaffians-bound",
            Source::FourPfaffiansBound => "4-pfaffians-bound",
            Source::PfaffiansBound => "pfaffians-bound",
            Source::MaximalMinorsLinearEntriesFiberType => "maximal-minors-linear-entries-fiber-type",
            Source::MaximalMinorsAlmostSquareLinearType => "maximal-minors-almost-square-linear-type",
            Source::MaximalMinorsAlmostSquareAnnihilated => "maximal-minors-almost-square-annihilated",
            Source::MaximalMinorsManyVariablesFiberType => "maximal-minors-many-variables-fiber-type",
            Source::ThreeRowTwoMinorsLinearEntries => "three-row-2-minors-linear-entries",
            Source::ThreeByThreeTwoMinorsLinearEntries => "3x3-2-minors-linear-entries",
            Source::SubmaximalPfaffiansManyVariablesLinearType => "submaximal-pfaffians-many-variables-linear-type",
            Source::SubmaximalPfaffiansLinearEntriesFiberType => "submaximal-pfaffians-linear-entries-fiber-type",
            Source::SubmaximalPfaffiansLowPowersVanish => "submaximal-pfaffians-low-powers-vanish",
            Source::SubmaximalPfaffiansOddVariablesVanish => "submaximal-pfaffians-odd-variables-vanish",
            Source::SubmaximalPfaffiansOddVariablesAnnihilated => "submaximal-pfaffians-odd-variables-annihilated",
            Source::SixBySixFourPfaffiansLinearEntries => "6x6-4-pfaffians-linear-entries",
        }
    }
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn labels_are_unique_kebab_case() {
        let labels: HashSet<_> = Source::ALL.iter().map(|s| s.label()).collect();
        assert_eq!(labels.len(), Source::ALL.len());
        for l in labels {
            assert!(l.chars().all(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == '-'), "{l}");
        }
    }
}
