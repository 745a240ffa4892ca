use crate::instance::ProblemInstance;
use crate::matrix::MatrixKind;
use crate::resolutions::{n_constant, NConstant};

use super::{BoundValue, BoundsError, GenericTerm, HypothesisMode, HypothesisReport, Source};

/// The degree bound that applies to a shape `(kind, m, n, t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundTheorem {
    MaximalMinors,
    TwoMinors,
    SubmaximalSquareMinors,
    Minors,
    SymmetricSubmaximal,
    SubmaximalPfaffians,
    CorankTwoPfaffians,
    FourPfaffians,
    Pfaffians,
}

impl BoundTheorem {
    /// Picks the bound for a shape. `m <= n` for ordinary matrices and `t` is
    /// half the Pfaffian size for alternating ones. On shapes covered twice,
    /// the square submaximal bound takes precedence over the 2-minors and
    /// general minors bounds, and the corank-two Pfaffian bound over the
    /// 4-Pfaffian bound at `n = 6`.
    pub fn select(kind: MatrixKind, m: u32, n: u32, t: u32) -> Option<BoundTheorem> {
        match kind {
            MatrixKind::Ordinary => {
                if t == m {
                    Some(BoundTheorem::MaximalMinors)
                } else if m == n && t + 1 == n {
                    Some(BoundTheorem::SubmaximalSquareMinors)
                } else if t == 2 {
                    Some(BoundTheorem::TwoMinors)
                } else if t > 2 {
                    Some(BoundTheorem::Minors)
                } else {
                    None
                }
            }
            MatrixKind::Symmetric => (t + 1 == n).then_some(BoundTheorem::SymmetricSubmaximal),
            MatrixKind::Alternating => {
                let two_t = 2 * t;
                if two_t + 1 == n {
                    Some(BoundTheorem::SubmaximalPfaffians)
                } else if two_t + 2 == n {
                    Some(BoundTheorem::CorankTwoPfaffians)
                } else if two_t == 4 && two_t + 2 < n {
                    Some(BoundTheorem::FourPfaffians)
                } else if 4 < two_t && two_t + 2 < n {
                    Some(BoundTheorem::Pfaffians)
                } else {
                    None
                }
            }
        }
    }

    pub fn for_instance(inst: &ProblemInstance) -> Option<BoundTheorem> {
        Self::select(inst.kind, inst.m, inst.n, inst.t)
    }

    pub fn source(self) -> Source {
        match self {
            BoundTheorem::MaximalMinors => Source::MaximalMinorsBound,
            BoundTheorem::TwoMinors => Source::TwoMinorsBound,
            BoundTheorem::SubmaximalSquareMinors => Source::SubmaximalSquareMinorsBound,
            BoundTheorem::Minors => Source::MinorsBound,
            BoundTheorem::SymmetricSubmaximal => Source::SymmetricSubmaximalBound,
            BoundTheorem::SubmaximalPfaffians => Source::SubmaximalPfaffiansBound,
            BoundTheorem::CorankTwoPfaffians => Source::CorankTwoPfaffiansBound,
            BoundTheorem::FourPfaffians => Source::FourPfaffiansBound,
            BoundTheorem::Pfaffians => Source::PfaffiansBound,
        }
    }

    /// Whether the bound rests on regularity results proved in
    /// characteristic zero.
    pub fn needs_characteristic_zero(self) -> bool {
        !matches!(
            self,
            BoundTheorem::MaximalMinors | BoundTheorem::SymmetricSubmaximal | BoundTheorem::SubmaximalPfaffians
        )
    }
}

/// Evidence that the capped height hypotheses hold for an instance.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Attestation {
    instance: ProblemInstance,
}

impl Attestation {
    /// Succeeds for a satisfied report in [`HypothesisMode::Bounds`].
    pub fn from_report(report: &HypothesisReport) -> Option<Attestation> {
        (report.mode == HypothesisMode::Bounds && report.all_satisfied)
            .then_some(Attestation { instance: report.instance })
    }

    /// The caller vouches for the hypotheses, e.g. for the generic matrix
    /// or when tabulating formulas.
    pub fn assumed(instance: &ProblemInstance) -> Attestation {
        Attestation { instance: *instance }
    }

    pub fn instance(&self) -> &ProblemInstance {
        &self.instance
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeBounds {
    pub k: u32,
    pub b0: BoundValue,
    pub td: BoundValue,
    pub source: Source,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BoundsOutcome {
    Bounds(DegreeBounds),
    /// The selected result gives no bound for this power.
    NotApplicable {
        k: u32,
        source: Source,
        reason: String,
    },
}

impl BoundsOutcome {
    pub fn bounds(&self) -> Option<&DegreeBounds> {
        match self {
            BoundsOutcome::Bounds(b) => Some(b),
            BoundsOutcome::NotApplicable { .. } => None,
        }
    }

    pub fn source(&self) -> Source {
        match self {
            BoundsOutcome::Bounds(b) => b.source,
            BoundsOutcome::NotApplicable { source, .. } => *source,
        }
    }
}

/// Upper bounds for `b0(A_k(I))` and `td(A_k(I))`, where `A_k(I)` is the
/// degree-`k` part of the ideal of defining equations of the Rees algebra.
pub fn degree_bounds(inst: &ProblemInstance, k: u32, attestation: &Attestation) -> Result<BoundsOutcome, BoundsError> {
    let a = &attestation.instance;
    if (a.kind, a.m, a.n, a.t, a.d) != (inst.kind, inst.m, inst.n, inst.t, inst.d) {
        return Err(BoundsError::AttestationMismatch { attested: a.to_string(), requested: inst.to_string() });
    }
    if k == 0 {
        return Err(BoundsError::PowerOutOfRange(k));
    }
    let theorem = BoundTheorem::for_instance(inst).ok_or_else(|| BoundsError::NoApplicableTheorem(inst.to_string()))?;
    let source = theorem.source();
    if theorem.needs_characteristic_zero() && inst.characteristic != 0 {
        return Err(BoundsError::CharacteristicNotZero { theorem: source, characteristic: inst.characteristic });
    }
    Evaluation::new(inst, k, source).run(theorem)
}

struct Evaluation {
    m: i64,
    n: i64,
    t: u32,
    d: i64,
    delta: i64,
    k: i64,
    source: Source,
}

impl Evaluation {
    fn new(inst: &ProblemInstance, k: u32, source: Source) -> Self {
        Evaluation {
            m: inst.m.into(),
            n: inst.n.into(),
            t: inst.t,
            d: inst.d.into(),
            delta: inst.delta.into(),
            k: k.into(),
            source,
        }
    }

    /// `(d - 1)(delta - 1)`.
    fn b0_base(&self) -> i64 {
        (self.d - 1) * (self.delta - 1)
    }

    /// `d (delta - 1)`.
    fn td_base(&self) -> i64 {
        self.d * (self.delta - 1)
    }

    fn conditional(&self, term: GenericTerm, floor: i64) -> BoundValue {
        BoundValue::Conditional { term, delta: self.delta as u32, floor }
    }

    fn bounds(&self, b0: BoundValue, td: BoundValue) -> BoundsOutcome {
        BoundsOutcome::Bounds(DegreeBounds { k: self.k as u32, b0, td, source: self.source, notes: Vec::new() })
    }

    fn bounds_noted(&self, b0: BoundValue, td: BoundValue, note: &str) -> BoundsOutcome {
        BoundsOutcome::Bounds(DegreeBounds {
            k: self.k as u32,
            b0,
            td,
            source: self.source,
            notes: vec![note.to_string()],
        })
    }

    fn vanishes(&self) -> BoundsOutcome {
        self.bounds(BoundValue::NegInfinity, BoundValue::NegInfinity)
    }

    fn not_applicable(&self, min_k: i64) -> BoundsOutcome {
        BoundsOutcome::NotApplicable {
            k: self.k as u32,
            source: self.source,
            reason: format!("bound holds only for k >= {min_k}"),
        }
    }

    fn finite(&self, b0: i64, td: i64) -> BoundsOutcome {
        self.bounds(BoundValue::Finite(b0), BoundValue::Finite(td))
    }

    /// Least `k` from which the Pfaffian bounds based on high-power
    /// regularity apply.
    fn pfaffian_min_k(&self) -> i64 {
        if self.n % 2 == 0 {
            self.n - 2
        } else {
            self.n - 3
        }
    }

    fn run(&self, theorem: BoundTheorem) -> Result<BoundsOutcome, BoundsError> {
        let (m, n, d, delta, k) = (self.m, self.n, self.d, self.delta, self.k);
        Ok(match theorem {
            BoundTheorem::MaximalMinors => {
                if n == m {
                    self.vanishes()
                } else if n == m + 1 {
                    if d > k.min(m) {
                        self.vanishes()
                    } else {
                        self.finite(self.b0_base(), self.td_base())
                    }
                } else {
                    let b0 = if d - 1 > k.min(m) * (n - m) { 0 } else { self.b0_base() };
                    self.bounds_noted(
                        BoundValue::Finite(b0),
                        BoundValue::PosInfinity,
                        "td(A_k(J)) is infinite for some k, so td is not bounded",
                    )
                }
            }
            BoundTheorem::TwoMinors => {
                let td_note = "td(A_k(J)) is finite for every k";
                if m == 3 {
                    self.bounds_noted(
                        BoundValue::Finite(self.b0_base()),
                        self.conditional(GenericTerm::ConcentrationDegree, self.td_base()),
                        td_note,
                    )
                } else if k < 2 {
                    self.not_applicable(2)
                } else {
                    let extra = if k <= m - 2 { delta * (m - k - 1) } else { 0 };
                    self.bounds_noted(
                        self.conditional(GenericTerm::GenerationDegree, self.b0_base() + extra),
                        self.conditional(GenericTerm::ConcentrationDegree, self.td_base() + extra),
                        td_note,
                    )
                }
            }
            BoundTheorem::SubmaximalSquareMinors => {
                if k < n - 1 {
                    return Ok(self.not_applicable(n - 1));
                }
                let shift = delta * n_constant(NConstant::SquareSubmaximal, n as u32)? as i64;
                self.finite(self.b0_base() + shift, self.td_base() + shift)
            }
            BoundTheorem::Minors => {
                if k < m - 1 {
                    return Ok(self.not_applicable(m - 1));
                }
                let shift = delta * n_constant(NConstant::OrdinaryMinors, self.t)? as i64;
                self.bounds_noted(
                    self.conditional(GenericTerm::GenerationDegree, self.b0_base() + shift),
                    BoundValue::PosInfinity,
                    "td(A_k(J)) is infinite for some k, so td is not bounded",
                )
            }
            BoundTheorem::SymmetricSubmaximal => self.bounds_noted(
                BoundValue::ResolutionDegree { delta: delta as u32, position: (d - 1) as u32, offset: -(d - 1) },
                BoundValue::ResolutionDegree { delta: delta as u32, position: d as u32, offset: -d },
                "generation degrees of resolutions of powers of the generic symmetric ideal are not known",
            ),
            BoundTheorem::SubmaximalPfaffians => {
                if d >= n || k <= d - 2 || (k == d - 1 && d % 2 == 1) {
                    self.vanishes()
                } else if k == d - 1 {
                    let half = n - d + 1;
                    assert_eq!(half % 2, 0, "n - d + 1 is even for odd n and even d");
                    self.finite(self.b0_base(), self.b0_base() + delta * half / 2 - 1)
                } else {
                    self.finite(self.b0_base(), self.td_base())
                }
            }
            BoundTheorem::CorankTwoPfaffians => {
                if k < n - 2 {
                    return Ok(self.not_applicable(n - 2));
                }
                let shift = delta * n_constant(NConstant::CorankTwoPfaffians, n as u32)? as i64;
                self.finite(self.b0_base() + shift, self.td_base() + shift)
            }
            BoundTheorem::FourPfaffians => {
                let min_k = self.pfaffian_min_k();
                if k < min_k {
                    return Ok(self.not_applicable(min_k));
                }
                self.bounds_noted(
                    self.conditional(GenericTerm::GenerationDegree, self.b0_base()),
                    self.conditional(GenericTerm::ConcentrationDegree, self.td_base()),
                    "td(A_k(J)) is finite for every k",
                )
            }
            BoundTheorem::Pfaffians => {
                let min_k = self.pfaffian_min_k();
                if k < min_k {
                    return Ok(self.not_applicable(min_k));
                }
                let shift = delta * n_constant(NConstant::GeneralPfaffians, self.t)? as i64;
                self.bounds_noted(
                    self.conditional(GenericTerm::GenerationDegree, self.b0_base() + shift),
                    BoundValue::PosInfinity,
                    "td(A_k(J)) is infinite for some k, so td is not bounded",
                )
            }
        })
    }
}
