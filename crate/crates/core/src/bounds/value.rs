use std::fmt;

/// A quantity attached to the generic ideal `J` that a bound is maximized
/// against but that is not known in closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GenericTerm {
    /// `b0(A_k(J))`.
    GenerationDegree,
    /// `td(A_k(J))`.
    ConcentrationDegree,
}

impl GenericTerm {
    pub fn symbol(self) -> &'static str {
        match self {
            GenericTerm::GenerationDegree => "b0(A_k(J))",
            GenericTerm::ConcentrationDegree => "td(A_k(J))",
        }
    }
}

/// An upper bound for the generation degree `b0` or the concentration
/// degree `td` of a graded module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundValue {
    /// The module vanishes.
    NegInfinity,
    Finite(i64),
    /// No finite bound is available.
    PosInfinity,
    /// `max{delta * term, floor}`.
    Conditional {
        term: GenericTerm,
        delta: u32,
        floor: i64,
    },
    /// `delta * b0(D_position) + offset`, where `D` is a minimal resolution
    /// of a power of the generic ideal whose generation degrees are unknown.
    ResolutionDegree {
        delta: u32,
        position: u32,
        offset: i64,
    },
}

impl BoundValue {
    pub fn finite(self) -> Option<i64> {
        match self {
            BoundValue::Finite(v) => Some(v),
            _ => None,
        }
    }

    pub fn is_neg_infinity(self) -> bool {
        self == BoundValue::NegInfinity
    }

    /// Short tag naming the variant.
    pub fn tag(self) -> &'static str {
        match self {
            BoundValue::NegInfinity => "neg_infinity",
            BoundValue::Finite(_) => "finite",
            BoundValue::PosInfinity => "pos_infinity",
            BoundValue::Conditional { .. } => "conditional",
            BoundValue::ResolutionDegree { .. } => "resolution_degree",
        }
    }
}

fn signed(f: &mut fmt::Formatter<'_>, v: i64) -> fmt::Result {
    match v {
        0 => Ok(()),
        v if v < 0 => write!(f, " - {}", v.unsigned_abs()),
        v => write!(f, " + {v}"),
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            BoundValue::NegInfinity => f.write_str("-inf"),
            BoundValue::Finite(v) => write!(f, "{v}"),
            BoundValue::PosInfinity => f.write_str("+inf"),
            BoundValue::Conditional { term, delta, floor } => {
                write!(f, "max{{{delta}*{}, {floor}}}", term.symbol())
            }
            BoundValue::ResolutionDegree { delta, position, offset } => {
                write!(f, "{delta}*b0(D_{position})")?;
                signed(f, offset)
            }
        }
    }
}
