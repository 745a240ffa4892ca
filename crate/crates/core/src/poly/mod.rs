//! Exact multivariate polynomials over `QQ` or a prime field.

mod field;
mod monomial;
mod parse;
mod polynomial;

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

pub use field::{Coeff, FieldSpec, DEFAULT_PRIME};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_poly, parse_poly_with_notes, ParseNote};
pub use polynomial::{poly_arith, ArithOp, Homogeneity, Polynomial};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("{0} is not a prime below 2^32")]
    NotPrime(u64),
    #[error("denominator vanishes modulo {modulus}")]
    DenominatorVanishes { modulus: u32 },
    #[error("operands belong to different polynomial rings")]
    RingMismatch,
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown identifier `{name}` at position {pos}")]
    UnknownIdentifier { name: String, pos: usize },
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
}

impl PolyError {
    /// Byte offset into the parsed text, for parse errors.
    pub fn position(&self) -> Option<usize> {
        match self {
            PolyError::Syntax { pos, .. } | PolyError::UnknownIdentifier { pos, .. } => Some(*pos),
            _ => None,
        }
    }
}

/// A polynomial ring `K[x_1, ..., x_d]` with a fixed term order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
    field: FieldSpec,
    order: MonomialOrder,
}

pub type RingRef = Arc<Ring>;

impl Ring {
    pub fn new(vars: Vec<String>, field: FieldSpec, order: MonomialOrder) -> Result<RingRef, PolyError> {
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(PolyError::InvalidVariable(v.clone()));
            }
            if vars[..i].contains(v) {
                return Err(PolyError::DuplicateVariable(v.clone()));
            }
        }
        Ok(Arc::new(Ring { vars, field, order }))
    }

    /// Shorthand for tests and examples; panics on bad names.
    pub fn with_vars(names: &[&str], field: FieldSpec) -> RingRef {
        Ring::new(names.iter().map(|s| s.to_string()).collect(), field, MonomialOrder::default())
            .expect("valid variable names")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables and field under another term order.
    pub fn with_order(&self, order: MonomialOrder) -> RingRef {
        Arc::new(Ring { vars: self.vars.clone(), field: self.field, order })
    }

    /// Appends variables; used when adjoining generic matrix entries.
    pub fn extended(&self, extra: &[String]) -> Result<RingRef, PolyError> {
        let mut vars = self.vars.clone();
        vars.extend(extra.iter().cloned());
        Ring::new(vars, self.field, self.order)
    }

    pub(crate) fn same(a: &RingRef, b: &RingRef) -> bool {
        Arc::ptr_eq(a, b) || **a == **b
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}] ({})", self.field, self.vars.join(", "), self.order.name())
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}
