use std::fmt;

use thiserror::Error;

use crate::matrix::{MatrixKind, PolyMatrix};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("{kind} matrices must be square, got {m}x{n}")]
    NotSquare { kind: MatrixKind, m: u32, n: u32 },
    #[error("t = {t} out of range {range} for a {kind} {m}x{n} matrix")]
    SizeOutOfRange { kind: MatrixKind, m: u32, n: u32, t: u32, range: String },
    #[error("the base ring needs at least one variable")]
    NoVariables,
    #[error("matrix entries are not homogeneous of one common degree")]
    NonUniformDegree,
}

/// The numeric data every closed-form criterion depends on.
///
/// Ordinary shapes are stored with `m <= n`. For alternating matrices `t`
/// is half the Pfaffian size.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ProblemInstance {
    pub kind: MatrixKind,
    pub m: u32,
    pub n: u32,
    pub t: u32,
    /// Number of variables of the base polynomial ring.
    pub d: u32,
    /// Common degree of the matrix entries.
    pub delta: u32,
    pub characteristic: u64,
}

impl ProblemInstance {
    pub fn new(
        kind: MatrixKind,
        m: u32,
        n: u32,
        t: u32,
        d: u32,
        delta: u32,
        characteristic: u64,
    ) -> Result<Self, InstanceError> {
        let (m, n) = if kind == MatrixKind::Ordinary { (m.min(n), m.max(n)) } else { (m, n) };
        if kind != MatrixKind::Ordinary && m != n {
            return Err(InstanceError::NotSquare { kind, m, n });
        }
        let (ok, range) = match kind {
            MatrixKind::Alternating => (t >= 1 && 2 * t <= n, format!("1..={} (half the Pfaffian size)", n / 2)),
            _ => (t >= 1 && t <= m, format!("1..={m}")),
        };
        if !ok {
            return Err(InstanceError::SizeOutOfRange { kind, m, n, t, range });
        }
        if d == 0 {
            return Err(InstanceError::NoVariables);
        }
        Ok(ProblemInstance { kind, m, n, t, d, delta, characteristic })
    }

    /// The generic matrix over its own variables: `d` is the number of
    /// independent entries and `delta = 1`.
    pub fn generic(kind: MatrixKind, m: u32, n: u32, t: u32, characteristic: u64) -> Result<Self, InstanceError> {
        let d = match kind {
            MatrixKind::Ordinary => m * n,
            MatrixKind::Symmetric => n * (n + 1) / 2,
            MatrixKind::Alternating => n * n.saturating_sub(1) / 2,
        };
        Self::new(kind, m, n, t, d.max(1), 1, characteristic)
    }

    /// Reads `d`, `delta` and the characteristic off a concrete matrix.
    pub fn from_matrix(matrix: &PolyMatrix, t: u32) -> Result<Self, InstanceError> {
        let delta = matrix.entry_degree().ok_or(InstanceError::NonUniformDegree)?;
        Self::new(
            matrix.kind(),
            matrix.nrows() as u32,
            matrix.ncols() as u32,
            t,
            matrix.ring().nvars() as u32,
            delta,
            matrix.ring().field().characteristic(),
        )
    }

    /// Shape and size only; `d`, `delta`, characteristic left at defaults
    /// suited to formulas that ignore them.
    pub fn shape(kind: MatrixKind, m: u32, n: u32, t: u32) -> Result<Self, InstanceError> {
        Self::new(kind, m, n, t, 1, 1, 0)
    }

    /// Size of the minors or Pfaffians generating the ideal.
    pub fn generator_size(&self) -> u32 {
        match self.kind {
            MatrixKind::Alternating => 2 * self.t,
            _ => self.t,
        }
    }

    pub fn is_maximal_minors(&self) -> bool {
        self.kind == MatrixKind::Ordinary && self.t == self.m
    }
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            MatrixKind::Alternating => {
                write!(f, "alternating {}x{}, Pfaffians of size {}", self.n, self.n, 2 * self.t)?
            }
            kind => write!(f, "{kind} {}x{}, minors of size {}", self.m, self.n, self.t)?,
        }
        write!(f, ", d = {}, delta = {}, char = {}", self.d, self.delta, self.characteristic)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        let i = ProblemInstance::new(MatrixKind::Ordinary, 5, 2, 2, 3, 1, 0).unwrap();
        assert_eq!((i.m, i.n), (2, 5));
        assert!(ProblemInstance::new(MatrixKind::Ordinary, 2, 5, 3, 3, 1, 0).is_err());
        assert!(ProblemInstance::new(MatrixKind::Symmetric, 2, 3, 1, 3, 1, 0).is_err());
        assert!(ProblemInstance::new(MatrixKind::Alternating, 5, 5, 3, 3, 1, 0).is_err());
        assert!(ProblemInstance::new(MatrixKind::Alternating, 5, 5, 2, 0, 1, 0).is_err());
        assert_eq!(ProblemInstance::generic(MatrixKind::Symmetric, 3, 3, 2, 0).unwrap().d, 6);
        assert_eq!(ProblemInstance::generic(MatrixKind::Alternating, 5, 5, 2, 0).unwrap().d, 10);
    }
}
