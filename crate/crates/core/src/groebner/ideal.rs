use std::fmt;
use std::sync::{Arc, Mutex};

use crate::math::binomial;
use crate::matrix::{enumerate_minors, enumerate_pfaffians, MatrixError, MatrixKind, PolyMatrix};
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingRef};

use super::{buchberger_with, monomial_ideal_dimension, normal_form, ComputeOptions, ExtendedHeight, GroebnerError};

/// Reduced Groebner basis of an ideal together with what is derived from it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerData {
    pub basis: Vec<Polynomial>,
    pub leading_monomials: Vec<Monomial>,
    pub height: ExtendedHeight,
}

/// Finitely generated ideal with a lazily computed, shared Groebner cache.
pub struct IdealHandle {
    ring: RingRef,
    generators: Vec<Polynomial>,
    order: MonomialOrder,
    cache: Mutex<Option<Arc<GroebnerData>>>,
}

impl IdealHandle {
    pub fn new(ring: &RingRef, generators: Vec<Polynomial>) -> Result<Self, GroebnerError> {
        if generators.iter().any(|g| !Ring::same(g.ring(), ring)) {
            return Err(GroebnerError::RingMismatch);
        }
        Ok(IdealHandle { ring: ring.clone(), generators, order: ring.order(), cache: Mutex::new(None) })
    }

    pub fn unit(ring: &RingRef) -> Self {
        Self::new(ring, vec![Polynomial::one(ring)]).expect("same ring")
    }

    pub fn zero(ring: &RingRef) -> Self {
        Self::new(ring, Vec::new()).expect("same ring")
    }

    /// Same generators, Groebner data computed under `order`.
    pub fn with_order(&self, order: MonomialOrder) -> Self {
        IdealHandle { order, cache: Mutex::new(None), ..Self::new(&self.ring, self.generators.clone()).unwrap() }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn groebner(&self) -> Arc<GroebnerData> {
        self.groebner_with(&ComputeOptions::default()).expect("no deadline set")
    }

    pub fn groebner_with(&self, opts: &ComputeOptions) -> Result<Arc<GroebnerData>, GroebnerError> {
        if let Some(data) = self.cache.lock().expect("cache lock").as_ref() {
            return Ok(data.clone());
        }
        let basis = buchberger_with(&self.generators, self.order, opts)?;
        let leading_monomials: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial().unwrap().clone()).collect();
        let height = match monomial_ideal_dimension(&leading_monomials, self.ring.nvars()) {
            None => ExtendedHeight::Infinite,
            Some(dim) => ExtendedHeight::Finite((self.ring.nvars() - dim) as u32),
        };
        let data = Arc::new(GroebnerData { basis, leading_monomials, height });
        *self.cache.lock().expect("cache lock") = Some(data.clone());
        Ok(data)
    }

    pub fn height(&self) -> ExtendedHeight {
        self.height_with(&ComputeOptions::default()).expect("no deadline set")
    }

    pub fn height_with(&self, opts: &ComputeOptions) -> Result<ExtendedHeight, GroebnerError> {
        if self.generators.iter().all(Polynomial::is_zero) {
            return Ok(ExtendedHeight::Finite(0));
        }
        if self.generators.iter().any(Polynomial::is_unit) {
            return Ok(ExtendedHeight::Infinite);
        }
        Ok(self.groebner_with(opts)?.height)
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        let data = self.groebner();
        let p = p.reorder(&self.ring.with_order(self.order)).expect("same variables");
        normal_form(&p, data.basis.iter()).is_zero()
    }
}

impl Clone for IdealHandle {
    fn clone(&self) -> Self {
        IdealHandle {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            order: self.order,
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for IdealHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("IdealHandle")
            .field("ring", &self.ring)
            .field("generators", &self.generators)
            .field("order", &self.order)
            .finish_non_exhaustive()
    }
}

fn distinct_nonzero(polys: Vec<Polynomial>) -> Vec<Polynomial> {
    let mut seen: Vec<Polynomial> = Vec::new();
    let mut out = Vec::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        let key = p.monic();
        if !seen.contains(&key) {
            seen.push(key);
            out.push(p);
        }
    }
    out
}

/// Ideal of `t x t` minors: the unit ideal for `t <= 0` and the zero ideal
/// when `t` exceeds both dimensions.
pub fn ideal_of_minors(m: &PolyMatrix, t: i64) -> Result<IdealHandle, GroebnerError> {
    let ring = m.ring();
    if t <= 0 {
        return Ok(IdealHandle::unit(ring));
    }
    if t as usize > m.nrows().min(m.ncols()) {
        return Ok(IdealHandle::zero(ring));
    }
    IdealHandle::new(ring, distinct_nonzero(enumerate_minors(m, t as usize)?))
}

/// Ideal of principal `two_t x two_t` Pfaffians of an alternating matrix,
/// with the unit ideal for `two_t <= 0` and the zero ideal above the size.
pub fn ideal_of_pfaffians(m: &PolyMatrix, two_t: i64) -> Result<IdealHandle, GroebnerError> {
    if m.kind() != MatrixKind::Alternating {
        return Err(MatrixError::NotAlternating(m.kind()).into());
    }
    let ring = m.ring();
    if two_t <= 0 {
        return Ok(IdealHandle::unit(ring));
    }
    if two_t % 2 == 1 {
        return Err(MatrixError::OddSize(two_t as usize).into());
    }
    if two_t as usize > m.nrows() {
        return Ok(IdealHandle::zero(ring));
    }
    IdealHandle::new(ring, distinct_nonzero(enumerate_pfaffians(m, two_t as usize)?))
}

/// `I_t(M)` for ordinary and symmetric matrices, `Pf_2t(M)` for alternating.
pub fn determinantal_ideal(m: &PolyMatrix, t: i64) -> Result<IdealHandle, GroebnerError> {
    match m.kind() {
        MatrixKind::Alternating => ideal_of_pfaffians(m, 2 * t),
        _ => ideal_of_minors(m, t),
    }
}

/// Maximal height of `I_t` (resp. `Pf_2t`) for a matrix of the given kind.
/// For alternating matrices `t` is half the Pfaffian size.
pub fn expected_generic_height(kind: MatrixKind, m: usize, n: usize, t: usize) -> u64 {
    let (m, n, t) = (m as i64, n as i64, t as i64);
    match kind {
        MatrixKind::Ordinary => ((m - t + 1) * (n - t + 1)) as u64,
        MatrixKind::Symmetric => binomial(n - t + 2, 2),
        MatrixKind::Alternating => binomial(n - 2 * t + 2, 2),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GenericHeightReport {
    pub expected: u64,
    pub actual: ExtendedHeight,
    pub holds: bool,
}

/// Compares the height of `I_t(M)` (resp. `Pf_2t(M)`, with `t` half the
/// Pfaffian size) against its generic value.
pub fn is_generic_height(
    m: &PolyMatrix,
    t: usize,
    opts: &ComputeOptions,
) -> Result<GenericHeightReport, GroebnerError> {
    let (rows, cols) = (m.nrows().min(m.ncols()), m.nrows().max(m.ncols()));
    let (ok, range) = match m.kind() {
        MatrixKind::Alternating => (t >= 1 && 2 * t <= cols, format!("1..={} (half the Pfaffian size)", cols / 2)),
        _ => (t >= 1 && t <= rows, format!("1..={rows}")),
    };
    if !ok {
        return Err(GroebnerError::OutOfRange { size: t as i64, range });
    }
    let expected = expected_generic_height(m.kind(), rows, cols, t);
    let actual = determinantal_ideal(m, t as i64)?.height_with(opts)?;
    Ok(GenericHeightReport { expected, actual, holds: actual == ExtendedHeight::Finite(expected as u32) })
}
