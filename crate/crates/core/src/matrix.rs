//! Matrices of polynomials: determinants, adjoints, Pfaffians and the
//! enumeration of minors and principal Pfaffians.

use std::collections::HashMap;
use std::fmt;

use itertools::Itertools;
use thiserror::Error;

use crate::poly::{Homogeneity, PolyError, Polynomial, Ring, RingRef};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatrixKind {
    Ordinary,
    Symmetric,
    Alternating,
}

impl MatrixKind {
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Ordinary => "ordinary",
            MatrixKind::Symmetric => "symmetric",
            MatrixKind::Alternating => "alternating",
        }
    }
}

impl fmt::Display for MatrixKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for MatrixKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "ordinary" => Ok(MatrixKind::Ordinary),
            "symmetric" => Ok(MatrixKind::Symmetric),
            "alternating" | "skew" => Ok(MatrixKind::Alternating),
            other => Err(format!("unknown matrix kind `{other}` (expected ordinary, symmetric or alternating)")),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatrixError {
    #[error("{kind} matrices must be square, got {rows}x{cols}")]
    NotSquareKind { kind: MatrixKind, rows: usize, cols: usize },
    #[error("operation needs a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("row {row} has {len} entries, expected {expected}")]
    Ragged { row: usize, len: usize, expected: usize },
    #[error("entry ({i},{j}) differs from entry ({j},{i}) in a symmetric matrix")]
    NotSymmetric { i: usize, j: usize },
    #[error("entry ({i},{j}) is not the negative of entry ({j},{i}) in an alternating matrix")]
    NotAntisymmetric { i: usize, j: usize },
    #[error("diagonal entry ({i},{i}) of an alternating matrix is nonzero")]
    NonzeroDiagonal { i: usize },
    #[error("operation needs an alternating matrix, got {0}")]
    NotAlternating(MatrixKind),
    #[error("Pfaffians need even size, got {0}")]
    OddSize(usize),
    #[error("size {size} out of range 1..={max}")]
    SizeOutOfRange { size: usize, max: usize },
    #[error("generic matrices need positive dimensions")]
    EmptyShape,
    #[error("entries belong to different polynomial rings")]
    RingMismatch,
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Index sets of a square submatrix, both strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MinorSelector {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

impl MinorSelector {
    pub fn is_principal(&self) -> bool {
        self.rows == self.cols
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: RingRef,
    kind: MatrixKind,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
    entry_degree: Option<u32>,
}

impl PolyMatrix {
    /// Validates shape and kind. Entries are given row by row.
    pub fn new(ring: &RingRef, kind: MatrixKind, rows: Vec<Vec<Polynomial>>) -> Result<Self, MatrixError> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(MatrixError::Ragged { row: r, len: row.len(), expected: n });
            }
        }
        if rows.iter().flatten().any(|p| !Ring::same(p.ring(), ring)) {
            return Err(MatrixError::RingMismatch);
        }
        if kind != MatrixKind::Ordinary && m != n {
            return Err(MatrixError::NotSquareKind { kind, rows: m, cols: n });
        }
        let entries: Vec<Polynomial> = rows.into_iter().flatten().collect();
        let at = |i: usize, j: usize| &entries[i * n + j];
        match kind {
            MatrixKind::Ordinary => {}
            MatrixKind::Symmetric => {
                for (i, j) in (0..n).tuple_combinations() {
                    if at(i, j) != at(j, i) {
                        return Err(MatrixError::NotSymmetric { i, j });
                    }
                }
            }
            MatrixKind::Alternating => {
                for i in 0..n {
                    if !at(i, i).is_zero() {
                        return Err(MatrixError::NonzeroDiagonal { i });
                    }
                }
                for (i, j) in (0..n).tuple_combinations() {
                    if *at(i, j) != -at(j, i) {
                        return Err(MatrixError::NotAntisymmetric { i, j });
                    }
                }
            }
        }
        let entry_degree = common_degree(&entries);
        Ok(PolyMatrix { ring: ring.clone(), kind, rows: m, cols: n, entries, entry_degree })
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn kind(&self) -> MatrixKind {
        self.kind
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn row_vecs(&self) -> Vec<Vec<Polynomial>> {
        self.entries.chunks(self.cols.max(1)).take(self.rows).map(<[_]>::to_vec).collect()
    }

    /// Common degree of the nonzero entries; `None` if they disagree, are
    /// not homogeneous, or all vanish.
    pub fn entry_degree(&self) -> Option<u32> {
        self.entry_degree
    }

    pub fn transpose(&self) -> PolyMatrix {
        let entries = (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .map(|(i, j)| self.get(i, j).clone())
            .collect();
        PolyMatrix { entries, rows: self.cols, cols: self.rows, ..self.clone() }
    }

    /// Submatrix on the given rows and columns. Principal submatrices keep
    /// the kind; others become ordinary.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> PolyMatrix {
        let kind = if rows == cols { self.kind } else { MatrixKind::Ordinary };
        let entries: Vec<Polynomial> =
            rows.iter().flat_map(|&i| cols.iter().map(move |&j| self.get(i, j).clone())).collect();
        let entry_degree = common_degree(&entries);
        PolyMatrix { ring: self.ring.clone(), kind, rows: rows.len(), cols: cols.len(), entries, entry_degree }
    }

    pub fn identity(ring: &RingRef, n: usize) -> PolyMatrix {
        Self::scalar(ring, n, &Polynomial::one(ring))
    }

    /// `c * I_n`, as an ordinary matrix.
    pub fn scalar(ring: &RingRef, n: usize, c: &Polynomial) -> PolyMatrix {
        let rows =
            (0..n).map(|i| (0..n).map(|j| if i == j { c.clone() } else { Polynomial::zero(ring) }).collect()).collect();
        PolyMatrix::new(ring, MatrixKind::Ordinary, rows).expect("diagonal matrix")
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::NotSquare { rows: self.cols, cols: other.rows });
        }
        if !Ring::same(&self.ring, &other.ring) {
            return Err(MatrixError::RingMismatch);
        }
        let rows = (0..self.rows)
            .map(|i| {
                (0..other.cols)
                    .map(|j| {
                        (0..self.cols)
                            .fold(Polynomial::zero(&self.ring), |acc, l| &acc + &(self.get(i, l) * other.get(l, j)))
                    })
                    .collect()
            })
            .collect();
        PolyMatrix::new(&self.ring, MatrixKind::Ordinary, rows)
    }

    fn require_square(&self) -> Result<(), MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare { rows: self.rows, cols: self.cols });
        }
        Ok(())
    }

    fn require_even_alternating(&self) -> Result<(), MatrixError> {
        if self.kind != MatrixKind::Alternating {
            return Err(MatrixError::NotAlternating(self.kind));
        }
        if self.rows % 2 == 1 {
            return Err(MatrixError::OddSize(self.rows));
        }
        Ok(())
    }

    fn grid(&self) -> Vec<Vec<Polynomial>> {
        self.row_vecs()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row = (0..self.cols).map(|j| self.get(i, j).to_string()).join(", ");
            writeln!(f, "[{row}]")?;
        }
        Ok(())
    }
}

fn common_degree(entries: &[Polynomial]) -> Option<u32> {
    let mut degree = None;
    for p in entries {
        match p.homogeneous_degree() {
            Homogeneity::AllDegrees => {}
            Homogeneity::Mixed => return None,
            Homogeneity::Degree(d) => match degree {
                None => degree = Some(d),
                Some(e) if e == d => {}
                Some(_) => return None,
            },
        }
    }
    degree
}

/// Matrix of independent indeterminates of the given kind over fresh
/// variables appended to `base`. Variables are named `x{i}_{j}` (1-based)
/// unless that clashes with an existing name.
pub fn generic_matrix(m: usize, n: usize, kind: MatrixKind, base: &RingRef) -> Result<PolyMatrix, MatrixError> {
    if m == 0 || n == 0 {
        return Err(MatrixError::EmptyShape);
    }
    if kind != MatrixKind::Ordinary && m != n {
        return Err(MatrixError::NotSquareKind { kind, rows: m, cols: n });
    }
    let slots: Vec<(usize, usize)> = match kind {
        MatrixKind::Ordinary => (0..m).cartesian_product(0..n).collect(),
        MatrixKind::Symmetric => (0..n).flat_map(|i| (i..n).map(move |j| (i, j))).collect(),
        MatrixKind::Alternating => (0..n).tuple_combinations().collect(),
    };
    let prefix = fresh_prefix(base, &slots);
    let names: Vec<String> = slots.iter().map(|(i, j)| format!("{prefix}{}_{}", i + 1, j + 1)).collect();
    let ring = base.extended(&names)?;
    let offset = base.nvars();
    let var_at: HashMap<(usize, usize), Polynomial> =
        slots.iter().enumerate().map(|(k, &ij)| (ij, Polynomial::var(&ring, offset + k))).collect();
    let entry = |i: usize, j: usize| -> Polynomial {
        match kind {
            MatrixKind::Ordinary => var_at[&(i, j)].clone(),
            MatrixKind::Symmetric => var_at[&(i.min(j), i.max(j))].clone(),
            MatrixKind::Alternating => match i.cmp(&j) {
                std::cmp::Ordering::Less => var_at[&(i, j)].clone(),
                std::cmp::Ordering::Equal => Polynomial::zero(&ring),
                std::cmp::Ordering::Greater => -&var_at[&(j, i)],
            },
        }
    };
    let rows = (0..m).map(|i| (0..n).map(|j| entry(i, j)).collect()).collect();
    PolyMatrix::new(&ring, kind, rows)
}

fn fresh_prefix(base: &RingRef, slots: &[(usize, usize)]) -> String {
    let clashes = |p: &str| slots.iter().any(|(i, j)| base.var_index(&format!("{p}{}_{}", i + 1, j + 1)).is_some());
    let mut prefix = String::from("x");
    while clashes(&prefix) {
        prefix.push('x');
    }
    prefix
}

/// Determinant, by cofactor expansion up to size 4 and fraction-free
/// elimination above.
pub fn determinant(m: &PolyMatrix) -> Result<Polynomial, MatrixError> {
    m.require_square()?;
    if m.nrows() <= 4 {
        Ok(cofactor_det(&m.grid(), m.ring()))
    } else {
        Ok(bareiss_det(m.grid(), m.ring()))
    }
}

/// Determinant by Laplace expansion along the first row.
pub fn determinant_cofactor(m: &PolyMatrix) -> Result<Polynomial, MatrixError> {
    m.require_square()?;
    Ok(cofactor_det(&m.grid(), m.ring()))
}

/// Determinant by Bareiss fraction-free elimination.
pub fn determinant_bareiss(m: &PolyMatrix) -> Result<Polynomial, MatrixError> {
    m.require_square()?;
    Ok(bareiss_det(m.grid(), m.ring()))
}

fn cofactor_det(grid: &[Vec<Polynomial>], ring: &RingRef) -> Polynomial {
    let n = grid.len();
    // expansion over column subsets, bottom-up: dets of the last `k` rows
    let mut memo: HashMap<u64, Polynomial> = HashMap::new();
    memo.insert(0, Polynomial::one(ring));
    for k in 1..=n {
        let row = n - k;
        for cols in (0..n).combinations(k) {
            let mut acc = Polynomial::zero(ring);
            let mask: u64 = cols.iter().map(|c| 1u64 << c).sum();
            for (pos, &c) in cols.iter().enumerate() {
                let a = &grid[row][c];
                if a.is_zero() {
                    continue;
                }
                let rest = &memo[&(mask & !(1u64 << c))];
                let term = a * rest;
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            memo.insert(mask, acc);
        }
        if k >= 2 {
            memo.retain(|mask, _| mask.count_ones() as usize >= k);
        }
    }
    memo.remove(&((1u64 << n) - 1)).unwrap_or_else(|| Polynomial::one(ring))
}

fn bareiss_det(mut a: Vec<Vec<Polynomial>>, ring: &RingRef) -> Polynomial {
    let n = a.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    let mut negate = false;
    let mut prev = Polynomial::one(ring);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Polynomial::zero(ring),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss quotient is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// `adj(M)` with `adj(M) * M = det(M) * I`.
pub fn classical_adjoint(m: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
    m.require_square()?;
    let n = m.nrows();
    let all: Vec<usize> = (0..n).collect();
    let without = |k: usize| all.iter().copied().filter(|&x| x != k).collect::<Vec<_>>();
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let minor = determinant(&m.submatrix(&without(j), &without(i)))?;
            row.push(if (i + j) % 2 == 0 { minor } else { -minor });
        }
        rows.push(row);
    }
    let kind = if m.kind() == MatrixKind::Symmetric { MatrixKind::Symmetric } else { MatrixKind::Ordinary };
    PolyMatrix::new(m.ring(), kind, rows)
}

/// Pfaffian of an even alternating matrix; `Pf` of the empty matrix is 1.
pub fn pfaffian(m: &PolyMatrix) -> Result<Polynomial, MatrixError> {
    m.require_even_alternating()?;
    let n = m.nrows();
    let mut pf = PfaffianTable::new(m);
    Ok(pf.get(mask_of(0..n)))
}

/// Alternating matrix `P` with `P * M = Pf(M) * I`: entry `(i,j)` for `i<j`
/// is `(-1)^(i+j)` times the Pfaffian with rows and columns `i`, `j` removed.
pub fn pfaffian_adjoint(m: &PolyMatrix) -> Result<PolyMatrix, MatrixError> {
    m.require_even_alternating()?;
    let n = m.nrows();
    let full = mask_of(0..n);
    let mut pf = PfaffianTable::new(m);
    let ring = m.ring();
    let mut rows = vec![vec![Polynomial::zero(ring); n]; n];
    for (i, j) in (0..n).tuple_combinations() {
        let sub = pf.get(full & !(1 << i) & !(1 << j));
        let entry = if (i + j) % 2 == 0 { sub } else { -sub };
        rows[j][i] = -&entry;
        rows[i][j] = entry;
    }
    PolyMatrix::new(ring, MatrixKind::Alternating, rows)
}

fn mask_of(idx: impl IntoIterator<Item = usize>) -> u64 {
    idx.into_iter().fold(0, |acc, i| acc | (1u64 << i))
}

/// Memoized Pfaffians of principal submatrices, keyed by index mask.
struct PfaffianTable<'a> {
    m: &'a PolyMatrix,
    memo: HashMap<u64, Polynomial>,
}

impl<'a> PfaffianTable<'a> {
    fn new(m: &'a PolyMatrix) -> Self {
        assert!(m.nrows() <= 64, "Pfaffian size limited to 64");
        PfaffianTable { m, memo: HashMap::new() }
    }

    fn get(&mut self, mask: u64) -> Polynomial {
        if mask == 0 {
            return Polynomial::one(self.m.ring());
        }
        if let Some(p) = self.memo.get(&mask) {
            return p.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut acc = Polynomial::zero(self.m.ring());
        let mut bits = rest;
        let mut pos = 0;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let a = self.m.get(first, j);
            if !a.is_zero() {
                let term = a * &self.get(rest & !(1 << j));
                acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            pos += 1;
        }
        self.memo.insert(mask, acc.clone());
        acc
    }
}

/// All `t x t` row/column selections in lexicographic order.
pub fn minor_selectors(m: usize, n: usize, t: usize) -> impl Iterator<Item = MinorSelector> {
    (0..m)
        .combinations(t)
        .cartesian_product((0..n).combinations(t).collect::<Vec<_>>())
        .map(|(rows, cols)| MinorSelector { rows, cols })
}

/// All `t x t` minors, in the order of [`minor_selectors`].
pub fn enumerate_minors(m: &PolyMatrix, t: usize) -> Result<Vec<Polynomial>, MatrixError> {
    let max = m.nrows().min(m.ncols());
    if t == 0 || t > max {
        return Err(MatrixError::SizeOutOfRange { size: t, max });
    }
    minor_selectors(m.nrows(), m.ncols(), t).map(|s| determinant(&m.submatrix(&s.rows, &s.cols))).collect()
}

/// Pfaffians of all principal `two_t x two_t` submatrices, index sets in
/// lexicographic order.
pub fn enumerate_pfaffians(m: &PolyMatrix, two_t: usize) -> Result<Vec<Polynomial>, MatrixError> {
    if m.kind() != MatrixKind::Alternating {
        return Err(MatrixError::NotAlternating(m.kind()));
    }
    if two_t % 2 == 1 {
        return Err(MatrixError::OddSize(two_t));
    }
    if two_t == 0 || two_t > m.nrows() {
        return Err(MatrixError::SizeOutOfRange { size: two_t, max: m.nrows() });
    }
    let mut table = PfaffianTable::new(m);
    Ok((0..m.nrows()).combinations(two_t).map(|s| table.get(mask_of(s))).collect())
}
