use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Coeff, Monomial, PolyError, Ring, RingRef};

/// A polynomial stored as terms sorted in descending term order with no
/// zero coefficients.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: RingRef,
    terms: Vec<(Monomial, Coeff)>,
}

/// Result of asking for a common total degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Homogeneity {
    /// The zero polynomial is homogeneous of every degree.
    AllDegrees,
    Degree(u32),
    Mixed,
}

impl Homogeneity {
    pub fn degree(self) -> Option<u32> {
        match self {
            Homogeneity::Degree(d) => Some(d),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// Ring-checked arithmetic.
pub fn poly_arith(a: &Polynomial, b: &Polynomial, op: ArithOp) -> Result<Polynomial, PolyError> {
    if !Ring::same(&a.ring, &b.ring) {
        return Err(PolyError::RingMismatch);
    }
    Ok(match op {
        ArithOp::Add => a.merge(b, false),
        ArithOp::Sub => a.merge(b, true),
        ArithOp::Mul => a.product(b),
    })
}

impl Polynomial {
    pub fn zero(ring: &RingRef) -> Self {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &RingRef) -> Self {
        Self::constant(ring, ring.field().one())
    }

    pub fn constant(ring: &RingRef, c: Coeff) -> Self {
        Self::term(ring, Monomial::one(ring.nvars()), c)
    }

    pub fn from_i64(ring: &RingRef, v: i64) -> Self {
        Self::constant(ring, ring.field().from_i64(v))
    }

    pub fn var(ring: &RingRef, index: usize) -> Self {
        Self::term(ring, Monomial::variable(ring.nvars(), index), ring.field().one())
    }

    pub fn term(ring: &RingRef, m: Monomial, c: Coeff) -> Self {
        debug_assert_eq!(m.nvars(), ring.nvars());
        debug_assert!(ring.field().contains(&c));
        let terms = if c.is_zero() { Vec::new() } else { vec![(m, c)] };
        Polynomial { ring: ring.clone(), terms }
    }

    /// Builds a canonical polynomial from arbitrary terms, combining
    /// duplicates and dropping zeros.
    pub fn from_terms(ring: &RingRef, mut terms: Vec<(Monomial, Coeff)>) -> Self {
        let order = ring.order();
        let field = ring.field();
        terms.sort_by(|a, b| order.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, Coeff)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = field.add(lc, &c),
                _ => {
                    if out.last().is_some_and(|(_, c)| c.is_zero()) {
                        out.pop();
                    }
                    out.push((m, c));
                }
            }
        }
        if out.last().is_some_and(|(_, c)| c.is_zero()) {
            out.pop();
        }
        Polynomial { ring: ring.clone(), terms: out }
    }

    /// Terms must already be sorted descending with nonzero coefficients.
    pub(crate) fn from_sorted_terms(ring: &RingRef, terms: Vec<(Monomial, Coeff)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| ring.order().cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: ring.clone(), terms }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(Monomial, Coeff)> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_unit() && self.terms[0].1.is_one()
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn leading_coeff(&self) -> Option<&Coeff> {
        self.terms.first().map(|(_, c)| c)
    }

    /// Largest total degree of a term; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn homogeneous_degree(&self) -> Homogeneity {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => Homogeneity::AllDegrees,
            Some(d) if degs.all(|e| e == d) => Homogeneity::Degree(d),
            Some(_) => Homogeneity::Mixed,
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), field.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(u, a)| (u.mul(m), field.mul(a, c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }

    /// Divides by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&self.ring.field().inv(lc).expect("nonzero leading coefficient")),
        }
    }

    /// `self - c * m * other`, in a single merge pass.
    pub fn sub_scaled_shifted(&self, c: &Coeff, m: &Monomial, other: &Polynomial) -> Polynomial {
        let field = self.ring.field();
        let neg = field.neg(c);
        let shifted = other.terms.iter().map(|(u, a)| (u.mul(m), field.mul(a, &neg)));
        Polynomial { ring: self.ring.clone(), terms: self.merge_terms(self.terms.iter().cloned(), shifted) }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.product(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.product(&base);
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a
    /// remainder or the divisor is zero.
    pub fn div_exact(&self, divisor: &Polynomial) -> Option<Polynomial> {
        let (lm, lc) = divisor.terms.first()?;
        let field = self.ring.field();
        let lc_inv = field.inv(lc)?;
        let mut rem = self.clone();
        let mut quot = Vec::new();
        while let Some((m, c)) = rem.terms.first() {
            let q_m = lm.quotient_of(m)?;
            let q_c = field.mul(c, &lc_inv);
            rem = rem.sub_scaled_shifted(&q_c, &q_m, divisor);
            quot.push((q_m, q_c));
        }
        Some(Polynomial { ring: self.ring.clone(), terms: quot })
    }

    /// Same polynomial viewed in a ring with identical variables and field
    /// but possibly another term order.
    pub fn reorder(&self, ring: &RingRef) -> Result<Polynomial, PolyError> {
        if ring.vars() != self.ring.vars() || ring.field() != self.ring.field() {
            return Err(PolyError::RingMismatch);
        }
        Ok(Polynomial::from_terms(ring, self.terms.clone()))
    }

    /// Embeds into a ring whose variable list starts with this ring's.
    pub fn embed(&self, ring: &RingRef) -> Result<Polynomial, PolyError> {
        let n = self.ring.nvars();
        if ring.nvars() < n || ring.vars()[..n] != *self.ring.vars() || ring.field() != self.ring.field() {
            return Err(PolyError::RingMismatch);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.exponents().to_vec();
                e.resize(ring.nvars(), 0);
                (Monomial::new(e), c.clone())
            })
            .collect();
        Ok(Polynomial::from_terms(ring, terms))
    }

    fn merge(&self, other: &Polynomial, negate: bool) -> Polynomial {
        let field = self.ring.field();
        let terms = if negate {
            self.merge_terms(self.terms.iter().cloned(), other.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))))
        } else {
            self.merge_terms(self.terms.iter().cloned(), other.terms.iter().cloned())
        };
        Polynomial { ring: self.ring.clone(), terms }
    }

    fn merge_terms(
        &self,
        a: impl Iterator<Item = (Monomial, Coeff)>,
        b: impl Iterator<Item = (Monomial, Coeff)>,
    ) -> Vec<(Monomial, Coeff)> {
        let order = self.ring.order();
        let field = self.ring.field();
        let mut a = a.peekable();
        let mut b = b.peekable();
        let mut out = Vec::with_capacity(a.size_hint().0 + b.size_hint().0);
        loop {
            let ord = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => order.cmp(&x.0, &y.0),
            };
            match ord {
                Ordering::Greater => out.push(a.next().unwrap()),
                Ordering::Less => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (m, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = field.add(&x, &y);
                    if !s.is_zero() {
                        out.push((m, s));
                    }
                }
            }
        }
        out
    }

    fn product(&self, other: &Polynomial) -> Polynomial {
        let (small, large) = if self.terms.len() <= other.terms.len() { (self, other) } else { (other, self) };
        if small.terms.is_empty() {
            return Polynomial::zero(&self.ring);
        }
        let field = self.ring.field();
        let mut all = Vec::with_capacity(small.terms.len() * large.terms.len());
        for (m, c) in &small.terms {
            for (u, a) in &large.terms {
                all.push((m.mul(u), field.mul(c, a)));
            }
        }
        Polynomial::from_terms(&self.ring, all)
    }
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        Ring::same(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl fmt::Display for Polynomial {
    /// Descending terms, explicit `*` and `^`; parses back to the same value.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let field = self.ring.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let (negative, mag) = c.signed_parts(&field);
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.is_one() {
                f.write_str(&mag)?;
            } else {
                if mag != "1" {
                    write!(f, "{mag}*")?;
                }
                m.fmt_with(self.ring.vars(), f)?;
            }
        }
        Ok(())
    }
}

fn same_ring_or_panic(a: &Polynomial, b: &Polynomial) {
    assert!(Ring::same(&a.ring, &b.ring), "polynomial ring mismatch");
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        same_ring_or_panic(self, rhs);
        self.merge(rhs, false)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        same_ring_or_panic(self, rhs);
        self.merge(rhs, true)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        same_ring_or_panic(self, rhs);
        self.product(rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        let field = self.ring.field();
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect();
        Polynomial { ring: self.ring.clone(), terms }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
