use std::cmp::Ordering;
use std::time::Instant;

use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring, RingRef};

use super::GroebnerError;

/// Knobs for a Groebner computation.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ComputeOptions {
    /// Abort with [`GroebnerError::Timeout`] once this instant passes.
    pub deadline: Option<Instant>,
}

impl ComputeOptions {
    pub fn with_timeout(timeout: std::time::Duration) -> Self {
        ComputeOptions { deadline: Some(Instant::now() + timeout) }
    }

    fn check(&self) -> Result<(), GroebnerError> {
        match self.deadline {
            Some(d) if Instant::now() >= d => Err(GroebnerError::Timeout),
            _ => Ok(()),
        }
    }
}

/// Reduced Groebner basis under `order`, sorted by descending leading
/// monomial. The result lives in the input ring re-equipped with `order`.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<Vec<Polynomial>, GroebnerError> {
    buchberger_with(gens, order, &ComputeOptions::default())
}

pub fn buchberger_with(
    gens: &[Polynomial],
    order: MonomialOrder,
    opts: &ComputeOptions,
) -> Result<Vec<Polynomial>, GroebnerError> {
    let Some(first) = gens.first() else {
        return Ok(Vec::new());
    };
    if gens.iter().any(|g| !Ring::same(g.ring(), first.ring())) {
        return Err(GroebnerError::RingMismatch);
    }
    let ring: RingRef =
        if first.ring().order() == order { first.ring().clone() } else { first.ring().with_order(order) };
    let mut inputs: Vec<Polynomial> =
        gens.iter().filter(|g| !g.is_zero()).map(|g| g.reorder(&ring).expect("same variables").monic()).collect();
    if inputs.iter().any(Polynomial::is_unit) {
        return Ok(vec![Polynomial::one(&ring)]);
    }
    inputs.sort_by(|a, b| order.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));

    let mut state = State { order, basis: Vec::new(), pairs: Vec::new() };
    for f in inputs {
        opts.check()?;
        let h = normal_form(&f, state.active_polys());
        if !h.is_zero() {
            let sugar = h.total_degree().unwrap();
            state.insert(h.monic(), sugar);
        }
    }
    while let Some(pair) = state.next_pair() {
        opts.check()?;
        let (f, g) = (&state.basis[pair.i], &state.basis[pair.j]);
        let s = s_polynomial(&f.poly, &g.poly, &pair.lcm);
        let h = normal_form(&s, state.active_polys());
        if h.is_zero() {
            continue;
        }
        if h.is_unit() {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        state.insert(h.monic(), pair.sugar);
    }

    let result = interreduce(state.active_polys().cloned().collect(), order);
    #[cfg(test)]
    {
        assert!(verify(&result), "basis failed verification");
        for g in gens {
            let g = g.reorder(&ring).unwrap();
            assert!(normal_form(&g, result.iter()).is_zero(), "generator not in span of basis");
        }
    }
    Ok(result)
}

struct Entry {
    poly: Polynomial,
    sugar: u32,
    active: bool,
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct State {
    order: MonomialOrder,
    basis: Vec<Entry>,
    pairs: Vec<Pair>,
}

impl State {
    fn lm(&self, i: usize) -> &Monomial {
        self.basis[i].poly.leading_monomial().unwrap()
    }

    fn active_polys(&self) -> impl Iterator<Item = &Polynomial> + Clone {
        self.basis.iter().filter(|e| e.active).map(|e| &e.poly)
    }

    fn pair(&self, i: usize, j: usize) -> Pair {
        let (a, b) = (self.lm(i), self.lm(j));
        let lcm = a.lcm(b);
        let sugar =
            (self.basis[i].sugar + lcm.degree() - a.degree()).max(self.basis[j].sugar + lcm.degree() - b.degree());
        Pair { i, j, lcm, sugar }
    }

    /// Lowest sugar first, ties broken by the smaller lcm.
    fn next_pair(&mut self) -> Option<Pair> {
        let order = self.order;
        let best = (0..self.pairs.len()).min_by(|&a, &b| {
            let (p, q) = (&self.pairs[a], &self.pairs[b]);
            p.sugar.cmp(&q.sugar).then_with(|| order.cmp(&p.lcm, &q.lcm)).then_with(|| (p.i, p.j).cmp(&(q.i, q.j)))
        })?;
        Some(self.pairs.swap_remove(best))
    }

    /// Gebauer-Moeller update for a new basis element.
    fn insert(&mut self, h: Polynomial, sugar: u32) {
        let k = self.basis.len();
        self.basis.push(Entry { poly: h, sugar, active: true });
        let lm_h = self.lm(k).clone();

        let mut fresh: Vec<Pair> = (0..k).filter(|&i| self.basis[i].active).map(|i| self.pair(i, k)).collect();

        // chain criterion among the new pairs; coprime pairs are kept here
        // so that they can shadow others, then dropped below
        let mut kept: Vec<Pair> = Vec::new();
        while let Some(p) = fresh.pop() {
            let coprime = self.lm(p.i).is_coprime(&lm_h);
            let shadowed = fresh.iter().chain(kept.iter()).any(|q| q.lcm.divides(&p.lcm));
            if coprime || !shadowed {
                kept.push(p);
            }
        }
        kept.retain(|p| !self.lm(p.i).is_coprime(&lm_h));

        // old pairs made redundant by the new leading monomial
        let basis = &self.basis;
        let lm = |i: usize| basis[i].poly.leading_monomial().unwrap();
        self.pairs.retain(|p| !(lm_h.divides(&p.lcm) && lm(p.i).lcm(&lm_h) != p.lcm && lm(p.j).lcm(&lm_h) != p.lcm));
        self.pairs.extend(kept);

        for i in 0..k {
            if self.basis[i].active && lm_h.divides(self.lm(i)) {
                self.basis[i].active = false;
            }
        }
    }
}

fn s_polynomial(f: &Polynomial, g: &Polynomial, lcm: &Monomial) -> Polynomial {
    let field = f.ring().field();
    let uf = f.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    let ug = g.leading_monomial().unwrap().quotient_of(lcm).unwrap();
    let lhs = f.mul_term(&uf, &field.inv(f.leading_coeff().unwrap()).unwrap());
    lhs.sub_scaled_shifted(&field.inv(g.leading_coeff().unwrap()).unwrap(), &ug, g)
}

/// Full reduction of `p` by `basis`: no term of the result is divisible by
/// a leading monomial of the basis.
pub fn normal_form<'a>(p: &Polynomial, basis: impl Iterator<Item = &'a Polynomial> + Clone) -> Polynomial {
    let field = p.ring().field();
    let mut rest = p.clone();
    let mut remainder = Vec::new();
    while let Some((m, c)) = rest.terms().first() {
        let divisor = basis.clone().find(|g| g.leading_monomial().is_some_and(|lm| lm.divides(m)));
        match divisor {
            Some(g) => {
                let q = g.leading_monomial().unwrap().quotient_of(m).unwrap();
                let coef = field.mul(c, &field.inv(g.leading_coeff().unwrap()).unwrap());
                rest = rest.sub_scaled_shifted(&coef, &q, g);
            }
            None => remainder.push(rest.pop_leading().unwrap()),
        }
    }
    Polynomial::from_sorted_terms(p.ring(), remainder)
}

fn interreduce(mut polys: Vec<Polynomial>, order: MonomialOrder) -> Vec<Polynomial> {
    polys.sort_by(|a, b| order.cmp(b.leading_monomial().unwrap(), a.leading_monomial().unwrap()));
    for i in 0..polys.len() {
        let others: Vec<Polynomial> =
            polys.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
        let mut p = polys[i].clone();
        let (lm, lc) = p.pop_leading().unwrap();
        let tail = normal_form(&p, others.iter());
        let lead = Polynomial::term(tail.ring(), lm, lc);
        polys[i] = (&lead + &tail).monic();
    }
    polys
}

/// Checks that `basis` is a reduced Groebner basis: monic, no leading
/// monomial divides any term of another element, and every S-polynomial
/// reduces to zero.
pub fn verify(basis: &[Polynomial]) -> bool {
    for (i, f) in basis.iter().enumerate() {
        if f.leading_coeff().is_none_or(|c| !c.is_one()) {
            return false;
        }
        for (j, g) in basis.iter().enumerate() {
            if i != j && f.terms().iter().any(|(m, _)| g.leading_monomial().unwrap().divides(m)) {
                return false;
            }
        }
    }
    for (i, f) in basis.iter().enumerate() {
        for g in &basis[i + 1..] {
            let lcm = f.leading_monomial().unwrap().lcm(g.leading_monomial().unwrap());
            if !normal_form(&s_polynomial(f, g, &lcm), basis.iter()).is_zero() {
                return false;
            }
        }
    }
    basis.windows(2).all(|w| {
        let order = w[0].ring().order();
        order.cmp(w[0].leading_monomial().unwrap(), w[1].leading_monomial().unwrap()) == Ordering::Greater
    })
}
