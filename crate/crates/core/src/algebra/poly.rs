use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, Ring};
use crate::error::{Error, Result};

/// Sparse exact multivariate polynomial. No zero coefficients are stored;
/// all terms share the ring. Values are immutable after construction and
/// all operations are pure.
#[derive(Clone, PartialEq, Debug)]
pub struct Polynomial<F: Field> {
    ring: Ring,
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Polynomial<F> {
    pub fn zero(ring: &Ring) -> Self {
        Polynomial { ring: ring.clone(), terms: BTreeMap::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, F::one())
    }

    pub fn constant(ring: &Ring, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(ring.n_vars()), c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        Self::monomial(ring, Monomial::var(ring.n_vars(), i), F::one())
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring.var_index(name).ok_or_else(|| Error::UnknownVariable(name.into()))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn from_terms(ring: &Ring, it: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero(ring);
        for (m, c) in it {
            p.add_term(m, c);
        }
        p
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n_vars(&self) -> usize {
        self.ring.n_vars()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn n_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(&Monomial::one(self.ring.n_vars()))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.is_one())
    }

    fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring.describe(), other.ring.describe()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_ring(other).expect("ring mismatch in add");
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = c.neg();
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_ring(other).expect("ring mismatch in mul");
        let mut out = Self::zero(&self.ring);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        out
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = v.mul(c);
        }
        out
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        let mut out = Self::zero(&self.ring);
        for (mm, cc) in &self.terms {
            out.terms.insert(mm.mul(m), cc.mul(c));
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Total degree; None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    /// Lowest total degree among the terms; None for zero.
    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).min()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.exponent(var)).max()
    }

    /// Formal partial derivative with respect to a named variable.
    pub fn partial_derivative(&self, var: &str) -> Result<Self> {
        let i = self.ring.var_index(var).ok_or_else(|| Error::UnknownVariable(var.into()))?;
        Ok(self.partial_derivative_idx(i))
    }

    pub fn partial_derivative_idx(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.ring);
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            if e == 0 {
                continue;
            }
            let mut em = m.clone();
            em.0[i] -= 1;
            out.add_term(em, c.mul(&F::from_int(e as i64)));
        }
        out
    }

    pub fn gradient(&self) -> Vec<Self> {
        (0..self.ring.n_vars()).map(|i| self.partial_derivative_idx(i)).collect()
    }

    /// Substitute polynomial `sub` for variable `i`.
    pub fn substitute(&self, i: usize, sub: &Self) -> Self {
        let mut out = Self::zero(&self.ring);
        // group by exponent of variable i to reuse powers
        let max_e = self.degree_in(i).unwrap_or(0);
        let mut powers = Vec::with_capacity(max_e as usize + 1);
        powers.push(Self::one(&self.ring));
        for k in 1..=max_e {
            let prev = powers[(k - 1) as usize].clone();
            powers.push(prev.mul(sub));
        }
        for (m, c) in &self.terms {
            let e = m.exponent(i);
            let mut rest = m.clone();
            rest.0[i] = 0;
            let term = powers[e as usize].mul_term(&rest, c);
            out = out.add(&term);
        }
        out
    }

    /// g(x) = f(x + point), so that g(0) = f(point).
    pub fn translate(&self, point: &[F]) -> Result<Self> {
        if point.len() != self.ring.n_vars() {
            return Err(Error::DimensionMismatch { expected: self.ring.n_vars(), got: point.len() });
        }
        let mut out = self.clone();
        for (i, p) in point.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            let shifted = Self::var(&self.ring, i).add(&Self::constant(&self.ring, p.clone()));
            out = out.substitute(i, &shifted);
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[F]) -> Result<F> {
        if point.len() != self.ring.n_vars() {
            return Err(Error::DimensionMismatch { expected: self.ring.n_vars(), got: point.len() });
        }
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].pow(e));
                }
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Option<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (m, c) in &self.terms {
            let mut t = c.to_complex()?;
            for (i, &e) in m.0.iter().enumerate() {
                t *= point[i].powu(e);
            }
            acc += t;
        }
        Some(acc)
    }

    /// Leading term with respect to a monomial order.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &F)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp(a, b))
            .map(|(m, c)| (m, c))
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Monomial> {
        self.leading_term(order).map(|(m, _)| m.clone())
    }

    /// Rescale to a small canonical representative when the field offers
    /// one (integer-primitive form over Q-like towers); otherwise clone.
    pub fn content_normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let coeffs: Vec<&F> = self.terms.values().collect();
        match F::normalization_scale(&coeffs) {
            Some(s) => self.mul_scalar(&s),
            None => self.clone(),
        }
    }

    /// Normalize so that the leading coefficient is 1.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let ci = c.inv().expect("nonzero leading coefficient");
                self.mul_scalar(&ci)
            }
        }
    }

    /// Coefficients with respect to one variable, as polynomials with
    /// degree 0 in that variable; index = power of `var`.
    pub fn coeffs_in_var(&self, var: usize) -> Vec<Self> {
        let d = self.degree_in(var).unwrap_or(0);
        let mut out = vec![Self::zero(&self.ring); d as usize + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(var) as usize;
            let mut rest = m.clone();
            rest.0[var] = 0;
            out[e].add_term(rest, c.clone());
        }
        out
    }

    /// Exact multivariate division: Some(q) with self = q * d, or None.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let order = MonomialOrder::degrevlex();
        let (dm, dc) = d.leading_term(&order).map(|(m, c)| (m.clone(), c.clone()))?;
        let dci = dc.inv()?;
        let mut r = self.clone();
        let mut q = Self::zero(&self.ring);
        while !r.is_zero() {
            let (rm, rc) = r.leading_term(&order).map(|(m, c)| (m.clone(), c.clone()))?;
            let t = rm.try_div(&dm)?;
            let tc = rc.mul(&dci);
            q.add_term(t.clone(), tc.clone());
            r = r.sub(&d.mul_term(&t, &tc));
        }
        Some(q)
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Polynomial<G> {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter_map(|(m, c)| {
                    let g = f(c);
                    if g.is_zero() {
                        None
                    } else {
                        Some((m.clone(), g))
                    }
                })
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d0) => degs.all(|d| d == d0),
        }
    }

    /// Sum of the terms of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Lowest-degree homogeneous part (the tangent cone of the germ).
    pub fn lowest_part(&self) -> Self {
        match self.min_degree() {
            None => self.clone(),
            Some(d) => self.homogeneous_part(d),
        }
    }

    /// True when the variable occurs in some term.
    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.keys().any(|m| m.exponent(i) > 0)
    }

    /// Reinterpret in a smaller ring after dropping an unused variable.
    pub fn drop_var(&self, i: usize) -> Result<Self> {
        if self.uses_var(i) {
            return Err(Error::Invariant(format!(
                "cannot drop variable {} still in use",
                self.ring.var_name(i)
            )));
        }
        let ring = self.ring.without_var(i);
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = m.0.clone();
                e.remove(i);
                (Monomial(e), c.clone())
            })
            .collect();
        Ok(Polynomial { ring, terms })
    }

    /// Reinterpret in a larger ring; `map[i]` is the new index of old variable i.
    pub fn lift_to(&self, ring: &Ring, map: &[usize]) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut e = vec![0u32; ring.n_vars()];
                for (i, &ei) in m.0.iter().enumerate() {
                    e[map[i]] = ei;
                }
                (Monomial(e), c.clone())
            })
            .collect();
        Polynomial { ring: ring.clone(), terms }
    }

    /// Apply a linear change of coordinates x_i -> sum_j m[i][j] x_j.
    pub fn linear_change(&self, m: &[Vec<F>]) -> Self {
        let n = self.ring.n_vars();
        let images: Vec<Self> = (0..n)
            .map(|i| {
                let mut p = Self::zero(&self.ring);
                for j in 0..n {
                    p = p.add(&Self::var(&self.ring, j).mul_scalar(&m[i][j]));
                }
                p
            })
            .collect();
        let mut out = Self::zero(&self.ring);
        for (mon, c) in &self.terms {
            let mut t = Self::constant(&self.ring, c.clone());
            for (i, &e) in mon.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            out = out.add(&t);
        }
        out
    }

    /// Drop all terms of total degree above `n`.
    pub fn truncate_above(&self, n: u32) -> Self {
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Multiplicative inverse as a power series truncated at total
    /// degree `n`; requires a nonzero constant term.
    pub fn series_inverse(&self, n: u32) -> Option<Self> {
        let c0 = self.constant_term();
        let c0i = c0.inv()?;
        // Newton iteration y <- y (2 - p y), quadratic convergence
        let mut y = Self::constant(&self.ring, c0i);
        let two = Self::constant(&self.ring, F::from_int(2));
        let mut prec = 1u32;
        while prec <= n {
            prec *= 2;
            let py = self.truncate_above(prec.min(n)).mul(&y).truncate_above(prec.min(n));
            y = y.mul(&two.sub(&py)).truncate_above(prec.min(n));
        }
        Some(y.truncate_above(n))
    }

    /// Terms sorted descending under the given order, rendered in the
    /// shared expression grammar.
    pub fn display_with(&self, order: &MonomialOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut ts: Vec<(&Monomial, &F)> = self.terms.iter().collect();
        ts.sort_by(|(a, _), (b, _)| order.cmp(b, a));
        let mut out = String::new();
        for (k, (m, c)) in ts.iter().enumerate() {
            let cs = format!("{c}");
            let (sign, mag) = if !c.needs_parens() && cs.starts_with('-') {
                ("-", cs.trim_start_matches('-').to_string())
            } else if c.needs_parens() {
                ("+", format!("({cs})"))
            } else {
                ("+", cs)
            };
            if k == 0 {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(if sign == "-" { " - " } else { " + " });
            }
            if m.is_one() {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&m.display(&self.ring));
            } else {
                out.push_str(&mag);
                out.push('*');
                out.push_str(&m.display(&self.ring));
            }
        }
        out
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&MonomialOrder::degrevlex()))
    }
}
