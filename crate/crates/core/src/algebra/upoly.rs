//! Dense univariate polynomials over a field, used for discriminants,
//! gcds and root isolation on the base line.

use num::complex::Complex64;

use super::field::Field;
use super::monomial::Ring;
use super::poly::Polynomial;
use crate::error::{Error, Result};

/// Coefficients low to high, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
pub struct UPoly<F: Field>(pub Vec<F>);

impl<F: Field> UPoly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly(coeffs)
    }

    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn one() -> Self {
        UPoly(vec![F::one()])
    }

    pub fn x() -> Self {
        UPoly(vec![F::zero(), F::one()])
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| F::from_int(c)).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, or None for zero.
    pub fn degree(&self) -> Option<usize> {
        if self.0.is_empty() {
            None
        } else {
            Some(self.0.len() - 1)
        }
    }

    pub fn coeff(&self, i: usize) -> F {
        self.0.get(i).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<&F> {
        self.0.last()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Self::new((0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect())
    }

    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| c.neg()).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut out = vec![F::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Self::new(out)
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        Self::new(self.0.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Euclidean division; panics only if `d` is zero.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        if d.is_zero() {
            return Err(Error::DivisionByZeroPolynomial);
        }
        let dd = d.degree().unwrap();
        let lci = d.leading().unwrap().inv().expect("field leading coefficient");
        let mut r = self.clone();
        let mut q = vec![F::zero(); self.0.len().saturating_sub(dd)];
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let f = r.leading().unwrap().mul(&lci);
            let shift = rd - dd;
            q[shift] = q[shift].add(&f);
            let mut sub = vec![F::zero(); shift];
            sub.extend(d.0.iter().map(|c| c.mul(&f)));
            r = r.sub(&UPoly::new(sub));
        }
        Ok((Self::new(q), r))
    }

    /// Monic gcd by the Euclidean algorithm.
    pub fn gcd(&self, o: &Self) -> Self {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(c) => self.mul_scalar(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn derivative(&self) -> Self {
        if self.0.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.0[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c.mul(&F::from_int((i + 1) as i64)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &F) -> F {
        let mut acc = F::zero();
        for c in self.0.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    pub fn eval_complex(&self, x: Complex64) -> Option<Complex64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.0.iter().rev() {
            acc = acc * x + c.to_complex()?;
        }
        Some(acc)
    }

    /// Divide out a root exactly: self / (x - r). Errors if r is not a root.
    pub fn deflate(&self, r: &F) -> Result<Self> {
        let lin = UPoly::new(vec![r.neg(), F::one()]);
        let (q, rem) = self.divrem(&lin)?;
        if !rem.is_zero() {
            return Err(Error::Invariant("deflation by a non-root".into()));
        }
        Ok(q)
    }

    /// Squarefree part: self / gcd(self, self').
    pub fn squarefree_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            return self.monic();
        }
        let (q, _) = self.divrem(&g).expect("gcd divides");
        q.monic()
    }

    /// Yun squarefree decomposition: list of (factor, multiplicity) with
    /// factors squarefree, pairwise coprime, product of factor^mult = monic self.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let mut a = f.gcd(&df);
        let mut b = f.divrem(&a).unwrap().0;
        let mut c = df.divrem(&a).unwrap().0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1usize;
        loop {
            let g = b.gcd(&d);
            if g.degree().unwrap_or(0) > 0 {
                out.push((g.monic(), i));
            }
            let gb = b.divrem(&g).unwrap().0;
            let gd = d.divrem(&g).unwrap().0;
            b = gb;
            c = gd;
            d = c.sub(&b.derivative());
            i += 1;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            let _ = &a;
            a = UPoly::one();
        }
        out
    }

    /// Conversion from a multivariate polynomial that only uses `var`.
    pub fn from_poly(p: &Polynomial<F>, var: usize) -> Result<Self> {
        for (m, _) in p.terms() {
            for (j, &e) in m.0.iter().enumerate() {
                if j != var && e > 0 {
                    return Err(Error::Invariant(format!(
                        "polynomial is not univariate in {}",
                        p.ring().var_name(var)
                    )));
                }
            }
        }
        let d = p.degree_in(var).unwrap_or(0);
        let mut coeffs = vec![F::zero(); d as usize + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponent(var) as usize] = c.clone();
        }
        Ok(Self::new(coeffs))
    }

    pub fn to_poly(&self, ring: &Ring, var: usize) -> Polynomial<F> {
        let mut p = Polynomial::zero(ring);
        for (i, c) in self.0.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u32; ring.n_vars()];
                e[var] = i as u32;
                p = p.add(&Polynomial::monomial(ring, super::monomial::Monomial(e), c.clone()));
            }
        }
        p
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::Rat;

    #[test]
    fn divrem_reconstructs() {
        let f: UPoly<Rat> = UPoly::from_ints(&[2, 0, -3, 1, 4]);
        let g: UPoly<Rat> = UPoly::from_ints(&[1, 2, 1]);
        let (q, r) = f.divrem(&g).unwrap();
        assert_eq!(q.mul(&g).add(&r), f);
        assert!(r.degree().unwrap() < g.degree().unwrap());
    }

    #[test]
    fn yun_on_cube_times_linear() {
        // (x-1)^3 (x+2)
        let f: UPoly<Rat> = UPoly::from_ints(&[-1, 1]).pow(3).mul(&UPoly::from_ints(&[2, 1]));
        let dec = f.squarefree_decomposition();
        assert_eq!(dec.len(), 2);
        assert_eq!(dec[0].0, UPoly::from_ints(&[2, 1]).monic());
        assert_eq!(dec[0].1, 1);
        assert_eq!(dec[1].0, UPoly::from_ints(&[-1, 1]).monic());
        assert_eq!(dec[1].1, 3);
    }

    #[test]
    fn squarefree_part() {
        let f: UPoly<Rat> = UPoly::from_ints(&[0, 0, 1]); // x^2
        assert_eq!(f.squarefree_part(), UPoly::from_ints(&[0, 1]));
    }
}
