//! Rational functions over Q in named parameters, plus the multivariate
//! gcd that keeps them reduced.

use std::fmt;

use num::complex::Complex64;
use num::traits::Signed;

use super::field::Field;
use super::monomial::{Monomial, MonomialOrder, Ring};
use super::poly::Polynomial;
use super::rational::{rat_content, Rat};

type MPoly = Polynomial<Rat>;

/// Integer-primitive form with positive leading coefficient (degrevlex).
pub fn mpoly_normalize(p: &MPoly) -> MPoly {
    if p.is_zero() {
        return p.clone();
    }
    let mut content = Rat::from_integer(0.into());
    for (_, c) in p.terms() {
        content = rat_content(&content, c);
    }
    let order = MonomialOrder::degrevlex();
    let (_, lc) = p.leading_term(&order).unwrap();
    if lc.is_negative() {
        content = -content;
    }
    p.mul_scalar(&(Rat::from_integer(1.into()) / content))
}

fn pseudo_rem(a: &MPoly, b: &MPoly, v: usize) -> MPoly {
    let db = b.degree_in(v).unwrap_or(0);
    let lcb = b.coeffs_in_var(v).pop().unwrap();
    let mut r = a.clone();
    while let Some(dr) = r.degree_in(v) {
        if r.is_zero() || dr < db {
            break;
        }
        let lcr = r.coeffs_in_var(v).pop().unwrap();
        let mut shift_exp = vec![0u32; r.ring().n_vars()];
        shift_exp[v] = dr - db;
        let shift = Monomial(shift_exp);
        // r := lcb * r - lcr * v^(dr-db) * b
        r = r.mul(&lcb).sub(&b.mul(&lcr).mul_term(&shift, &Rat::from_integer(1.into())));
        if r.degree_in(v) == Some(dr) {
            // defensive: leading terms must have cancelled
            break;
        }
    }
    r
}

fn content_in(p: &MPoly, v: usize) -> MPoly {
    let coeffs = p.coeffs_in_var(v);
    let mut g = MPoly::zero(p.ring());
    for c in &coeffs {
        if !c.is_zero() {
            g = mpoly_gcd(&g, c);
        }
    }
    g
}

/// gcd over Q[x1..xn], normalized integer-primitive with positive
/// leading coefficient. Constants count as units: gcd of two nonzero
/// constants is 1.
pub fn mpoly_gcd(f: &MPoly, g: &MPoly) -> MPoly {
    if f.is_zero() {
        return mpoly_normalize(g);
    }
    if g.is_zero() {
        return mpoly_normalize(f);
    }
    if f.is_constant() || g.is_constant() {
        return MPoly::one(f.ring());
    }
    // main variable: highest index occurring in either
    let n = f.ring().n_vars();
    let v = (0..n)
        .rev()
        .find(|&i| f.uses_var(i) || g.uses_var(i))
        .expect("nonconstant polynomials use a variable");
    let cf = content_in(f, v);
    let cg = content_in(g, v);
    let c = mpoly_gcd(&cf, &cg);
    let mut a = f.exact_div(&cf).expect("content divides");
    let mut b = g.exact_div(&cg).expect("content divides");
    if a.degree_in(v).unwrap_or(0) < b.degree_in(v).unwrap_or(0) {
        std::mem::swap(&mut a, &mut b);
    }
    let pp = loop {
        if b.is_zero() {
            break a;
        }
        if b.degree_in(v).unwrap_or(0) == 0 {
            // nonzero and v-free: primitive parts are coprime
            break MPoly::one(f.ring());
        }
        let r = pseudo_rem(&a, &b, v);
        a = b;
        b = if r.is_zero() {
            r
        } else {
            let cr = content_in(&r, v);
            r.exact_div(&cr).expect("content divides")
        };
    };
    mpoly_normalize(&c.mul(&pp))
}

pub fn mpoly_lcm(f: &MPoly, g: &MPoly) -> MPoly {
    if f.is_zero() || g.is_zero() {
        return MPoly::zero(f.ring());
    }
    let d = mpoly_gcd(f, g);
    mpoly_normalize(&f.exact_div(&d).unwrap().mul(g))
}

/// Ratio of two polynomials over Q in declared parameter names, stored
/// with coprime numerator/denominator and monic denominator (degrevlex).
#[derive(Clone, Debug)]
pub struct RatFn {
    num: MPoly,
    den: MPoly,
}

impl RatFn {
    pub fn new(num: MPoly, den: MPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        RatFn { num, den }.normalized()
    }

    pub fn from_poly(num: MPoly) -> Self {
        let den = MPoly::one(num.ring());
        RatFn { num, den }
    }

    pub fn param_ring(&self) -> &Ring {
        self.num.ring()
    }

    pub fn numerator(&self) -> &MPoly {
        &self.num
    }

    pub fn denominator(&self) -> &MPoly {
        &self.den
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    fn normalized(self) -> Self {
        if self.num.is_zero() {
            return RatFn { den: MPoly::one(self.num.ring()), num: self.num };
        }
        let g = mpoly_gcd(&self.num, &self.den);
        let mut num = self.num.exact_div(&g).expect("gcd divides");
        let mut den = self.den.exact_div(&g).expect("gcd divides");
        let order = MonomialOrder::degrevlex();
        let (_, lc) = den.leading_term(&order).unwrap();
        let lci = Rat::from_integer(1.into()) / lc.clone();
        num = num.mul_scalar(&lci);
        den = den.mul_scalar(&lci);
        RatFn { num, den }
    }

    /// Constants over the empty parameter ring lift into any ring.
    fn promote(&self, ring: &Ring) -> Self {
        if self.num.ring() == ring {
            return self.clone();
        }
        assert!(
            self.num.ring().n_vars() == 0,
            "parameter ring mismatch: {} vs {}",
            self.num.ring().describe(),
            ring.describe()
        );
        RatFn {
            num: MPoly::constant(ring, self.num.constant_term()),
            den: MPoly::constant(ring, self.den.constant_term()),
        }
    }

    fn unify(&self, other: &Self) -> (Self, Self) {
        if self.num.ring() == other.num.ring() {
            (self.clone(), other.clone())
        } else if self.num.ring().n_vars() == 0 {
            (self.promote(other.num.ring()), other.clone())
        } else {
            (self.clone(), other.promote(self.num.ring()))
        }
    }

    /// Evaluate at rational parameter values.
    pub fn eval(&self, point: &[Rat]) -> crate::error::Result<Rat> {
        let n = self.num.eval(point)?;
        let d = self.den.eval(point)?;
        if <Rat as Field>::is_zero(&d) {
            return Err(crate::error::Error::Invariant("denominator vanishes at the point".into()));
        }
        Ok(n / d)
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        let (a, b) = self.unify(other);
        a.num == b.num && a.den == b.den
    }
}

impl Field for RatFn {
    fn zero() -> Self {
        RatFn::from_poly(MPoly::zero(&Ring::empty()))
    }

    fn one() -> Self {
        RatFn::from_poly(MPoly::one(&Ring::empty()))
    }

    fn from_rat(q: Rat) -> Self {
        RatFn::from_poly(MPoly::constant(&Ring::empty(), q))
    }

    fn add(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        RatFn::new(a.num.mul(&b.den).add(&b.num.mul(&a.den)), a.den.mul(&b.den))
    }

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn mul(&self, other: &Self) -> Self {
        let (a, b) = self.unify(other);
        RatFn::new(a.num.mul(&b.num), a.den.mul(&b.den))
    }

    fn neg(&self) -> Self {
        RatFn { num: self.num.neg(), den: self.den.clone() }
    }

    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            Some(RatFn::new(self.den.clone(), self.num.clone()))
        }
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn to_complex(&self) -> Option<Complex64> {
        if self.num.ring().n_vars() == 0 && self.den.ring().n_vars() == 0 {
            let n = self.num.constant_term();
            let d = self.den.constant_term();
            return Some(Complex64::new(
                super::rational::rat_to_f64(&n) / super::rational::rat_to_f64(&d),
                0.0,
            ));
        }
        None
    }

    fn needs_parens(&self) -> bool {
        !self.is_polynomial() || self.num.n_terms() > 1
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else if self.num.n_terms() <= 1 {
            write!(f, "{}/({})", self.num, self.den)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

/// Move every variable except those in `keep` into the coefficient
/// field as parameters: Q[x,p] -> Q(p)[x].
pub fn absorb_parameters(p: &MPoly, keep: &[usize]) -> Polynomial<RatFn> {
    let ring = p.ring();
    let n = ring.n_vars();
    let kept: Vec<usize> = keep.to_vec();
    let params: Vec<usize> = (0..n).filter(|i| !kept.contains(i)).collect();
    let main_ring = Ring::new(&kept.iter().map(|&i| ring.var_name(i)).collect::<Vec<_>>());
    let param_ring = Ring::new(&params.iter().map(|&i| ring.var_name(i)).collect::<Vec<_>>());
    let mut out = Polynomial::<RatFn>::zero(&main_ring);
    for (m, c) in p.terms() {
        let main_exp: Vec<u32> = kept.iter().map(|&i| m.exponent(i)).collect();
        let par_exp: Vec<u32> = params.iter().map(|&i| m.exponent(i)).collect();
        let coeff = RatFn::from_poly(MPoly::monomial(&param_ring, Monomial(par_exp), c.clone()));
        out = out.add(&Polynomial::monomial(&main_ring, Monomial(main_exp), coeff));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    fn ring3() -> Ring {
        Ring::new(&["x", "y", "z"])
    }

    fn p(src: &str) -> MPoly {
        parse_poly(src, &ring3()).unwrap()
    }

    #[test]
    fn gcd_of_products() {
        let f = p("(x + y)*(x - z)^2");
        let g = p("(x + y)^2*(x - z)");
        let d = mpoly_gcd(&f, &g);
        assert_eq!(d, mpoly_normalize(&p("(x + y)*(x - z)")));
    }

    #[test]
    fn gcd_coprime_is_one() {
        assert_eq!(mpoly_gcd(&p("x + 1"), &p("y + 1")), MPoly::one(&ring3()));
        assert_eq!(mpoly_gcd(&p("2*x"), &p("3*y")), MPoly::one(&ring3()));
    }

    #[test]
    fn ratfn_reduction() {
        let a = RatFn::new(p("x^2 - y^2"), p("x + y"));
        assert_eq!(a, RatFn::from_poly(p("x - y")));
        let b = RatFn::new(p("x"), p("2*x^2"));
        assert_eq!(b.denominator(), &p("x"));
        assert_eq!(b.numerator(), &p("1/2"));
    }

    #[test]
    fn ratfn_field_identities() {
        let a = RatFn::new(p("x"), p("y + 1"));
        let ai = a.inv().unwrap();
        assert!(a.mul(&ai).is_one());
        let z = a.sub(&a);
        assert!(z.is_zero());
        // promotion of bare constants
        let two = RatFn::from_int(2);
        assert_eq!(a.add(&two).sub(&two), a);
    }
}
