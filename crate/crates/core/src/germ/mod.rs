//! Invariants and classification of isolated hypersurface germs at the
//! origin: Milnor/Tyurina numbers, T^1 bases, quasi-homogeneity,
//! node/cusp detection, fiber-product elimination and jacobian
//! smoothness checks for resolution charts.

pub mod numeric;

use crate::algebra::{
    rat_int, Field, Matrix, MonomialOrder, Polynomial, Rat, RatFn, Ring,
};
use crate::error::{Error, Result};
use crate::standard_basis::{
    local_quotient_dimension, monomial_basis, quotient_dimension, Dimension, Ideal, QuotientBasis,
};

/// Hypersurface germ at the origin: a defining polynomial with F(0) = 0.
#[derive(Clone, Debug, PartialEq)]
pub struct Germ<F: Field> {
    poly: Polynomial<F>,
}

impl<F: Field> Germ<F> {
    pub fn new(poly: Polynomial<F>) -> Result<Self> {
        if !poly.constant_term().is_zero() {
            return Err(Error::Invariant("germ must vanish at the origin".into()));
        }
        Ok(Germ { poly })
    }

    pub fn poly(&self) -> &Polynomial<F> {
        &self.poly
    }

    pub fn ring(&self) -> &Ring {
        self.poly.ring()
    }

    /// Jacobian ideal J_F.
    pub fn jacobian_ideal(&self) -> Result<Ideal<F>> {
        Ideal::jacobian(&self.poly)
    }

    /// (F) + J_F, the Tjurina ideal.
    pub fn tjurina_ideal(&self) -> Result<Ideal<F>> {
        Ideal::jacobian(&self.poly)?.with_extra(std::slice::from_ref(&self.poly))
    }
}

/// Classification outcome of a germ.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GermClass {
    Smooth,
    NodeA1,
    ThreefoldCuspIIxII,
    NotNodeOther,
}

impl std::fmt::Display for GermClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GermClass::Smooth => write!(f, "Smooth"),
            GermClass::NodeA1 => write!(f, "Node_A1"),
            GermClass::ThreefoldCuspIIxII => write!(f, "ThreefoldCusp_IIxII"),
            GermClass::NotNodeOther => write!(f, "NotNode_Other"),
        }
    }
}

/// Full report for one germ. tau <= mu always; equality exactly for
/// weighted-homogeneous germs (Saito).
#[derive(Clone, Debug)]
pub struct GermReport {
    pub class: GermClass,
    pub milnor: Dimension,
    pub tyurina: Dimension,
    pub corank: usize,
    pub t1: Option<QuotientBasis>,
    pub weighted_homogeneous: Option<(Vec<Rat>, Rat)>,
}

fn local_order() -> MonomialOrder {
    MonomialOrder::negdegrevlex()
}

/// dim of the local quotient by the jacobian ideal.
pub fn milnor_number<F: Field>(g: &Germ<F>) -> Result<u64> {
    match quotient_dimension(&g.jacobian_ideal()?, &local_order())? {
        Dimension::Finite(n) => Ok(n),
        Dimension::Infinite => Err(Error::NonIsolated),
    }
}

/// dim of the local quotient by (F) + J_F.
pub fn tyurina_number<F: Field>(g: &Germ<F>) -> Result<u64> {
    match quotient_dimension(&g.tjurina_ideal()?, &local_order())? {
        Dimension::Finite(n) => Ok(n),
        Dimension::Infinite => Err(Error::NonIsolated),
    }
}

/// Monomial basis of T^1 = C{x}/((F) + J_F).
pub fn t1_basis<F: Field>(g: &Germ<F>) -> Result<QuotientBasis> {
    monomial_basis(&g.tjurina_ideal()?, &local_order()).map_err(|e| match e {
        Error::InfiniteDimensional => Error::NonIsolated,
        other => other,
    })
}

/// F plus one fresh parameter for each T^1 basis monomial; at parameter
/// zero the family restricts to F itself.
pub fn versal_family(g: &Germ<Rat>) -> Result<Polynomial<RatFn>> {
    let basis = t1_basis(g)?;
    let names: Vec<String> = (0..basis.monomials.len()).map(|i| format!("c{i}")).collect();
    let params = Ring::new(&names);
    let ring = g.ring().clone();
    let mut fam = g.poly.map_coeffs(|c| RatFn::from_rat(c.clone()));
    for (i, m) in basis.monomials.iter().enumerate() {
        let ci = RatFn::from_poly(Polynomial::var(&params, i));
        fam = fam.add(&Polynomial::monomial(&ring, m.clone(), ci));
    }
    Ok(fam)
}

/// Hessian matrix of the quadratic part of F.
pub fn hessian<F: Field>(p: &Polynomial<F>) -> Matrix<F> {
    let n = p.n_vars();
    let q = p.homogeneous_part(2);
    let mut h = Matrix::zeros(n, n);
    for (m, c) in q.terms() {
        let support: Vec<usize> = (0..n).filter(|&i| m.exponent(i) > 0).collect();
        match support.len() {
            1 => {
                let i = support[0];
                h.set(i, i, c.add(c));
            }
            2 => {
                let (i, j) = (support[0], support[1]);
                h.set(i, j, c.clone());
                h.set(j, i, c.clone());
            }
            _ => {}
        }
    }
    h
}

pub fn corank<F: Field>(p: &Polynomial<F>) -> usize {
    let n = p.n_vars();
    n - hessian(p).rank()
}

/// Discriminant of the binary cubic a s^3 + b s^2 t + c s t^2 + d t^3.
fn binary_cubic_discriminant<F: Field>(a: &F, b: &F, c: &F, d: &F) -> F {
    let t1 = F::from_int(18).mul(a).mul(b).mul(c).mul(d);
    let t2 = F::from_int(4).mul(b).mul(&b.mul(b)).mul(d);
    let t3 = b.mul(b).mul(&c.mul(c));
    let t4 = F::from_int(4).mul(a).mul(&c.mul(&c.mul(c)));
    let t5 = F::from_int(27).mul(a).mul(a).mul(&d.mul(d));
    t1.sub(&t2).add(&t3).sub(&t4).sub(&t5)
}

/// Restriction of the cubic part of F to the kernel of its Hessian; the
/// cusp x^2 - z^2 - y^3 + w^3 restricts to a nondegenerate binary cubic.
fn kernel_cubic_nondegenerate<F: Field>(p: &Polynomial<F>) -> bool {
    let h = hessian(p);
    let kernel = h.nullspace();
    if kernel.len() != 2 {
        return false;
    }
    let cubic = p.homogeneous_part(3);
    let st = Ring::new(&["s", "t"]);
    let n = p.n_vars();
    let images: Vec<Polynomial<F>> = (0..n)
        .map(|i| {
            Polynomial::var(&st, 0)
                .mul_scalar(&kernel[0][i])
                .add(&Polynomial::var(&st, 1).mul_scalar(&kernel[1][i]))
        })
        .collect();
    let mut restricted = Polynomial::zero(&st);
    for (m, c) in cubic.terms() {
        let mut t = Polynomial::constant(&st, c.clone());
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                t = t.mul(&images[i].pow(e));
            }
        }
        restricted = restricted.add(&t);
    }
    let coeff = |es: [u32; 2]| restricted.coeff(&crate::algebra::Monomial(es.to_vec()));
    let disc = binary_cubic_discriminant(&coeff([3, 0]), &coeff([2, 1]), &coeff([1, 2]), &coeff([0, 3]));
    !disc.is_zero()
}

/// Constructive Saito test: positive rational weights w with
/// sum w_i a_i = d over all exponent vectors a of F, normalized to d = 1.
pub fn is_weighted_homogeneous<F: Field>(p: &Polynomial<F>) -> Option<(Vec<Rat>, Rat)> {
    if p.is_zero() {
        return None;
    }
    let n = p.n_vars();
    let exps: Vec<Vec<u32>> = p.terms().map(|(m, _)| m.0.clone()).collect();
    let rows = exps.len();
    let mut a = Matrix::zeros(rows, n);
    for (r, e) in exps.iter().enumerate() {
        for (i, &ei) in e.iter().enumerate() {
            a.set(r, i, rat_int(ei as i64));
        }
    }
    let b = vec![rat_int(1); rows];
    let particular = a.solve(&b)?;
    let null = a.nullspace();
    // feasibility of particular + span(null) > 0 by Fourier-Motzkin
    let k = null.len();
    let ineqs: Vec<(Vec<Rat>, Rat)> = (0..n)
        .map(|i| {
            let coeffs: Vec<Rat> = (0..k).map(|j| null[j][i].clone()).collect();
            (coeffs, particular[i].clone())
        })
        .collect();
    let t = fm_feasible_point(ineqs, k)?;
    let weights: Vec<Rat> = (0..n)
        .map(|i| {
            let mut w = particular[i].clone();
            for j in 0..k {
                w = w + &t[j] * &null[j][i];
            }
            w
        })
        .collect();
    if weights.iter().any(|w| w <= &Rat::from_integer(0.into())) {
        return None;
    }
    Some((weights, rat_int(1)))
}

/// Fourier-Motzkin over Q for strict systems coeffs . t + rhs > 0;
/// returns a feasible point when one exists.
fn fm_feasible_point(ineqs: Vec<(Vec<Rat>, Rat)>, n: usize) -> Option<Vec<Rat>> {
    let zero = rat_int(0);
    // systems[j] involves only variables 0..j
    let mut systems: Vec<Vec<(Vec<Rat>, Rat)>> = vec![Vec::new(); n + 1];
    systems[n] = ineqs;
    for j in (0..n).rev() {
        let mut next = Vec::new();
        let cur = systems[j + 1].clone();
        let pos: Vec<&(Vec<Rat>, Rat)> = cur.iter().filter(|(c, _)| c[j] > zero).collect();
        let neg: Vec<&(Vec<Rat>, Rat)> = cur.iter().filter(|(c, _)| c[j] < zero).collect();
        for (c, r) in cur.iter().filter(|(c, _)| c[j] == zero) {
            next.push((c[..j].to_vec(), r.clone()));
        }
        for (pc, pr) in &pos {
            for (nc, nr) in &neg {
                // (-b)(a t + alpha) + a(b t + beta) > 0 with a > 0 > b
                let a = &pc[j];
                let b = &nc[j];
                let coeffs: Vec<Rat> =
                    (0..j).map(|i| -(b * &pc[i]) + a * &nc[i]).collect();
                let rhs = -(b * pr) + a * nr;
                next.push((coeffs, rhs));
            }
        }
        systems[j] = next;
    }
    if systems[0].iter().any(|(_, r)| r <= &zero) {
        return None;
    }
    // back-substitute, picking a value inside each interval
    let mut vals: Vec<Rat> = Vec::new();
    for j in 0..n {
        let mut lo: Option<Rat> = None;
        let mut hi: Option<Rat> = None;
        for (c, r) in &systems[j + 1] {
            let mut rest = r.clone();
            for (i, v) in vals.iter().enumerate() {
                rest = rest + &c[i] * v;
            }
            let cj = &c[j];
            if cj == &zero {
                if rest <= zero {
                    return None;
                }
                continue;
            }
            let bound = -rest / cj;
            if cj > &zero {
                lo = Some(match lo {
                    None => bound,
                    Some(l) => {
                        if bound > l {
                            bound
                        } else {
                            l
                        }
                    }
                });
            } else {
                hi = Some(match hi {
                    None => bound,
                    Some(h) => {
                        if bound < h {
                            bound
                        } else {
                            h
                        }
                    }
                });
            }
        }
        let v = match (lo, hi) {
            (None, None) => Rat::zero(),
            (Some(l), None) => l + rat_int(1),
            (None, Some(h)) => h - rat_int(1),
            (Some(l), Some(h)) => {
                if l >= h {
                    return None;
                }
                (l + h) / rat_int(2)
            }
        };
        vals.push(v);
    }
    Some(vals)
}

/// Classification by exact invariants: linear part, Hessian rank of the
/// quadratic part, Milnor number and the kernel cubic.
pub fn classify_germ<F: Field>(g: &Germ<F>) -> Result<GermReport> {
    let p = &g.poly;
    let n = p.n_vars();
    let linear = p.homogeneous_part(1);
    let wh = is_weighted_homogeneous(p);
    if !linear.is_zero() {
        return Ok(GermReport {
            class: GermClass::Smooth,
            milnor: Dimension::Finite(0),
            tyurina: Dimension::Finite(0),
            corank: 0,
            t1: None,
            weighted_homogeneous: wh,
        });
    }
    let corank = n - hessian(p).rank();
    if corank == 0 {
        // nondegenerate quadratic tangent cone: mu = tau = 1, T^1 = <1>
        let t1 = QuotientBasis {
            monomials: vec![crate::algebra::Monomial::one(n)],
            dimension: Dimension::Finite(1),
        };
        return Ok(GermReport {
            class: GermClass::NodeA1,
            milnor: Dimension::Finite(1),
            tyurina: Dimension::Finite(1),
            corank: 0,
            t1: Some(t1),
            weighted_homogeneous: wh,
        });
    }
    let milnor = local_quotient_dimension(&g.jacobian_ideal()?)?;
    let tyurina = local_quotient_dimension(&g.tjurina_ideal()?)?;
    let t1 = match tyurina {
        Dimension::Finite(_) => t1_basis(g).ok(),
        Dimension::Infinite => None,
    };
    let class = if n == 4 && corank == 2 && milnor == Dimension::Finite(4) && kernel_cubic_nondegenerate(p) {
        GermClass::ThreefoldCuspIIxII
    } else {
        GermClass::NotNodeOther
    };
    Ok(GermReport { class, milnor, tyurina, corank, t1, weighted_homogeneous: wh })
}

/// Translate F so that `point` becomes the origin and classify there.
pub fn classify_at<F: Field>(f: &Polynomial<F>, point: &[F]) -> Result<GermReport> {
    let translated = f.translate(point)?;
    classify_germ(&Germ::new(translated)?)
}

/// Fiber-product germ of two equations sharing the base variable
/// `t_var`. When one equation solves for t locally (its t-coefficient is
/// a unit), t is eliminated by a truncated Newton series substitution
/// and the returned jet is certified by finite determinacy
/// (mu(jet) + 1 <= jet order). Otherwise the Sylvester resultant is
/// taken and unit factors (nonvanishing at the origin) divided out.
pub fn fiber_product_germ<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    t_var: &str,
) -> Result<Germ<F>> {
    let ring = f.ring().clone();
    let v = ring.var_index(t_var).ok_or_else(|| Error::UnknownVariable(t_var.into()))?;
    let zero_pt = vec![F::zero(); ring.n_vars()];
    if !f.eval(&zero_pt)?.is_zero() || !g.eval(&zero_pt)?.is_zero() {
        return Err(Error::Invariant("both equations must vanish at the origin".into()));
    }
    let t_unit = |p: &Polynomial<F>| -> bool {
        !p.coeffs_in_var(v).get(1).map(|c| c.constant_term()).unwrap_or_else(F::zero).is_zero()
    };
    if t_unit(g) {
        return series_elimination(f, g, v);
    }
    if t_unit(f) {
        return series_elimination(g, f, v);
    }
    resultant_elimination(f, g, v)
}

/// Substitute the local solution t = t*(vars) of solve_from = 0 into
/// `target`, truncated at an adaptive jet order with a determinacy
/// certificate.
fn series_elimination<F: Field>(
    target: &Polynomial<F>,
    solve_from: &Polynomial<F>,
    v: usize,
) -> Result<Germ<F>> {
    let ring = target.ring().clone();
    for n in [8u32, 14, 22] {
        // Newton iteration for t*: t <- t - solve_from(t)/dt(t), all
        // truncated at total degree n
        let dt = solve_from.partial_derivative_idx(v);
        let mut tstar = Polynomial::<F>::zero(&ring);
        let mut prec = 1u32;
        while prec <= n {
            prec = (prec * 2).min(n + 1);
            let val = solve_from.substitute(v, &tstar).truncate_above(prec);
            let der = dt.substitute(v, &tstar).truncate_above(prec);
            let der_inv = der
                .series_inverse(prec)
                .ok_or_else(|| Error::EliminationFailed("t-derivative is not a unit".into()))?;
            tstar = tstar.sub(&val.mul(&der_inv)).truncate_above(prec);
        }
        let jet = target.substitute(v, &tstar).truncate_above(n).drop_var(v)?;
        if jet.is_zero() {
            continue;
        }
        let germ = Germ::new(jet)?;
        // determinacy certificate: the jet pins the germ when its Milnor
        // number m satisfies m + 1 <= n
        match crate::standard_basis::local_quotient_dimension(&germ.jacobian_ideal()?)? {
            Dimension::Finite(m) if m + 1 <= n as u64 => return Ok(germ),
            _ => continue,
        }
    }
    Err(Error::EliminationFailed(
        "no jet order certifies the series elimination; the germ may be non-isolated".into(),
    ))
}

fn resultant_elimination<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    v: usize,
) -> Result<Germ<F>> {
    let ring = f.ring().clone();
    let t_name = ring.var_name(v).to_string();
    let mut r = crate::algebra::resultant(f, g, &t_name)?;
    if r.is_zero() {
        return Err(Error::EliminationFailed("resultant vanishes identically".into()));
    }
    // remove unit factors contributed by the leading coefficients
    let candidates: Vec<Polynomial<F>> = [f, g]
        .iter()
        .map(|p| p.coeffs_in_var(v).pop().unwrap())
        .filter(|lc| !lc.is_constant() && !lc.constant_term().is_zero())
        .collect();
    let mut changed = true;
    while changed {
        changed = false;
        for u in &candidates {
            while let Some(q) = r.exact_div(u) {
                if q.is_zero() {
                    break;
                }
                r = q;
                changed = true;
            }
        }
    }
    if !r.constant_term().is_zero() {
        return Err(Error::EliminationFailed("resultant is a unit at the origin".into()));
    }
    let reduced = r.drop_var(v)?;
    Germ::new(reduced)
}

/// Verdict of the jacobian criterion at a point of a polynomial system.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmoothnessVerdict {
    Smooth,
    SingularOfCorank(usize),
}

/// Exact jacobian rank at a point of the variety cut out by `system`,
/// compared against the expected codimension (= number of equations).
pub fn smoothness_check<F: Field>(
    system: &[Polynomial<F>],
    point: &[F],
) -> Result<SmoothnessVerdict> {
    let k = system.len();
    if k == 0 {
        return Ok(SmoothnessVerdict::Smooth);
    }
    let n = system[0].n_vars();
    for (i, f) in system.iter().enumerate() {
        if !f.eval(point)?.is_zero() {
            return Err(Error::PointNotOnVariety(i));
        }
    }
    let mut jac = Matrix::zeros(k, n);
    for (i, f) in system.iter().enumerate() {
        for j in 0..n {
            jac.set(i, j, f.partial_derivative_idx(j).eval(point)?);
        }
    }
    let rank = jac.rank();
    if rank == k {
        Ok(SmoothnessVerdict::Smooth)
    } else {
        Ok(SmoothnessVerdict::SingularOfCorank(k - rank))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::{parse_poly, parse_poly_auto};

    fn germ(src: &str) -> Germ<Rat> {
        let (p, _) = parse_poly_auto::<Rat>(src).unwrap();
        Germ::new(p).unwrap()
    }

    #[test]
    fn milnor_tyurina_golden() {
        let cusp = germ("x^2 - y^3 - z^2 + w^3");
        assert_eq!(milnor_number(&cusp).unwrap(), 4);
        assert_eq!(tyurina_number(&cusp).unwrap(), 4);
        let node = germ("X^2 + Y^2 - U^2 - V^2");
        assert_eq!(milnor_number(&node).unwrap(), 1);
        assert_eq!(tyurina_number(&node).unwrap(), 1);
        let plane_cusp = germ("x^2 - y^3");
        assert_eq!(milnor_number(&plane_cusp).unwrap(), 2);
        assert_eq!(tyurina_number(&plane_cusp).unwrap(), 2);
    }

    #[test]
    fn t1_bases() {
        let cusp = germ("x^2 - y^3 - z^2 + w^3");
        let b = t1_basis(&cusp).unwrap();
        assert_eq!(b.display(cusp.ring()), "{1, y, w, y*w}");
        let plane = germ("x^2 - y^3");
        assert_eq!(t1_basis(&plane).unwrap().display(plane.ring()), "{1, y}");
        let node = germ("X^2 + Y^2 - U^2 - V^2");
        assert_eq!(t1_basis(&node).unwrap().display(node.ring()), "{1}");
    }

    #[test]
    fn versal_families() {
        let cusp = germ("x^2 - y^3 - z^2 + w^3");
        let fam = versal_family(&cusp).unwrap();
        assert_eq!(fam.to_string(), "-y^3 + w^3 + x^2 - z^2 + c3*y*w + c1*y + c2*w + c0");
        let node = germ("X^2 + Y^2 - U^2 - V^2");
        assert_eq!(versal_family(&node).unwrap().to_string(), "X^2 + Y^2 - U^2 - V^2 + c0");
    }

    #[test]
    fn classification_golden() {
        assert_eq!(classify_germ(&germ("X^2 + Y^2 - U^2 - V^2")).unwrap().class, GermClass::NodeA1);
        let cusp = classify_germ(&germ("X^2 - U^2 - Y^3 + V^3")).unwrap();
        assert_eq!(cusp.class, GermClass::ThreefoldCuspIIxII);
        assert_eq!(cusp.milnor, Dimension::Finite(4));
        assert_eq!(cusp.corank, 2);
        let other = classify_germ(&germ("V*(X^2 + Y^2) - Y*(U^2 + V^2)")).unwrap();
        assert_eq!(other.class, GermClass::NotNodeOther);
        assert_eq!(classify_germ(&germ("x + x^2")).unwrap().class, GermClass::Smooth);
    }

    #[test]
    fn weighted_homogeneity() {
        let (cusp, _) = parse_poly_auto::<Rat>("x^2 - y^3 - z^2 + w^3").unwrap();
        let (w, d) = is_weighted_homogeneous(&cusp).unwrap();
        assert_eq!(d, rat_int(1));
        assert_eq!(w, vec![crate::algebra::rat(1, 2), crate::algebra::rat(1, 3), crate::algebra::rat(1, 2), crate::algebra::rat(1, 3)]);
        // x^2 - y^3 + y^4 admits no positive weight system
        let (nq, _) = parse_poly_auto::<Rat>("x^2 - y^3 + y^4").unwrap();
        assert!(is_weighted_homogeneous(&nq).is_none());
    }

    #[test]
    fn smoothness_trivial_system() {
        let ring = Ring::new(&["x", "y"]);
        let sys = vec![parse_poly::<Rat>("x", &ring).unwrap()];
        let origin = vec![Rat::from_integer(0.into()), Rat::from_integer(0.into())];
        assert_eq!(smoothness_check(&sys, &origin).unwrap(), SmoothnessVerdict::Smooth);
        let bad = vec![rat_int(1), rat_int(0)];
        assert!(matches!(smoothness_check(&sys, &bad), Err(Error::PointNotOnVariety(0))));
    }

    #[test]
    fn fiber_product_node_from_cubic_pencil() {
        // local equations of the self fiber product at t = 0
        let ring = Ring::new(&["X", "Y", "U", "V", "t"]);
        let f: Polynomial<Rat> =
            parse_poly("X^2 - Y^3 + Y^2 + t*(X^3 + Y^3 + 1)", &ring).unwrap();
        let g = parse_poly("U^2 - V^3 + V^2 + t*(U^3 + V^3 + 1)", &ring).unwrap();
        let germ = fiber_product_germ(&f, &g, "t").unwrap();
        let report = classify_germ(&germ).unwrap();
        assert_eq!(report.class, GermClass::NodeA1);
        // quadratic part is X^2 + Y^2 - U^2 - V^2 up to the sign of the
        // elimination determinant
        let q = germ.poly().homogeneous_part(2);
        let expect: Polynomial<Rat> = parse_poly("X^2 + Y^2 - U^2 - V^2", germ.ring()).unwrap();
        assert!(q == expect || q == expect.neg());
    }

    #[test]
    fn fiber_product_swap_symmetry() {
        let ring = Ring::new(&["X", "Y", "U", "V", "t"]);
        let f: Polynomial<Rat> = parse_poly("X^2 - Y^3 + t*(Y + 1) + t^2", &ring).unwrap();
        let g = parse_poly("U^2 - V^3 + t*(V + 1) + t^2", &ring).unwrap();
        let a = fiber_product_germ(&f, &g, "t").unwrap();
        // swap (X,Y) <-> (U,V)
        let b = fiber_product_germ(&g, &f, "t").unwrap();
        let swapped = {
            let r = a.poly();
            let ring4 = r.ring().clone();
            let perm: Vec<usize> = vec![2, 3, 0, 1];
            r.lift_to(&ring4, &perm)
        };
        assert!(b.poly() == &swapped || b.poly() == &swapped.neg());
    }
}
