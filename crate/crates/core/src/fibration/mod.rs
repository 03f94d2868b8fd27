//! Weierstrass fibrations over the line, their discriminant forms,
//! pencil-of-cubics discriminants, and the singularity census of fiber
//! self-products.

pub mod pencil;

pub use pencil::{pencil_discriminant, pencil_fiber_product_census, CubicPencil, PencilDiscriminant};

use crate::algebra::{rat, Cyclotomic, Field, Polynomial, Rat, Ring, UPoly, Value};
use crate::error::{Error, Result};
use crate::germ::{classify_germ, fiber_product_germ, GermClass, Germ};

/// Pair (A, B) of univariate forms with degree bounds (4, 6); the
/// discriminant is the degree-12 form 4A^3 + 27B^2 (degree at infinity
/// implied by the bounds).
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassFibration {
    a: UPoly<Rat>,
    b: UPoly<Rat>,
}

pub const DEGREE_BOUND_A: usize = 4;
pub const DEGREE_BOUND_B: usize = 6;
pub const DEGREE_BOUND_DISC: usize = 12;

impl WeierstrassFibration {
    pub fn new(a: UPoly<Rat>, b: UPoly<Rat>) -> Result<Self> {
        if a.degree().unwrap_or(0) > DEGREE_BOUND_A {
            return Err(Error::InconsistentInput(format!(
                "A has degree {} > {}",
                a.degree().unwrap(),
                DEGREE_BOUND_A
            )));
        }
        if b.degree().unwrap_or(0) > DEGREE_BOUND_B {
            return Err(Error::InconsistentInput(format!(
                "B has degree {} > {}",
                b.degree().unwrap(),
                DEGREE_BOUND_B
            )));
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::InconsistentInput("A and B both vanish identically".into()));
        }
        Ok(WeierstrassFibration { a, b })
    }

    pub fn a(&self) -> &UPoly<Rat> {
        &self.a
    }

    pub fn b(&self) -> &UPoly<Rat> {
        &self.b
    }

    /// Value of the section A at infinity: the top coefficient under the
    /// degree-4 bound.
    pub fn a_at_infinity(&self) -> Rat {
        self.a.coeff(DEGREE_BOUND_A)
    }

    pub fn b_at_infinity(&self) -> Rat {
        self.b.coeff(DEGREE_BOUND_B)
    }
}

/// delta = 4 A^3 + 27 B^2; errors when it vanishes identically.
pub fn discriminant_form(f: &WeierstrassFibration) -> Result<UPoly<Rat>> {
    let four = UPoly::constant(Rat::from_integer(4.into()));
    let tseven = UPoly::constant(Rat::from_integer(27.into()));
    let delta = four.mul(&f.a.pow(3)).add(&tseven.mul(&f.b.pow(2)));
    if delta.is_zero() {
        return Err(Error::DegenerateFibration);
    }
    Ok(delta)
}

/// Point on the base line: affine parameter value or the point at
/// infinity of the two standard charts.
#[derive(Clone, Debug, PartialEq)]
pub enum BaseRoot {
    Affine(Value<Cyclotomic>),
    Infinity,
}

impl std::fmt::Display for BaseRoot {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BaseRoot::Affine(v) => write!(f, "t = {v}"),
            BaseRoot::Infinity => write!(f, "t = infinity"),
        }
    }
}

/// One singular fiber of the self fiber product.
#[derive(Clone, Debug)]
pub struct CensusEntry {
    pub root: BaseRoot,
    /// Multiplicity of the root in the discriminant form.
    pub multiplicity: usize,
    pub class: GermClass,
    /// Singular point coordinates (X, Y, U, V) in the fiber chart.
    pub coordinates: Vec<Value<Cyclotomic>>,
    pub numerically_verified: bool,
}

/// Census of singular fibers with per-class totals.
#[derive(Clone, Debug)]
pub struct SingularFiberCensus {
    pub entries: Vec<CensusEntry>,
    /// Genericity made testable: squarefree discriminant and no common
    /// root of A and B.
    pub genericity: bool,
    /// Total multiplicity of the discriminant, including infinity.
    pub total_multiplicity: usize,
}

impl SingularFiberCensus {
    pub fn count_class(&self, class: GermClass) -> usize {
        self.entries.iter().filter(|e| e.class == class).count()
    }

    pub fn all_nodal(&self) -> bool {
        self.entries.iter().all(|e| e.class == GermClass::NodeA1)
    }
}

fn upoly_to_cyclotomic(p: &UPoly<Rat>) -> UPoly<Cyclotomic> {
    UPoly::new(p.0.iter().map(|c| Cyclotomic::from_rat(c.clone())).collect())
}

/// Census of the Weierstrass self fiber product: one entry per distinct
/// root of the discriminant (including infinity); class Node_A1 where
/// A(t0) != 0, threefold cusp where A(t0) = B(t0) = 0. The split is
/// decided exactly on squarefree factors, so germ classes are exact even
/// at numeric roots.
pub fn weierstrass_census(f: &WeierstrassFibration) -> Result<SingularFiberCensus> {
    let delta = discriminant_form(f)?;
    let deg = delta.degree().unwrap_or(0);
    let genericity = delta.squarefree_part().degree() == delta.monic().degree()
        && deg == DEGREE_BOUND_DISC
        && f.a.gcd(&f.b).degree() == Some(0);
    // cusp locus: common roots of A and B (all of delta when A = 0)
    let cusp_part: UPoly<Rat> = if f.a.is_zero() {
        f.b.squarefree_part()
    } else {
        f.a.gcd(&f.b).squarefree_part()
    };
    let mut entries = Vec::new();
    for (factor, mult) in delta.squarefree_decomposition() {
        let cuspy = factor.gcd(&cusp_part);
        let nodal = factor.divrem(&cuspy).expect("gcd divides").0;
        for (part, class) in [(cuspy, GermClass::ThreefoldCuspIIxII), (nodal, GermClass::NodeA1)] {
            if part.degree().unwrap_or(0) == 0 {
                continue;
            }
            for root in crate::algebra::roots::roots_in_cyclotomic(&upoly_to_cyclotomic(&part)) {
                let (coordinates, numeric) = singular_point_coordinates(f, &root, class)?;
                entries.push(CensusEntry {
                    root: BaseRoot::Affine(root),
                    multiplicity: mult,
                    class,
                    coordinates,
                    numerically_verified: numeric,
                });
            }
        }
    }
    // the root at infinity carries the co-multiplicity of the bound
    let mult_inf = DEGREE_BOUND_DISC - deg;
    if mult_inf > 0 {
        let a_inf = f.a_at_infinity();
        let b_inf = f.b_at_infinity();
        let class = if <Rat as Field>::is_zero(&a_inf) && <Rat as Field>::is_zero(&b_inf) {
            GermClass::ThreefoldCuspIIxII
        } else {
            GermClass::NodeA1
        };
        let eta = eta_at(&Cyclotomic::from_rat(a_inf), &Cyclotomic::from_rat(b_inf));
        entries.push(CensusEntry {
            root: BaseRoot::Infinity,
            multiplicity: mult_inf,
            class,
            coordinates: vec![
                Value::Exact(Cyclotomic::zero()),
                eta.clone(),
                Value::Exact(Cyclotomic::zero()),
                eta,
            ],
            numerically_verified: false,
        });
    }
    let total_multiplicity: usize = entries.iter().map(|e| e.multiplicity).sum();
    Ok(SingularFiberCensus { entries, genericity, total_multiplicity })
}

/// The y-coordinate of the singular point of x^2 = y^3 + A y + B on a
/// discriminant root: eta = -3B/(2A) (zero at a cusp), which squares to
/// -A/3 exactly because the discriminant vanishes.
fn eta_at(a: &Cyclotomic, b: &Cyclotomic) -> Value<Cyclotomic> {
    if a.is_zero() {
        return Value::Exact(Cyclotomic::zero());
    }
    let eta = b
        .mul(&Cyclotomic::from_int(-3))
        .mul(&a.mul(&Cyclotomic::from_int(2)).inv().unwrap());
    Value::Exact(eta)
}

fn singular_point_coordinates(
    f: &WeierstrassFibration,
    root: &Value<Cyclotomic>,
    class: GermClass,
) -> Result<(Vec<Value<Cyclotomic>>, bool)> {
    let zero = Value::Exact(Cyclotomic::zero());
    match root {
        Value::Exact(t0) => {
            let a0 = upoly_to_cyclotomic(&f.a).eval(t0);
            let b0 = upoly_to_cyclotomic(&f.b).eval(t0);
            let eta = eta_at(&a0, &b0);
            if let Value::Exact(e) = &eta {
                // eta^2 = -A(t0)/3 must hold on the discriminant locus
                let lhs = e.mul(e);
                let rhs = a0.mul(&Cyclotomic::from_rat(rat(-1, 3)));
                if lhs != rhs {
                    return Err(Error::Invariant("eta fails eta^2 = -A/3".into()));
                }
                if class == GermClass::ThreefoldCuspIIxII && !e.is_zero() {
                    return Err(Error::Invariant("cusp entry with nonzero eta".into()));
                }
            }
            Ok((vec![zero.clone(), eta.clone(), zero, eta], false))
        }
        Value::Numeric(t0) => {
            let a0 = upoly_to_cyclotomic(&f.a).eval_complex(*t0).unwrap();
            let b0 = upoly_to_cyclotomic(&f.b).eval_complex(*t0).unwrap();
            let eta = if a0.norm() < 1e-12 {
                Value::Exact(Cyclotomic::zero())
            } else {
                Value::Numeric(-3.0 * b0 / (2.0 * a0))
            };
            Ok((vec![zero.clone(), eta.clone(), zero, eta], true))
        }
    }
}

/// The two local fiber-product equations at a discriminant root with
/// exact coordinates, translated so the singular point is the origin.
/// Ring: (X, Y, U, V, t).
pub fn weierstrass_local_equations(
    f: &WeierstrassFibration,
    t0: &Cyclotomic,
    eta: &Cyclotomic,
) -> (Polynomial<Cyclotomic>, Polynomial<Cyclotomic>) {
    let ring = Ring::new(&["X", "Y", "U", "V", "t"]);
    let shift = |p: &UPoly<Rat>| -> Polynomial<Cyclotomic> {
        // p(t + t0) as a polynomial in t
        let pc = upoly_to_cyclotomic(p);
        let tpoly = Polynomial::<Cyclotomic>::var(&ring, 4)
            .add(&Polynomial::constant(&ring, t0.clone()));
        let mut acc = Polynomial::zero(&ring);
        for (i, c) in pc.0.iter().enumerate() {
            acc = acc.add(&tpoly.pow(i as u32).mul_scalar(c));
        }
        acc
    };
    let a_sh = shift(&f.a);
    let b_sh = shift(&f.b);
    let mk = |xi: usize, yi: usize| -> Polynomial<Cyclotomic> {
        let x = Polynomial::<Cyclotomic>::var(&ring, xi);
        let y = Polynomial::<Cyclotomic>::var(&ring, yi)
            .add(&Polynomial::constant(&ring, eta.clone()));
        x.pow(2).sub(&y.pow(3)).sub(&a_sh.mul(&y)).sub(&b_sh)
    };
    (mk(0, 1), mk(2, 3))
}

/// Exact germ verification of a census entry via elimination; only for
/// entries whose root and coordinates lie in the tower.
pub fn verify_entry_germ(f: &WeierstrassFibration, entry: &CensusEntry) -> Result<Germ<Cyclotomic>> {
    let t0 = match &entry.root {
        BaseRoot::Affine(Value::Exact(t0)) => t0.clone(),
        _ => return Err(Error::Invariant("only exact affine entries are verified".into())),
    };
    let eta = entry.coordinates[1]
        .exact()
        .ok_or_else(|| Error::Invariant("entry has numeric coordinates".into()))?
        .clone();
    let (f1, f2) = weierstrass_local_equations(f, &t0, &eta);
    let germ = fiber_product_germ(&f1, &f2, "t")?;
    let report = classify_germ(&germ)?;
    if report.class != entry.class {
        return Err(Error::Invariant(format!(
            "census class {} disagrees with germ class {}",
            entry.class, report.class
        )));
    }
    Ok(germ)
}

/// Euler numbers of an all-nodal census: chi(X) = nu and chi of the
/// small resolution is 2 nu.
pub fn euler_from_census(census: &SingularFiberCensus) -> Result<(i64, i64)> {
    if !census.all_nodal() {
        return Err(Error::NonNodalCensus);
    }
    let nu = census.entries.len() as i64;
    Ok((nu, 2 * nu))
}

/// Scaling (A, B) -> (c^4 A, c^6 B) multiplies the discriminant by c^12
/// and leaves the census untouched.
pub fn rescale(f: &WeierstrassFibration, c: &Rat) -> Result<WeierstrassFibration> {
    if <Rat as Field>::is_zero(c) {
        return Err(Error::InconsistentInput("scale factor must be nonzero".into()));
    }
    WeierstrassFibration::new(f.a.mul_scalar(&c.pow(4)), f.b.mul_scalar(&c.pow(6)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat_int;

    fn upoly(cs: &[i64]) -> UPoly<Rat> {
        UPoly::from_ints(cs)
    }

    #[test]
    fn discriminant_basics() {
        // A = 0, generic B: delta = 27 B^2
        let b = upoly(&[1, 0, 1, 0, 0, 0, 1]);
        let f = WeierstrassFibration::new(UPoly::zero(), b.clone()).unwrap();
        let d = discriminant_form(&f).unwrap();
        assert_eq!(d, b.mul(&b).mul_scalar(&rat_int(27)));
        // globally singular cubic: A = -3, B = 2 gives delta = 0
        let f = WeierstrassFibration::new(upoly(&[-3]), upoly(&[2])).unwrap();
        assert!(matches!(discriminant_form(&f), Err(Error::DegenerateFibration)));
        // A = 1, B = 0: delta = 4, no singular fibers
        let f = WeierstrassFibration::new(upoly(&[1]), UPoly::zero()).unwrap();
        assert_eq!(discriminant_form(&f).unwrap(), UPoly::from_ints(&[4]));
    }

    #[test]
    fn namikawa_census_six_cusps() {
        // B squarefree of degree 6: six distinct cuspidal fibers
        let b = upoly(&[-1, 0, 0, 0, 0, 0, 1]); // t^6 - 1
        let f = WeierstrassFibration::new(UPoly::zero(), b).unwrap();
        let census = weierstrass_census(&f).unwrap();
        assert_eq!(census.entries.len(), 6);
        assert_eq!(census.count_class(GermClass::ThreefoldCuspIIxII), 6);
        assert_eq!(census.total_multiplicity, 12);
        assert!(matches!(euler_from_census(&census), Err(Error::NonNodalCensus)));
    }

    #[test]
    fn cusp_at_zero_with_mixed_census() {
        // A = t(t + 1), B = t: delta(0) = 0 with A(0) = B(0) = 0
        let f = WeierstrassFibration::new(upoly(&[0, 1, 1]), upoly(&[0, 1])).unwrap();
        let census = weierstrass_census(&f).unwrap();
        let zero_entry = census
            .entries
            .iter()
            .find(|e| matches!(&e.root, BaseRoot::Affine(Value::Exact(c)) if c.is_zero()))
            .unwrap();
        assert_eq!(zero_entry.class, GermClass::ThreefoldCuspIIxII);
        // exact cross-check through elimination
        let germ = verify_entry_germ(&f, zero_entry).unwrap();
        assert_eq!(classify_germ(&germ).unwrap().class, GermClass::ThreefoldCuspIIxII);
    }

    #[test]
    fn node_entry_verified_exactly() {
        // pick A, B with a rational nodal root: A = -3, B = 2 t + ...
        // delta = 4(-27) + 27 B^2 = 27(B^2 - 4): roots where B = +-2
        let f = WeierstrassFibration::new(upoly(&[-3]), upoly(&[0, 1])).unwrap();
        // B(t) = t: delta roots at t = +-2, eta = -3B/(2A) = t/2
        let census = weierstrass_census(&f).unwrap();
        let two = Cyclotomic::from_int(2);
        let entry = census
            .entries
            .iter()
            .find(|e| matches!(&e.root, BaseRoot::Affine(Value::Exact(c)) if c == &two))
            .unwrap();
        assert_eq!(entry.class, GermClass::NodeA1);
        assert_eq!(entry.coordinates[1].exact().unwrap(), &Cyclotomic::from_int(1));
        verify_entry_germ(&f, entry).unwrap();
    }

    #[test]
    fn scaling_covariance() {
        let f = WeierstrassFibration::new(upoly(&[1, 2, 0, 1]), upoly(&[3, 0, 1, 0, 0, 1])).unwrap();
        let d = discriminant_form(&f).unwrap();
        let c = rat(2, 3);
        let g = rescale(&f, &c).unwrap();
        let dg = discriminant_form(&g).unwrap();
        assert_eq!(dg, d.mul_scalar(&c.pow(12)));
        let census_f = weierstrass_census(&f).unwrap();
        let census_g = weierstrass_census(&g).unwrap();
        assert_eq!(census_f.entries.len(), census_g.entries.len());
        for (ef, eg) in census_f.entries.iter().zip(&census_g.entries) {
            assert_eq!(ef.class, eg.class);
            assert_eq!(ef.multiplicity, eg.multiplicity);
        }
    }
}
