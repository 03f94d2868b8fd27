//! The cusp deformation laboratory: critical-point systems for the
//! versal family of x^2 - y^3 - z^2 + w^3, the sigma = 0 hyperplane
//! classification, the three-node locus with its exceptional solutions,
//! and the factored family over Q(omega).

use num::complex::Complex64;

use crate::algebra::{
    rat, rat_int, Cyclotomic, Field, Polynomial, Rat, RatFn, Ring, UPoly, Value,
};
use crate::error::{Error, Result};
use crate::germ::{numeric, GermClass, GermReport};
use crate::standard_basis::Ideal;

/// Base coordinates of the versal family. The T^1 coordinate tuple is
/// (lambda, mu, -nu, sigma): the stored nu keeps the sign used in the
/// critical equations.
#[derive(Clone, Debug, PartialEq)]
pub struct KuranishiPoint<F: Field> {
    pub lambda: F,
    pub mu: F,
    pub nu: F,
    pub sigma: F,
}

impl<F: Field> KuranishiPoint<F> {
    pub fn new(lambda: F, mu: F, nu: F, sigma: F) -> Self {
        KuranishiPoint { lambda, mu, nu, sigma }
    }

    pub fn zero() -> Self {
        KuranishiPoint::new(F::zero(), F::zero(), F::zero(), F::zero())
    }

    /// Coordinates as they sit in T^1: (lambda, mu, -nu, sigma).
    pub fn t1_coordinates(&self) -> [F; 4] {
        [self.lambda.clone(), self.mu.clone(), self.nu.neg(), self.sigma.clone()]
    }

    pub fn is_on_s(&self) -> bool {
        self.sigma.is_zero()
    }
}

impl KuranishiPoint<Rat> {
    pub fn to_cyclotomic(&self) -> KuranishiPoint<Cyclotomic> {
        KuranishiPoint::new(
            Cyclotomic::from_rat(self.lambda.clone()),
            Cyclotomic::from_rat(self.mu.clone()),
            Cyclotomic::from_rat(self.nu.clone()),
            Cyclotomic::from_rat(self.sigma.clone()),
        )
    }
}

/// Ring of the deformed fibers.
pub fn fiber_ring() -> Ring {
    Ring::new(&["x", "y", "z", "w"])
}

/// F_Lambda = x^2 - y^3 - z^2 + w^3 + lambda + mu y - nu w + sigma y w.
pub fn deformed_polynomial<F: Field>(p: &KuranishiPoint<F>) -> Polynomial<F> {
    let ring = fiber_ring();
    let x = Polynomial::var(&ring, 0);
    let y = Polynomial::var(&ring, 1);
    let z = Polynomial::var(&ring, 2);
    let w = Polynomial::var(&ring, 3);
    x.pow(2)
        .sub(&y.pow(3))
        .sub(&z.pow(2))
        .add(&w.pow(3))
        .add(&Polynomial::constant(&ring, p.lambda.clone()))
        .add(&y.mul_scalar(&p.mu))
        .sub(&w.mul_scalar(&p.nu))
        .add(&y.mul(&w).mul_scalar(&p.sigma))
}

/// The critical equations in (y, w) with the base coordinates as ring
/// variables: 3y^2 - sigma w - mu, 3w^2 + sigma y - nu, and
/// sigma y w + 2 mu y - 2 nu w + 3 lambda.
pub fn critical_system_symbolic() -> (Ring, Vec<Polynomial<Rat>>) {
    let ring = Ring::new(&["y", "w", "lambda", "mu", "nu", "sigma"]);
    let v = |name: &str| Polynomial::<Rat>::var_named(&ring, name).unwrap();
    let (y, w) = (v("y"), v("w"));
    let (la, mu, nu, si) = (v("lambda"), v("mu"), v("nu"), v("sigma"));
    let three = |p: &Polynomial<Rat>| p.mul_scalar(&rat_int(3));
    let two = |p: &Polynomial<Rat>| p.mul_scalar(&rat_int(2));
    let eqs = vec![
        three(&y.pow(2)).sub(&si.mul(&w)).sub(&mu),
        three(&w.pow(2)).add(&si.mul(&y)).sub(&nu),
        si.mul(&y).mul(&w).add(&two(&mu.mul(&y))).sub(&two(&nu.mul(&w))).add(&three(&la)),
    ];
    (ring, eqs)
}

/// The critical equations at a concrete base point, in the ring (y, w).
pub fn critical_system_at<F: Field>(p: &KuranishiPoint<F>) -> Vec<Polynomial<F>> {
    let ring = Ring::new(&["y", "w"]);
    let y = Polynomial::<F>::var(&ring, 0);
    let w = Polynomial::<F>::var(&ring, 1);
    let c = |v: &F| Polynomial::constant(&ring, v.clone());
    vec![
        y.pow(2).mul_scalar(&F::from_int(3)).sub(&w.mul_scalar(&p.sigma)).sub(&c(&p.mu)),
        w.pow(2).mul_scalar(&F::from_int(3)).add(&y.mul_scalar(&p.sigma)).sub(&c(&p.nu)),
        y.mul(&w)
            .mul_scalar(&p.sigma)
            .add(&y.mul_scalar(&p.mu.mul(&F::from_int(2))))
            .sub(&w.mul_scalar(&p.nu.mul(&F::from_int(2))))
            .add(&c(&p.lambda.mul(&F::from_int(3)))),
    ]
}

/// Fiber classification over the hyperplane S = {sigma = 0}.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SDeformationClass {
    NodeA1,
    KodairaIIxII,
    KodairaI1xII,
}

impl std::fmt::Display for SDeformationClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            SDeformationClass::NodeA1 => write!(f, "Node_A1"),
            SDeformationClass::KodairaIIxII => write!(f, "IIxII"),
            SDeformationClass::KodairaI1xII => write!(f, "I1xII"),
        }
    }
}

/// One singular point of a deformed fiber: coordinates in (x, y, z, w),
/// an exact germ report when the point lies in the tower.
#[derive(Clone, Debug)]
pub struct SingularFiberPoint {
    pub coordinates: [Value<Cyclotomic>; 4],
    pub report: Option<GermReport>,
    pub class: GermClass,
    pub numerically_verified: bool,
}

/// Singular points of one deformed fiber; never more than three.
#[derive(Clone, Debug)]
pub struct DeformedFiberReport {
    pub base: KuranishiPoint<Cyclotomic>,
    pub points: Vec<SingularFiberPoint>,
}

/// Classification outcome over S, per the mu.nu rule, with the singular
/// points solved exactly where the tower permits.
#[derive(Clone, Debug)]
pub struct SDeformationReport {
    pub class: SDeformationClass,
    pub points: Vec<SingularFiberPoint>,
}

fn classify_fiber_point(
    fiber: &Polynomial<Cyclotomic>,
    y: &Value<Cyclotomic>,
    w: &Value<Cyclotomic>,
) -> Result<SingularFiberPoint> {
    let coordinates = [
        Value::Exact(Cyclotomic::zero()),
        y.clone(),
        Value::Exact(Cyclotomic::zero()),
        w.clone(),
    ];
    match (y, w) {
        (Value::Exact(ye), Value::Exact(we)) => {
            let point = vec![Cyclotomic::zero(), ye.clone(), Cyclotomic::zero(), we.clone()];
            if !fiber.eval(&point)?.is_zero() {
                return Err(Error::Invariant("critical point misses the fiber".into()));
            }
            let report = crate::germ::classify_at(fiber, &point)?;
            Ok(SingularFiberPoint {
                coordinates,
                class: report.class,
                report: Some(report),
                numerically_verified: false,
            })
        }
        _ => {
            // numeric jacobian path: full-rank Hessian means a node
            let zp = [
                Complex64::new(0.0, 0.0),
                y.to_complex().unwrap(),
                Complex64::new(0.0, 0.0),
                w.to_complex().unwrap(),
            ];
            let residual = fiber.eval_complex(&zp).unwrap().norm();
            if residual > numeric::RESIDUAL_TOL {
                return Err(Error::Invariant("numeric critical point misses the fiber".into()));
            }
            let n = fiber.n_vars();
            let hess: Vec<Vec<Complex64>> = (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| {
                            fiber
                                .partial_derivative_idx(i)
                                .partial_derivative_idx(j)
                                .eval_complex(&zp)
                                .unwrap()
                        })
                        .collect()
                })
                .collect();
            let rank = numeric::numeric_rank(&hess);
            let class = if rank == n { GermClass::NodeA1 } else { GermClass::NotNodeOther };
            Ok(SingularFiberPoint { coordinates, class, report: None, numerically_verified: true })
        }
    }
}

/// Per-point classification over S: nodes iff mu.nu != 0, IIxII iff
/// mu = nu = 0, I1xII otherwise; at most two singular points.
pub fn classify_s_deformation(
    lambda: &Cyclotomic,
    mu: &Cyclotomic,
    nu: &Cyclotomic,
) -> Result<SDeformationReport> {
    let base = KuranishiPoint::new(lambda.clone(), mu.clone(), nu.clone(), Cyclotomic::zero());
    let class = if !mu.is_zero() && !nu.is_zero() {
        SDeformationClass::NodeA1
    } else if mu.is_zero() && nu.is_zero() {
        SDeformationClass::KodairaIIxII
    } else {
        SDeformationClass::KodairaI1xII
    };
    let report = deformed_fiber_singularities(&base)?;
    if report.points.len() > 2 {
        return Err(Error::Invariant("more than two singular points over S".into()));
    }
    Ok(SDeformationReport { class, points: report.points })
}

/// Solutions of a quadratic 3 t^2 = c over Q(omega), exact or numeric.
fn sqrt_of_third(c: &Cyclotomic) -> Vec<Value<Cyclotomic>> {
    let target = c.mul(&Cyclotomic::from_rat(rat(1, 3)));
    if target.is_zero() {
        return vec![Value::Exact(Cyclotomic::zero())];
    }
    match target.sqrt() {
        Some(r) => vec![Value::Exact(r.clone()), Value::Exact(r.neg())],
        None => {
            let z = target.to_complex().sqrt();
            vec![Value::Numeric(z), Value::Numeric(-z)]
        }
    }
}

/// All singular points of the deformed fiber at a concrete base point,
/// classified after translation to the origin.
pub fn deformed_fiber_singularities(
    base: &KuranishiPoint<Cyclotomic>,
) -> Result<DeformedFiberReport> {
    let fiber = deformed_polynomial(base);
    let mut points: Vec<SingularFiberPoint> = Vec::new();
    if base.sigma.is_zero() {
        // 3y^2 = mu, 3w^2 = nu, filtered by 2 mu y - 2 nu w + 3 lambda = 0
        let two = Cyclotomic::from_int(2);
        let three = Cyclotomic::from_int(3);
        for yv in sqrt_of_third(&base.mu) {
            for wv in sqrt_of_third(&base.nu) {
                let ok = match (&yv, &wv) {
                    (Value::Exact(y), Value::Exact(w)) => base
                        .mu
                        .mul(y)
                        .mul(&two)
                        .sub(&base.nu.mul(w).mul(&two))
                        .add(&base.lambda.mul(&three))
                        .is_zero(),
                    _ => {
                        let y = yv.to_complex().unwrap();
                        let w = wv.to_complex().unwrap();
                        let val = 2.0 * base.mu.to_complex() * y - 2.0 * base.nu.to_complex() * w
                            + 3.0 * base.lambda.to_complex();
                        val.norm() < numeric::RESIDUAL_TOL
                    }
                };
                if ok {
                    points.push(classify_fiber_point(&fiber, &yv, &wv)?);
                }
            }
        }
    } else {
        // eliminate w = (3y^2 - mu)/sigma; common roots of the induced
        // quartic and cubic in y
        let si_inv = base.sigma.inv().unwrap();
        let three = Cyclotomic::from_int(3);
        // R1 = 27 y^4 - 18 mu y^2 + sigma^3 y + 3 mu^2 - nu sigma^2
        let r1: UPoly<Cyclotomic> = UPoly::new(vec![
            base.mu.pow(2).mul(&three).sub(&base.nu.mul(&base.sigma.pow(2))),
            base.sigma.pow(3),
            base.mu.mul(&Cyclotomic::from_int(-18)),
            Cyclotomic::zero(),
            Cyclotomic::from_int(27),
        ]);
        // R2 = 3 sigma y^3 - 6 nu y^2 + mu sigma y + 2 mu nu + 3 lambda sigma
        let r2: UPoly<Cyclotomic> = UPoly::new(vec![
            base.mu
                .mul(&base.nu)
                .mul(&Cyclotomic::from_int(2))
                .add(&base.lambda.mul(&base.sigma).mul(&three)),
            base.mu.mul(&base.sigma),
            base.nu.mul(&Cyclotomic::from_int(-6)),
            base.sigma.mul(&three),
        ]);
        let g = r1.gcd(&r2);
        if g.degree().is_none() {
            return Err(Error::PositiveDimensionalSingularLocus);
        }
        // distinct critical points only
        let g = g.squarefree_part();
        for yv in crate::algebra::roots::roots_in_cyclotomic(&g) {
            let wv = match &yv {
                Value::Exact(y) => {
                    Value::Exact(y.pow(2).mul(&three).sub(&base.mu).mul(&si_inv))
                }
                Value::Numeric(y) => Value::Numeric(
                    (3.0 * y * y - base.mu.to_complex()) / base.sigma.to_complex(),
                ),
            };
            points.push(classify_fiber_point(&fiber, &yv, &wv)?);
        }
    }
    if points.len() > 3 {
        return Err(Error::Invariant(format!(
            "{} singular points exceed the three-point bound",
            points.len()
        )));
    }
    Ok(DeformedFiberReport { base: base.clone(), points })
}

/// Solution branch of the three-node conditions: each coordinate is a
/// Q(omega) multiple of a power of sigma.
#[derive(Clone, Debug, PartialEq)]
pub struct ParametrizedSolution {
    pub name: String,
    /// true for the branch whose fibers carry three distinct nodes; the
    /// others are trivial (the deformed fiber keeps a single cusp).
    pub three_nodes: bool,
    pub lambda: (Cyclotomic, u32),
    pub mu: (Cyclotomic, u32),
    pub nu: (Cyclotomic, u32),
}

impl ParametrizedSolution {
    pub fn at(&self, sigma: &Cyclotomic) -> KuranishiPoint<Cyclotomic> {
        KuranishiPoint::new(
            self.lambda.0.mul(&sigma.pow(self.lambda.1)),
            self.mu.0.mul(&sigma.pow(self.mu.1)),
            self.nu.0.mul(&sigma.pow(self.nu.1)),
            sigma.clone(),
        )
    }
}

/// The three-node locus: divisibility conditions on the base, the four
/// solution branches, and the image curve ideal.
#[derive(Clone, Debug)]
pub struct ThreeNodeLocus {
    pub conditions: Vec<Polynomial<Rat>>,
    pub solutions: Vec<ParametrizedSolution>,
    pub curve: Ideal<Rat>,
}

/// Base ring of the Kuranishi coordinates.
pub fn base_ring() -> Ring {
    Ring::new(&["lambda", "mu", "nu", "sigma"])
}

/// Ideal of the plane rational cubic curve sigma^3 - 27 lambda = mu = nu = 0.
pub fn curve_ideal() -> Ideal<Rat> {
    let ring = base_ring();
    let v = |name: &str| Polynomial::<Rat>::var_named(&ring, name).unwrap();
    Ideal::new(vec![
        v("sigma").pow(3).sub(&v("lambda").mul_scalar(&rat_int(27))),
        v("mu"),
        v("nu"),
    ])
    .expect("nonzero generators")
}

/// Divisibility conditions for a fiber with three singular points, the
/// explicit solutions Lambda_0..Lambda_3, and the curve they sweep out.
pub fn three_node_locus() -> ThreeNodeLocus {
    let ring = base_ring();
    let v = |name: &str| Polynomial::<Rat>::var_named(&ring, name).unwrap();
    let (la, mu, nu, si) = (v("lambda"), v("mu"), v("nu"), v("sigma"));
    let c = |n: i64| Polynomial::constant(&ring, rat_int(n));
    // 4 nu^2 - mu sigma^2
    let c1 = nu.pow(2).mul(&c(4)).sub(&mu.mul(&si.pow(2)));
    // sigma^4 - 36 mu nu - 27 lambda sigma
    let c2 = si.pow(4).sub(&mu.mul(&nu).mul(&c(36))).sub(&la.mul(&si).mul(&c(27)));
    // 3 mu^2 sigma^2 - nu sigma^4 - 36 mu nu^2 - 54 lambda nu sigma
    let c3 = mu
        .pow(2)
        .mul(&si.pow(2))
        .mul(&c(3))
        .sub(&nu.mul(&si.pow(4)))
        .sub(&mu.mul(&nu.pow(2)).mul(&c(36)))
        .sub(&la.mul(&nu).mul(&si).mul(&c(54)));
    let w = Cyclotomic::omega();
    let w2 = Cyclotomic::omega2();
    let quarter = Cyclotomic::from_rat(rat(1, 4));
    let solutions = vec![
        ParametrizedSolution {
            name: "Lambda0".into(),
            three_nodes: true,
            lambda: (Cyclotomic::from_rat(rat(1, 27)), 3),
            mu: (Cyclotomic::zero(), 2),
            nu: (Cyclotomic::zero(), 2),
        },
        ParametrizedSolution {
            name: "Lambda1".into(),
            three_nodes: false,
            lambda: (Cyclotomic::from_rat(rat(-5, 108)), 3),
            mu: (quarter.clone(), 2),
            nu: (quarter.clone(), 2),
        },
        ParametrizedSolution {
            name: "Lambda2".into(),
            three_nodes: false,
            lambda: (Cyclotomic::from_rat(rat(-5, 108)), 3),
            mu: (w2.mul(&quarter), 2),
            nu: (w.mul(&quarter), 2),
        },
        ParametrizedSolution {
            name: "Lambda3".into(),
            three_nodes: false,
            lambda: (Cyclotomic::from_rat(rat(-5, 108)), 3),
            mu: (w.mul(&quarter), 2),
            nu: (w2.mul(&quarter), 2),
        },
    ];
    ThreeNodeLocus { conditions: vec![c1, c2, c3], solutions, curve: curve_ideal() }
}

/// Re-derives the three-node conditions as the numerators of the
/// remainder coefficients of R1 / R2, computed over Q(lambda,mu,nu,sigma).
pub fn three_node_conditions_from_division() -> Result<Vec<Polynomial<Rat>>> {
    let ring = Ring::new(&["y", "lambda", "mu", "nu", "sigma"]);
    let v = |name: &str| Polynomial::<Rat>::var_named(&ring, name).unwrap();
    let (y, la, mu, nu, si) = (v("y"), v("lambda"), v("mu"), v("nu"), v("sigma"));
    let c = |n: i64| Polynomial::constant(&ring, rat_int(n));
    let r1 = y
        .pow(4)
        .mul(&c(27))
        .sub(&mu.mul(&y.pow(2)).mul(&c(18)))
        .add(&si.pow(3).mul(&y))
        .add(&mu.pow(2).mul(&c(3)))
        .sub(&nu.mul(&si.pow(2)));
    let r2 = si
        .mul(&y.pow(3))
        .mul(&c(3))
        .sub(&nu.mul(&y.pow(2)).mul(&c(6)))
        .add(&mu.mul(&si).mul(&y))
        .add(&mu.mul(&nu).mul(&c(2)))
        .add(&la.mul(&si).mul(&c(3)));
    let keep = [ring.var_index("y").unwrap()];
    let r1f = crate::algebra::absorb_parameters(&r1, &keep);
    let r2f = crate::algebra::absorb_parameters(&r2, &keep);
    let (_, rem) = crate::algebra::divide_with_remainder(&r1f, &r2f, "y")?;
    // numerators of the remainder coefficients, primitive-normalized
    let mut out = Vec::new();
    for k in (0..=2).rev() {
        let coeffs = rem.coeffs_in_var(0);
        let coeff: RatFn = coeffs
            .get(k)
            .map(|p| p.constant_term())
            .unwrap_or_else(<RatFn as Field>::zero);
        out.push(crate::algebra::ratfn::mpoly_normalize(coeff.numerator()));
    }
    Ok(out)
}

/// Point of the factored family base C^3(alpha, beta, gamma) over Q(omega).
#[derive(Clone, Debug, PartialEq)]
pub struct FactoredFamilyPoint {
    pub alpha: Cyclotomic,
    pub beta: Cyclotomic,
    pub gamma: Cyclotomic,
}

impl FactoredFamilyPoint {
    pub fn new(alpha: Cyclotomic, beta: Cyclotomic, gamma: Cyclotomic) -> Self {
        FactoredFamilyPoint { alpha, beta, gamma }
    }

    /// alpha + omega beta + omega^2 gamma; zero exactly on the plane pi.
    pub fn pi_form(&self) -> Cyclotomic {
        self.alpha
            .add(&Cyclotomic::omega().mul(&self.beta))
            .add(&Cyclotomic::omega2().mul(&self.gamma))
    }

    pub fn on_pi(&self) -> bool {
        self.pi_form().is_zero()
    }
}

/// Ring of the factored family fibers.
pub fn factored_ring() -> Ring {
    Ring::new(&["X", "Y", "U", "V"])
}

/// F_a: the deformation of X^2 - U^2 - Y^3 + V^3 that keeps the
/// factorization (X-U)(X+U) = prod (Y - omega^i V + ...) of the cusp.
pub fn factored_family_polynomial(a: &FactoredFamilyPoint) -> Polynomial<Cyclotomic> {
    let ring = factored_ring();
    let xx = Polynomial::<Cyclotomic>::var(&ring, 0);
    let yy = Polynomial::var(&ring, 1);
    let uu = Polynomial::var(&ring, 2);
    let vv = Polynomial::var(&ring, 3);
    let w = Cyclotomic::omega();
    let w2 = Cyclotomic::omega2();
    let f = xx.pow(2).sub(&uu.pow(2)).sub(&yy.pow(3)).add(&vv.pow(3));
    let s1 = a.alpha.add(&a.beta).add(&a.gamma);
    let s_v2 = a.alpha.add(&w2.mul(&a.beta)).add(&w.mul(&a.gamma));
    let s_yv = a.alpha.add(&w.mul(&a.beta)).add(&w2.mul(&a.gamma));
    let e2 = a.alpha.mul(&a.gamma).add(&a.alpha.mul(&a.beta)).add(&a.beta.mul(&a.gamma));
    let v_lin = a
        .beta
        .mul(&a.gamma)
        .add(&w.mul(&a.alpha).mul(&a.gamma))
        .add(&w2.mul(&a.alpha).mul(&a.beta));
    let e3 = a.alpha.mul(&a.beta).mul(&a.gamma);
    f.sub(&yy.pow(2).mul_scalar(&s1))
        .sub(&vv.pow(2).mul_scalar(&s_v2))
        .sub(&yy.mul(&vv).mul_scalar(&s_yv))
        .sub(&yy.mul_scalar(&e2))
        .add(&vv.mul_scalar(&v_lin))
        .sub(&Polynomial::constant(&ring, e3))
}

/// One singular point of a factored-family fiber with its exact report.
#[derive(Clone, Debug)]
pub struct FactoredFamilyPointReport {
    pub coordinates: [Cyclotomic; 4],
    pub report: GermReport,
}

/// Outcome of the singularity analysis of one factored-family fiber.
#[derive(Clone, Debug)]
pub enum FactoredFamilyOutcome {
    /// On the plane pi: one threefold cusp.
    OnPi { cusp: FactoredFamilyPointReport },
    /// Off pi: exactly three distinct nodes.
    OffPi { nodes: Vec<FactoredFamilyPointReport> },
}

fn verified_point(
    fam: &Polynomial<Cyclotomic>,
    coords: [Cyclotomic; 4],
) -> Result<FactoredFamilyPointReport> {
    let point = coords.to_vec();
    if !fam.eval(&point)?.is_zero() {
        return Err(Error::Invariant("factored-family point misses the fiber".into()));
    }
    for d in fam.gradient() {
        if !d.eval(&point)?.is_zero() {
            return Err(Error::Invariant("factored-family point is not critical".into()));
        }
    }
    let report = crate::germ::classify_at(fam, &point)?;
    Ok(FactoredFamilyPointReport { coordinates: coords, report })
}

/// Exact singular-point analysis of the fiber F_a = 0: a single cusp for
/// a on pi, three distinct nodes otherwise, all in closed Q(omega) form.
pub fn factored_family_analysis(a: &FactoredFamilyPoint) -> Result<FactoredFamilyOutcome> {
    let fam = factored_family_polynomial(a);
    let w = Cyclotomic::omega();
    let w2 = Cyclotomic::omega2();
    let zero = Cyclotomic::zero();
    // i(gamma - beta)/sqrt(3) = (1 + 2 omega)(gamma - beta)/3
    let third = Cyclotomic::from_rat(rat(1, 3));
    let v1 = Cyclotomic::i_sqrt3().mul(&a.gamma.sub(&a.beta)).mul(&third);
    if a.on_pi() {
        // a = (omega - 1)/3, conj = (omega^2 - 1)/3
        let ca = w.sub(&Cyclotomic::one()).mul(&third);
        let cabar = w2.sub(&Cyclotomic::one()).mul(&third);
        let y0 = ca.mul(&a.beta).add(&cabar.mul(&a.gamma));
        let cusp = verified_point(&fam, [zero.clone(), y0, zero, v1])?;
        if cusp.report.class != GermClass::ThreefoldCuspIIxII {
            return Err(Error::Invariant(format!(
                "expected a threefold cusp on pi, found {}",
                cusp.report.class
            )));
        }
        return Ok(FactoredFamilyOutcome::OnPi { cusp });
    }
    let s = a.pi_form();
    let s_inv = s.inv().unwrap();
    let s_v2 = a.alpha.add(&w2.mul(&a.beta)).add(&w.mul(&a.gamma));
    let v_quad = a
        .beta
        .mul(&a.gamma)
        .add(&w.mul(&a.alpha).mul(&a.gamma))
        .add(&w2.mul(&a.alpha).mul(&a.beta));
    // cabar = (omega^2 - 1)/3 so that 3*cabar = omega^2 - 1
    let cabar = w2.sub(&Cyclotomic::one()).mul(&third);
    let v2 = a.gamma.sub(&a.alpha).mul(&cabar.mul(&Cyclotomic::from_int(3)).inv().unwrap());
    let v3 = cabar.mul(&a.beta.sub(&a.alpha));
    let y_of = |v: &Cyclotomic| {
        v.pow(2)
            .mul(&Cyclotomic::from_int(3))
            .sub(&s_v2.mul(v).mul(&Cyclotomic::from_int(2)))
            .add(&v_quad)
            .mul(&s_inv)
    };
    let vs = [v1, v2, v3];
    // distinctness of the three V-coordinates characterizes being off pi
    for i in 0..3 {
        for j in i + 1..3 {
            if vs[i] == vs[j] {
                return Err(Error::Invariant("coincident node coordinates off pi".into()));
            }
        }
    }
    let mut nodes = Vec::new();
    for v in vs {
        let y = y_of(&v);
        let node = verified_point(&fam, [zero.clone(), y, zero.clone(), v])?;
        if node.report.class != GermClass::NodeA1 {
            return Err(Error::Invariant(format!(
                "expected a node off pi, found {}",
                node.report.class
            )));
        }
        nodes.push(node);
    }
    Ok(FactoredFamilyOutcome::OffPi { nodes })
}

/// The composite f = i . p: project along pi onto the image line, then
/// map into the Kuranishi base; lands on the three-node curve. The
/// projection constant is fixed to 1.
pub fn cubic_curve_map(a: &FactoredFamilyPoint) -> KuranishiPoint<Cyclotomic> {
    let s = a.pi_form();
    KuranishiPoint::new(
        s.pow(3).neg(),
        Cyclotomic::zero(),
        Cyclotomic::zero(),
        s.mul(&Cyclotomic::from_int(3)).neg(),
    )
}

/// Evaluate the curve ideal generators at a base point; all three vanish
/// exactly when the point lies on the three-node curve.
pub fn curve_membership(p: &KuranishiPoint<Cyclotomic>) -> bool {
    let s3 = p.sigma.pow(3).sub(&p.lambda.mul(&Cyclotomic::from_int(27)));
    s3.is_zero() && p.mu.is_zero() && p.nu.is_zero()
}

/// Verify identically (as polynomials in alpha, beta, gamma over
/// Q(omega)) that the image of the cubic curve map satisfies the curve
/// ideal sigma^3 - 27 lambda = mu = nu = 0.
pub fn cubic_curve_map_image_identity() -> bool {
    let ring = Ring::new(&["alpha", "beta", "gamma"]);
    let al = Polynomial::<Cyclotomic>::var(&ring, 0);
    let be = Polynomial::var(&ring, 1);
    let ga = Polynomial::var(&ring, 2);
    let s = al
        .add(&be.mul_scalar(&Cyclotomic::omega()))
        .add(&ga.mul_scalar(&Cyclotomic::omega2()));
    let lambda = s.pow(3).neg();
    let sigma = s.mul_scalar(&Cyclotomic::from_int(-3));
    sigma.pow(3).sub(&lambda.mul_scalar(&Cyclotomic::from_int(27))).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn critical_system_shapes() {
        let (_, eqs) = critical_system_symbolic();
        assert_eq!(eqs[0].to_string(), "3*y^2 - w*sigma - mu");
        assert_eq!(eqs[1].to_string(), "3*w^2 + y*sigma - nu");
        assert_eq!(eqs[2].to_string(), "y*w*sigma + 2*y*mu - 2*w*nu + 3*lambda");
        // central fiber: 3y^2, 3w^2, 0
        let zero = KuranishiPoint::<Rat>::zero();
        let at = critical_system_at(&zero);
        assert_eq!(at[0].to_string(), "3*y^2");
        assert_eq!(at[1].to_string(), "3*w^2");
        assert!(at[2].is_zero());
    }

    #[test]
    fn central_fiber_single_cusp() {
        let report = deformed_fiber_singularities(&KuranishiPoint::zero()).unwrap();
        assert_eq!(report.points.len(), 1);
        assert_eq!(report.points[0].class, GermClass::ThreefoldCuspIIxII);
    }

    #[test]
    fn lambda0_fiber_three_nodes_at_sigma_three() {
        let locus = three_node_locus();
        let l0 = locus.solutions.iter().find(|s| s.three_nodes).unwrap();
        let base = l0.at(&Cyclotomic::from_int(3));
        assert_eq!(base.lambda, Cyclotomic::from_int(1));
        let report = deformed_fiber_singularities(&base).unwrap();
        assert_eq!(report.points.len(), 3);
        let w = Cyclotomic::omega();
        let w2 = Cyclotomic::omega2();
        let mut ys: Vec<Cyclotomic> = report
            .points
            .iter()
            .map(|p| p.coordinates[1].exact().unwrap().clone())
            .collect();
        ys.sort_by_key(|c| format!("{c}"));
        let mut expect =
            vec![Cyclotomic::from_int(-1), w.neg(), w2.neg()];
        expect.sort_by_key(|c| format!("{c}"));
        assert_eq!(ys, expect);
        for p in &report.points {
            assert_eq!(p.class, GermClass::NodeA1);
            // w-coordinate is -y^2 for sigma = 3 (w = 3y^2/sigma = y^2)
            let y = p.coordinates[1].exact().unwrap();
            let wc = p.coordinates[3].exact().unwrap();
            assert_eq!(wc, &y.mul(y));
        }
    }

    #[test]
    fn conditions_match_division_remainder() {
        let stored = three_node_locus().conditions;
        let derived = three_node_conditions_from_division().unwrap();
        use crate::algebra::ratfn::mpoly_normalize;
        for (s, d) in stored.iter().zip(&derived) {
            assert_eq!(mpoly_normalize(s), mpoly_normalize(d));
        }
    }

    #[test]
    fn solutions_satisfy_conditions_symbolically() {
        // substitute each branch into the conditions over Q(omega)[sigma]
        let locus = three_node_locus();
        let sring = Ring::new(&["sigma"]);
        let sigma = Polynomial::<Cyclotomic>::var(&sring, 0);
        for sol in &locus.solutions {
            let lam = sigma.pow(sol.lambda.1).mul_scalar(&sol.lambda.0);
            let mu = sigma.pow(sol.mu.1).mul_scalar(&sol.mu.0);
            let nu = sigma.pow(sol.nu.1).mul_scalar(&sol.nu.0);
            for cond in &locus.conditions {
                // conditions live in [lambda, mu, nu, sigma]
                let lifted = cond.map_coeffs(|c| Cyclotomic::from_rat(c.clone()));
                let mut value = Polynomial::<Cyclotomic>::zero(&sring);
                for (m, c) in lifted.terms() {
                    let mut t = Polynomial::constant(&sring, c.clone());
                    for (i, p) in [&lam, &mu, &nu, &sigma].iter().enumerate() {
                        for _ in 0..m.exponent(i) {
                            t = t.mul(p);
                        }
                    }
                    value = value.add(&t);
                }
                assert!(value.is_zero(), "branch {} violates a condition", sol.name);
            }
        }
    }

    #[test]
    fn trivial_branches_keep_a_single_point() {
        // the degenerate branches have a unique singular point; exact
        // classification shows an A3 point (mu = tau = 3, corank 1)
        let locus = three_node_locus();
        for sol in locus.solutions.iter().filter(|s| !s.three_nodes) {
            let base = sol.at(&Cyclotomic::from_int(3));
            let report = deformed_fiber_singularities(&base).unwrap();
            assert_eq!(report.points.len(), 1, "branch {}", sol.name);
            let r = report.points[0].report.as_ref().unwrap();
            assert_eq!(r.class, GermClass::NotNodeOther, "branch {}", sol.name);
            assert_eq!(r.milnor, crate::standard_basis::Dimension::Finite(3));
            assert_eq!(r.tyurina, crate::standard_basis::Dimension::Finite(3));
            assert_eq!(r.corank, 1);
        }
    }

    #[test]
    fn s_hyperplane_grid() {
        let c = |n: i64| Cyclotomic::from_int(n);
        // mu = nu = 3: two nodes at y = w = +-1
        let r = classify_s_deformation(&c(0), &c(3), &c(3)).unwrap();
        assert_eq!(r.class, SDeformationClass::NodeA1);
        assert_eq!(r.points.len(), 2);
        assert!(r.points.iter().all(|p| p.class == GermClass::NodeA1));
        // mu = nu = 0, lambda = 0: the cusp itself
        let r = classify_s_deformation(&c(0), &c(0), &c(0)).unwrap();
        assert_eq!(r.class, SDeformationClass::KodairaIIxII);
        assert_eq!(r.points.len(), 1);
        // mu = 3, nu = 0: I1xII
        let r = classify_s_deformation(&c(0), &c(3), &c(0)).unwrap();
        assert_eq!(r.class, SDeformationClass::KodairaI1xII);
    }

    #[test]
    fn factored_family_cases() {
        let c = |n: i64| Cyclotomic::from_int(n);
        // origin lies on pi: single cusp at the origin
        let origin = FactoredFamilyPoint::new(c(0), c(0), c(0));
        match factored_family_analysis(&origin).unwrap() {
            FactoredFamilyOutcome::OnPi { cusp } => {
                assert!(cusp.coordinates.iter().all(|v| v.is_zero()));
            }
            _ => panic!("origin must lie on pi"),
        }
        // spanning point of im p: three distinct nodes
        let span = FactoredFamilyPoint::new(Cyclotomic::omega(), c(1), Cyclotomic::omega2());
        match factored_family_analysis(&span).unwrap() {
            FactoredFamilyOutcome::OffPi { nodes } => assert_eq!(nodes.len(), 3),
            _ => panic!("(omega, 1, omega^2) is off pi"),
        }
        // (-omega, 1, 0) lies on pi
        let pi_pt = FactoredFamilyPoint::new(Cyclotomic::omega().neg(), c(1), c(0));
        assert!(pi_pt.on_pi());
        assert!(matches!(
            factored_family_analysis(&pi_pt).unwrap(),
            FactoredFamilyOutcome::OnPi { .. }
        ));
    }

    #[test]
    fn cubic_curve_map_lands_on_curve() {
        assert!(cubic_curve_map_image_identity());
        let a = FactoredFamilyPoint::new(Cyclotomic::omega(), Cyclotomic::from_int(1), Cyclotomic::omega2());
        let img = cubic_curve_map(&a);
        // s = omega + omega + omega = 3 omega, lambda = -27, sigma = -9 omega
        assert_eq!(img.lambda, Cyclotomic::from_int(-27));
        assert_eq!(img.sigma, Cyclotomic::omega().mul(&Cyclotomic::from_int(-9)));
        assert!(curve_membership(&img));
        // points of pi map to zero
        let p = FactoredFamilyPoint::new(Cyclotomic::omega().neg(), Cyclotomic::from_int(1), Cyclotomic::from_int(0));
        let img = cubic_curve_map(&p);
        assert!(img.lambda.is_zero() && img.sigma.is_zero());
    }

    #[test]
    fn lambda1_r2_is_a_perfect_cube() {
        // at Lambda_1 the cubic resultant degenerates to 3 sigma (y - sigma/6)^3
        let locus = three_node_locus();
        let l1 = &locus.solutions[1];
        assert_eq!(l1.name, "Lambda1");
        let sring = Ring::new(&["y", "sigma"]);
        let y = Polynomial::<Cyclotomic>::var(&sring, 0);
        let s = Polynomial::<Cyclotomic>::var(&sring, 1);
        let c = |q: Rat| Polynomial::constant(&sring, Cyclotomic::from_rat(q));
        let lam = s.pow(3).mul(&c(rat(-5, 108)));
        let mu = s.pow(2).mul(&c(rat(1, 4)));
        let nu = s.pow(2).mul(&c(rat(1, 4)));
        let three = c(rat_int(3));
        let r2 = s
            .mul(&y.pow(3))
            .mul(&three)
            .sub(&nu.mul(&y.pow(2)).mul(&c(rat_int(6))))
            .add(&mu.mul(&s).mul(&y))
            .add(&mu.mul(&nu).mul(&c(rat_int(2))))
            .add(&lam.mul(&s).mul(&three));
        let cube = y.sub(&s.mul(&c(rat(1, 6)))).pow(3).mul(&s).mul(&three);
        assert_eq!(r2, cube);
    }
}
