//! Pencils of plane cubics: the locus of singular members via chart-wise
//! Groebner elimination, and the singularity census of the fiber
//! self-product.

use num::complex::Complex64;

use crate::algebra::{
    mpoly_gcd, roots::complex_roots, roots::roots_in_cyclotomic, Cyclotomic, MonomialOrder,
    Polynomial, Rat, Ring, UPoly, Value,
};
use crate::error::{Error, Result};
use crate::germ::{classify_germ, fiber_product_germ, numeric, GermClass, Germ};
use crate::standard_basis::{groebner, Ideal};

use super::{BaseRoot, CensusEntry, SingularFiberCensus};

/// Pencil lambda1 a - lambda0 b of homogeneous cubics without common
/// factors; the affine base parameter is t = lambda0/lambda1, so the
/// fiber over t is a - t b.
#[derive(Clone, Debug)]
pub struct CubicPencil {
    a: Polynomial<Rat>,
    b: Polynomial<Rat>,
}

impl CubicPencil {
    pub fn new(a: Polynomial<Rat>, b: Polynomial<Rat>) -> Result<Self> {
        for (name, p) in [("a", &a), ("b", &b)] {
            if p.ring().n_vars() != 3 {
                return Err(Error::InconsistentInput(format!("{name} must be a ternary form")));
            }
            if !p.is_homogeneous() || p.total_degree() != Some(3) {
                return Err(Error::InconsistentInput(format!("{name} must be a homogeneous cubic")));
            }
        }
        if a.ring() != b.ring() {
            return Err(Error::RingMismatch(a.ring().describe(), b.ring().describe()));
        }
        let g = mpoly_gcd(&a, &b);
        if !g.is_constant() {
            return Err(Error::InconsistentInput(
                "the cubics share a factor; the base locus is not finite".into(),
            ));
        }
        Ok(CubicPencil { a, b })
    }

    pub fn a(&self) -> &Polynomial<Rat> {
        &self.a
    }

    pub fn b(&self) -> &Polynomial<Rat> {
        &self.b
    }
}

/// Root set of the singular-fiber locus. `flagged` marks roots whose
/// fiber-product germ is not a node.
#[derive(Clone, Debug)]
pub struct PencilDiscriminant {
    /// Squarefree eliminant whose roots are the affine singular values.
    pub eliminant: UPoly<Rat>,
    pub roots: Vec<BaseRoot>,
    pub flagged: Vec<BaseRoot>,
}

/// Chart data: which of the three projective fiber coordinates is set
/// to 1; the two remaining affine coordinates keep their ring order.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Chart {
    unit: usize,
}

impl Chart {
    fn affine_vars(&self) -> [usize; 2] {
        match self.unit {
            0 => [1, 2],
            1 => [0, 2],
            _ => [0, 1],
        }
    }
}

fn charts() -> [Chart; 3] {
    [Chart { unit: 2 }, Chart { unit: 1 }, Chart { unit: 0 }]
}

/// Homogeneous partials of a - t b, restricted to a chart, as
/// polynomials in (affine vars, t) over Q.
fn chart_partials(p: &CubicPencil, chart: Chart) -> (Ring, Vec<Polynomial<Rat>>) {
    let [u, v] = chart.affine_vars();
    let src = p.a.ring().clone();
    let names = [
        src.var_name(u).to_string(),
        src.var_name(v).to_string(),
        "t".to_string(),
    ];
    let ring = Ring::new(&names);
    let one = Polynomial::<Rat>::one(&ring);
    let to_chart = |q: &Polynomial<Rat>| -> Polynomial<Rat> {
        let mut out = Polynomial::zero(&ring);
        for (m, c) in q.terms() {
            let mut term = Polynomial::constant(&ring, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let factor = if i == u {
                    Polynomial::var(&ring, 0)
                } else if i == v {
                    Polynomial::var(&ring, 1)
                } else {
                    one.clone()
                };
                term = term.mul(&factor.pow(e));
            }
            out = out.add(&term);
        }
        out
    };
    let t = Polynomial::<Rat>::var(&ring, 2);
    let eqs = (0..3)
        .map(|i| {
            let da = to_chart(&p.a.partial_derivative_idx(i));
            let db = to_chart(&p.b.partial_derivative_idx(i));
            da.sub(&t.mul(&db))
        })
        .collect();
    (ring, eqs)
}

/// Eliminant of one chart: the generator of (partials) intersect Q[t],
/// from a lex basis with the fiber variables first.
fn chart_eliminant(p: &CubicPencil, chart: Chart) -> Result<UPoly<Rat>> {
    let (ring, eqs) = chart_partials(p, chart);
    let ideal = Ideal::new(eqs)?;
    let basis = groebner(&ideal, &MonomialOrder::lex())?;
    let mut best: Option<UPoly<Rat>> = None;
    for e in &basis.elements {
        if e.degree_in(0).unwrap_or(0) == 0 && e.degree_in(1).unwrap_or(0) == 0 {
            let u = UPoly::from_poly(e, 2)?;
            best = match best {
                None => Some(u),
                Some(b) => {
                    if u.degree() < b.degree() {
                        Some(u)
                    } else {
                        Some(b)
                    }
                }
            };
        }
    }
    let _ = ring;
    match best {
        Some(u) => Ok(u),
        None => Err(Error::EliminationFailed(
            "every member of the pencil is singular in this chart".into(),
        )),
    }
}

fn univariate_lcm(a: &UPoly<Rat>, b: &UPoly<Rat>) -> UPoly<Rat> {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    let g = a.gcd(b);
    a.divrem(&g).unwrap().0.mul(b).monic()
}

/// Squarefree union of the chart eliminants; the singular values of the
/// affine base parameter.
pub fn singular_value_eliminant(p: &CubicPencil) -> Result<UPoly<Rat>> {
    let mut acc = UPoly::one();
    for chart in charts() {
        let d = chart_eliminant(p, chart)?;
        acc = univariate_lcm(&acc, &d);
    }
    Ok(acc.squarefree_part())
}

/// Does the fiber at infinity (the cubic b itself) have a singular point?
fn infinity_fiber_singular(p: &CubicPencil) -> Result<bool> {
    // b is singular iff its three partials have a common projective zero
    for chart in charts() {
        let [u, v] = chart.affine_vars();
        let src = p.b.ring().clone();
        let ring = Ring::new(&[src.var_name(u), src.var_name(v)]);
        let eqs: Vec<Polynomial<Rat>> = (0..3)
            .map(|i| {
                let d = p.b.partial_derivative_idx(i);
                let mut out = Polynomial::zero(&ring);
                for (m, c) in d.terms() {
                    let mut term = Polynomial::constant(&ring, c.clone());
                    for (j, &e) in m.0.iter().enumerate() {
                        if e == 0 {
                            continue;
                        }
                        if j == u {
                            term = term.mul(&Polynomial::var(&ring, 0).pow(e));
                        } else if j == v {
                            term = term.mul(&Polynomial::var(&ring, 1).pow(e));
                        }
                    }
                    out = out.add(&term);
                }
                out
            })
            .collect();
        if eqs.iter().all(|e| e.is_zero()) {
            return Ok(true);
        }
        let ideal = Ideal::new(eqs.clone());
        if let Ok(ideal) = ideal {
            let basis = groebner(&ideal, &MonomialOrder::degrevlex())?;
            // solutions exist iff the basis is not the unit ideal
            if !basis.elements.iter().any(|e| e.is_constant()) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// Singular points of the fiber over an exact parameter value, found
/// per chart in exact coordinates where the tower admits them.
fn fiber_singular_points_exact(
    p: &CubicPencil,
    chart: Chart,
    t0: &Cyclotomic,
) -> Result<Vec<(Value<Cyclotomic>, Value<Cyclotomic>)>> {
    let (_, eqs) = chart_partials(p, chart);
    let at: Vec<Polynomial<Cyclotomic>> = eqs
        .iter()
        .map(|e| {
            let lifted = e.map_coeffs(|c| Cyclotomic::from_rat(c.clone()));
            lifted.substitute(2, &Polynomial::constant(lifted.ring(), t0.clone()))
        })
        .collect();
    // drop the t variable (now unused)
    let two_ring = Ring::new(&["u", "v"]);
    let at: Vec<Polynomial<Cyclotomic>> = at
        .iter()
        .map(|e| e.drop_var(2).map(|q| q.lift_to(&two_ring, &[0, 1])))
        .collect::<Result<_>>()?;
    solve_two_var_system(&two_ring, &at)
}

/// Common zeros of a small system in two variables over Q(omega):
/// resultant elimination, exact roots where possible, with exact
/// residual filtering.
fn solve_two_var_system(
    ring: &Ring,
    eqs: &[Polynomial<Cyclotomic>],
) -> Result<Vec<(Value<Cyclotomic>, Value<Cyclotomic>)>> {
    let nonzero: Vec<&Polynomial<Cyclotomic>> = eqs.iter().filter(|e| !e.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::EliminationFailed("system vanishes identically".into()));
    }
    // eliminate variable 0 from some pair with positive degree
    let mut elim: Option<Polynomial<Cyclotomic>> = None;
    for i in 0..nonzero.len() {
        for j in i + 1..nonzero.len() {
            let (f, g) = (nonzero[i], nonzero[j]);
            if f.degree_in(0).unwrap_or(0) > 0 && g.degree_in(0).unwrap_or(0) > 0 {
                let r = crate::algebra::resultant(f, g, ring.var_name(0))?;
                if !r.is_zero() {
                    elim = Some(r);
                    break;
                }
            }
        }
        if elim.is_some() {
            break;
        }
    }
    let vcands: Vec<Value<Cyclotomic>> = match (&elim, nonzero.iter().find(|e| e.degree_in(0).unwrap_or(0) == 0 && e.degree_in(1).unwrap_or(0) > 0)) {
        (Some(r), _) => {
            let u = UPoly::from_poly(r, 1)?;
            roots_in_cyclotomic(&u.squarefree_part())
        }
        (None, Some(only_v)) => {
            let u = UPoly::from_poly(only_v, 1)?;
            roots_in_cyclotomic(&u.squarefree_part())
        }
        (None, None) => {
            return Err(Error::EliminationFailed("cannot isolate the second variable".into()))
        }
    };
    let mut out = Vec::new();
    for vv in vcands {
        match &vv {
            Value::Exact(v0) => {
                // substitute and take the gcd over the first variable
                let mut g: Option<UPoly<Cyclotomic>> = None;
                let mut all_zero = true;
                for e in &nonzero {
                    let sub = e.substitute(1, &Polynomial::constant(ring, v0.clone()));
                    if sub.is_zero() {
                        continue;
                    }
                    all_zero = false;
                    let u = UPoly::from_poly(&sub.drop_var(1)?.lift_to(&Ring::new(&["u"]), &[0]), 0)?;
                    g = Some(match g {
                        None => u,
                        Some(prev) => prev.gcd(&u),
                    });
                }
                if all_zero {
                    return Err(Error::EliminationFailed("positive-dimensional fiber singular locus".into()));
                }
                match g {
                    None => {}
                    Some(g) => {
                        if g.degree().is_none() {
                            return Err(Error::EliminationFailed(
                                "positive-dimensional fiber singular locus".into(),
                            ));
                        }
                        for uu in roots_in_cyclotomic(&g.squarefree_part()) {
                            // exact residual filter when both parts exact
                            if let (Value::Exact(u0), Value::Exact(v0)) = (&uu, &vv) {
                                let pt = vec![u0.clone(), v0.clone()];
                                if nonzero.iter().all(|e| e.eval(&pt).unwrap().is_zero()) {
                                    out.push((uu.clone(), vv.clone()));
                                }
                            } else {
                                let pt = [uu.to_complex().unwrap(), vv.to_complex().unwrap()];
                                let worst = nonzero
                                    .iter()
                                    .map(|e| e.eval_complex(&pt).unwrap().norm())
                                    .fold(0.0f64, f64::max);
                                if worst < numeric::RESIDUAL_TOL {
                                    out.push((uu.clone(), vv.clone()));
                                }
                            }
                        }
                    }
                }
            }
            Value::Numeric(v0) => {
                // numeric back-substitution with residual filtering
                let mut candidates: Vec<Complex64> = Vec::new();
                for e in &nonzero {
                    if e.degree_in(0).unwrap_or(0) == 0 {
                        continue;
                    }
                    let coeffs: Vec<Complex64> = e
                        .coeffs_in_var(0)
                        .iter()
                        .map(|c| {
                            c.eval_complex(&[Complex64::new(0.0, 0.0), *v0]).unwrap()
                        })
                        .collect();
                    candidates.extend(complex_roots(&coeffs));
                }
                for u0 in candidates {
                    let pt = [u0, *v0];
                    let worst = nonzero
                        .iter()
                        .map(|e| e.eval_complex(&pt).unwrap().norm())
                        .fold(0.0f64, f64::max);
                    if worst < 1e-7 {
                        // polish on the full system
                        let polished = numeric::newton_polish(
                            &nonzero.iter().map(|&e| e.clone()).collect::<Vec<_>>(),
                            &pt,
                            40,
                        );
                        if let Some(q) = polished {
                            let dup = out.iter().any(|(a, b): &(Value<Cyclotomic>, Value<Cyclotomic>)| {
                                let az = a.to_complex().unwrap();
                                let bz = b.to_complex().unwrap();
                                (az - q[0]).norm() < 1e-7 && (bz - q[1]).norm() < 1e-7
                            });
                            if !dup {
                                out.push((Value::Numeric(q[0]), Value::Numeric(q[1])));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Singular points of the fiber over a numeric parameter value.
fn fiber_singular_points_numeric(
    p: &CubicPencil,
    chart: Chart,
    t0: Complex64,
) -> Result<Vec<(Complex64, Complex64)>> {
    let (_, eqs) = chart_partials(p, chart);
    let lifted: Vec<Polynomial<Cyclotomic>> =
        eqs.iter().map(|e| e.map_coeffs(|c| Cyclotomic::from_rat(c.clone()))).collect();
    // eliminate u via an interpolated numeric resultant of two partials
    let f = &lifted[0];
    let g = &lifted[1];
    let h = &lifted[2];
    let sylvester_det_at = |y: Complex64| -> Complex64 {
        let fe: Vec<Complex64> = f
            .coeffs_in_var(0)
            .iter()
            .map(|c| c.eval_complex(&[Complex64::new(0.0, 0.0), y, t0]).unwrap())
            .collect();
        let ge: Vec<Complex64> = g
            .coeffs_in_var(0)
            .iter()
            .map(|c| c.eval_complex(&[Complex64::new(0.0, 0.0), y, t0]).unwrap())
            .collect();
        numeric_resultant(&fe, &ge)
    };
    // Res has degree at most 4 for two conics; sample and interpolate
    let samples: Vec<(Complex64, Complex64)> = (0..=8)
        .map(|k| {
            let y = Complex64::new(0.37 + k as f64 * 0.51, 0.11 - k as f64 * 0.23);
            (y, sylvester_det_at(y))
        })
        .collect();
    let res_poly = interpolate(&samples);
    let ycands = complex_roots(&res_poly);
    let mut out: Vec<(Complex64, Complex64)> = Vec::new();
    for y0 in ycands {
        // u candidates: roots of each partial specialized at (.., y0, t0)
        let mut ucands = Vec::new();
        for e in [f, g, h] {
            if e.degree_in(0).unwrap_or(0) == 0 {
                continue;
            }
            let coeffs: Vec<Complex64> = e
                .coeffs_in_var(0)
                .iter()
                .map(|c| c.eval_complex(&[Complex64::new(0.0, 0.0), y0, t0]).unwrap())
                .collect();
            ucands.extend(complex_roots(&coeffs));
        }
        for u0 in ucands {
            let pt = [u0, y0, t0];
            let worst = [f, g, h]
                .iter()
                .map(|e| e.eval_complex(&pt).unwrap().norm())
                .fold(0.0f64, f64::max);
            if worst < 1e-6 {
                // polish in (u, v) with t fixed: substitute numerically
                let mut refined = (u0, y0);
                for _ in 0..50 {
                    let (u, v) = refined;
                    let fv = f.eval_complex(&[u, v, t0]).unwrap();
                    let gv = g.eval_complex(&[u, v, t0]).unwrap();
                    let j00 = f.partial_derivative_idx(0).eval_complex(&[u, v, t0]).unwrap();
                    let j01 = f.partial_derivative_idx(1).eval_complex(&[u, v, t0]).unwrap();
                    let j10 = g.partial_derivative_idx(0).eval_complex(&[u, v, t0]).unwrap();
                    let j11 = g.partial_derivative_idx(1).eval_complex(&[u, v, t0]).unwrap();
                    let det = j00 * j11 - j01 * j10;
                    if det.norm() < 1e-14 {
                        break;
                    }
                    let du = (fv * j11 - gv * j01) / det;
                    let dv = (j00 * gv - j10 * fv) / det;
                    refined = (u - du, v - dv);
                    if du.norm() + dv.norm() < 1e-15 {
                        break;
                    }
                }
                let (u, v) = refined;
                let worst = [f, g, h]
                    .iter()
                    .map(|e| e.eval_complex(&[u, v, t0]).unwrap().norm())
                    .fold(0.0f64, f64::max);
                if worst < numeric::RESIDUAL_TOL
                    && !out.iter().any(|(a, b)| (a - u).norm() < 1e-7 && (b - v).norm() < 1e-7)
                {
                    out.push((u, v));
                }
            }
        }
    }
    Ok(out)
}

/// Determinant of the Sylvester matrix of two complex univariate
/// coefficient lists (low to high).
fn numeric_resultant(f: &[Complex64], g: &[Complex64]) -> Complex64 {
    let mut fc = f.to_vec();
    let mut gc = g.to_vec();
    while fc.last().is_some_and(|c| c.norm() < 1e-250) {
        fc.pop();
    }
    while gc.last().is_some_and(|c| c.norm() < 1e-250) {
        gc.pop();
    }
    if fc.len() <= 1 || gc.len() <= 1 {
        return Complex64::new(0.0, 0.0);
    }
    let (df, dg) = (fc.len() - 1, gc.len() - 1);
    let n = df + dg;
    let mut m = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for row in 0..dg {
        for (k, c) in fc.iter().rev().enumerate() {
            m[row][row + k] = *c;
        }
    }
    for row in 0..df {
        for (k, c) in gc.iter().rev().enumerate() {
            m[dg + row][row + k] = *c;
        }
    }
    // LU determinant
    let mut det = Complex64::new(1.0, 0.0);
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| m[i][k].norm().partial_cmp(&m[j][k].norm()).unwrap()).unwrap();
        if m[piv][k].norm() < 1e-250 {
            return Complex64::new(0.0, 0.0);
        }
        if piv != k {
            m.swap(k, piv);
            det = -det;
        }
        det *= m[k][k];
        for i in k + 1..n {
            let fct = m[i][k] / m[k][k];
            for j in k..n {
                let mkj = m[k][j];
                m[i][j] -= fct * mkj;
            }
        }
    }
    det
}

/// Newton-form interpolation through sample points, returned low to high.
fn interpolate(samples: &[(Complex64, Complex64)]) -> Vec<Complex64> {
    let n = samples.len();
    let xs: Vec<Complex64> = samples.iter().map(|s| s.0).collect();
    let mut divided: Vec<Complex64> = samples.iter().map(|s| s.1).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            divided[i] = (divided[i] - divided[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // expand the Newton form
    let mut coeffs = vec![Complex64::new(0.0, 0.0); n];
    let mut basis = vec![Complex64::new(1.0, 0.0)];
    for (i, d) in divided.iter().enumerate() {
        for (k, b) in basis.iter().enumerate() {
            coeffs[k] += d * b;
        }
        // basis *= (x - xs[i])
        let mut next = vec![Complex64::new(0.0, 0.0); basis.len() + 1];
        for (k, b) in basis.iter().enumerate() {
            next[k] -= b * xs[i];
            next[k + 1] += b;
        }
        basis = next;
    }
    coeffs
}

/// One singular value with its fiber points (possibly several points on
/// one fiber; each diagonal pair feeds a census entry).
fn census_entries_at_root(
    p: &CubicPencil,
    root: &Value<Cyclotomic>,
) -> Result<Vec<CensusEntry>> {
    let mut seen: Vec<[Complex64; 3]> = Vec::new();
    let mut entries = Vec::new();
    for chart in charts() {
        let points: Vec<(Value<Cyclotomic>, Value<Cyclotomic>)> = match root {
            Value::Exact(t0) => fiber_singular_points_exact(p, chart, t0)?,
            Value::Numeric(t0) => fiber_singular_points_numeric(p, chart, *t0)?
                .into_iter()
                .map(|(u, v)| (Value::Numeric(u), Value::Numeric(v)))
                .collect(),
        };
        for (u, v) in points {
            // projective dedupe across charts
            let [iu, iv] = chart.affine_vars();
            let mut proj = [Complex64::new(0.0, 0.0); 3];
            proj[chart.unit] = Complex64::new(1.0, 0.0);
            proj[iu] = u.to_complex().unwrap();
            proj[iv] = v.to_complex().unwrap();
            let norm = proj.iter().map(|z| z.norm()).fold(0.0f64, f64::max);
            let scaled: [Complex64; 3] = {
                let lead = proj.iter().find(|z| z.norm() > 0.5 * norm).unwrap();
                [proj[0] / lead, proj[1] / lead, proj[2] / lead]
            };
            if seen.iter().any(|s| {
                s.iter().zip(&scaled).map(|(a, b)| (a - b).norm()).fold(0.0f64, f64::max) < 1e-7
            }) {
                continue;
            }
            seen.push(scaled);
            entries.push(classify_pencil_point(p, chart, root, &u, &v)?);
        }
    }
    Ok(entries)
}

/// Local fiber-product equations of the pencil in a chart, as
/// polynomials in (X, Y, U, V, t), translated so the given singular
/// point (and parameter value) sit at the origin.
pub fn pencil_local_equations(
    p: &CubicPencil,
    chart_unit: usize,
    t0: &Cyclotomic,
    u0: &Cyclotomic,
    v0: &Cyclotomic,
) -> Result<(Polynomial<Cyclotomic>, Polynomial<Cyclotomic>)> {
    let chart = Chart { unit: chart_unit };
    let [iu, iv] = chart.affine_vars();
    let ring = Ring::new(&["X", "Y", "U", "V", "t"]);
    let build = |x_idx: usize, y_idx: usize| -> Result<Polynomial<Cyclotomic>> {
        let x = Polynomial::<Cyclotomic>::var(&ring, x_idx)
            .add(&Polynomial::constant(&ring, u0.clone()));
        let y = Polynomial::<Cyclotomic>::var(&ring, y_idx)
            .add(&Polynomial::constant(&ring, v0.clone()));
        let t = Polynomial::<Cyclotomic>::var(&ring, 4).add(&Polynomial::constant(&ring, t0.clone()));
        let lift = |q: &Polynomial<Rat>| -> Polynomial<Cyclotomic> {
            let mut out = Polynomial::zero(&ring);
            for (m, c) in q.terms() {
                let mut term = Polynomial::constant(&ring, Cyclotomic::from_rat(c.clone()));
                for (i, &e) in m.0.iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    let factor = if i == iu {
                        x.clone()
                    } else if i == iv {
                        y.clone()
                    } else {
                        Polynomial::one(&ring)
                    };
                    term = term.mul(&factor.pow(e));
                }
                out = out.add(&term);
            }
            out
        };
        Ok(lift(&p.a).sub(&t.mul(&lift(&p.b))))
    };
    Ok((build(0, 1)?, build(2, 3)?))
}

fn classify_pencil_point(
    p: &CubicPencil,
    chart: Chart,
    root: &Value<Cyclotomic>,
    u: &Value<Cyclotomic>,
    v: &Value<Cyclotomic>,
) -> Result<CensusEntry> {
    let coordinates = vec![u.clone(), v.clone(), u.clone(), v.clone()];
    if let (Value::Exact(t0), Value::Exact(u0), Value::Exact(v0)) = (root, u, v) {
        let (f1, f2) = pencil_local_equations(p, chart.unit, t0, u0, v0)?;
        let germ = fiber_product_germ(&f1, &f2, "t")?;
        let report = classify_germ(&germ)?;
        return Ok(CensusEntry {
            root: BaseRoot::Affine(root.clone()),
            multiplicity: 1,
            class: report.class,
            coordinates,
            numerically_verified: false,
        });
    }
    // numeric path: Hessian rank of the chart resultant at the point
    let t0 = root.to_complex().unwrap();
    let (f1, f2) = pencil_local_equations(
        p,
        chart.unit,
        &Cyclotomic::zero(),
        &Cyclotomic::zero(),
        &Cyclotomic::zero(),
    )?;
    // untranslated equations are linear in t: R = a1 b2 - a2 b1 evaluated
    // after translating numerically
    let a1 = f1.coeffs_in_var(4);
    let b2 = f2.coeffs_in_var(4);
    let rpoly = a1[0].mul(&b2[1].neg()).sub(&b2[0].mul(&a1[1].neg()));
    // R does not involve t; evaluate its Hessian at the numeric point
    let zu = u.to_complex().unwrap();
    let zv = v.to_complex().unwrap();
    let pt = [zu, zv, zu, zv, t0];
    let hess: Vec<Vec<Complex64>> = (0..4)
        .map(|i| {
            (0..4)
                .map(|j| {
                    rpoly
                        .partial_derivative_idx(i)
                        .partial_derivative_idx(j)
                        .eval_complex(&pt)
                        .unwrap()
                })
                .collect()
        })
        .collect();
    let rank = numeric::numeric_rank(&hess);
    let class = if rank == 4 { GermClass::NodeA1 } else { GermClass::NotNodeOther };
    Ok(CensusEntry {
        root: BaseRoot::Affine(root.clone()),
        multiplicity: 1,
        class,
        coordinates,
        numerically_verified: true,
    })
}

/// Full census of the pencil fiber self-product.
pub fn pencil_fiber_product_census(p: &CubicPencil) -> Result<SingularFiberCensus> {
    let eliminant = singular_value_eliminant(p)?;
    let mut entries = Vec::new();
    let lifted = UPoly::new(
        eliminant.0.iter().map(|c| Cyclotomic::from_rat(c.clone())).collect(),
    );
    for root in roots_in_cyclotomic(&lifted) {
        entries.extend(census_entries_at_root(p, &root)?);
    }
    if infinity_fiber_singular(p)? {
        entries.push(CensusEntry {
            root: BaseRoot::Infinity,
            multiplicity: 1,
            class: GermClass::NotNodeOther,
            coordinates: Vec::new(),
            numerically_verified: true,
        });
    }
    let total_multiplicity = entries.len();
    Ok(SingularFiberCensus { entries, genericity: true, total_multiplicity })
}

/// Root set of the singular-member locus with non-nodal roots flagged.
pub fn pencil_discriminant(p: &CubicPencil) -> Result<PencilDiscriminant> {
    let eliminant = singular_value_eliminant(p)?;
    let census = pencil_fiber_product_census(p)?;
    let mut roots = Vec::new();
    let mut flagged = Vec::new();
    let mut seen: Vec<BaseRoot> = Vec::new();
    for e in &census.entries {
        if !seen.contains(&e.root) {
            seen.push(e.root.clone());
            roots.push(e.root.clone());
        }
        if e.class != GermClass::NodeA1 && !flagged.contains(&e.root) {
            flagged.push(e.root.clone());
        }
    }
    Ok(PencilDiscriminant { eliminant, roots, flagged })
}

/// Exact fiber-product germ at an exact census entry, for tangent-cone
/// inspection.
pub fn pencil_entry_germ(p: &CubicPencil, entry: &CensusEntry) -> Result<Germ<Cyclotomic>> {
    let BaseRoot::Affine(Value::Exact(t0)) = &entry.root else {
        return Err(Error::Invariant("entry root is not exact".into()));
    };
    let (Some(u0), Some(v0)) = (entry.coordinates[0].exact(), entry.coordinates[1].exact()) else {
        return Err(Error::Invariant("entry coordinates are not exact".into()));
    };
    // the chart is recoverable: entries are produced in chart order and
    // carry affine coordinates; reclassify in the z-chart first
    for unit in [2usize, 1, 0] {
        let (f1, f2) = pencil_local_equations(p, unit, t0, u0, v0)?;
        let zero = vec![Cyclotomic::zero(); 5];
        if f1.eval(&zero)?.is_zero() && f2.eval(&zero)?.is_zero() {
            if let Ok(germ) = fiber_product_germ(&f1, &f2, "t") {
                let report = classify_germ(&germ)?;
                if report.class == entry.class {
                    return Ok(germ);
                }
            }
        }
    }
    Err(Error::Invariant("no chart reproduces the entry class".into()))
}
