//! Groebner bases for global orders (Buchberger) and standard bases for
//! local orders (Mora's tangent cone algorithm), with zero-dimensional
//! quotient dimensions and monomial-basis extraction.

use std::cmp::Ordering;

use crate::algebra::{Field, Monomial, MonomialOrder, Polynomial, Ring};
use crate::error::{Error, Result};

/// Ideal given by a non-empty list of nonzero generators in one ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal<F: Field> {
    pub ring: Ring,
    pub generators: Vec<Polynomial<F>>,
}

impl<F: Field> Ideal<F> {
    pub fn new(generators: Vec<Polynomial<F>>) -> Result<Self> {
        let nonzero: Vec<_> = generators.into_iter().filter(|g| !g.is_zero()).collect();
        let ring = nonzero
            .first()
            .map(|g| g.ring().clone())
            .ok_or_else(|| Error::Invariant("ideal needs at least one nonzero generator".into()))?;
        for g in &nonzero {
            if g.ring() != &ring {
                return Err(Error::RingMismatch(ring.describe(), g.ring().describe()));
            }
        }
        Ok(Ideal { ring, generators: nonzero })
    }

    /// The jacobian ideal of f, generated by all partial derivatives.
    pub fn jacobian(f: &Polynomial<F>) -> Result<Self> {
        Self::new(f.gradient())
    }

    pub fn with_extra(&self, extra: &[Polynomial<F>]) -> Result<Self> {
        let mut gens = self.generators.clone();
        gens.extend(extra.iter().cloned());
        Self::new(gens)
    }
}

/// Computed basis together with its order and leading monomials.
#[derive(Clone, Debug)]
pub struct StandardBasis<F: Field> {
    pub ideal: Ideal<F>,
    pub order: MonomialOrder,
    pub elements: Vec<Polynomial<F>>,
    pub leading_monomials: Vec<Monomial>,
}

/// Dimension of a quotient vector space.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dimension {
    Finite(u64),
    Infinite,
}

impl Dimension {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Dimension::Finite(n) => Some(*n),
            Dimension::Infinite => None,
        }
    }
}

impl std::fmt::Display for Dimension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dimension::Finite(n) => write!(f, "{n}"),
            Dimension::Infinite => write!(f, "infinite"),
        }
    }
}

/// Monomials spanning a zero-dimensional quotient, sorted by total degree
/// then by earlier-variable precedence.
#[derive(Clone, Debug, PartialEq)]
pub struct QuotientBasis {
    pub monomials: Vec<Monomial>,
    pub dimension: Dimension,
}

impl QuotientBasis {
    pub fn display(&self, ring: &Ring) -> String {
        match self.dimension {
            Dimension::Infinite => "infinite".to_string(),
            Dimension::Finite(_) => {
                let parts: Vec<String> = self.monomials.iter().map(|m| m.display(ring)).collect();
                format!("{{{}}}", parts.join(", "))
            }
        }
    }
}

fn spoly<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, order: &MonomialOrder) -> Polynomial<F> {
    let (mf, cf) = f.leading_term(order).expect("nonzero f");
    let (mg, cg) = g.leading_term(order).expect("nonzero g");
    let l = mf.lcm(mg);
    let tf = l.try_div(mf).unwrap();
    let tg = l.try_div(mg).unwrap();
    let a = f.mul_term(&tf, &cf.inv().unwrap());
    let b = g.mul_term(&tg, &cg.inv().unwrap());
    a.sub(&b)
}

/// Full reduction (head and tail) for a global order. With `canonical`
/// false the result is only meaningful up to a nonzero scalar and may be
/// renormalized along the way to keep coefficients small.
fn reduce_global<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: &MonomialOrder,
    canonical: bool,
) -> Polynomial<F> {
    let ring = f.ring().clone();
    let lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(order).unwrap()).collect();
    let mut rem = Polynomial::zero(&ring);
    let mut p = f.clone();
    let mut steps = 0usize;
    'outer: while !p.is_zero() {
        steps += 1;
        if !canonical && steps % 16 == 0 && rem.is_zero() {
            p = p.content_normalized();
        }
        let (pm, pc) = {
            let (m, c) = p.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        for (g, gm) in basis.iter().zip(&lms) {
            if let Some(t) = pm.try_div(gm) {
                let gc = g.coeff(gm);
                let factor = pc.mul(&gc.inv().unwrap());
                p = p.sub(&g.mul_term(&t, &factor));
                continue 'outer;
            }
        }
        // move leading term into the remainder
        rem = rem.add(&Polynomial::monomial(&ring, pm.clone(), pc.clone()));
        p = p.sub(&Polynomial::monomial(&ring, pm, pc));
    }
    rem
}

/// Mora weak normal form for local orders. The reducer set may
/// temporarily grow by intermediate results.
fn reduce_mora<F: Field>(
    f: &Polynomial<F>,
    basis: &[Polynomial<F>],
    order: &MonomialOrder,
) -> Polynomial<F> {
    // reducer set with cached (leading monomial, ecart)
    let mut t: Vec<(Polynomial<F>, Monomial, u32)> = basis
        .iter()
        .map(|g| {
            let lm = g.leading_monomial(order).unwrap();
            let e = g.total_degree().unwrap() - lm.degree();
            (g.clone(), lm, e)
        })
        .collect();
    let mut h = f.clone();
    loop {
        if h.is_zero() {
            return h;
        }
        let (hm, hc) = {
            let (m, c) = h.leading_term(order).unwrap();
            (m.clone(), c.clone())
        };
        let mut best: Option<(usize, u32)> = None;
        for (i, (_, gm, ge)) in t.iter().enumerate() {
            if gm.divides(&hm) {
                if best.map_or(true, |(_, be)| *ge < be) {
                    best = Some((i, *ge));
                }
            }
        }
        let (gi, ge) = match best {
            None => return h,
            Some(b) => b,
        };
        let h_ecart = h.total_degree().unwrap() - hm.degree();
        if ge > h_ecart {
            t.push((h.clone(), hm.clone(), h_ecart));
        }
        let (g, gm, _) = &t[gi];
        let gc = g.coeff(gm);
        let factor = hc.mul(&gc.inv().unwrap());
        let shift = hm.try_div(gm).unwrap();
        h = h.sub(&g.mul_term(&shift, &factor));
        h = h.content_normalized();
    }
}

static COUNT: std::sync::atomic::AtomicU64 = std::sync::atomic::AtomicU64::new(0);

fn completion<F: Field>(ideal: &Ideal<F>, order: &MonomialOrder, local: bool) -> Vec<Polynomial<F>> {
    let ring = &ideal.ring;
    let mut basis: Vec<Polynomial<F>> =
        ideal.generators.iter().map(|g| g.content_normalized().monic(order)).collect();
    basis.sort_by(|a, b| order.cmp(&b.leading_monomial(order).unwrap(), &a.leading_monomial(order).unwrap()));
    basis.dedup();
    let mut lms: Vec<Monomial> = basis.iter().map(|g| g.leading_monomial(order).unwrap()).collect();
    // pair queue entries: (i, j, lcm, sugar)
    let mut pairs: Vec<(usize, usize, Monomial, u32)> = Vec::new();
    let add_pairs = |pairs: &mut Vec<(usize, usize, Monomial, u32)>,
                     basis: &[Polynomial<F>],
                     lms: &[Monomial],
                     k: usize| {
        for i in 0..k {
            let l = lms[i].lcm(&lms[k]);
            // product criterion: coprime leading monomials reduce to zero
            if l == lms[i].mul(&lms[k]) {
                continue;
            }
            let sugar = basis[i].total_degree().unwrap().max(basis[k].total_degree().unwrap()).max(l.degree());
            pairs.push((i, k, l, sugar));
        }
    };
    for k in 0..basis.len() {
        add_pairs(&mut pairs, &basis, &lms, k);
    }
    while !pairs.is_empty() {
        // normal selection: minimal sugar, tie-break by order on the lcm
        let mut sel = 0;
        for i in 1..pairs.len() {
            let better = match pairs[i].3.cmp(&pairs[sel].3) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => order.cmp(&pairs[i].2, &pairs[sel].2) == Ordering::Less,
            };
            if better {
                sel = i;
            }
        }
        let (i, j, l, _) = pairs.swap_remove(sel);
        // chain criterion: some k with lm_k | lcm and both companion pairs
        // no longer pending
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && lms[k].divides(&l)
                && !pairs.iter().any(|&(a, b, _, _)| (a, b) == (i.min(k), i.max(k)) || (a, b) == (j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let s = spoly(&basis[i], &basis[j], order);
        if s.is_zero() {
            continue;
        }
        let red = if local {
            reduce_mora(&s, &basis, order)
        } else {
            reduce_global(&s, &basis, order, false)
        };
        if std::env::var("CUSPCALC_TRACE").is_ok() {
            COUNT.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
            let c = COUNT.load(std::sync::atomic::Ordering::Relaxed);
            if c % 25 == 0 {
                eprintln!("spair #{c}: sugar {} basis {} pending {} red_terms {}", l.degree(), basis.len(), pairs.len(), red.n_terms());
            }
        }
        if red.is_zero() {
            continue;
        }
        basis.push(red.content_normalized());
        lms.push(basis.last().unwrap().leading_monomial(order).unwrap());
        let k = basis.len() - 1;
        add_pairs(&mut pairs, &basis, &lms, k);
    }
    // minimalize: drop elements whose leading monomial is divisible by another's
    let mut keep = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        for j in 0..basis.len() {
            if i != j && keep[j] && lms[j].divides(&lms[i]) {
                if lms[i] == lms[j] && i < j {
                    continue;
                }
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial<F>> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(b, k)| if k { Some(b) } else { None })
        .collect();
    if !local {
        // tail-reduce for a reduced Groebner basis
        let snapshot = minimal.clone();
        for (i, b) in minimal.iter_mut().enumerate() {
            let others: Vec<Polynomial<F>> =
                snapshot.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
            if !others.is_empty() {
                *b = reduce_global(b, &others, order, true).monic(order);
            }
        }
        minimal.retain(|p| !p.is_zero());
        for b in minimal.iter_mut() {
            *b = b.monic(order);
        }
    }
    // deterministic output order: by leading monomial ascending
    minimal.sort_by(|a, b| {
        order.cmp(&a.leading_monomial(order).unwrap(), &b.leading_monomial(order).unwrap())
    });
    let _ = ring;
    minimal
}

/// Reduced Groebner basis for a global order.
pub fn groebner<F: Field>(ideal: &Ideal<F>, order: &MonomialOrder) -> Result<StandardBasis<F>> {
    if !order.is_global() {
        return Err(Error::LocalOrderRejected);
    }
    let elements = completion(ideal, order, false);
    let leading_monomials = elements.iter().map(|e| e.leading_monomial(order).unwrap()).collect();
    Ok(StandardBasis { ideal: ideal.clone(), order: order.clone(), elements, leading_monomials })
}

/// Standard basis for the local order, valid for the localization at the
/// origin. Computed by Lazard homogenization: homogenize the generators,
/// run Buchberger under the homogenized (global) order, dehomogenize and
/// minimalize. Mora weak normal form is kept for membership queries.
/// Elements are minimal (no leading monomial divides another) but not
/// tail-reduced.
pub fn mora<F: Field>(ideal: &Ideal<F>, order: &MonomialOrder) -> Result<StandardBasis<F>> {
    if order.is_global() {
        return Err(Error::GlobalOrderRejected);
    }
    let ring = &ideal.ring;
    let n = ring.n_vars();
    // fresh homogenizing variable, appended last
    let mut names: Vec<String> = ring.var_names().to_vec();
    let mut hname = "_h".to_string();
    while names.contains(&hname) {
        hname.push('_');
    }
    names.push(hname);
    let ring_h = Ring::new(&names);
    let lift_map: Vec<usize> = (0..n).collect();
    let homogenize = |g: &Polynomial<F>| -> Polynomial<F> {
        let lifted = g.lift_to(&ring_h, &lift_map);
        let top = g.total_degree().unwrap_or(0);
        Polynomial::from_terms(
            &ring_h,
            lifted.terms().map(|(m, c)| {
                let mut e = m.0.clone();
                e[n] = top - m.degree();
                (Monomial(e), c.clone())
            }),
        )
    };
    let gens_h: Vec<Polynomial<F>> = ideal.generators.iter().map(homogenize).collect();
    let ideal_h = Ideal::new(gens_h)?;
    let order_h = MonomialOrder { kind: crate::algebra::OrderKind::HomogenizedLocal, perm: order.perm.clone() };
    let basis_h = completion(&ideal_h, &order_h, false);
    // dehomogenize (set the auxiliary variable to 1) and minimalize
    let mut elements: Vec<Polynomial<F>> = basis_h
        .iter()
        .map(|g| {
            let dehom = Polynomial::from_terms(
                &ring_h,
                g.terms().map(|(m, c)| {
                    let mut e = m.0.clone();
                    e[n] = 0;
                    (Monomial(e), c.clone())
                }),
            );
            dehom.drop_var(n).expect("dehomogenized").monic(order)
        })
        .collect();
    elements.sort_by(|a, b| order.cmp(&a.leading_monomial(order).unwrap(), &b.leading_monomial(order).unwrap()));
    elements.dedup();
    let lms: Vec<Monomial> = elements.iter().map(|e| e.leading_monomial(order).unwrap()).collect();
    let mut keep = vec![true; elements.len()];
    for i in 0..elements.len() {
        for j in 0..elements.len() {
            if i != j && keep[j] && lms[j].divides(&lms[i]) && !(lms[i] == lms[j] && i < j) {
                keep[i] = false;
                break;
            }
        }
    }
    let elements: Vec<Polynomial<F>> =
        elements.into_iter().zip(keep).filter_map(|(e, k)| k.then_some(e)).collect();
    let leading_monomials = elements.iter().map(|e| e.leading_monomial(order).unwrap()).collect();
    Ok(StandardBasis { ideal: ideal.clone(), order: order.clone(), elements, leading_monomials })
}

/// Dispatch on the globality of the order.
pub fn standard_basis<F: Field>(ideal: &Ideal<F>, order: &MonomialOrder) -> Result<StandardBasis<F>> {
    if order.is_global() {
        groebner(ideal, order)
    } else {
        mora(ideal, order)
    }
}

impl<F: Field> StandardBasis<F> {
    /// Normal form of f: full reduction for global orders, Mora weak
    /// normal form for local ones.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Polynomial<F> {
        if f.is_zero() {
            return f.clone();
        }
        if self.order.is_global() {
            reduce_global(f, &self.elements, &self.order, true)
        } else {
            reduce_mora(f, &self.elements, &self.order)
        }
    }

    /// Ideal membership test; for local orders this decides membership in
    /// the localized ideal.
    pub fn contains(&self, f: &Polynomial<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Buchberger post-check: every S-polynomial reduces to zero.
    pub fn spolys_reduce_to_zero(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in i + 1..self.elements.len() {
                let s = spoly(&self.elements[i], &self.elements[j], &self.order);
                if !s.is_zero() && !self.normal_form(&s).is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Per-variable exponent of a pure power in the leading ideal, if any.
    fn pure_power_bounds(&self) -> Option<Vec<u32>> {
        let n = self.ideal.ring.n_vars();
        if self.leading_monomials.iter().any(|m| m.is_one()) {
            return Some(vec![0; n]);
        }
        let mut bounds = vec![None; n];
        for m in &self.leading_monomials {
            for i in 0..n {
                if m.is_pure_power_of(i) {
                    let e = m.exponent(i);
                    bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
                }
            }
        }
        bounds.into_iter().collect::<Option<Vec<u32>>>()
    }

    /// Monomials outside the leading-term staircase, if finitely many.
    pub fn staircase_complement(&self) -> Option<Vec<Monomial>> {
        let bounds = self.pure_power_bounds()?;
        let n = self.ideal.ring.n_vars();
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        loop {
            let m = Monomial(cur.clone());
            if !self.leading_monomials.iter().any(|l| l.divides(&m)) {
                out.push(m);
            }
            // odometer over the box [0, bounds]
            let mut i = 0;
            loop {
                if i == n {
                    // sort ascending by (degree, earlier-variable precedence)
                    out.sort_by(|a, b| {
                        a.degree()
                            .cmp(&b.degree())
                            .then_with(|| b.0.cmp(&a.0))
                    });
                    return Some(out);
                }
                if bounds[i] == 0 {
                    i += 1;
                    continue;
                }
                cur[i] += 1;
                if cur[i] >= bounds[i] {
                    cur[i] = 0;
                    i += 1;
                } else {
                    break;
                }
            }
        }
    }
}

/// Count of staircase-complement monomials; Infinite when some variable
/// lacks a pure-power leading term.
pub fn quotient_dimension<F: Field>(ideal: &Ideal<F>, order: &MonomialOrder) -> Result<Dimension> {
    let basis = standard_basis(ideal, order)?;
    Ok(match basis.staircase_complement() {
        Some(ms) => Dimension::Finite(ms.len() as u64),
        None => Dimension::Infinite,
    })
}

/// Exact staircase complement of a finite-dimensional quotient.
pub fn monomial_basis<F: Field>(ideal: &Ideal<F>, order: &MonomialOrder) -> Result<QuotientBasis> {
    let basis = standard_basis(ideal, order)?;
    match basis.staircase_complement() {
        Some(monomials) => {
            let dimension = Dimension::Finite(monomials.len() as u64);
            Ok(QuotientBasis { monomials, dimension })
        }
        None => Err(Error::InfiniteDimensional),
    }
}

/// All monomials of total degree exactly d.
fn monomials_of_degree(ring: &Ring, d: u32) -> Vec<Monomial> {
    let n = ring.n_vars();
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(cur: &mut Vec<u32>, i: usize, rem: u32, n: usize, out: &mut Vec<Monomial>) {
        if i == n - 1 {
            cur[i] = rem;
            out.push(Monomial(cur.clone()));
            return;
        }
        for e in 0..=rem {
            cur[i] = e;
            rec(cur, i + 1, rem - e, n, out);
        }
    }
    if n == 0 {
        return out;
    }
    rec(&mut cur, 0, d, n, &mut out);
    out
}

/// Dimension of ring/(ideal + m^k) via a global Groebner basis. This is
/// the truncation oracle for local quotient dimensions: it counts the
/// local multiplicity at the origin up to order k.
pub fn truncated_quotient_dimension<F: Field>(ideal: &Ideal<F>, k: u32) -> Result<u64> {
    let ring = &ideal.ring;
    let mut gens = ideal.generators.clone();
    for m in monomials_of_degree(ring, k) {
        gens.push(Polynomial::monomial(ring, m, F::one()));
    }
    let trunc = Ideal::new(gens)?;
    let basis = groebner(&trunc, &MonomialOrder::degrevlex())?;
    let ms = basis
        .staircase_complement()
        .ok_or_else(|| Error::Invariant("truncated quotient must be finite".into()))?;
    Ok(ms.len() as u64)
}

/// Truncation oracle: stabilized dimension of ring/(ideal + m^k) as k
/// grows. Two equal consecutive counts certify stabilization because the
/// local Hilbert function cannot vanish and restart.
pub fn quotient_dimension_by_truncation<F: Field>(ideal: &Ideal<F>, k_max: u32) -> Result<Dimension> {
    let mut prev = truncated_quotient_dimension(ideal, 1)?;
    for k in 2..=k_max {
        let cur = truncated_quotient_dimension(ideal, k)?;
        if cur == prev {
            return Ok(Dimension::Finite(cur));
        }
        prev = cur;
    }
    Ok(Dimension::Infinite)
}

/// Rank of a sparse matrix given as rows of (column, coefficient) pairs,
/// by echelon insertion.
fn sparse_rank<F: Field>(rows: Vec<Vec<(usize, F)>>) -> usize {
    // pivot row per leading column, each normalized to leading coeff 1
    let mut pivots: std::collections::BTreeMap<usize, Vec<(usize, F)>> = std::collections::BTreeMap::new();
    for mut row in rows {
        loop {
            row.retain(|(_, c)| !c.is_zero());
            row.sort_by_key(|&(c, _)| c);
            // combine duplicate columns
            let mut combined: Vec<(usize, F)> = Vec::with_capacity(row.len());
            for (c, v) in row {
                match combined.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv = lv.add(&v),
                    _ => combined.push((c, v)),
                }
            }
            combined.retain(|(_, c)| !c.is_zero());
            row = combined;
            match row.first().cloned() {
                None => break,
                Some((col, coeff)) => match pivots.get(&col) {
                    None => {
                        let inv = coeff.inv().expect("nonzero pivot");
                        let normalized: Vec<(usize, F)> =
                            row.iter().map(|(c, v)| (*c, v.mul(&inv))).collect();
                        pivots.insert(col, normalized);
                        break;
                    }
                    Some(p) => {
                        // row -= coeff * pivot
                        for (c, v) in p {
                            row.push((*c, v.mul(&coeff).neg()));
                        }
                    }
                },
            }
        }
    }
    pivots.len()
}

/// All monomials of total degree < k, with their index positions.
fn monomials_below(ring: &Ring, k: u32) -> std::collections::BTreeMap<Monomial, usize> {
    let mut out = std::collections::BTreeMap::new();
    for d in 0..k {
        for m in monomials_of_degree(ring, d) {
            let idx = out.len();
            out.insert(m, idx);
        }
    }
    out
}

/// dim of ring/(ideal + m^k) by exact sparse rank over the monomials of
/// degree < k: the image of the ideal there is spanned by the truncations
/// of monomial multiples of the generators.
pub fn truncated_quotient_dimension_linalg<F: Field>(ideal: &Ideal<F>, k: u32) -> Result<u64> {
    let ring = &ideal.ring;
    let cols = monomials_below(ring, k);
    let mut rows: Vec<Vec<(usize, F)>> = Vec::new();
    for g in &ideal.generators {
        let mindeg = g.min_degree().unwrap_or(0);
        if mindeg >= k {
            continue;
        }
        let budget = k - 1 - mindeg;
        for d in 0..=budget {
            for m in monomials_of_degree(ring, d) {
                let row: Vec<(usize, F)> = g
                    .terms()
                    .filter_map(|(gm, c)| {
                        let prod = gm.mul(&m);
                        cols.get(&prod).map(|&idx| (idx, c.clone()))
                    })
                    .collect();
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let rank = sparse_rank(rows);
    Ok(cols.len() as u64 - rank as u64)
}

/// Restrict generators to the axis subspace spanned by `keep` (all other
/// variables set to 0); the result lives in the smaller ring.
fn restrict_to_subspace<F: Field>(ideal: &Ideal<F>, keep: &[usize]) -> Vec<Polynomial<F>> {
    let ring = &ideal.ring;
    let n = ring.n_vars();
    let sub = Ring::new(&keep.iter().map(|&i| ring.var_name(i)).collect::<Vec<_>>());
    ideal
        .generators
        .iter()
        .map(|g| {
            Polynomial::from_terms(
                &sub,
                g.terms().filter_map(|(m, c)| {
                    if (0..n).any(|i| !keep.contains(&i) && m.exponent(i) > 0) {
                        None
                    } else {
                        let e: Vec<u32> = keep.iter().map(|&i| m.exponent(i)).collect();
                        Some((Monomial(e), c.clone()))
                    }
                }),
            )
        })
        .collect()
}

/// Certificate that the local quotient is infinite: some coordinate
/// subspace of dimension 1 or 2 carries a positive-dimensional branch of
/// the vanishing locus through the origin.
fn axis_subspace_infinite<F: Field>(ideal: &Ideal<F>) -> Result<bool> {
    let n = ideal.ring.n_vars();
    let mut subsets: Vec<Vec<usize>> = (0..n).map(|i| vec![i]).collect();
    for i in 0..n {
        for j in i + 1..n {
            subsets.push(vec![i, j]);
        }
    }
    for keep in subsets {
        let restricted = restrict_to_subspace(ideal, &keep);
        if restricted.iter().all(|g| g.is_zero()) {
            return Ok(true);
        }
        let sub_ideal = Ideal::new(restricted)?;
        if quotient_dimension(&sub_ideal, &MonomialOrder::negdegrevlex())? == Dimension::Infinite {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Local quotient dimension with a layered strategy for heavy inputs:
/// sparse-rank truncation with a stabilization certificate, then an
/// axis-subspace certificate for infinite dimension, then the tangent
/// cone computation as the exact fallback.
pub fn local_quotient_dimension<F: Field>(ideal: &Ideal<F>) -> Result<Dimension> {
    let k_cap = match ideal.ring.n_vars() {
        0..=2 => 24,
        3 => 16,
        _ => 10,
    };
    let mut prev = truncated_quotient_dimension_linalg(ideal, 1)?;
    for k in 2..=k_cap {
        let cur = truncated_quotient_dimension_linalg(ideal, k)?;
        if cur == prev {
            return Ok(Dimension::Finite(cur));
        }
        prev = cur;
    }
    if axis_subspace_infinite(ideal)? {
        return Ok(Dimension::Infinite);
    }
    quotient_dimension(ideal, &MonomialOrder::negdegrevlex())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;
    use crate::algebra::Rat;

    fn ideal(ring: &Ring, gens: &[&str]) -> Ideal<Rat> {
        Ideal::new(gens.iter().map(|g| parse_poly(g, ring).unwrap()).collect()).unwrap()
    }

    #[test]
    fn groebner_monomial_ideal() {
        let ring = Ring::new(&["x", "y", "z", "w"]);
        let i = ideal(&ring, &["2*x", "-3*y^2", "-2*z", "3*w^2"]);
        let b = groebner(&i, &MonomialOrder::degrevlex()).unwrap();
        let mut lms: Vec<String> = b.leading_monomials.iter().map(|m| m.display(&ring)).collect();
        lms.sort();
        assert_eq!(lms, ["w^2", "x", "y^2", "z"]);
        assert!(b.spolys_reduce_to_zero());
    }

    #[test]
    fn groebner_unit_ideal() {
        let ring = Ring::new(&["x", "y"]);
        let i = ideal(&ring, &["1"]);
        let b = groebner(&i, &MonomialOrder::lex()).unwrap();
        assert_eq!(b.elements.len(), 1);
        assert!(b.elements[0].is_constant());
        let qb = monomial_basis(&i, &MonomialOrder::lex()).unwrap();
        assert!(qb.monomials.is_empty());
        assert_eq!(qb.dimension, Dimension::Finite(0));
    }

    #[test]
    fn groebner_twisted_cubic_like() {
        // (y - x^2, x^3): quotient is Q[x]/(x^3) via y = x^2, dimension 3.
        let ring = Ring::new(&["x", "y"]);
        let i = ideal(&ring, &["y - x^2", "x^3"]);
        for order in [MonomialOrder::lex(), MonomialOrder::degrevlex()] {
            let d = quotient_dimension(&i, &order).unwrap();
            assert_eq!(d, Dimension::Finite(3));
        }
    }

    #[test]
    fn mora_local_unit_absorption() {
        // x + x^2 generates (x) locally since 1 + x is a unit
        let ring = Ring::new(&["x", "y"]);
        let i = ideal(&ring, &["x + x^2"]);
        let b = mora(&i, &MonomialOrder::negdegrevlex()).unwrap();
        assert_eq!(b.leading_monomials.len(), 1);
        assert_eq!(b.leading_monomials[0].display(&ring), "x");
    }

    #[test]
    fn mora_threefold_cusp_jacobian() {
        let ring = Ring::new(&["x", "y", "z", "w"]);
        let f: Polynomial<Rat> = parse_poly("x^2 - y^3 - z^2 + w^3", &ring).unwrap();
        let j = Ideal::jacobian(&f).unwrap();
        let b = mora(&j, &MonomialOrder::negdegrevlex()).unwrap();
        let mut lms: Vec<String> = b.leading_monomials.iter().map(|m| m.display(&ring)).collect();
        lms.sort();
        assert_eq!(lms, ["w^2", "x", "y^2", "z"]);
        let q = monomial_basis(&j, &MonomialOrder::negdegrevlex()).unwrap();
        assert_eq!(q.dimension, Dimension::Finite(4));
        let shown: Vec<String> = q.monomials.iter().map(|m| m.display(&ring)).collect();
        assert_eq!(shown, ["1", "y", "w", "y*w"]);
    }

    #[test]
    fn mora_plane_cusp_with_f() {
        let ring = Ring::new(&["x", "y"]);
        let f: Polynomial<Rat> = parse_poly("x^2 - y^3", &ring).unwrap();
        let j = Ideal::jacobian(&f).unwrap().with_extra(&[f]).unwrap();
        let b = mora(&j, &MonomialOrder::negdegrevlex()).unwrap();
        let mut lms: Vec<String> = b.leading_monomials.iter().map(|m| m.display(&ring)).collect();
        lms.sort();
        assert_eq!(lms, ["x", "y^2"]);
    }

    #[test]
    fn infinite_quotient_detected() {
        let ring = Ring::new(&["x", "y"]);
        let i = ideal(&ring, &["x"]);
        assert_eq!(quotient_dimension(&i, &MonomialOrder::degrevlex()).unwrap(), Dimension::Infinite);
        assert!(matches!(
            monomial_basis(&i, &MonomialOrder::degrevlex()),
            Err(Error::InfiniteDimensional)
        ));
    }

    #[test]
    fn truncation_oracle_stabilizes() {
        let ring = Ring::new(&["x", "y"]);
        let f: Polynomial<Rat> = parse_poly("x^2 - y^3", &ring).unwrap();
        let j = Ideal::jacobian(&f).unwrap();
        assert_eq!(quotient_dimension_by_truncation(&j, 8).unwrap(), Dimension::Finite(2));
    }

    #[test]
    fn order_dispatch_errors() {
        let ring = Ring::new(&["x"]);
        let i = ideal(&ring, &["x"]);
        assert!(matches!(groebner(&i, &MonomialOrder::negdegrevlex()), Err(Error::LocalOrderRejected)));
        assert!(matches!(mora(&i, &MonomialOrder::lex()), Err(Error::GlobalOrderRejected)));
    }
}
