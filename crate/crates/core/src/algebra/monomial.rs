use std::cmp::Ordering;
use std::sync::Arc;

/// Variable-name list of a polynomial ring. Rings are immutable and
/// compared structurally by their variable names.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Arc<Vec<String>>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(vars: &[S]) -> Self {
        Ring { vars: Arc::new(vars.iter().map(|s| s.as_ref().to_string()).collect()) }
    }

    pub fn empty() -> Self {
        Ring { vars: Arc::new(Vec::new()) }
    }

    pub fn n_vars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// New ring with variable `i` removed.
    pub fn without_var(&self, i: usize) -> Ring {
        let mut v: Vec<String> = self.vars.as_ref().clone();
        v.remove(i);
        Ring { vars: Arc::new(v) }
    }

    pub fn describe(&self) -> String {
        self.vars.join(",")
    }
}

/// Exponent vector; its length always equals the ambient ring's
/// variable count. The derived `Ord` is structural (used only for
/// canonical term storage, not as a monomial order).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n_vars: usize) -> Self {
        Monomial(vec![0; n_vars])
    }

    pub fn var(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(e: Vec<u32>) -> Self {
        Monomial(e)
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn n_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn try_div(&self, other: &Self) -> Option<Self> {
        if other.divides(self) {
            Some(Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect()))
        } else {
            None
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Self) -> Self {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        Monomial(self.0.iter().map(|a| a * e).collect())
    }

    /// Is this a pure power of variable `i`?
    pub fn is_pure_power_of(&self, i: usize) -> bool {
        self.0[i] > 0 && self.0.iter().enumerate().all(|(j, &e)| j == i || e == 0)
    }

    pub fn display(&self, ring: &Ring) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 1 {
                parts.push(ring.var_name(i).to_string());
            } else if e > 1 {
                parts.push(format!("{}^{}", ring.var_name(i), e));
            }
        }
        parts.join("*")
    }
}

/// Monomial order kinds: Lex and DegRevLex are global (1 is smallest),
/// NegDegRevLex is the local order (1 is largest). HomogenizedLocal is
/// internal to the standard-basis engine: the global order on one extra
/// homogenizing variable (assumed last) whose dehomogenization recovers
/// NegDegRevLex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OrderKind {
    Lex,
    DegRevLex,
    NegDegRevLex,
    HomogenizedLocal,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    pub kind: OrderKind,
    /// Optional variable permutation: position k in the comparison reads
    /// exponent `perm[k]`.
    pub perm: Option<Vec<usize>>,
}

impl MonomialOrder {
    pub fn lex() -> Self {
        MonomialOrder { kind: OrderKind::Lex, perm: None }
    }

    pub fn degrevlex() -> Self {
        MonomialOrder { kind: OrderKind::DegRevLex, perm: None }
    }

    pub fn negdegrevlex() -> Self {
        MonomialOrder { kind: OrderKind::NegDegRevLex, perm: None }
    }

    pub fn with_permutation(mut self, perm: Vec<usize>) -> Self {
        self.perm = Some(perm);
        self
    }

    pub fn is_global(&self) -> bool {
        !matches!(self.kind, OrderKind::NegDegRevLex)
    }

    pub fn is_local(&self) -> bool {
        !self.is_global()
    }

    fn exp(&self, m: &Monomial, k: usize) -> u32 {
        match &self.perm {
            Some(p) => m.0[p[k]],
            None => m.0[k],
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = a.n_vars();
        debug_assert_eq!(n, b.n_vars());
        match self.kind {
            OrderKind::Lex => {
                for k in 0..n {
                    let (ea, eb) = (self.exp(a, k), self.exp(b, k));
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
                Ordering::Equal
            }
            OrderKind::DegRevLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return da.cmp(&db);
                }
                Self::revlex_tie(self, a, b, n)
            }
            OrderKind::NegDegRevLex => {
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    // smaller degree is larger in the local order
                    return db.cmp(&da);
                }
                Self::revlex_tie(self, a, b, n)
            }
            OrderKind::HomogenizedLocal => {
                // total degree first (well-order), then NegDegRevLex on the
                // non-homogenizing part (positions 0..n-1)
                let (da, db) = (a.degree(), b.degree());
                if da != db {
                    return da.cmp(&db);
                }
                let xa = da - a.0[n - 1];
                let xb = db - b.0[n - 1];
                if xa != xb {
                    return xb.cmp(&xa);
                }
                Self::revlex_tie(self, a, b, n - 1)
            }
        }
    }

    fn revlex_tie(&self, a: &Monomial, b: &Monomial, n: usize) -> Ordering {
        for k in (0..n).rev() {
            let (ea, eb) = (self.exp(a, k), self.exp(b, k));
            if ea != eb {
                // smaller exponent in the last differing position wins
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }

    /// The greater of two monomials under this order.
    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial(e.to_vec())
    }

    #[test]
    fn degrevlex_basics() {
        let o = MonomialOrder::degrevlex();
        // x > y > z in three variables
        assert_eq!(o.cmp(&m(&[1, 0, 0]), &m(&[0, 1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[0, 1, 0]), &m(&[0, 0, 1])), Ordering::Greater);
        // x^2 > xy: same degree, compare revlex
        assert_eq!(o.cmp(&m(&[2, 0, 0]), &m(&[1, 1, 0])), Ordering::Greater);
        // degree dominates: y^3 > x^2
        assert_eq!(o.cmp(&m(&[0, 3, 0]), &m(&[2, 0, 0])), Ordering::Greater);
        // xz < y^2 in degrevlex
        assert_eq!(o.cmp(&m(&[1, 0, 1]), &m(&[0, 2, 0])), Ordering::Less);
    }

    #[test]
    fn local_order_is_reversed_on_degree() {
        let o = MonomialOrder::negdegrevlex();
        // 1 is the largest monomial
        assert_eq!(o.cmp(&m(&[0, 0]), &m(&[1, 0])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 2])), Ordering::Greater);
        // within a degree, same tie-break as degrevlex: x > y
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 1])), Ordering::Greater);
    }

    #[test]
    fn lex_with_permutation() {
        // make y the most significant variable in a ring ordered [x, y]
        let o = MonomialOrder::lex().with_permutation(vec![1, 0]);
        assert_eq!(o.cmp(&m(&[0, 1]), &m(&[5, 0])), Ordering::Greater);
    }

    #[test]
    fn multiplicativity_samples() {
        let orders = [MonomialOrder::lex(), MonomialOrder::degrevlex(), MonomialOrder::negdegrevlex()];
        let ms = [m(&[0, 0]), m(&[1, 0]), m(&[0, 1]), m(&[2, 1]), m(&[1, 3])];
        for o in &orders {
            for a in &ms {
                for b in &ms {
                    for c in &ms {
                        if o.cmp(a, b) == Ordering::Less {
                            assert_eq!(o.cmp(&a.mul(c), &b.mul(c)), Ordering::Less);
                        }
                    }
                }
            }
        }
    }
}
