//! Univariate division with remainder and Sylvester resultants with
//! fraction-free (Bareiss) elimination to tame coefficient growth.

use super::field::Field;
use super::poly::Polynomial;
use super::upoly::UPoly;
use crate::error::{Error, Result};

/// Division with remainder of polynomials univariate in `var`; any other
/// variables must already live in the coefficient field.
pub fn divide_with_remainder<F: Field>(
    f: &Polynomial<F>,
    g: &Polynomial<F>,
    var: &str,
) -> Result<(Polynomial<F>, Polynomial<F>)> {
    let ring = f.ring().clone();
    let v = ring.var_index(var).ok_or_else(|| Error::UnknownVariable(var.into()))?;
    if g.is_zero() {
        return Err(Error::DivisionByZeroPolynomial);
    }
    let fu = UPoly::from_poly(f, v)?;
    let gu = UPoly::from_poly(g, v)?;
    let (q, r) = fu.divrem(&gu)?;
    Ok((q.to_poly(&ring, v), r.to_poly(&ring, v)))
}

/// Determinant by Bareiss fraction-free Gaussian elimination over the
/// polynomial ring (exact divisions by previous pivots).
fn bareiss_det<F: Field>(mut m: Vec<Vec<Polynomial<F>>>, ring: &super::monomial::Ring) -> Polynomial<F> {
    let n = m.len();
    if n == 0 {
        return Polynomial::one(ring);
    }
    let mut sign_flip = false;
    let mut prev = Polynomial::one(ring);
    for k in 0..n {
        // pivot search
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return Polynomial::zero(ring),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = Polynomial::zero(ring);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg()
    } else {
        det
    }
}

/// Sylvester resultant eliminating `var`. The result lives in the same
/// ring with degree 0 in `var`; it vanishes at a parameter point exactly
/// when f and g share a root there (for field coefficients).
pub fn resultant<F: Field>(f: &Polynomial<F>, g: &Polynomial<F>, var: &str) -> Result<Polynomial<F>> {
    let ring = f.ring().clone();
    let v = ring.var_index(var).ok_or_else(|| Error::UnknownVariable(var.into()))?;
    let df = f.degree_in(v).unwrap_or(0) as usize;
    let dg = g.degree_in(v).unwrap_or(0) as usize;
    if df == 0 || dg == 0 || f.is_zero() || g.is_zero() {
        return Err(Error::ZeroDegreeInput);
    }
    let fc = f.coeffs_in_var(v);
    let gc = g.coeffs_in_var(v);
    let n = df + dg;
    let zero = Polynomial::zero(&ring);
    let mut m = vec![vec![zero.clone(); n]; n];
    // dg rows of f coefficients (highest first), then df rows of g
    for row in 0..dg {
        for (k, c) in fc.iter().rev().enumerate() {
            m[row][row + k] = c.clone();
        }
    }
    for row in 0..df {
        for (k, c) in gc.iter().rev().enumerate() {
            m[dg + row][row + k] = c.clone();
        }
    }
    Ok(bareiss_det(m, &ring))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::monomial::Ring;
    use crate::algebra::parse::parse_poly;
    use crate::algebra::rational::Rat;

    #[test]
    fn divide_trivial_cases() {
        let ring = Ring::new(&["y"]);
        let f: Polynomial<Rat> = parse_poly("y^3", &ring).unwrap();
        let g = parse_poly("y", &ring).unwrap();
        let (q, r) = divide_with_remainder(&f, &g, "y").unwrap();
        assert_eq!(q, parse_poly("y^2", &ring).unwrap());
        assert!(r.is_zero());

        let f: Polynomial<Rat> = parse_poly("y^2 + 1", &ring).unwrap();
        let g = parse_poly("y - 1", &ring).unwrap();
        let (q, r) = divide_with_remainder(&f, &g, "y").unwrap();
        assert_eq!(q, parse_poly("y + 1", &ring).unwrap());
        assert_eq!(r, parse_poly("2", &ring).unwrap());
    }

    #[test]
    fn resultant_linear_pair() {
        let ring = Ring::new(&["y", "a", "b"]);
        let f: Polynomial<Rat> = parse_poly("y - a", &ring).unwrap();
        let g = parse_poly("y - b", &ring).unwrap();
        let r = resultant(&f, &g, "y").unwrap();
        assert_eq!(r, parse_poly("a - b", &ring).unwrap());
    }

    #[test]
    fn resultant_detects_common_root() {
        let ring = Ring::new(&["y", "t"]);
        // f = (y - t)(y - 1), g = (y - t)(y + 2): share a root for every t
        let f: Polynomial<Rat> = parse_poly("(y - t)*(y - 1)", &ring).unwrap();
        let g = parse_poly("(y - t)*(y + 2)", &ring).unwrap();
        let r = resultant(&f, &g, "y").unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn resultant_swap_sign() {
        let ring = Ring::new(&["y", "t"]);
        let f: Polynomial<Rat> = parse_poly("y^2 - t", &ring).unwrap();
        let g = parse_poly("y^3 + t*y + 2", &ring).unwrap();
        let rfg = resultant(&f, &g, "y").unwrap();
        let rgf = resultant(&g, &f, "y").unwrap();
        // (-1)^(2*3) = 1
        assert_eq!(rfg, rgf);
    }
}
