//! Root isolation for univariate polynomials over the exact tower:
//! exact roots are recovered by numeric approximation, rational
//! reconstruction and an exact verification step; everything else is
//! reported numerically.

use num::complex::Complex64;

use super::cyclotomic::Cyclotomic;
use super::field::Field;
use super::rational::rat_reconstruct;
use super::upoly::UPoly;
use super::value::Value;

/// Durand-Kerner simultaneous iteration, polished by Newton steps.
pub fn complex_roots(coeffs: &[Complex64]) -> Vec<Complex64> {
    let mut cs = coeffs.to_vec();
    while cs.last().is_some_and(|c| c.norm() < 1e-300) {
        cs.pop();
    }
    if cs.len() <= 1 {
        return Vec::new();
    }
    let n = cs.len() - 1;
    let lead = cs[n];
    let monic: Vec<Complex64> = cs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0f64, f64::max);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| {
            Complex64::from_polar(radius * 0.9, 0.37 + 2.0 * std::f64::consts::PI * k as f64 / n as f64)
        })
        .collect();
    for _ in 0..800 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() < 1e-300 {
                continue;
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            max_step = max_step.max(step.norm());
        }
        if max_step < 1e-14 {
            break;
        }
    }
    // Newton polish against the polynomial itself, to ~1e-12
    let dmonic: Vec<Complex64> =
        monic[1..].iter().enumerate().map(|(i, c)| c * (i as f64 + 1.0)).collect();
    let deval = |z: Complex64| -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in dmonic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    for r in roots.iter_mut() {
        for _ in 0..60 {
            let d = deval(*r);
            if d.norm() < 1e-300 {
                break;
            }
            let step = eval(*r) / d;
            *r -= step;
            if step.norm() < 1e-15 {
                break;
            }
        }
    }
    roots
}

pub fn complex_roots_of<F: Field>(p: &UPoly<F>) -> Option<Vec<Complex64>> {
    let coeffs: Option<Vec<Complex64>> = p.0.iter().map(|c| c.to_complex()).collect();
    Some(complex_roots(&coeffs?))
}

/// Candidate exact element of Q(omega) close to z; the caller verifies.
pub fn reconstruct_cyclotomic(z: Complex64, max_den: u64) -> Option<Cyclotomic> {
    let q = z.im / (3f64.sqrt() / 2.0);
    let p = z.re + q * 0.5;
    Some(Cyclotomic::new(rat_reconstruct(p, max_den)?, rat_reconstruct(q, max_den)?))
}

/// Roots over Q(omega): exact where they lie in the field (linear and
/// quadratic factors, plus reconstruction-verified roots of higher
/// factors), numeric with ~1e-12 residual otherwise.
pub fn roots_in_cyclotomic(p: &UPoly<Cyclotomic>) -> Vec<Value<Cyclotomic>> {
    let mut out = Vec::new();
    let mut f = p.clone();
    'peel: loop {
        match f.degree() {
            None | Some(0) => return out,
            Some(1) => {
                let r = f.coeff(0).neg().mul(&f.coeff(1).inv().unwrap());
                out.push(Value::Exact(r));
                return out;
            }
            Some(2) => {
                // quadratic formula with the exact field square root
                let (a, b, c) = (f.coeff(2), f.coeff(1), f.coeff(0));
                let disc = b.mul(&b).sub(&a.mul(&c).mul(&Cyclotomic::from_int(4)));
                if let Some(s) = disc.sqrt() {
                    let half = a.mul(&Cyclotomic::from_int(2)).inv().unwrap();
                    for sign in [1i64, -1] {
                        let r = b.neg().add(&s.mul(&Cyclotomic::from_int(sign))).mul(&half);
                        out.push(Value::Exact(r));
                    }
                    return out;
                }
                break 'peel;
            }
            Some(_) => {
                let Some(numeric) = complex_roots_of(&f) else { break 'peel };
                for z in &numeric {
                    for max_den in [64u64, 10_000, 50_000_000] {
                        if let Some(cand) = reconstruct_cyclotomic(*z, max_den) {
                            if f.eval(&cand).is_zero() {
                                out.push(Value::Exact(cand.clone()));
                                f = f.deflate(&cand).expect("verified root");
                                continue 'peel;
                            }
                        }
                    }
                }
                break 'peel;
            }
        }
    }
    // remaining factor has no reachable exact roots
    if let Some(numeric) = complex_roots_of(&f) {
        out.extend(numeric.into_iter().map(Value::Numeric));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::rat_int;

    #[test]
    fn cubic_exact_over_omega() {
        // y^3 + 1 = (y + 1)(y + omega)(y + omega^2)
        let f: UPoly<Cyclotomic> = UPoly::from_ints(&[1, 0, 0, 1]);
        let roots = roots_in_cyclotomic(&f);
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|r| r.is_exact()));
        let mut found: Vec<Cyclotomic> = roots.iter().map(|r| r.exact().unwrap().clone()).collect();
        found.sort_by_key(|c| format!("{c}"));
        let mut expect = vec![
            Cyclotomic::from_int(-1),
            Cyclotomic::omega().neg(),
            Cyclotomic::omega2().neg(),
        ];
        expect.sort_by_key(|c| format!("{c}"));
        assert_eq!(found, expect);
    }

    #[test]
    fn quintic_falls_back_to_numeric() {
        // 27 t^5 + 54 t^4 + 27 t^3 - 8 t^2 - 8 t - 4 has no roots in the tower
        let f: UPoly<Cyclotomic> = UPoly::from_ints(&[-4, -8, -8, 27, 54, 27]);
        let roots = roots_in_cyclotomic(&f);
        assert_eq!(roots.len(), 5);
        assert!(roots.iter().all(|r| !r.is_exact()));
        for r in roots {
            let z = r.to_complex().unwrap();
            assert!(f.eval_complex(z).unwrap().norm() < 1e-8);
        }
    }

    #[test]
    fn rational_roots_found_exactly() {
        // (t - 2)(t + 1/3)(t^2 + t + 1)
        let lin1: UPoly<Cyclotomic> = UPoly::new(vec![Cyclotomic::from_int(-2), Cyclotomic::one()]);
        let lin2 = UPoly::new(vec![Cyclotomic::from_rat(crate::algebra::rat(1, 3)), Cyclotomic::one()]);
        let quad = UPoly::from_ints(&[1, 1, 1]);
        let f = lin1.mul(&lin2).mul(&quad);
        let roots = roots_in_cyclotomic(&f);
        assert_eq!(roots.len(), 4);
        assert!(roots.iter().all(|r| r.is_exact()));
        assert!(roots.iter().any(|r| r.exact() == Some(&Cyclotomic::from_int(2))));
        assert!(roots.iter().any(|r| r.exact() == Some(&Cyclotomic::omega())));
        let _ = rat_int(0);
    }
}
