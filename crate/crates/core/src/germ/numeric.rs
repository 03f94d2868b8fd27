//! Floating-point fallbacks for points outside the exact coefficient
//! tower: complex polynomial evaluation, jacobian rank by singular
//! values, and Newton refinement.

use num::complex::Complex64;

use crate::algebra::{Field, Polynomial};

/// Rank tolerance on singular values.
pub const RANK_GAP: f64 = 1e-6;
/// Residual tolerance for "the point satisfies the equations".
pub const RESIDUAL_TOL: f64 = 1e-9;

/// Singular values of a complex matrix via one-sided Jacobi on A^H A.
pub fn singular_values(a: &[Vec<Complex64>]) -> Vec<f64> {
    let rows = a.len();
    if rows == 0 {
        return Vec::new();
    }
    let cols = a[0].len();
    let n = cols;
    // gram = A^H A (n x n Hermitian)
    let mut g = vec![vec![Complex64::new(0.0, 0.0); n]; n];
    for i in 0..n {
        for j in 0..n {
            let mut s = Complex64::new(0.0, 0.0);
            for r in 0..rows {
                s += a[r][i].conj() * a[r][j];
            }
            g[i][j] = s;
        }
    }
    // cyclic complex Jacobi eigenvalue iteration
    for _sweep in 0..60 {
        let mut off = 0.0;
        for p in 0..n {
            for q in (p + 1)..n {
                off += g[p][q].norm_sqr();
            }
        }
        if off.sqrt() < 1e-14 {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = g[p][q];
                if apq.norm() < 1e-300 {
                    continue;
                }
                let app = g[p][p].re;
                let aqq = g[q][q].re;
                // unitary 2x2 diagonalization of [[app, apq],[conj(apq), aqq]]
                let phase = apq / apq.norm();
                let tau = (aqq - app) / (2.0 * apq.norm());
                let t = tau.signum_or_one() / (tau.abs() + (1.0 + tau * tau).sqrt());
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                for k in 0..n {
                    let gkp = g[k][p];
                    let gkq = g[k][q];
                    g[k][p] = gkp * c - gkq * phase.conj() * s;
                    g[k][q] = gkp * phase * s + gkq * c;
                }
                for k in 0..n {
                    let gpk = g[p][k];
                    let gqk = g[q][k];
                    g[p][k] = gpk * c - gqk * phase * s;
                    g[q][k] = gpk * phase.conj() * s + gqk * c;
                }
            }
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|i| g[i][i].re.max(0.0).sqrt()).collect();
    vals.sort_by(|x, y| y.partial_cmp(x).unwrap());
    vals
}

trait SignumOrOne {
    fn signum_or_one(self) -> f64;
}
impl SignumOrOne for f64 {
    fn signum_or_one(self) -> f64 {
        if self == 0.0 {
            1.0
        } else {
            self.signum()
        }
    }
}

/// Numerical rank: count of singular values above `RANK_GAP` times the
/// largest (absolute floor RANK_GAP for tiny matrices).
pub fn numeric_rank(a: &[Vec<Complex64>]) -> usize {
    let sv = singular_values(a);
    let top = sv.first().copied().unwrap_or(0.0);
    let cut = if top > 1.0 { RANK_GAP * top } else { RANK_GAP };
    sv.iter().filter(|&&s| s > cut).count()
}

/// Jacobian of a polynomial system at a complex point.
pub fn jacobian_at<F: Field>(system: &[Polynomial<F>], point: &[Complex64]) -> Option<Vec<Vec<Complex64>>> {
    let mut rows = Vec::with_capacity(system.len());
    for f in system {
        let mut row = Vec::with_capacity(point.len());
        for i in 0..point.len() {
            row.push(f.partial_derivative_idx(i).eval_complex(point)?);
        }
        rows.push(row);
    }
    Some(rows)
}

/// Newton refinement of a root of a square subsystem; returns the
/// polished point when the residual of the full system drops below tol.
pub fn newton_polish<F: Field>(
    system: &[Polynomial<F>],
    start: &[Complex64],
    iterations: usize,
) -> Option<Vec<Complex64>> {
    let n = start.len();
    let mut x = start.to_vec();
    for _ in 0..iterations {
        let jac = jacobian_at(system, &x)?;
        let res: Vec<Complex64> = system.iter().map(|f| f.eval_complex(&x).unwrap()).collect();
        // least-squares step via normal equations J^H J dx = -J^H r
        let mut a = vec![vec![Complex64::new(0.0, 0.0); n]; n];
        let mut b = vec![Complex64::new(0.0, 0.0); n];
        for i in 0..n {
            for j in 0..n {
                for r in 0..system.len() {
                    a[i][j] += jac[r][i].conj() * jac[r][j];
                }
            }
            for r in 0..system.len() {
                b[i] -= jac[r][i].conj() * res[r];
            }
        }
        let dx = solve_complex(&mut a, &mut b)?;
        for i in 0..n {
            x[i] += dx[i];
        }
    }
    let worst = system
        .iter()
        .map(|f| f.eval_complex(&x).unwrap().norm())
        .fold(0.0f64, f64::max);
    if worst < RESIDUAL_TOL {
        Some(x)
    } else {
        None
    }
}

fn solve_complex(a: &mut [Vec<Complex64>], b: &mut [Complex64]) -> Option<Vec<Complex64>> {
    let n = b.len();
    for k in 0..n {
        let piv = (k..n).max_by(|&i, &j| a[i][k].norm().partial_cmp(&a[j][k].norm()).unwrap())?;
        if a[piv][k].norm() < 1e-300 {
            return None;
        }
        a.swap(k, piv);
        b.swap(k, piv);
        for i in (k + 1)..n {
            let f = a[i][k] / a[k][k];
            for j in k..n {
                let akj = a[k][j];
                a[i][j] -= f * akj;
            }
            let bk = b[k];
            b[i] -= f * bk;
        }
    }
    let mut x = vec![Complex64::new(0.0, 0.0); n];
    for i in (0..n).rev() {
        let mut s = b[i];
        for j in (i + 1)..n {
            s -= a[i][j] * x[j];
        }
        x[i] = s / a[i][i];
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singular_values_of_diag() {
        let a = vec![
            vec![Complex64::new(3.0, 0.0), Complex64::new(0.0, 0.0)],
            vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, 4.0)],
        ];
        let sv = singular_values(&a);
        assert!((sv[0] - 4.0).abs() < 1e-10);
        assert!((sv[1] - 3.0).abs() < 1e-10);
        assert_eq!(numeric_rank(&a), 2);
    }

}
