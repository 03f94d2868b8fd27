//! Small dense exact linear algebra over a field.

use super::field::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<F: Field> {
    pub rows: usize,
    pub cols: usize,
    data: Vec<F>,
}

impl<F: Field> Matrix<F> {
    pub fn new(rows: usize, cols: usize, data: Vec<F>) -> Self {
        assert_eq!(rows * cols, data.len());
        Matrix { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn at(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    /// Reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let piv = (row..self.rows).find(|&r| !self.at(r, col).is_zero());
            let piv = match piv {
                Some(p) => p,
                None => continue,
            };
            for j in 0..self.cols {
                let tmp = self.at(piv, j).clone();
                self.set(piv, j, self.at(row, j).clone());
                self.set(row, j, tmp);
            }
            let inv = self.at(row, col).inv().expect("nonzero pivot");
            for j in 0..self.cols {
                let v = self.at(row, j).mul(&inv);
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let f = self.at(r, col).clone();
                    for j in 0..self.cols {
                        let v = self.at(r, j).sub(&f.mul(self.at(row, j)));
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the (right) null space.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::new();
        for &fc in &free {
            let mut v = vec![F::zero(); self.cols];
            v[fc] = F::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = m.at(r, fc).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One solution of Ax = b, if consistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = Matrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug.set(i, j, self.at(i, j).clone());
            }
            aug.set(i, self.cols, b[i].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent
        }
        let mut x = vec![F::zero(); self.cols];
        for (r, &pc) in pivots.iter().enumerate() {
            x[pc] = aug.at(r, self.cols).clone();
        }
        Some(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational::{rat_int, Rat};

    fn m(rows: usize, cols: usize, v: &[i64]) -> Matrix<Rat> {
        Matrix::new(rows, cols, v.iter().map(|&x| rat_int(x)).collect())
    }

    #[test]
    fn rank_and_nullspace() {
        let a = m(2, 3, &[1, 2, 3, 2, 4, 6]);
        assert_eq!(a.rank(), 1);
        let ns = a.nullspace();
        assert_eq!(ns.len(), 2);
    }

    #[test]
    fn solve_consistent() {
        let a = m(2, 2, &[1, 1, 1, -1]);
        let x = a.solve(&[rat_int(3), rat_int(1)]).unwrap();
        assert_eq!(x, vec![rat_int(2), rat_int(1)]);
        let b = m(2, 2, &[1, 1, 2, 2]);
        assert!(b.solve(&[rat_int(0), rat_int(1)]).is_none());
    }
}
