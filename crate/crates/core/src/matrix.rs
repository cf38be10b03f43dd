//! Dense matrices over the rationals with exact Gaussian elimination.

use num_traits::Zero;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Rational) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Row echelon form (in place on a copy); returns it with the pivot columns.
    fn echelon(&self, rhs: Option<&[Rational]>) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut m: Vec<Vec<Rational>> = (0..self.rows)
            .map(|r| {
                let mut row = self.row(r).to_vec();
                if let Some(b) = rhs {
                    row.push(b[r].clone());
                }
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut top = 0;
        for c in 0..self.cols {
            let Some(p) = (top..self.rows).find(|&r| !m[r][c].is_zero()) else {
                continue;
            };
            m.swap(top, p);
            let pivot = m[top][c].clone();
            for r in (top + 1)..self.rows {
                if m[r][c].is_zero() {
                    continue;
                }
                let f = &m[r][c] / &pivot;
                let (upper, lower) = m.split_at_mut(r);
                for (dst, src) in lower[0][c..].iter_mut().zip(&upper[top][c..]) {
                    *dst -= &f * src;
                }
            }
            pivots.push(c);
            top += 1;
            if top == self.rows {
                break;
            }
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.echelon(None).1.len()
    }

    pub fn is_nonsingular(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Solves `self · x = b` for square nonsingular `self`; `None` when singular.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length");
        if !self.is_square() {
            return None;
        }
        let (m, pivots) = self.echelon(Some(b));
        if pivots.len() != self.rows {
            return None;
        }
        let n = self.rows;
        let mut x = vec![Rational::zero(); n];
        for r in (0..n).rev() {
            let mut acc = m[r][n].clone();
            for c in (r + 1)..n {
                acc -= &m[r][c] * &x[c];
            }
            x[r] = acc / &m[r][r];
        }
        Some(x)
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| Rational::from_integer(v.into())).collect())
                .collect(),
        )
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn rank_and_singularity() {
        assert_eq!(m(&[&[1, 0, 0], &[1, 2, 1], &[1, 1, 2]]).rank(), 3);
        // points (0,0),(1,2),(2,1) against columns 1, x, x^2: Vandermonde in x = 0, 1, 2
        let vandermonde = m(&[&[1, 0, 0], &[1, 1, 1], &[1, 2, 4]]);
        assert!(vandermonde.is_nonsingular());
        let dup = m(&[&[1, 2], &[2, 4]]);
        assert_eq!(dup.rank(), 1);
        assert!(!dup.is_nonsingular());
        assert_eq!(m(&[&[0, 0, 1], &[0, 0, 2]]).rank(), 1);
        assert_eq!(Matrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn solve_three_by_three() {
        // c1 = 0, 2c2 + c3 = 2, c2 + 2c3 = 1  ⇒  c = (0, 1, 0)
        let a = m(&[&[1, 0, 0], &[1, 2, 1], &[1, 1, 2]]);
        assert_eq!(a.solve(&v(&[0, 2, 1])).unwrap(), v(&[0, 1, 0]));
        let x = a.solve(&v(&[3, -1, 7])).unwrap();
        assert_eq!(a.mul_vec(&x), v(&[3, -1, 7]));
        assert!(m(&[&[1, 2], &[2, 4]]).solve(&v(&[1, 1])).is_none());
    }

    #[test]
    fn solve_needs_row_swap() {
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.solve(&v(&[5, 7])).unwrap(), v(&[7, 5]));
    }
}
