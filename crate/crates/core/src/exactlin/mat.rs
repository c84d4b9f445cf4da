//! Small dense matrices used for operator algebra (endomorphisms, actions).

use super::rat::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Mat {
        Mat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn scalar(n: usize, c: &Rational) -> Mat {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = c.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Mat {
        let mut m = Mat::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                *m.at_mut(i, j) = f(i, j);
            }
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Mat {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let mut m = Mat::zeros(r, c);
        for (i, row) in rows.into_iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, v) in row.into_iter().enumerate() {
                *m.at_mut(i, j) = v;
            }
        }
        m
    }

    /// Column-assembled matrix: `cols[j]` is the j-th column.
    pub fn from_cols(rows: usize, cols: Vec<Vec<Rational>>) -> Mat {
        let c = cols.len();
        let mut m = Mat::zeros(rows, c);
        for (j, col) in cols.into_iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (i, v) in col.into_iter().enumerate() {
                *m.at_mut(i, j) = v;
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a + b)
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let data = self
            .data
            .iter()
            .zip(other.data.iter())
            .map(|(a, b)| a - b)
            .collect();
        Mat {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn neg(&self) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Mat {
        Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matrix product shape");
        let mut out = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.at(k, j);
                    if !b.is_zero() {
                        let t = &(a * b);
                        let cell = out.at_mut(i, j);
                        *cell = &*cell + t;
                    }
                }
            }
        }
        out
    }

    pub fn commutator(&self, other: &Mat) -> Mat {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Rational::zero(); self.rows];
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !v[j].is_zero() && !self.at(i, j).is_zero() {
                    out[i] = &out[i] + &(self.at(i, j) * &v[j]);
                }
            }
        }
        out
    }

    /// Kronecker product, row-major index (i1 * rows2 + i2).
    pub fn kron(&self, other: &Mat) -> Mat {
        let mut out = Mat::zeros(self.rows * other.rows, self.cols * other.cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.at(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.at(i2, j2);
                        if !b.is_zero() {
                            *out.at_mut(i1 * other.rows + i2, j1 * other.cols + j2) = a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Flatten to a coordinate vector (row-major), for subspace work on
    /// spaces of endomorphisms.
    pub fn flatten(&self) -> Vec<Rational> {
        self.data.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat::rat;
    use super::*;

    #[test]
    fn basic_ops() {
        let a = Mat::from_rows(vec![vec![rat(1, 1), rat(2, 1)], vec![rat(0, 1), rat(1, 1)]]);
        let b = Mat::from_rows(vec![vec![rat(1, 1), rat(0, 1)], vec![rat(3, 1), rat(1, 1)]]);
        let ab = a.mul(&b);
        assert_eq!(*ab.at(0, 0), rat(7, 1));
        assert_eq!(*ab.at(0, 1), rat(2, 1));
        let comm = a.commutator(&b);
        assert!(!comm.is_zero());
        assert!(a.commutator(&a).is_zero());
        assert_eq!(a.transpose().at(0, 1), &rat(0, 1));
    }

    #[test]
    fn kron_shapes() {
        let a = Mat::identity(2);
        let b = Mat::from_rows(vec![vec![rat(2, 1)]]);
        let k = a.kron(&b);
        assert_eq!(k.rows(), 2);
        assert_eq!(*k.at(1, 1), rat(2, 1));
    }
}
