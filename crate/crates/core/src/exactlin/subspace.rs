//! Row-reduced subspaces of a fixed coordinate space.

use super::rat::Rational;
use crate::error::{Error, Result};

/// A subspace given by a basis in reduced row echelon form.
///
/// Invariants: rows are nonzero, sorted by pivot column, each pivot entry is
/// 1 and is the only nonzero entry in its column.  This makes equality
/// structural and all derived data (complement, quotient coordinates)
/// deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Subspace {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Subspace {
        let mut s = Subspace::zero(ambient);
        for i in 0..ambient {
            let mut v = vec![Rational::zero(); ambient];
            v[i] = Rational::one();
            s.insert(v);
        }
        s
    }

    pub fn from_spanning<I>(ambient: usize, vectors: I) -> Subspace
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Insert a vector, returning true when it enlarged the span.
    pub fn insert(&mut self, mut v: Vec<Rational>) -> bool {
        assert_eq!(v.len(), self.ambient, "ambient dimension mismatch");
        self.reduce_in_place(&mut v);
        let Some(j) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[j].recip();
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        // clear the new pivot column in the existing rows
        for row in self.rows.iter_mut() {
            if !row[j].is_zero() {
                let c = row[j].clone();
                for (rx, vx) in row.iter_mut().zip(v.iter()) {
                    if !vx.is_zero() {
                        *rx = &*rx - &(&c * vx);
                    }
                }
            }
        }
        let pos = self.pivots.partition_point(|&p| p < j);
        self.pivots.insert(pos, j);
        self.rows.insert(pos, v);
        true
    }

    fn reduce_in_place(&self, v: &mut [Rational]) {
        for (row, &p) in self.rows.iter().zip(self.pivots.iter()) {
            if !v[p].is_zero() {
                let c = v[p].clone();
                for (vx, rx) in v.iter_mut().zip(row.iter()) {
                    if !rx.is_zero() {
                        *vx = &*vx - &(&c * rx);
                    }
                }
            }
        }
    }

    /// The residue of `v` modulo the subspace (pivot coordinates eliminated).
    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        self.reduce_in_place(&mut w);
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the span.
    pub fn coords(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Indices of the non-pivot coordinates, in increasing order.  These are
    /// the deterministic complement convention used everywhere for quotients.
    pub fn complement_indices(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.ambient - self.rows.len());
        let mut it = self.pivots.iter().peekable();
        for j in 0..self.ambient {
            if it.peek() == Some(&&j) {
                it.next();
            } else {
                out.push(j);
            }
        }
        out
    }

    /// Coordinates of `v` in the complement basis of the subspace.
    pub fn quotient_coords(&self, v: &[Rational]) -> Vec<Rational> {
        let w = self.reduce(v);
        self.complement_indices()
            .into_iter()
            .map(|j| w[j].clone())
            .collect()
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for r in other.basis() {
            s.insert(r.clone());
        }
        s
    }
}

/// Spec-level operation: coordinates of `v` in the fixed complement of `sub`.
pub fn quotient_coords(ambient: usize, sub: &Subspace, v: &[Rational]) -> Result<Vec<Rational>> {
    if sub.ambient_dim() != ambient || v.len() != ambient {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            got: if sub.ambient_dim() != ambient {
                sub.ambient_dim()
            } else {
                v.len()
            },
            context: "quotient_coords",
        });
    }
    Ok(sub.quotient_coords(v))
}

#[cfg(test)]
mod tests {
    use super::super::rat::rat;
    use super::*;

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| Rational::from_int(x)).collect()
    }

    #[test]
    fn quotient_coords_examples() {
        // ambient 2, sub = span{(1,0)}, v = (3,5) -> (5)
        let sub = Subspace::from_spanning(2, vec![v(&[1, 0])]);
        assert_eq!(quotient_coords(2, &sub, &v(&[3, 5])).unwrap(), v(&[5]));
        // v in sub -> zero vector
        assert_eq!(quotient_coords(2, &sub, &v(&[4, 0])).unwrap(), v(&[0]));
        // sub = 0 -> identity
        let zero = Subspace::zero(2);
        assert_eq!(quotient_coords(2, &zero, &v(&[1, 2])).unwrap(), v(&[1, 2]));
        // dimension mismatch
        assert!(quotient_coords(3, &sub, &v(&[1, 2, 3])).is_err());
    }

    #[test]
    fn rref_invariants() {
        let mut s = Subspace::zero(3);
        assert!(s.insert(v(&[2, 4, 6])));
        assert!(s.insert(v(&[0, 0, 5])));
        assert!(!s.insert(v(&[2, 4, 1])));
        assert_eq!(s.dim(), 2);
        // rows normalized and reduced: first row is (1,2,0)
        assert_eq!(s.basis()[0], [rat(1, 1), rat(2, 1), rat(0, 1)]);
        assert_eq!(s.pivots(), &[0, 2]);
        assert_eq!(s.complement_indices(), vec![1]);
        let c = s.coords(&v(&[2, 4, 6])).unwrap();
        assert_eq!(c, v(&[2, 6]));
    }
}
