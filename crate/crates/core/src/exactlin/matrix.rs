//! Sparse matrices over the rationals with fraction-free rank.

use super::rat::Rational;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use num::{BigInt, One, Zero};

/// Sparse matrix in canonical row-major entry order with no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<(usize, usize, Rational)>,
}

impl SparseMatrix {
    pub fn zero(rows: usize, cols: usize) -> SparseMatrix {
        SparseMatrix {
            rows,
            cols,
            entries: Vec::new(),
        }
    }

    pub fn identity(n: usize) -> SparseMatrix {
        SparseMatrix {
            rows: n,
            cols: n,
            entries: (0..n).map(|i| (i, i, Rational::one())).collect(),
        }
    }

    /// Build from (row, col, value) triplets; duplicates are summed and zeros
    /// dropped so that equality is structural.
    pub fn from_triplets(
        rows: usize,
        cols: usize,
        triplets: impl IntoIterator<Item = (usize, usize, Rational)>,
    ) -> Result<SparseMatrix> {
        let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
        for (r, c, v) in triplets {
            if r >= rows {
                return Err(Error::IndexOutOfRange { index: r, dim: rows });
            }
            if c >= cols {
                return Err(Error::IndexOutOfRange { index: c, dim: cols });
            }
            entries.push((r, c, v));
        }
        entries.sort_by_key(|&(r, c, _)| (r, c));
        let mut merged: Vec<(usize, usize, Rational)> = Vec::with_capacity(entries.len());
        for (r, c, v) in entries {
            match merged.last_mut() {
                Some((lr, lc, lv)) if *lr == r && *lc == c => *lv = &*lv + &v,
                _ => merged.push((r, c, v)),
            }
        }
        merged.retain(|(_, _, v)| !v.is_zero());
        Ok(SparseMatrix {
            rows,
            cols,
            entries: merged,
        })
    }

    pub fn from_dense_rows(rows: Vec<Vec<Rational>>) -> SparseMatrix {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        let triplets = rows.into_iter().enumerate().flat_map(|(i, row)| {
            row.into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(move |(j, v)| (i, j, v))
        });
        SparseMatrix::from_triplets(r, c, triplets).expect("indices in range by construction")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[(usize, usize, Rational)] {
        &self.entries
    }

    pub fn to_dense_rows(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (r, c, v) in &self.entries {
            out[*r][*c] = v.clone();
        }
        out
    }

    pub fn transpose(&self) -> SparseMatrix {
        let triplets = self.entries.iter().map(|(r, c, v)| (*c, *r, v.clone()));
        SparseMatrix::from_triplets(self.cols, self.rows, triplets).expect("in range")
    }

    /// Rank over the rationals by fraction-free (Bareiss) elimination on the
    /// integer matrix obtained by clearing denominators row by row.  Pivot
    /// rows are chosen by minimal entry bit length to control growth.
    pub fn rank(&self) -> usize {
        let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(self.rows);
        for row in self.to_dense_rows() {
            let mut lcm = BigInt::one();
            for x in &row {
                let d = x.denom();
                lcm = num::integer::lcm(lcm, d);
            }
            m.push(
                row.iter()
                    .map(|x| x.numer() * (&lcm / x.denom()))
                    .collect(),
            );
        }
        bareiss_rank(&mut m)
    }

    /// Basis of the right null space; dim = cols - rank.
    pub fn kernel_basis(&self) -> Subspace {
        let row_space = Subspace::from_spanning(self.cols, self.to_dense_rows());
        let pivots = row_space.pivots().to_vec();
        let free = row_space.complement_indices();
        let mut kernel_vectors = Vec::with_capacity(free.len());
        for &f in &free {
            let mut v = vec![Rational::zero(); self.cols];
            v[f] = Rational::one();
            for (row, &p) in row_space.basis().iter().zip(pivots.iter()) {
                v[p] = -&row[f];
            }
            kernel_vectors.push(v);
        }
        Subspace::from_spanning(self.cols, kernel_vectors)
    }

    pub fn mat_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        let mut out = vec![Rational::zero(); self.rows];
        for (r, c, x) in &self.entries {
            if !v[*c].is_zero() {
                out[*r] = &out[*r] + &(x * &v[*c]);
            }
        }
        out
    }
}

fn bareiss_rank(m: &mut [Vec<BigInt>]) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut row_start = 0;
    for col in 0..cols {
        // pivot: nonzero entry of minimal bit length in this column
        let mut pivot: Option<(usize, u64)> = None;
        for r in row_start..rows {
            if !m[r][col].is_zero() {
                let bits = m[r][col].bits();
                if pivot.map_or(true, |(_, b)| bits < b) {
                    pivot = Some((r, bits));
                }
            }
        }
        let Some((p, _)) = pivot else { continue };
        m.swap(row_start, p);
        let pivot_val = m[row_start][col].clone();
        for r in row_start + 1..rows {
            if m[r].iter().skip(col).all(|x| x.is_zero()) {
                continue;
            }
            let head = m[r][col].clone();
            for c in col..cols {
                let t = &pivot_val * &m[r][c] - &head * &m[row_start][c];
                m[r][c] = &t / &prev; // exact by the Bareiss identity
            }
        }
        prev = pivot_val;
        row_start += 1;
        rank += 1;
        if row_start == rows {
            break;
        }
    }
    rank
}

/// Reduced row echelon form with the recorded row transform, so tests can
/// re-multiply the factors against the input.  Dense; intended for small
/// matrices and randomized exactness checks.
pub fn rref_with_transform(rows: &[Vec<Rational>]) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
    let n = rows.len();
    let cols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut a: Vec<Vec<Rational>> = rows.to_vec();
    let mut t: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            let mut row = vec![Rational::zero(); n];
            row[i] = Rational::one();
            row
        })
        .collect();
    let mut lead = 0;
    for col in 0..cols {
        if lead == n {
            break;
        }
        let Some(p) = (lead..n).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(lead, p);
        t.swap(lead, p);
        let inv = a[lead][col].recip();
        for x in a[lead].iter_mut() {
            *x = &*x * &inv;
        }
        for x in t[lead].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..n {
            if r != lead && !a[r][col].is_zero() {
                let c = a[r][col].clone();
                for j in 0..cols {
                    let s = &(&c * &a[lead][j]);
                    a[r][j] = &a[r][j] - s;
                }
                for j in 0..n {
                    let s = &(&c * &t[lead][j]);
                    t[r][j] = &t[r][j] - s;
                }
            }
        }
        lead += 1;
    }
    (a, t)
}

#[cfg(test)]
mod tests {
    use super::super::rat::{rat, Rational};
    use super::*;
    use proptest::prelude::*;

    fn dense(rows: &[&[i64]]) -> SparseMatrix {
        SparseMatrix::from_dense_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rank_examples() {
        assert_eq!(SparseMatrix::identity(3).rank(), 3);
        assert_eq!(dense(&[&[1, 2], &[2, 4]]).rank(), 1);
        assert_eq!(SparseMatrix::zero(4, 5).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        let k = dense(&[&[1, 2], &[2, 4]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        // span{(-2, 1)} up to scaling; canonical form is (1, -1/2)
        assert_eq!(k.basis()[0], vec![rat(1, 1), rat(-1, 2)]);
        assert!(k.contains(&[rat(-2, 1), rat(1, 1)]));

        assert_eq!(SparseMatrix::identity(3).kernel_basis().dim(), 0);
        assert_eq!(SparseMatrix::zero(2, 3).kernel_basis().dim(), 3);
    }

    #[test]
    fn transform_reproduces_input() {
        let rows = vec![
            vec![rat(2, 3), rat(1, 1), rat(0, 1)],
            vec![rat(1, 1), rat(1, 2), rat(5, 1)],
        ];
        let (r, t) = rref_with_transform(&rows);
        // t * rows == r, entry by entry
        for i in 0..rows.len() {
            for j in 0..3 {
                let mut acc = Rational::zero();
                for k in 0..rows.len() {
                    acc = &acc + &(&t[i][k] * &rows[k][j]);
                }
                assert_eq!(acc, r[i][j]);
            }
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_plus_nullity(rows in 1usize..6, cols in 1usize..6, seed in proptest::collection::vec(-6i64..6, 36)) {
            let data: Vec<Vec<Rational>> = (0..rows)
                .map(|i| (0..cols).map(|j| Rational::from_int(seed[i * cols + j])).collect())
                .collect();
            let m = SparseMatrix::from_dense_rows(data);
            prop_assert_eq!(m.rank() + m.kernel_basis().dim(), m.cols());
        }

        #[test]
        fn kernel_vectors_annihilate(rows in 1usize..5, cols in 1usize..6, seed in proptest::collection::vec(-5i64..5, 30)) {
            let data: Vec<Vec<Rational>> = (0..rows)
                .map(|i| (0..cols).map(|j| Rational::from_int(seed[i * cols + j])).collect())
                .collect();
            let m = SparseMatrix::from_dense_rows(data);
            for v in m.kernel_basis().basis() {
                prop_assert!(m.mat_vec(v).iter().all(|x| x.is_zero()));
            }
        }
    }
}
