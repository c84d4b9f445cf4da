//! Exact rational scalar and sparse linear algebra kernel.
//!
//! Everything downstream reduces to ranks, kernels and quotients over these
//! types.  All values are immutable after construction and the operations
//! are pure, so they are safe to use from multiple threads.

pub mod mat;
pub mod matrix;
pub mod rat;
pub mod subspace;

pub use mat::Mat;
pub use matrix::{rref_with_transform, SparseMatrix};
pub use rat::{canonicalize, rat, Rational};
pub use subspace::{quotient_coords, Subspace};

/// Sparse coordinate vector: sorted, duplicate-free, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

/// Normalize arbitrary (index, value) pairs into a canonical sparse vector.
pub fn sparse_normalize(mut pairs: Vec<(usize, Rational)>) -> SparseVec {
    pairs.sort_by_key(|&(i, _)| i);
    let mut out: SparseVec = Vec::with_capacity(pairs.len());
    for (i, v) in pairs {
        match out.last_mut() {
            Some((j, w)) if *j == i => *w = &*w + &v,
            _ => out.push((i, v)),
        }
    }
    out.retain(|(_, v)| !v.is_zero());
    out
}

pub fn sparse_to_dense(dim: usize, v: &SparseVec) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

pub fn dense_to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

/// d += c * s, accumulating a sparse vector into a dense buffer.
pub fn sparse_axpy(d: &mut [Rational], c: &Rational, s: &SparseVec) {
    if c.is_zero() {
        return;
    }
    for (i, x) in s {
        d[*i] = &d[*i] + &(c * x);
    }
}
