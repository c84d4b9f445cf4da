//! Independent reference constructions used only to cross-check the main
//! computation paths in tests.  Nothing here is consumed by the library
//! code itself; each oracle recomputes its answer from first principles.

use crate::exactlin::{Mat, Rational, Subspace};
use crate::jordan::JordanAlgebra;

/// Graded dimensions of the multiplication algebra of a graded J: the
/// unital subalgebra of End(J) generated by the left multiplications,
/// closed degree by degree under composition.
pub fn multiplication_algebra_graded_dims(j: &JordanAlgebra, cap: usize) -> Vec<usize> {
    let grading = j.grading().expect("graded algebra");
    let n2 = j.dim() * j.dim();
    let mut spaces: Vec<Subspace> = (0..=cap).map(|_| Subspace::zero(n2)).collect();
    spaces[0].insert(Mat::identity(j.dim()).flatten());
    for i in 0..j.dim() {
        let d = grading[i] as usize;
        if d <= cap {
            spaces[d].insert(j.left_mul_matrix(&j.basis_vector(i)).flatten());
        }
    }
    // close under products until stable
    loop {
        let mut grew = false;
        for d in 0..=cap {
            for a in 1..=d {
                let b = d - a;
                let left: Vec<Vec<Rational>> = spaces[a].basis().to_vec();
                let right: Vec<Vec<Rational>> = spaces[b].basis().to_vec();
                for u in &left {
                    let mu = unflatten(j.dim(), u);
                    for v in &right {
                        let mv = unflatten(j.dim(), v);
                        if spaces[d].insert(mu.mul(&mv).flatten()) {
                            grew = true;
                        }
                    }
                }
            }
        }
        if !grew {
            break;
        }
    }
    spaces.iter().map(|s| s.dim()).collect()
}

fn unflatten(n: usize, v: &[Rational]) -> Mat {
    Mat::from_fn(n, n, |i, j| v[i * n + j].clone())
}

/// Graded dimensions of the associative envelope of K[t]/(t^m), which is
/// the algebra itself: one dimension per degree below m.
pub fn poly_quotient_graded_dims(m: usize, cap: usize) -> Vec<usize> {
    (0..=cap).map(|d| usize::from(d < m)).collect()
}

/// Kaehler-differential oracle for the central term of an associative
/// commutative J: computes dim of Omega^1_J / dJ as the cokernel data of
/// the Leibniz relations, for comparison with dim {J,J}.
pub fn kahler_forms_modulo_exact_dim(j: &JordanAlgebra) -> usize {
    let d = j.dim();
    // coordinates on J (x) J, index a * d + b meaning a db
    let mut relations = Subspace::zero(d * d);
    // Leibniz: a d(bc) = a b dc + a c db for basis a, b, c
    for a in 0..d {
        for b in 0..d {
            for c in b..d {
                let mut row = vec![Rational::zero(); d * d];
                for (k, x) in j.mul_basis(b, c) {
                    row[a * d + k] = &row[a * d + k] + x;
                }
                for (k, x) in j.mul_basis(a, b) {
                    row[k * d + c] = &row[k * d + c] - x;
                }
                for (k, x) in j.mul_basis(a, c) {
                    row[k * d + b] = &row[k * d + b] - x;
                }
                relations.insert(row);
            }
        }
    }
    // exact forms: 1 db
    let unit = j.unit_index();
    let mut exact_and_relations = relations.clone();
    for b in 0..d {
        let mut row = vec![Rational::zero(); d * d];
        row[unit * d + b] = Rational::one();
        exact_and_relations.insert(row);
    }
    (d * d - relations.dim()) - (d * d - exact_and_relations.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::truncated_polynomial;

    #[test]
    fn multiplication_algebra_of_poly_quotient() {
        for m in 2..=5 {
            let j = truncated_polynomial(m);
            let dims = multiplication_algebra_graded_dims(&j, m);
            let expect: Vec<usize> = (0..=m).map(|d| usize::from(d < m)).collect();
            assert_eq!(dims, expect, "m = {m}");
        }
    }

    #[test]
    fn kahler_oracle_on_poly_quotients() {
        // Omega^1 / dJ = 0 for K[t]/(t^N)
        for n in 1..=5 {
            assert_eq!(kahler_forms_modulo_exact_dim(&truncated_polynomial(n)), 0);
        }
    }
}
