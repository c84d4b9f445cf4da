//! Small standard Jordan algebras used throughout the tests and reports.

use super::JordanAlgebra;
use crate::exactlin::{rat, Rational, SparseVec};

/// The ground field as a one-dimensional Jordan algebra.
pub fn field() -> JordanAlgebra {
    JordanAlgebra::from_products(
        1,
        0,
        vec!["1".into()],
        vec![(0, 0, vec![(0, Rational::one())])],
        Some(vec![0]),
        Some(vec![]),
    )
    .expect("field fixture")
}

/// K[t]/(t^N) with basis 1, t, ..., t^(N-1), graded by t-degree and
/// augmented by the positive part.
pub fn truncated_polynomial(n: usize) -> JordanAlgebra {
    assert!(n >= 1);
    let names = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "t".to_string(),
            _ => format!("t^{i}"),
        })
        .collect();
    let mut products = Vec::new();
    for i in 0..n {
        for j in i..n {
            let v: SparseVec = if i + j < n {
                vec![(i + j, Rational::one())]
            } else {
                Vec::new()
            };
            products.push((i, j, v));
        }
    }
    JordanAlgebra::from_products(
        n,
        0,
        names,
        products,
        Some((0..n as u32).collect()),
        Some((1..n).collect()),
    )
    .expect("truncated polynomial fixture")
}

/// Symmetric 3x3 matrices under a o b = (ab + ba)/2.  The basis starts with
/// the identity so that the unit is a basis vector.
pub fn sym3() -> JordanAlgebra {
    type M3 = [[Rational; 3]; 3];

    fn zeros() -> M3 {
        std::array::from_fn(|_| std::array::from_fn(|_| Rational::zero()))
    }

    fn basis_matrix(idx: usize) -> M3 {
        let mut m = zeros();
        match idx {
            0 => {
                for i in 0..3 {
                    m[i][i] = Rational::one();
                }
            }
            1 => m[1][1] = Rational::one(),
            2 => m[2][2] = Rational::one(),
            3 => {
                m[0][1] = Rational::one();
                m[1][0] = Rational::one();
            }
            4 => {
                m[0][2] = Rational::one();
                m[2][0] = Rational::one();
            }
            5 => {
                m[1][2] = Rational::one();
                m[2][1] = Rational::one();
            }
            _ => unreachable!(),
        }
        m
    }

    fn jordan_product(a: &M3, b: &M3) -> M3 {
        let mut m = zeros();
        let half = rat(1, 2);
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Rational::zero();
                for k in 0..3 {
                    acc = &acc + &(&a[i][k] * &b[k][j]);
                    acc = &acc + &(&b[i][k] * &a[k][j]);
                }
                m[i][j] = &acc * &half;
            }
        }
        m
    }

    fn coords(m: &M3) -> Vec<Rational> {
        let alpha = m[0][0].clone();
        vec![
            alpha.clone(),
            &m[1][1] - &alpha,
            &m[2][2] - &alpha,
            m[0][1].clone(),
            m[0][2].clone(),
            m[1][2].clone(),
        ]
    }

    let names = vec![
        "1".to_string(),
        "e22".to_string(),
        "e33".to_string(),
        "s12".to_string(),
        "s13".to_string(),
        "s23".to_string(),
    ];
    let mut products = Vec::new();
    for i in 0..6 {
        for j in i..6 {
            let p = jordan_product(&basis_matrix(i), &basis_matrix(j));
            let v: SparseVec = coords(&p)
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(k, x)| (k, x))
                .collect();
            products.push((i, j, v));
        }
    }
    JordanAlgebra::from_products(6, 0, names, products, None, None).expect("sym3 fixture")
}
