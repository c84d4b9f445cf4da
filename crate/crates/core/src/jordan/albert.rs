//! The 27-dimensional exceptional Jordan algebra of 3x3 Hermitian matrices
//! over the split octonions, realized with Zorn vector matrices.

use super::JordanAlgebra;
use crate::exactlin::{rat, Rational, SparseVec};

/// Split octonion as a Zorn vector matrix [[a, v], [w, b]] with a, b scalars
/// and v, w in K^3.  Coordinates: (a, v1, v2, v3, w1, w2, w3, b).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Octonion {
    pub a: Rational,
    pub v: [Rational; 3],
    pub w: [Rational; 3],
    pub b: Rational,
}

fn dot(x: &[Rational; 3], y: &[Rational; 3]) -> Rational {
    let mut acc = Rational::zero();
    for i in 0..3 {
        acc = &acc + &(&x[i] * &y[i]);
    }
    acc
}

fn cross(x: &[Rational; 3], y: &[Rational; 3]) -> [Rational; 3] {
    [
        &(&x[1] * &y[2]) - &(&x[2] * &y[1]),
        &(&x[2] * &y[0]) - &(&x[0] * &y[2]),
        &(&x[0] * &y[1]) - &(&x[1] * &y[0]),
    ]
}

impl Octonion {
    pub fn zero() -> Octonion {
        Octonion {
            a: Rational::zero(),
            v: std::array::from_fn(|_| Rational::zero()),
            w: std::array::from_fn(|_| Rational::zero()),
            b: Rational::zero(),
        }
    }

    pub fn one() -> Octonion {
        let mut o = Octonion::zero();
        o.a = Rational::one();
        o.b = Rational::one();
        o
    }

    pub fn unit(k: usize) -> Octonion {
        let mut o = Octonion::zero();
        match k {
            0 => o.a = Rational::one(),
            1..=3 => o.v[k - 1] = Rational::one(),
            4..=6 => o.w[k - 4] = Rational::one(),
            7 => o.b = Rational::one(),
            _ => panic!("octonion unit index out of range"),
        }
        o
    }

    pub fn coords(&self) -> [Rational; 8] {
        [
            self.a.clone(),
            self.v[0].clone(),
            self.v[1].clone(),
            self.v[2].clone(),
            self.w[0].clone(),
            self.w[1].clone(),
            self.w[2].clone(),
            self.b.clone(),
        ]
    }

    pub fn add(&self, o: &Octonion) -> Octonion {
        Octonion {
            a: &self.a + &o.a,
            v: std::array::from_fn(|i| &self.v[i] + &o.v[i]),
            w: std::array::from_fn(|i| &self.w[i] + &o.w[i]),
            b: &self.b + &o.b,
        }
    }

    pub fn scale(&self, c: &Rational) -> Octonion {
        Octonion {
            a: &self.a * c,
            v: std::array::from_fn(|i| &self.v[i] * c),
            w: std::array::from_fn(|i| &self.w[i] * c),
            b: &self.b * c,
        }
    }

    /// Zorn multiplication.
    pub fn mul(&self, o: &Octonion) -> Octonion {
        let wxw = cross(&self.w, &o.w);
        let vxv = cross(&self.v, &o.v);
        Octonion {
            a: &(&self.a * &o.a) + &dot(&self.v, &o.w),
            v: std::array::from_fn(|i| {
                &(&(&self.a * &o.v[i]) + &(&o.b * &self.v[i])) - &wxw[i]
            }),
            w: std::array::from_fn(|i| {
                &(&(&o.a * &self.w[i]) + &(&self.b * &o.w[i])) + &vxv[i]
            }),
            b: &(&self.b * &o.b) + &dot(&self.w, &o.v),
        }
    }

    pub fn conj(&self) -> Octonion {
        Octonion {
            a: self.b.clone(),
            v: std::array::from_fn(|i| -&self.v[i]),
            w: std::array::from_fn(|i| -&self.w[i]),
            b: self.a.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero()
            && self.b.is_zero()
            && self.v.iter().all(|x| x.is_zero())
            && self.w.iter().all(|x| x.is_zero())
    }

    /// Norm form N(x) = ab - v.w; multiplicative for Zorn matrices.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.b) - &dot(&self.v, &self.w)
    }
}

/// Hermitian 3x3 matrix over the octonions: scalar diagonal and upper
/// entries at (0,1), (0,2), (1,2); the lower entries are conjugates.
#[derive(Clone, Debug)]
struct Herm {
    diag: [Rational; 3],
    off: [Octonion; 3],
}

const SLOTS: [(usize, usize); 3] = [(0, 1), (0, 2), (1, 2)];

impl Herm {
    fn zero() -> Herm {
        Herm {
            diag: std::array::from_fn(|_| Rational::zero()),
            off: std::array::from_fn(|_| Octonion::zero()),
        }
    }

    fn entry(&self, i: usize, j: usize) -> Octonion {
        if i == j {
            let mut o = Octonion::one();
            o = o.scale(&self.diag[i]);
            return o;
        }
        for (s, &(p, q)) in SLOTS.iter().enumerate() {
            if (i, j) == (p, q) {
                return self.off[s].clone();
            }
            if (j, i) == (p, q) {
                return self.off[s].conj();
            }
        }
        unreachable!()
    }

    /// X o Y = (XY + YX)/2 entrywise over the octonions.  The result must be
    /// Hermitian with scalar diagonal; both are asserted.
    fn jordan_product(&self, other: &Herm) -> Herm {
        let half = rat(1, 2);
        let mut full: Vec<Vec<Octonion>> = vec![vec![Octonion::zero(); 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let mut acc = Octonion::zero();
                for k in 0..3 {
                    acc = acc.add(&self.entry(i, k).mul(&other.entry(k, j)));
                    acc = acc.add(&other.entry(i, k).mul(&self.entry(k, j)));
                }
                full[i][j] = acc.scale(&half);
            }
        }
        let mut out = Herm::zero();
        for i in 0..3 {
            let d = &full[i][i];
            assert!(
                d.v.iter().all(|x| x.is_zero()) && d.w.iter().all(|x| x.is_zero()) && d.a == d.b,
                "diagonal of a Hermitian product must be scalar"
            );
            out.diag[i] = d.a.clone();
        }
        for (s, &(p, q)) in SLOTS.iter().enumerate() {
            let upper = full[p][q].clone();
            let lower = full[q][p].clone();
            assert!(
                upper.conj() == lower,
                "product of Hermitian matrices must be Hermitian"
            );
            out.off[s] = upper;
        }
        out
    }

    fn coords(&self) -> Vec<Rational> {
        // basis: 1 = identity, e22, e33, then octonion units per slot
        let a0 = self.diag[0].clone();
        let mut out = vec![
            a0.clone(),
            &self.diag[1] - &a0,
            &self.diag[2] - &a0,
        ];
        for s in 0..3 {
            out.extend(self.off[s].coords());
        }
        out
    }
}

fn basis_herm(idx: usize) -> Herm {
    let mut h = Herm::zero();
    match idx {
        0 => {
            for i in 0..3 {
                h.diag[i] = Rational::one();
            }
        }
        1 => h.diag[1] = Rational::one(),
        2 => h.diag[2] = Rational::one(),
        _ => {
            let s = (idx - 3) / 8;
            let u = (idx - 3) % 8;
            h.off[s] = Octonion::unit(u);
        }
    }
    h
}

/// The Albert algebra: 27-dimensional, unital, exceptional.  Basis order is
/// 1, e22, e33 followed by the eight octonion coordinates of the slots
/// (0,1), (0,2), (1,2).
pub fn albert_algebra() -> JordanAlgebra {
    let mut names = vec!["1".to_string(), "e22".to_string(), "e33".to_string()];
    for (p, q) in SLOTS {
        for u in 0..8 {
            names.push(format!("x{}{}_{u}", p + 1, q + 1));
        }
    }
    let mut products = Vec::new();
    for i in 0..27 {
        let bi = basis_herm(i);
        for j in i..27 {
            let p = bi.jordan_product(&basis_herm(j));
            let v: SparseVec = p
                .coords()
                .into_iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .collect();
            products.push((i, j, v));
        }
    }
    JordanAlgebra::from_products(27, 0, names, products, None, None).expect("albert fixture")
}
