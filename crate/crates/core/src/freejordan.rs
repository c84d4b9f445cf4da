//! Graded components of the free unital Jordan algebra J(D): monomial
//! enumeration, the degree-n component of the T-ideal of the Jordan
//! identity, dimension tables, and truncated structure-constant algebras
//! J(D)/J+^N.

use crate::error::Result;
use crate::exactlin::{Rational, SparseVec, Subspace};
use crate::jordan::JordanAlgebra;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

/// Commutative nonassociative monomial: a binary product tree in canonical
/// form (left child <= right child at every node).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Monomial {
    Gen(u32),
    Prod(Rc<Monomial>, Rc<Monomial>),
}

impl Monomial {
    pub fn degree(&self) -> usize {
        match self {
            Monomial::Gen(_) => 1,
            Monomial::Prod(a, b) => a.degree() + b.degree(),
        }
    }

    /// Canonical product of two canonical monomials.
    pub fn product(a: &Rc<Monomial>, b: &Rc<Monomial>) -> Monomial {
        if a.as_ref() <= b.as_ref() {
            Monomial::Prod(a.clone(), b.clone())
        } else {
            Monomial::Prod(b.clone(), a.clone())
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| match (self, other) {
                (Monomial::Gen(i), Monomial::Gen(j)) => i.cmp(j),
                (Monomial::Prod(a1, b1), Monomial::Prod(a2, b2)) => {
                    a1.cmp(a2).then_with(|| b1.cmp(b2))
                }
                // unequal degrees are handled above; a leaf never ties with
                // a product
                (Monomial::Gen(_), Monomial::Prod(..)) => Ordering::Less,
                (Monomial::Prod(..), Monomial::Gen(_)) => Ordering::Greater,
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Monomial::Gen(i) => write!(f, "x{}", i + 1),
            Monomial::Prod(a, b) => write!(f, "({a}*{b})"),
        }
    }
}

/// Degree-n component of the T-ideal of the Jordan identity inside the span
/// of the degree-n monomials.
#[derive(Clone, Debug)]
pub struct RelationSpace {
    pub degree: usize,
    pub space: Subspace,
}

/// Enumerates monomials and relation spaces degree by degree, with caching;
/// all outputs are deterministic.
pub struct FreeJordan {
    gens: u32,
    monomials: Vec<Vec<Rc<Monomial>>>,
    index: Vec<HashMap<Monomial, usize>>,
    relations: Vec<Option<RelationSpace>>,
}

impl FreeJordan {
    pub fn new(gens: u32) -> FreeJordan {
        assert!(gens >= 1);
        FreeJordan {
            gens,
            monomials: vec![Vec::new()],
            index: vec![HashMap::new()],
            relations: vec![None],
        }
    }

    pub fn gens(&self) -> u32 {
        self.gens
    }

    /// All canonical monomials of the given degree, sorted.
    pub fn monomials(&mut self, degree: usize) -> &[Rc<Monomial>] {
        self.ensure_monomials(degree);
        &self.monomials[degree]
    }

    fn ensure_monomials(&mut self, degree: usize) {
        while self.monomials.len() <= degree {
            let n = self.monomials.len();
            let mut list: Vec<Rc<Monomial>> = Vec::new();
            if n == 1 {
                for g in 0..self.gens {
                    list.push(Rc::new(Monomial::Gen(g)));
                }
            } else {
                for d in 1..=n / 2 {
                    let e = n - d;
                    for (i, u) in self.monomials[d].iter().enumerate() {
                        let vs = &self.monomials[e];
                        let start = if d == e { i } else { 0 };
                        for v in &vs[start..] {
                            list.push(Rc::new(Monomial::Prod(u.clone(), v.clone())));
                        }
                    }
                }
            }
            list.sort_by(|a, b| a.cmp(b));
            let index: HashMap<Monomial, usize> = list
                .iter()
                .enumerate()
                .map(|(i, m)| ((**m).clone(), i))
                .collect();
            self.monomials.push(list);
            self.index.push(index);
        }
    }

    pub fn monomial_index(&mut self, m: &Monomial) -> usize {
        let d = m.degree();
        self.ensure_monomials(d);
        self.index[d][m]
    }

    /// The fully multilinearized Jordan identity evaluated at monomials
    /// (u1, u2, u3; y): sum over permutations p of (1,2,3) of
    /// ((u_p1 u_p2) y) u_p3 - (u_p1 u_p2)(y u_p3), as a sparse vector in
    /// the monomial coordinates of the total degree.
    fn identity_instance(
        &mut self,
        u: [&Rc<Monomial>; 3],
        y: &Rc<Monomial>,
    ) -> Vec<(usize, i64)> {
        let perms = [
            (0, 1, 2),
            (0, 2, 1),
            (1, 0, 2),
            (1, 2, 0),
            (2, 0, 1),
            (2, 1, 0),
        ];
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for (a, b, c) in perms {
            let uab = Rc::new(Monomial::product(u[a], u[b]));
            let t1 = Monomial::product(&Rc::new(Monomial::product(&uab, y)), u[c]);
            let t2 = Monomial::product(&uab, &Rc::new(Monomial::product(y, u[c])));
            *acc.entry(self.monomial_index(&t1)).or_insert(0) += 1;
            *acc.entry(self.monomial_index(&t2)).or_insert(0) -= 1;
        }
        let mut out: Vec<(usize, i64)> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        out.sort_by_key(|&(i, _)| i);
        out
    }

    /// Degree-n component of the T-ideal: substitution instances of the
    /// multilinearized identity plus monomials times lower components.
    pub fn relation_space(&mut self, degree: usize) -> &RelationSpace {
        self.ensure_relations(degree);
        self.relations[degree].as_ref().unwrap()
    }

    fn ensure_relations(&mut self, degree: usize) {
        while self.relations.len() <= degree {
            let n = self.relations.len();
            self.ensure_monomials(n);
            let dim = self.monomials[n].len();
            let mut space = Subspace::zero(dim);
            if n >= 4 {
                // substitution instances: multisets {u1 <= u2 <= u3} and y
                // with degrees summing to n
                let mut pool: Vec<Rc<Monomial>> = Vec::new();
                for d in 1..=n - 3 {
                    pool.extend(self.monomials(d).iter().cloned());
                }
                let p = pool.len();
                for i1 in 0..p {
                    let d1 = pool[i1].degree();
                    if d1 + 3 > n {
                        continue;
                    }
                    for i2 in i1..p {
                        let d2 = pool[i2].degree();
                        if d1 + d2 + 2 > n {
                            continue;
                        }
                        for i3 in i2..p {
                            let d3 = pool[i3].degree();
                            let dy = n as i64 - (d1 + d2 + d3) as i64;
                            if dy < 1 {
                                continue;
                            }
                            let ys: Vec<Rc<Monomial>> =
                                self.monomials(dy as usize).to_vec();
                            let (u1, u2, u3) =
                                (pool[i1].clone(), pool[i2].clone(), pool[i3].clone());
                            for y in ys {
                                let inst = self.identity_instance([&u1, &u2, &u3], &y);
                                let mut v = vec![Rational::zero(); dim];
                                for (idx, c) in inst {
                                    v[idx] = Rational::from_int(c);
                                }
                                space.insert(v);
                            }
                        }
                    }
                }
                // ideal closure: monomial * relation for lower degrees
                for d in 4..n {
                    let basis: Vec<Vec<Rational>> = self.relations[d]
                        .as_ref()
                        .unwrap()
                        .space
                        .basis()
                        .to_vec();
                    let lower: Vec<Rc<Monomial>> = self.monomials(d).to_vec();
                    let ms: Vec<Rc<Monomial>> = self.monomials(n - d).to_vec();
                    for r in &basis {
                        for m in &ms {
                            let mut v = vec![Rational::zero(); dim];
                            for (k, coeff) in r.iter().enumerate() {
                                if !coeff.is_zero() {
                                    let prod = Monomial::product(m, &lower[k]);
                                    let idx = self.monomial_index(&prod);
                                    v[idx] = &v[idx] + coeff;
                                }
                            }
                            space.insert(v);
                        }
                    }
                }
            }
            self.relations.push(Some(RelationSpace { degree: n, space }));
        }
    }

    /// dim J_n(D) = #monomials - rank of the relation component.
    pub fn dim_component(&mut self, degree: usize) -> usize {
        assert!(degree >= 1);
        self.ensure_monomials(degree);
        let total = self.monomials[degree].len();
        total - self.relation_space(degree).space.dim()
    }

    /// Quotient-basis monomials of J_n(D): the complement monomials of the
    /// relation space, in the deterministic non-pivot convention.
    pub fn component_basis(&mut self, degree: usize) -> Vec<Rc<Monomial>> {
        self.ensure_relations(degree);
        let rel = self.relations[degree].as_ref().unwrap();
        let comp = rel.space.complement_indices();
        comp.into_iter()
            .map(|i| self.monomials[degree][i].clone())
            .collect()
    }

    /// The truncation J(D)/J+^N as a unital graded Jordan algebra with the
    /// positive part as augmentation ideal.
    pub fn truncated_algebra(&mut self, cap: usize) -> Result<JordanAlgebra> {
        assert!(cap >= 1);
        // global basis: unit, then quotient bases degree by degree
        let mut global: Vec<(usize, usize)> = vec![(0, 0)]; // (degree, local index)
        let mut names = vec!["1".to_string()];
        let mut grading = vec![0u32];
        let mut local_offset: HashMap<usize, usize> = HashMap::new();
        for d in 1..cap {
            local_offset.insert(d, global.len());
            for (i, m) in self.component_basis(d).iter().enumerate() {
                global.push((d, i));
                names.push(m.to_string());
                grading.push(d as u32);
            }
        }
        let dim = global.len();
        let augmentation: Vec<usize> = (1..dim).collect();

        let mut products: Vec<(usize, usize, SparseVec)> = Vec::new();
        // unit row
        for t in 0..dim {
            products.push((0.min(t), 0.max(t), vec![(t, Rational::one())]));
        }
        for s in 1..dim {
            let (ds, is) = global[s];
            let ms = self.component_basis(ds)[is].clone();
            for t in s..dim {
                let (dt, it) = global[t];
                let mt = self.component_basis(dt)[it].clone();
                let d = ds + dt;
                if d >= cap {
                    products.push((s, t, Vec::new()));
                    continue;
                }
                let prod = Monomial::product(&ms, &mt);
                let idx = self.monomial_index(&prod);
                self.ensure_relations(d);
                let rel = self.relations[d].as_ref().unwrap();
                let mut unit_vec = vec![Rational::zero(); self.monomials[d].len()];
                unit_vec[idx] = Rational::one();
                let q = rel.space.quotient_coords(&unit_vec);
                let off = local_offset[&d];
                let v: SparseVec = q
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| (off + k, x))
                    .collect();
                products.push((s, t, v));
            }
        }
        JordanAlgebra::from_products(dim, 0, names, products, Some(grading), Some(augmentation))
    }
}

/// One-call versions of the spec-level operations.
pub fn monomials(gens: u32, degree: usize) -> Vec<Rc<Monomial>> {
    FreeJordan::new(gens).monomials(degree).to_vec()
}

pub fn jordan_relation_space(gens: u32, degree: usize) -> RelationSpace {
    FreeJordan::new(gens).relation_space(degree).clone()
}

pub fn dim_free_jordan(gens: u32, degree: usize) -> usize {
    FreeJordan::new(gens).dim_component(degree)
}

pub fn truncated_algebra(gens: u32, cap: usize) -> Result<JordanAlgebra> {
    FreeJordan::new(gens).truncated_algebra(cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::truncated_polynomial;

    #[test]
    fn monomial_counts() {
        let mut fj = FreeJordan::new(2);
        let m1: Vec<String> = fj.monomials(1).iter().map(|m| m.to_string()).collect();
        assert_eq!(m1, vec!["x1", "x2"]);
        assert_eq!(fj.monomials(2).len(), 3);
        assert_eq!(fj.monomials(3).len(), 6);
        // Wedderburn-Etherington counts for one generator
        let mut f1 = FreeJordan::new(1);
        let counts: Vec<usize> = (1..=7).map(|d| f1.monomials(d).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 3, 6, 11]);
    }

    #[test]
    fn relations_vanish_below_degree_four() {
        for gens in [1, 2, 3] {
            let mut fj = FreeJordan::new(gens);
            for d in 1..=3 {
                assert_eq!(fj.relation_space(d).space.dim(), 0, "D={gens}, d={d}");
            }
        }
    }

    #[test]
    fn one_generator_collapses() {
        let mut fj = FreeJordan::new(1);
        for n in 1..=6 {
            assert_eq!(fj.dim_component(n), 1, "dim J_{n}(1)");
        }
    }

    #[test]
    fn two_generator_low_degrees() {
        let mut fj = FreeJordan::new(2);
        assert_eq!(fj.dim_component(1), 2);
        assert_eq!(fj.dim_component(2), 3);
        assert_eq!(fj.dim_component(3), 6);
    }

    /// Independent oracle: the free Jordan algebra on two generators is
    /// special, so its graded dimensions match the span of the Jordan
    /// monomials evaluated inside the free associative algebra on x, y.
    #[test]
    fn two_generator_dims_match_associative_oracle() {
        fn assoc_mul(
            a: &HashMap<Vec<u8>, Rational>,
            b: &HashMap<Vec<u8>, Rational>,
        ) -> HashMap<Vec<u8>, Rational> {
            let mut out: HashMap<Vec<u8>, Rational> = HashMap::new();
            for (wa, ca) in a {
                for (wb, cb) in b {
                    let mut w = wa.clone();
                    w.extend_from_slice(wb);
                    let e = out.entry(w).or_insert_with(Rational::zero);
                    *e = &*e + &(ca * cb);
                }
            }
            out.retain(|_, c| !c.is_zero());
            out
        }
        fn jordan_mul(
            a: &HashMap<Vec<u8>, Rational>,
            b: &HashMap<Vec<u8>, Rational>,
        ) -> HashMap<Vec<u8>, Rational> {
            let half = Rational::frac(1, 2);
            let mut out = assoc_mul(a, b);
            for (w, c) in assoc_mul(b, a) {
                let e = out.entry(w).or_insert_with(Rational::zero);
                *e = &*e + &c;
            }
            out.retain(|_, c| !c.is_zero());
            for c in out.values_mut() {
                *c = &*c * &half;
            }
            out
        }
        fn evaluate(m: &Monomial) -> HashMap<Vec<u8>, Rational> {
            match m {
                Monomial::Gen(g) => {
                    let mut h = HashMap::new();
                    h.insert(vec![*g as u8], Rational::one());
                    h
                }
                Monomial::Prod(a, b) => jordan_mul(&evaluate(a), &evaluate(b)),
            }
        }

        let mut fj = FreeJordan::new(2);
        for n in 1..=5usize {
            // coordinates over associative words of length n
            let words: Vec<Vec<u8>> = (0..(1usize << n))
                .map(|mask| (0..n).map(|i| ((mask >> i) & 1) as u8).collect())
                .collect();
            let word_index: HashMap<Vec<u8>, usize> =
                words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
            let mut span = Subspace::zero(words.len());
            for m in fj.monomials(n).to_vec() {
                let val = evaluate(&m);
                let mut v = vec![Rational::zero(); words.len()];
                for (w, c) in val {
                    v[word_index[&w]] = c;
                }
                span.insert(v);
            }
            assert_eq!(span.dim(), fj.dim_component(n), "degree {n}");
        }
    }

    #[test]
    fn relation_spaces_are_ideal_components() {
        // multiplying a degree-d relation by a monomial of degree n-d lands
        // in the degree-n relation space
        let mut fj = FreeJordan::new(2);
        for (d, n) in [(4usize, 5usize), (4, 6)] {
            let lower: Vec<Vec<Rational>> = fj.relation_space(d).space.basis().to_vec();
            let lower_monos = fj.monomials(d).to_vec();
            let ms = fj.monomials(n - d).to_vec();
            fj.ensure_relations(n);
            for r in &lower {
                for m in &ms {
                    let dim = fj.monomials(n).len();
                    let mut v = vec![Rational::zero(); dim];
                    for (k, c) in r.iter().enumerate() {
                        if !c.is_zero() {
                            let idx = fj.monomial_index(&Monomial::product(m, &lower_monos[k]));
                            v[idx] = &v[idx] + c;
                        }
                    }
                    assert!(fj.relation_space(n).space.contains(&v));
                }
            }
        }
    }

    #[test]
    fn truncation_of_one_generator_is_polynomial_quotient() {
        for cap in 2..=5 {
            let mut fj = FreeJordan::new(1);
            let a = fj.truncated_algebra(cap).unwrap();
            let b = truncated_polynomial(cap);
            assert_eq!(a.dim(), b.dim());
            assert_eq!(a.unit_index(), b.unit_index());
            for i in 0..a.dim() {
                for j in 0..a.dim() {
                    assert_eq!(a.mul_basis(i, j), b.mul_basis(i, j), "product ({i},{j})");
                }
            }
            assert_eq!(a.grading(), b.grading());
        }
    }

    #[test]
    fn truncations_validate_and_match_component_dims() {
        let mut fj = FreeJordan::new(2);
        let a = fj.truncated_algebra(4).unwrap();
        let report = a.validate();
        assert!(report.is_valid(), "{:?}", report.first_failure());
        assert_eq!(a.dim(), 1 + 2 + 3 + 6);
        // degree-truncated components agree with the untruncated dimensions
        let g = a.grading().unwrap().to_vec();
        for d in 1..4usize {
            let count = g.iter().filter(|&&x| x == d as u32).count();
            assert_eq!(count, fj.dim_component(d));
        }
        // degree-2 truncation: all positive products vanish
        let b = FreeJordan::new(3).truncated_algebra(2).unwrap();
        for i in 1..b.dim() {
            for j in 1..b.dim() {
                assert!(b.mul_basis(i, j).is_empty());
            }
        }
    }
}
