//! Generic PBW normal form for a Lie algebra given by a bracket oracle on
//! an ordered generator set.  Used for the truncated current algebra and
//! for quotients of U of the degree-zero part of the TKK algebra.

use crate::exactlin::{Rational, SparseVec};
use std::collections::BTreeMap;

/// Bracket oracle: [g_i, g_j] expanded over the generators.  The bracket
/// must be antisymmetric; Jacobi is the caller's responsibility.
pub trait LieStructure {
    fn num_gens(&self) -> usize;
    fn bracket(&self, i: u32, j: u32) -> SparseVec;
}

/// PBW monomial: exponent runs (generator, exponent), sorted by generator.
pub type PbwMonomial = Vec<(u32, u32)>;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct PbwElement {
    terms: BTreeMap<PbwMonomial, Rational>,
}

impl PbwElement {
    pub fn zero() -> PbwElement {
        PbwElement::default()
    }

    pub fn one() -> PbwElement {
        let mut e = PbwElement::zero();
        e.terms.insert(Vec::new(), Rational::one());
        e
    }

    pub fn generator(g: u32) -> PbwElement {
        let mut e = PbwElement::zero();
        e.terms.insert(vec![(g, 1)], Rational::one());
        e
    }

    pub fn from_sparse(v: &SparseVec) -> PbwElement {
        let mut e = PbwElement::zero();
        for (g, c) in v {
            e.add_term(vec![(*g as u32, 1)], c.clone());
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&PbwMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: PbwMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &PbwElement) -> PbwElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn add_assign(&mut self, other: &PbwElement) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub(&self, other: &PbwElement) -> PbwElement {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> PbwElement {
        if c.is_zero() {
            return PbwElement::zero();
        }
        PbwElement {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    /// Drop all monomials failing the predicate.
    pub fn retain_monomials(&self, keep: impl Fn(&PbwMonomial) -> bool) -> PbwElement {
        PbwElement {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Right multiplication by a single generator, with straightening.
    pub fn times_gen(&self, s: &dyn LieStructure, g: u32) -> PbwElement {
        let mut out = PbwElement::zero();
        for (m, c) in &self.terms {
            let prod = mono_times_gen(s, m, g);
            out.add_assign(&prod.scale(c));
        }
        out
    }

    pub fn mul(&self, s: &dyn LieStructure, other: &PbwElement) -> PbwElement {
        let mut out = PbwElement::zero();
        for (m, c) in &other.terms {
            let mut acc = self.scale(c);
            for &(g, e) in m {
                for _ in 0..e {
                    acc = acc.times_gen(s, g);
                }
            }
            out.add_assign(&acc);
        }
        out
    }

    pub fn pow(&self, s: &dyn LieStructure, e: u32) -> PbwElement {
        let mut acc = PbwElement::one();
        for _ in 0..e {
            acc = acc.mul(s, self);
        }
        acc
    }
}

fn append_gen(m: &PbwMonomial, g: u32) -> PbwMonomial {
    let mut out = m.clone();
    match out.last_mut() {
        Some((last, e)) if *last == g => *e += 1,
        _ => out.push((g, 1)),
    }
    out
}

/// Straighten (normal monomial) * generator.
fn mono_times_gen(s: &dyn LieStructure, m: &PbwMonomial, g: u32) -> PbwElement {
    match m.last() {
        None => PbwElement::generator(g),
        Some(&(last, _)) if last <= g => {
            let mut e = PbwElement::zero();
            e.add_term(append_gen(m, g), Rational::one());
            e
        }
        Some(&(x, _)) => {
            // m = m1 * x with x > g: m g = (m1 g) x + m1 [x, g]
            let mut m1 = m.clone();
            {
                let last = m1.last_mut().unwrap();
                if last.1 == 1 {
                    m1.pop();
                } else {
                    last.1 -= 1;
                }
            }
            let mut out = mono_times_gen(s, &m1, g).times_gen(s, x);
            for (k, c) in s.bracket(x, g) {
                out.add_assign(&mono_times_gen(s, &m1, k as u32).scale(&c));
            }
            out
        }
    }
}

/// Normal form of a product of generators, left to right.
pub fn normal_form(s: &dyn LieStructure, word: &[u32]) -> PbwElement {
    let mut acc = PbwElement::one();
    for &g in word {
        acc = acc.times_gen(s, g);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Heisenberg-like toy: [A, B] = C, C central, order A < B < C.
    struct Toy;
    impl LieStructure for Toy {
        fn num_gens(&self) -> usize {
            3
        }
        fn bracket(&self, i: u32, j: u32) -> SparseVec {
            match (i, j) {
                (0, 1) => vec![(2, Rational::one())],
                (1, 0) => vec![(2, Rational::from_int(-1))],
                _ => Vec::new(),
            }
        }
    }

    #[test]
    fn straightening_basics() {
        // B A = A B - C
        let e = normal_form(&Toy, &[1, 0]);
        let mut expect = PbwElement::zero();
        expect.add_term(vec![(0, 1), (1, 1)], Rational::one());
        expect.add_term(vec![(2, 1)], Rational::from_int(-1));
        assert_eq!(e, expect);
        // already normal stays put
        let e = normal_form(&Toy, &[0, 1]);
        let mut expect = PbwElement::zero();
        expect.add_term(vec![(0, 1), (1, 1)], Rational::one());
        assert_eq!(e, expect);
    }

    #[test]
    fn association_order_is_immaterial() {
        // (B A) A vs B (A A): same normal form
        let ba = normal_form(&Toy, &[1, 0]);
        let a = PbwElement::generator(0);
        let left = ba.times_gen(&Toy, 0);
        let right = PbwElement::generator(1).mul(&Toy, &a.mul(&Toy, &a));
        assert_eq!(left, right);
    }
}
