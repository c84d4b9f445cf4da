//! Partition combinatorics and the symmetric-function identities behind the
//! dominance criterion and the Garland coefficients.

use crate::exactlin::Rational;
use num::{BigInt, One};
use std::collections::BTreeMap;
use std::fmt;

/// A partition: nonincreasing sequence of positive integers.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Partition {
        assert!(parts.iter().all(|&p| p >= 1), "parts must be positive");
        assert!(parts.windows(2).all(|w| w[0] >= w[1]), "parts nonincreasing");
        Partition { parts }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// |C_sigma|: the size of the conjugacy class of S_n with these cycle
    /// lengths, n! / prod_j (j^{m_j} m_j!).
    pub fn class_size(&self) -> BigInt {
        let n = self.weight() as u64;
        let mut numer = BigInt::one();
        for k in 1..=n {
            numer *= BigInt::from(k);
        }
        let mut mult: BTreeMap<u32, u64> = BTreeMap::new();
        for &p in &self.parts {
            *mult.entry(p).or_insert(0) += 1;
        }
        let mut denom = BigInt::one();
        for (&j, &m) in &mult {
            for _ in 0..m {
                denom *= BigInt::from(j);
            }
            for i in 1..=m {
                denom *= BigInt::from(i);
            }
        }
        numer / denom
    }

    /// The common sign of the permutations in the class: (-1)^(weight - length).
    pub fn sign(&self) -> i64 {
        if (self.weight() as usize - self.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// All partitions of `n`, each exactly once, in reverse-lexicographic order.
/// `partitions_of(0)` is empty; callers treat the empty product as 1.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        return out;
    }
    let mut current: Vec<u32> = Vec::new();
    fn descend(remaining: u32, max: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(current.clone()));
            return;
        }
        let top = max.min(remaining);
        for p in (1..=top).rev() {
            current.push(p);
            descend(remaining - p, p, current, out);
            current.pop();
        }
    }
    descend(n, n, &mut current, &mut out);
    out
}

/// Sparse multivariate polynomial over the rationals.  The exponent maps are
/// kept sorted so equality and ordering are structural.
pub type Monomial = Vec<(u32, u32)>; // (variable, exponent), sorted by variable

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SymbolicPolynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl SymbolicPolynomial {
    pub fn zero() -> Self {
        SymbolicPolynomial::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = SymbolicPolynomial::zero();
        if !c.is_zero() {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn one() -> Self {
        SymbolicPolynomial::constant(Rational::one())
    }

    pub fn var(v: u32) -> Self {
        let mut p = SymbolicPolynomial::zero();
        p.terms.insert(vec![(v, 1)], Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = &*existing + &c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&Rational::from_int(-1)))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return SymbolicPolynomial::zero();
        }
        SymbolicPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = SymbolicPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(mul_monomials(m1, m2), c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = SymbolicPolynomial::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute polynomials for variables.
    pub fn substitute(&self, assign: &dyn Fn(u32) -> SymbolicPolynomial) -> SymbolicPolynomial {
        let mut out = SymbolicPolynomial::zero();
        for (m, c) in &self.terms {
            let mut term = SymbolicPolynomial::constant(c.clone());
            for &(v, e) in m {
                term = term.mul(&assign(v).pow(e));
            }
            out = out.add(&term);
        }
        out
    }
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut out: Monomial = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                out.push((a[i].0, a[i].1 + b[j].1));
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// k-th Newton power sum in variables 1..=n.
pub fn newton_polynomial(k: u32, n: u32) -> SymbolicPolynomial {
    let mut p = SymbolicPolynomial::zero();
    for v in 1..=n {
        p.add_term(vec![(v, k)], Rational::one());
    }
    p
}

fn factorial(n: u32) -> BigInt {
    let mut f = BigInt::one();
    for k in 1..=n as u64 {
        f *= BigInt::from(k);
    }
    f
}

/// Expand sum over partitions of n of sgn(sigma) |C_sigma| N_sigma(x) and
/// test exact equality with n! x_1 ... x_n.
pub fn verify_girard_newton(n: u32) -> bool {
    assert!(n >= 1);
    let mut lhs = SymbolicPolynomial::zero();
    for sigma in partitions_of(n) {
        let mut prod = SymbolicPolynomial::one();
        for &part in sigma.parts() {
            prod = prod.mul(&newton_polynomial(part, n));
        }
        let coeff = Rational::from(sigma.class_size()) * Rational::from_int(sigma.sign());
        lhs = lhs.add(&prod.scale(&coeff));
    }
    let mut rhs_mono: Monomial = (1..=n).map(|v| (v, 1)).collect();
    rhs_mono.sort();
    let mut rhs = SymbolicPolynomial::zero();
    rhs.add_term(rhs_mono, Rational::from(factorial(n)));
    lhs == rhs
}

/// Closed-form coefficient from the partition sum:
/// a_k = ((-1)^k / k!) sum over sigma of sgn(sigma) |C_sigma| Y_sigma.
pub fn exp_coefficient_closed_form(k: u32) -> SymbolicPolynomial {
    if k == 0 {
        return SymbolicPolynomial::one();
    }
    let mut sum = SymbolicPolynomial::zero();
    for sigma in partitions_of(k) {
        let mut mono_exp: BTreeMap<u32, u32> = BTreeMap::new();
        for &part in sigma.parts() {
            *mono_exp.entry(part).or_insert(0) += 1;
        }
        let mono: Monomial = mono_exp.into_iter().collect();
        let coeff = Rational::from(sigma.class_size()) * Rational::from_int(sigma.sign());
        sum.add_term(mono, coeff);
    }
    let sign = if k % 2 == 0 { 1 } else { -1 };
    let scale = Rational::from_int(sign) / Rational::from(factorial(k));
    sum.scale(&scale)
}

/// Coefficients a_0..a_n of exp(-sum_{k>=1} Y_k t^k / k) as polynomials in
/// the Y variables (Y_k is variable k), computed by truncated series
/// arithmetic.  Each coefficient is checked against the closed-form partition
/// sum; a mismatch would be an implementation bug.
pub fn exp_series_coefficients(n: u32) -> Vec<SymbolicPolynomial> {
    let order = n as usize;
    // s(t) = -sum Y_k t^k / k, truncated
    let mut s: Vec<SymbolicPolynomial> = vec![SymbolicPolynomial::zero(); order + 1];
    for k in 1..=n {
        s[k as usize] =
            SymbolicPolynomial::var(k).scale(&(Rational::from_int(-1) / Rational::from_int(k as i64)));
    }
    // exp(s) = sum s^j / j!
    let mut result: Vec<SymbolicPolynomial> = vec![SymbolicPolynomial::zero(); order + 1];
    result[0] = SymbolicPolynomial::one();
    let mut power: Vec<SymbolicPolynomial> = vec![SymbolicPolynomial::zero(); order + 1];
    power[0] = SymbolicPolynomial::one();
    let mut jfact = Rational::one();
    for j in 1..=order {
        power = series_mul(&power, &s, order);
        jfact = &jfact * &Rational::from_int(j as i64);
        let inv = jfact.recip();
        for (r, p) in result.iter_mut().zip(power.iter()) {
            *r = r.add(&p.scale(&inv));
        }
    }
    for (k, coeff) in result.iter().enumerate() {
        let closed = exp_coefficient_closed_form(k as u32);
        assert!(
            *coeff == closed,
            "series coefficient a_{k} disagrees with the partition formula"
        );
    }
    result
}

fn series_mul(
    a: &[SymbolicPolynomial],
    b: &[SymbolicPolynomial],
    order: usize,
) -> Vec<SymbolicPolynomial> {
    let mut out = vec![SymbolicPolynomial::zero(); order + 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if i + j > order {
                break;
            }
            if !bj.is_zero() {
                out[i + j] = out[i + j].add(&ai.mul(bj));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;

    /// Brute-force oracle: cycle types of all permutations of S_n.
    fn cycle_types_by_enumeration(n: usize) -> Vec<(Vec<u32>, i64)> {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in permutations(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        permutations(n)
            .into_iter()
            .map(|p| {
                let mut seen = vec![false; n];
                let mut cycles = Vec::new();
                let mut transpositions = 0;
                for start in 0..n {
                    if seen[start] {
                        continue;
                    }
                    let mut len = 0u32;
                    let mut i = start;
                    while !seen[i] {
                        seen[i] = true;
                        i = p[i];
                        len += 1;
                    }
                    cycles.push(len);
                    transpositions += len - 1;
                }
                cycles.sort_unstable_by(|a, b| b.cmp(a));
                let sign = if transpositions % 2 == 0 { 1 } else { -1 };
                (cycles, sign)
            })
            .collect()
    }

    #[test]
    fn partitions_examples() {
        assert_eq!(partitions_of(1), vec![Partition::new(vec![1])]);
        assert_eq!(partitions_of(0), Vec::<Partition>::new());
        // oracle: compositions of 4 modulo ordering
        let mut kinds = std::collections::BTreeSet::new();
        fn compositions(n: u32, acc: &mut Vec<u32>, kinds: &mut std::collections::BTreeSet<Vec<u32>>) {
            if n == 0 {
                let mut sorted = acc.clone();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                kinds.insert(sorted);
                return;
            }
            for p in 1..=n {
                acc.push(p);
                compositions(n - p, acc, kinds);
                acc.pop();
            }
        }
        compositions(4, &mut Vec::new(), &mut kinds);
        assert_eq!(partitions_of(4).len(), kinds.len());
        assert_eq!(kinds.len(), 5);
        // reverse-lexicographic order
        let parts: Vec<Vec<u32>> = partitions_of(4).iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            parts,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn class_size_and_sign_against_sn_enumeration() {
        for n in 1..=5usize {
            let types = cycle_types_by_enumeration(n);
            for sigma in partitions_of(n as u32) {
                let matching: Vec<&(Vec<u32>, i64)> = types
                    .iter()
                    .filter(|(t, _)| t == sigma.parts())
                    .collect();
                assert_eq!(
                    BigInt::from(matching.len()),
                    sigma.class_size(),
                    "class size of {sigma}"
                );
                for (_, s) in &matching {
                    assert_eq!(*s, sigma.sign(), "sign of {sigma}");
                }
            }
        }
        // the spec's worked cases
        assert_eq!(Partition::new(vec![2, 1]).class_size(), BigInt::from(3));
        assert_eq!(Partition::new(vec![1, 1, 1, 1]).class_size(), BigInt::from(1));
        assert_eq!(Partition::new(vec![3]).class_size(), BigInt::from(2));
        assert_eq!(Partition::new(vec![1, 1, 1]).sign(), 1);
        assert_eq!(Partition::new(vec![2, 1]).sign(), -1);
        assert_eq!(Partition::new(vec![3]).sign(), 1);
    }

    #[test]
    fn conjugacy_class_counting_identities() {
        for n in 1..=9u32 {
            let mut total = BigInt::from(0);
            let mut signed = BigInt::from(0);
            for sigma in partitions_of(n) {
                total += sigma.class_size();
                signed += BigInt::from(sigma.sign()) * sigma.class_size();
            }
            assert_eq!(total, factorial(n), "sum of class sizes for n={n}");
            if n >= 2 {
                assert_eq!(signed, BigInt::from(0), "signed sum for n={n}");
            }
        }
    }

    #[test]
    fn girard_newton_small() {
        assert!(verify_girard_newton(1));
        // n = 2 by hand: N1^2 - N2 = 2 x1 x2
        let n1 = newton_polynomial(1, 2);
        let n2 = newton_polynomial(2, 2);
        let mut expect = SymbolicPolynomial::zero();
        expect = expect.add(&SymbolicPolynomial::var(1).mul(&SymbolicPolynomial::var(2)).scale(&rat(2, 1)));
        assert_eq!(n1.mul(&n1).sub(&n2), expect);
        for n in 2..=5 {
            assert!(verify_girard_newton(n), "n = {n}");
        }
    }

    #[test]
    fn exp_series_first_coefficients() {
        let coeffs = exp_series_coefficients(3);
        assert_eq!(coeffs[0], SymbolicPolynomial::one());
        // a1 = -Y1
        assert_eq!(coeffs[1], SymbolicPolynomial::var(1).scale(&rat(-1, 1)));
        // a2 = (Y1^2 - Y2)/2
        let y1sq = SymbolicPolynomial::var(1).pow(2);
        let expect = y1sq.sub(&SymbolicPolynomial::var(2)).scale(&rat(1, 2));
        assert_eq!(coeffs[2], expect);
    }

    #[test]
    fn exp_series_matches_product_over_variables() {
        // substituting Y_k -> N_k(x_1..x_m) must give the coefficients of
        // prod_i (1 - t x_i), i.e. signed elementary symmetric polynomials
        let m = 5u32;
        let coeffs = exp_series_coefficients(m);
        // expand prod (1 - t x_i) as a t-series with polynomial coefficients
        let mut series: Vec<SymbolicPolynomial> = vec![SymbolicPolynomial::zero(); m as usize + 1];
        series[0] = SymbolicPolynomial::one();
        for v in 1..=m {
            let factor = vec![
                SymbolicPolynomial::one(),
                SymbolicPolynomial::var(v).scale(&rat(-1, 1)),
            ];
            series = series_mul(&series, &factor, m as usize);
        }
        // offset variables: Y_k is variable k, substitute Newton sums in x-vars
        // (reuse the same variable namespace; N_k uses variables 1..=m)
        for k in 0..=m as usize {
            let substituted = coeffs[k].substitute(&|v| newton_polynomial(v, m));
            assert_eq!(substituted, series[k], "coefficient of t^{k}");
        }
    }
}
