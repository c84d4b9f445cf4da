//! The truncated enveloping algebra of sl2(K[t]/(t^M)) with PBW normal
//! form, the projection that kills monomials carrying a raising factor, and
//! the bit-exact check of Garland's projection formula.

use crate::exactlin::{Rational, SparseVec};
use crate::pbw::{normal_form as pbw_normal_form, LieStructure, PbwElement};
use num::{BigInt, One};

/// The current algebra sl2 (x) K[t]/(t^M) with generator order
/// f(t^0) < ... < f(t^(M-1)) < h(t^0) < ... < e(t^(M-1)), so that the
/// projection is a pure monomial filter.
#[derive(Clone, Copy, Debug)]
pub struct CurrentAlgebra {
    truncation: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Kind {
    F,
    H,
    E,
}

impl CurrentAlgebra {
    pub fn new(truncation: usize) -> CurrentAlgebra {
        assert!(truncation >= 1);
        CurrentAlgebra { truncation }
    }

    pub fn truncation(&self) -> usize {
        self.truncation
    }

    pub fn f(&self, power: usize) -> u32 {
        assert!(power < self.truncation);
        power as u32
    }

    pub fn h(&self, power: usize) -> u32 {
        assert!(power < self.truncation);
        (self.truncation + power) as u32
    }

    pub fn e(&self, power: usize) -> u32 {
        assert!(power < self.truncation);
        (2 * self.truncation + power) as u32
    }

    fn decode(&self, g: u32) -> (Kind, usize) {
        let g = g as usize;
        let m = self.truncation;
        if g < m {
            (Kind::F, g)
        } else if g < 2 * m {
            (Kind::H, g - m)
        } else {
            (Kind::E, g - 2 * m)
        }
    }

    fn encode(&self, kind: Kind, power: usize) -> u32 {
        match kind {
            Kind::F => self.f(power),
            Kind::H => self.h(power),
            Kind::E => self.e(power),
        }
    }

    /// Element f(p) / h(p) / e(p) for a polynomial p in K[t]/(t^M).
    pub fn f_of(&self, p: &[Rational]) -> PbwElement {
        self.linear_of(Kind::F, p)
    }

    pub fn h_of(&self, p: &[Rational]) -> PbwElement {
        self.linear_of(Kind::H, p)
    }

    pub fn e_of(&self, p: &[Rational]) -> PbwElement {
        self.linear_of(Kind::E, p)
    }

    fn linear_of(&self, kind: Kind, p: &[Rational]) -> PbwElement {
        let mut e = PbwElement::zero();
        for (i, c) in p.iter().enumerate() {
            if i < self.truncation && !c.is_zero() {
                e.add_term(vec![(self.encode(kind, i), 1)], c.clone());
            }
        }
        e
    }

    /// Multiply truncated polynomials in K[t]/(t^M).
    pub fn poly_mul(&self, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.truncation];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() || i >= self.truncation {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if i + j < self.truncation && !y.is_zero() {
                    out[i + j] = &out[i + j] + &(x * y);
                }
            }
        }
        out
    }

    pub fn poly_power(&self, a: &[Rational], k: usize) -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); self.truncation];
        acc[0] = Rational::one();
        for _ in 0..k {
            acc = self.poly_mul(&acc, a);
        }
        acc
    }
}

impl LieStructure for CurrentAlgebra {
    fn num_gens(&self) -> usize {
        3 * self.truncation
    }

    /// [x(t^a), y(t^b)] = [x,y](t^(a+b)), zero past the truncation.
    fn bracket(&self, i: u32, j: u32) -> SparseVec {
        let (xi, a) = self.decode(i);
        let (yj, b) = self.decode(j);
        if a + b >= self.truncation {
            return Vec::new();
        }
        let two = Rational::from_int(2);
        match (xi, yj) {
            (Kind::H, Kind::E) => vec![(self.e(a + b) as usize, two)],
            (Kind::E, Kind::H) => vec![(self.e(a + b) as usize, -&two)],
            (Kind::H, Kind::F) => vec![(self.f(a + b) as usize, -&two)],
            (Kind::F, Kind::H) => vec![(self.f(a + b) as usize, two)],
            (Kind::E, Kind::F) => vec![(self.h(a + b) as usize, Rational::one())],
            (Kind::F, Kind::E) => vec![(self.h(a + b) as usize, Rational::from_int(-1))],
            _ => Vec::new(),
        }
    }
}

/// PBW normal form of a word in the generators.
pub fn normal_form(alg: &CurrentAlgebra, word: &[u32]) -> PbwElement {
    pbw_normal_form(alg, word)
}

/// Projection along U(G) G_2: drops every monomial containing an e-factor
/// (these span the complement for the chosen PBW order).
pub fn pi(alg: &CurrentAlgebra, el: &PbwElement) -> PbwElement {
    let cut = (2 * alg.truncation) as u32;
    el.retain_monomials(|m| m.iter().all(|&(g, _)| g < cut))
}

fn factorial(n: usize) -> Rational {
    let mut f = BigInt::one();
    for k in 1..=n as u64 {
        f *= BigInt::from(k);
    }
    Rational::from(f)
}

/// pi(e^(m) f(a)^(n)) computed by straightening, with divided powers.
pub fn garland_lhs(m: usize, n: usize, alg: &CurrentAlgebra, a: &[Rational]) -> PbwElement {
    assert!(n >= m);
    let e = PbwElement::generator(alg.e(0));
    let fa = alg.f_of(a);
    let mut acc = PbwElement::one();
    for _ in 0..m {
        acc = acc.mul(alg, &e);
    }
    for _ in 0..n {
        acc = acc.mul(alg, &fa);
    }
    let scale = (factorial(m) * factorial(n)).recip();
    pi(alg, &acc.scale(&scale))
}

/// The coefficient of t^m in
///   (-1)^m (sum_r f(a^(r+1)) t^r)^(n-m) / (n-m)!  *  exp(-sum_s h(a^s)/s t^s),
/// with the f-series factor kept to the left of the exponential factor.
pub fn garland_rhs(m: usize, n: usize, alg: &CurrentAlgebra, a: &[Rational]) -> PbwElement {
    assert!(n >= m);
    let order = m;
    // f-series: coefficient of t^r is f(a^(r+1))
    let f_series: Vec<PbwElement> = (0..=order)
        .map(|r| alg.f_of(&alg.poly_power(a, r + 1)))
        .collect();
    let f_power = series_divided_power(alg, &f_series, n - m, order);
    // exponential factor on h(a^s)
    let mut x_series: Vec<PbwElement> = vec![PbwElement::zero(); order + 1];
    for s in 1..=order {
        let hs = alg.h_of(&alg.poly_power(a, s));
        x_series[s] = hs.scale(&Rational::frac(-1, s as i64));
    }
    let exp_series = series_exp(alg, &x_series, order);
    let product = series_mul(alg, &f_power, &exp_series, order);
    let sign = if m % 2 == 0 {
        Rational::one()
    } else {
        Rational::from_int(-1)
    };
    product[m].scale(&sign)
}

fn series_mul(
    alg: &CurrentAlgebra,
    a: &[PbwElement],
    b: &[PbwElement],
    order: usize,
) -> Vec<PbwElement> {
    let mut out = vec![PbwElement::zero(); order + 1];
    for (i, ai) in a.iter().enumerate().take(order + 1) {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate().take(order + 1 - i) {
            if !bj.is_zero() {
                out[i + j].add_assign(&ai.mul(alg, bj));
            }
        }
    }
    out
}

fn series_divided_power(
    alg: &CurrentAlgebra,
    a: &[PbwElement],
    k: usize,
    order: usize,
) -> Vec<PbwElement> {
    let mut acc = vec![PbwElement::zero(); order + 1];
    acc[0] = PbwElement::one();
    for _ in 0..k {
        acc = series_mul(alg, &acc, a, order);
    }
    let inv = factorial(k).recip();
    for x in acc.iter_mut() {
        *x = x.scale(&inv);
    }
    acc
}

fn series_exp(alg: &CurrentAlgebra, x: &[PbwElement], order: usize) -> Vec<PbwElement> {
    assert!(x[0].is_zero(), "exp needs zero constant term");
    let mut out = vec![PbwElement::zero(); order + 1];
    out[0] = PbwElement::one();
    let mut power = out.clone();
    let mut jfact = Rational::one();
    for j in 1..=order {
        power = series_mul(alg, &power, x, order);
        jfact = &jfact * &Rational::from_int(j as i64);
        let inv = jfact.recip();
        for (o, p) in out.iter_mut().zip(power.iter()) {
            o.add_assign(&p.scale(&inv));
        }
    }
    out
}

/// Per-pair outcome of the Garland check.
#[derive(Clone, Debug)]
pub struct GarlandReport {
    pub truncation: usize,
    pub pairs: Vec<(usize, usize, bool)>,
}

impl GarlandReport {
    pub fn all_pass(&self) -> bool {
        self.pairs.iter().all(|(_, _, ok)| *ok)
    }

    pub fn first_failure(&self) -> Option<(usize, usize)> {
        self.pairs
            .iter()
            .find(|(_, _, ok)| !ok)
            .map(|&(m, n, _)| (m, n))
    }
}

/// Check garland_lhs == garland_rhs exactly for all 0 <= m <= n <= nmax.
/// The default truncation nmax * deg(a) + 1 keeps every term that can
/// appear; any common truncation gives the identity in that quotient.
pub fn verify_garland(nmax: usize, truncation: Option<usize>, a: &[Rational]) -> GarlandReport {
    let deg = a
        .iter()
        .enumerate()
        .rev()
        .find(|(_, c)| !c.is_zero())
        .map(|(i, _)| i)
        .unwrap_or(0);
    let m_trunc = truncation.unwrap_or(nmax * deg.max(1) + 1);
    let alg = CurrentAlgebra::new(m_trunc);
    let mut pairs = Vec::new();
    for n in 0..=nmax {
        for m in 0..=n {
            let lhs = garland_lhs(m, n, &alg, a);
            let rhs = garland_rhs(m, n, &alg, a);
            pairs.push((m, n, lhs == rhs));
        }
    }
    GarlandReport {
        truncation: m_trunc,
        pairs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rat;
    use rand::{Rng, SeedableRng};

    fn poly_t(alg: &CurrentAlgebra) -> Vec<Rational> {
        let mut p = vec![Rational::zero(); alg.truncation()];
        p[1] = Rational::one();
        p
    }

    #[test]
    fn normal_form_examples() {
        let alg = CurrentAlgebra::new(2);
        // e * f(t) -> f(t) e + h(t)
        let nf = normal_form(&alg, &[alg.e(0), alg.f(1)]);
        let mut expect = PbwElement::zero();
        expect.add_term(vec![(alg.f(1), 1), (alg.e(0), 1)], Rational::one());
        expect.add_term(vec![(alg.h(1), 1)], Rational::one());
        assert_eq!(nf, expect);

        // f(t) f(t^2) is already normal
        let alg3 = CurrentAlgebra::new(3);
        let nf = normal_form(&alg3, &[alg3.f(1), alg3.f(2)]);
        let mut expect = PbwElement::zero();
        expect.add_term(vec![(alg3.f(1), 1), (alg3.f(2), 1)], Rational::one());
        assert_eq!(nf, expect);

        // e f(t) f(t) -> f(t)^2 e + 2 f(t) h(t) - 2 f(t^2)
        let nf = normal_form(&alg3, &[alg3.e(0), alg3.f(1), alg3.f(1)]);
        let mut expect = PbwElement::zero();
        expect.add_term(vec![(alg3.f(1), 2), (alg3.e(0), 1)], Rational::one());
        expect.add_term(
            vec![(alg3.f(1), 1), (alg3.h(1), 1)],
            Rational::from_int(2),
        );
        expect.add_term(vec![(alg3.f(2), 1)], Rational::from_int(-2));
        assert_eq!(nf, expect);
    }

    #[test]
    fn pi_examples() {
        let alg = CurrentAlgebra::new(2);
        let fh = normal_form(&alg, &[alg.f(1), alg.h(1)]);
        assert_eq!(pi(&alg, &fh), fh);
        let f2e = normal_form(&alg, &[alg.f(1), alg.f(1), alg.e(0)]);
        assert!(pi(&alg, &f2e).is_zero());
        let ef = normal_form(&alg, &[alg.e(0), alg.f(1)]);
        let mut expect = PbwElement::zero();
        expect.add_term(vec![(alg.h(1), 1)], Rational::one());
        assert_eq!(pi(&alg, &ef), expect);
    }

    #[test]
    fn lhs_examples() {
        let alg = CurrentAlgebra::new(2);
        let t = poly_t(&alg);
        // (0, 1): f(t)
        let v = garland_lhs(0, 1, &alg, &t);
        let mut expect = PbwElement::zero();
        expect.add_term(vec![(alg.f(1), 1)], Rational::one());
        assert_eq!(v, expect);
        // (1, 1): h(t)
        let v = garland_lhs(1, 1, &alg, &t);
        let mut expect = PbwElement::zero();
        expect.add_term(vec![(alg.h(1), 1)], Rational::one());
        assert_eq!(v, expect);
        // (1, 2) over M = 3: f(t) h(t) - f(t^2)
        let alg3 = CurrentAlgebra::new(3);
        let t3 = poly_t(&alg3);
        let v = garland_lhs(1, 2, &alg3, &t3);
        let mut expect = PbwElement::zero();
        expect.add_term(vec![(alg3.f(1), 1), (alg3.h(1), 1)], Rational::one());
        expect.add_term(vec![(alg3.f(2), 1)], Rational::from_int(-1));
        assert_eq!(v, expect);
    }

    #[test]
    fn rhs_examples() {
        let alg = CurrentAlgebra::new(2);
        let t = poly_t(&alg);
        let v = garland_rhs(1, 1, &alg, &t);
        let mut expect = PbwElement::zero();
        expect.add_term(vec![(alg.h(1), 1)], Rational::one());
        assert_eq!(v, expect);

        let alg3 = CurrentAlgebra::new(3);
        let t3 = poly_t(&alg3);
        let v = garland_rhs(1, 2, &alg3, &t3);
        let mut expect = PbwElement::zero();
        expect.add_term(vec![(alg3.f(1), 1), (alg3.h(1), 1)], Rational::one());
        expect.add_term(vec![(alg3.f(2), 1)], Rational::from_int(-1));
        assert_eq!(v, expect);

        // (0, 0): the empty divided power times exp^0 coefficient is 1
        let v = garland_rhs(0, 0, &alg, &t);
        assert_eq!(v, PbwElement::one());
    }

    #[test]
    fn verify_small() {
        let t = vec![Rational::zero(), Rational::one()];
        let report = verify_garland(3, None, &t);
        assert!(report.all_pass(), "{:?}", report.first_failure());

        let t_plus_t2 = vec![Rational::zero(), Rational::one(), Rational::one()];
        let report = verify_garland(2, None, &t_plus_t2);
        assert!(report.all_pass(), "{:?}", report.first_failure());
    }

    #[test]
    fn h_and_f_families_commute() {
        // normal forms in both orders agree, which is the commutativity of
        // the h(a^s) family (and of the f family) underlying the series
        let alg = CurrentAlgebra::new(5);
        let t = poly_t(&alg);
        for s in 1..4usize {
            for r in 1..4usize {
                let hs = alg.h_of(&alg.poly_power(&t, s));
                let hr = alg.h_of(&alg.poly_power(&t, r));
                assert_eq!(hs.mul(&alg, &hr), hr.mul(&alg, &hs));
                let fs = alg.f_of(&alg.poly_power(&t, s));
                let fr = alg.f_of(&alg.poly_power(&t, r));
                assert_eq!(fs.mul(&alg, &fr), fr.mul(&alg, &fs));
            }
        }
    }

    #[test]
    fn straightening_is_confluent_on_random_words() {
        let alg = CurrentAlgebra::new(3);
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(11);
        for _ in 0..40 {
            let len = rng.gen_range(2..=6);
            let word: Vec<u32> = (0..len)
                .map(|_| rng.gen_range(0..(3 * alg.truncation())) as u32)
                .collect();
            let direct = normal_form(&alg, &word);
            // random re-association: split and multiply the halves
            let cut = rng.gen_range(1..len);
            let left = normal_form(&alg, &word[..cut]);
            let right = normal_form(&alg, &word[cut..]);
            assert_eq!(left.mul(&alg, &right), direct);
        }
        let _ = rat(1, 1);
    }
}
