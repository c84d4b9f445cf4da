//! J-spaces, the partition-sum dominance criterion, tensor products, and
//! degree-truncated quotients of U(G_0).

use crate::error::{Error, Result};
use crate::exactlin::{Mat, Rational, Subspace};
use crate::jordan::JordanAlgebra;
use crate::partitions::partitions_of;
use crate::pbw::{LieStructure, PbwElement, PbwMonomial};
use crate::tkk::{CentralTerm, TKKAlgebra};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// A J-space: a linear map rho from J into End(V) satisfying the polarized
/// commutation axiom (J1) and the derivation axiom (J2), with scalar rho(1).
#[derive(Clone, Debug)]
pub struct JSpace {
    algebra: JordanAlgebra,
    rho: Vec<Mat>,
    carrier_dim: usize,
    level: Rational,
}

impl JSpace {
    /// Validate the axioms and build the J-space.
    pub fn new(algebra: JordanAlgebra, rho: Vec<Mat>) -> Result<JSpace> {
        let d = algebra.dim();
        if rho.len() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                got: rho.len(),
                context: "one action matrix per basis vector",
            });
        }
        let carrier_dim = rho.first().map(|m| m.rows()).unwrap_or(0);
        for m in &rho {
            if m.rows() != carrier_dim || m.cols() != carrier_dim {
                return Err(Error::DimensionMismatch {
                    expected: carrier_dim,
                    got: m.rows(),
                    context: "square action matrices of equal size",
                });
            }
        }
        // rho(1) must be a scalar
        let unit_mat = &rho[algebra.unit_index()];
        let level = unit_mat.at(0, 0).clone();
        if *unit_mat != Mat::scalar(carrier_dim, &level) {
            return Err(Error::AxiomViolation(
                "rho(1) is not a scalar multiple of the identity".into(),
            ));
        }
        let space = JSpace {
            algebra,
            rho,
            carrier_dim,
            level,
        };
        space.check_axioms()?;
        Ok(space)
    }

    fn check_axioms(&self) -> Result<()> {
        let d = self.algebra.dim();
        // polarized (J1): [r(x), r(yz)] + [r(y), r(zx)] + [r(z), r(xy)] = 0
        for x in 0..d {
            for y in x..d {
                for z in y..d {
                    let mut acc = Mat::zeros(self.carrier_dim, self.carrier_dim);
                    for (a, b, c) in [(x, y, z), (y, z, x), (z, x, y)] {
                        let rbc = self.rho_of_sparse(self.algebra.mul_basis(b, c));
                        acc = acc.add(&self.rho[a].commutator(&rbc));
                    }
                    if !acc.is_zero() {
                        return Err(Error::AxiomViolation(format!(
                            "polarized commutation axiom fails at basis triple ({x}, {y}, {z})"
                        )));
                    }
                }
            }
        }
        // (J2): [[r(a), r(b)], r(c)] = 4 r(d_{a,b} c)
        for a in 0..d {
            for b in a + 1..d {
                let comm = self.rho[a].commutator(&self.rho[b]);
                for c in 0..d {
                    let lhs = comm.commutator(&self.rho[c]);
                    let dc = self.algebra.inner_derivation(
                        &self.algebra.basis_vector(a),
                        &self.algebra.basis_vector(b),
                    );
                    let rhs = self
                        .rho_of(&dc.col(c))
                        .scale(&Rational::from_int(4));
                    if lhs != rhs {
                        return Err(Error::AxiomViolation(format!(
                            "derivation axiom fails at ({a}, {b}; {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &JordanAlgebra {
        &self.algebra
    }

    pub fn carrier_dim(&self) -> usize {
        self.carrier_dim
    }

    pub fn level(&self) -> &Rational {
        &self.level
    }

    pub fn integer_level(&self) -> Option<i64> {
        self.level.to_i64().filter(|n| *n >= 0)
    }

    pub fn rho_basis(&self, i: usize) -> &Mat {
        &self.rho[i]
    }

    pub fn rho_of(&self, a: &[Rational]) -> Mat {
        let mut out = Mat::zeros(self.carrier_dim, self.carrier_dim);
        for (i, c) in a.iter().enumerate() {
            if !c.is_zero() {
                out = out.add(&self.rho[i].scale(c));
            }
        }
        out
    }

    fn rho_of_sparse(&self, v: &crate::exactlin::SparseVec) -> Mat {
        let mut out = Mat::zeros(self.carrier_dim, self.carrier_dim);
        for (i, c) in v {
            out = out.add(&self.rho[*i].scale(c));
        }
        out
    }
}

/// J as a J-space of level 2 with rho(a) = 2 L_a.
pub fn regular_jspace(j: &JordanAlgebra) -> Result<JSpace> {
    let rho = (0..j.dim())
        .map(|i| j.left_mul_matrix(&j.basis_vector(i)).scale(&Rational::from_int(2)))
        .collect();
    JSpace::new(j.clone(), rho)
}

/// The one-dimensional J-space K_n of an augmented algebra: rho(1) = n,
/// rho(J+) = 0.
pub fn level_space(j: &JordanAlgebra, n: i64) -> Result<JSpace> {
    if j.augmentation_indices().is_none() {
        return Err(Error::Unsupported(
            "K_n needs an augmented Jordan algebra".into(),
        ));
    }
    let aug: std::collections::BTreeSet<usize> =
        j.augmentation_indices().unwrap().iter().copied().collect();
    let rho = (0..j.dim())
        .map(|i| {
            if i == j.unit_index() {
                Mat::scalar(1, &Rational::from_int(n))
            } else {
                assert!(aug.contains(&i), "augmentation must be a coordinate complement of the unit");
                Mat::zeros(1, 1)
            }
        })
        .collect();
    JSpace::new(j.clone(), rho)
}

/// Tensor product of J-spaces over the same algebra: levels add.
pub fn tensor_jspace(v: &JSpace, w: &JSpace) -> Result<JSpace> {
    if v.algebra != w.algebra {
        return Err(Error::Unsupported(
            "tensor product needs the same underlying algebra".into(),
        ));
    }
    let iv = Mat::identity(v.carrier_dim());
    let iw = Mat::identity(w.carrier_dim());
    let rho = (0..v.algebra.dim())
        .map(|i| {
            v.rho_basis(i)
                .kron(&iw)
                .add(&iv.kron(w.rho_basis(i)))
        })
        .collect();
    JSpace::new(v.algebra.clone(), rho)
}

/// The dominance-defect operator: sum over partitions of n+1 of
/// sgn(sigma) |C_sigma| rho(a^s1) ... rho(a^sm).
pub fn dominance_defect(v: &JSpace, a: &[Rational]) -> Result<Mat> {
    let n = v.integer_level().ok_or_else(|| {
        Error::Unsupported("dominance defect needs a nonnegative integer level".into())
    })?;
    let mut out = Mat::zeros(v.carrier_dim(), v.carrier_dim());
    // cache rho(a^k)
    let mut rho_pow: Vec<Mat> = Vec::new();
    for k in 1..=(n as u32 + 1) {
        rho_pow.push(v.rho_of(&v.algebra.power(a, k)));
    }
    for sigma in partitions_of(n as u32 + 1) {
        let mut prod = Mat::identity(v.carrier_dim());
        for &part in sigma.parts() {
            prod = prod.mul(&rho_pow[(part - 1) as usize]);
        }
        let coeff = Rational::from(sigma.class_size()) * Rational::from_int(sigma.sign());
        out = out.add(&prod.scale(&coeff));
    }
    Ok(out)
}

/// Full polarization of the defect at a tuple of elements: the multilinear
/// form obtained by inclusion-exclusion; evaluating at (a, ..., a) returns
/// (n+1)! times the defect at a.
pub fn polarized_defect(v: &JSpace, tuple: &[Vec<Rational>]) -> Result<Mat> {
    let n1 = tuple.len();
    let mut out = Mat::zeros(v.carrier_dim(), v.carrier_dim());
    for mask in 1u32..(1 << n1) {
        let mut a = vec![Rational::zero(); v.algebra.dim()];
        for (i, t) in tuple.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for (x, y) in a.iter_mut().zip(t.iter()) {
                    *x = &*x + y;
                }
            }
        }
        let d = dominance_defect(v, &a)?;
        if (n1 - mask.count_ones() as usize) % 2 == 0 {
            out = out.add(&d);
        } else {
            out = out.sub(&d);
        }
    }
    Ok(out)
}

/// Exact dominance test: the full multilinear polarization of the defect
/// must vanish on all basis multisets.  Returns the first violating tuple.
pub fn dominance_witness(v: &JSpace) -> Result<Option<Vec<usize>>> {
    let n = v.integer_level().ok_or_else(|| {
        Error::Unsupported("dominance needs a nonnegative integer level".into())
    })?;
    let d = v.algebra.dim();
    let mut tuple_indices: Vec<Vec<usize>> = Vec::new();
    enumerate_multisets(d, (n + 1) as usize, &mut Vec::new(), &mut tuple_indices);
    for t in tuple_indices {
        let tuple: Vec<Vec<Rational>> = t.iter().map(|&i| v.algebra.basis_vector(i)).collect();
        if !polarized_defect(v, &tuple)?.is_zero() {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

pub fn is_dominant(v: &JSpace) -> Result<bool> {
    Ok(dominance_witness(v)?.is_none())
}

/// Randomized fast path: evaluates the defect at random rational elements.
/// A nonzero defect certifies non-dominance; passing is not a proof.
pub fn randomized_non_dominance_certificate(
    v: &JSpace,
    rng: &mut impl rand::Rng,
    trials: usize,
) -> Result<Option<Vec<Rational>>> {
    for _ in 0..trials {
        let a: Vec<Rational> = (0..v.algebra.dim())
            .map(|_| Rational::frac(rng.gen_range(-5i64..=5), rng.gen_range(1i64..=3)))
            .collect();
        if !dominance_defect(v, &a)?.is_zero() {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

fn enumerate_multisets(m: usize, k: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if acc.len() == k {
        out.push(acc.clone());
        return;
    }
    let start = acc.last().copied().unwrap_or(0);
    for i in start..m {
        acc.push(i);
        enumerate_multisets(m, k, acc, out);
        acc.pop();
    }
}

/// G_0-module data: actions of h(basis) and of the {J,J} class basis.
#[derive(Clone, Debug)]
pub struct G0Action {
    pub carrier_dim: usize,
    pub h_action: Vec<Mat>,
    pub z_action: Vec<Mat>,
}

/// Extract the G_0-action carried by a J-space: h(a) acts by rho(a) and a
/// class {a,b} by (1/4)[rho(a), rho(b)].  Fails when the wedge action does
/// not kill the relation span S, i.e. when the data is not a G_0-module.
pub fn to_g0_action(v: &JSpace, ct: &CentralTerm) -> Result<G0Action> {
    let quarter = Rational::frac(1, 4);
    let wedge_action = |i: usize, j: usize| -> Mat {
        v.rho_basis(i).commutator(v.rho_basis(j)).scale(&quarter)
    };
    // well-definedness on the quotient: S generators act by zero
    for row in ct.s_space().basis() {
        let mut acc = Mat::zeros(v.carrier_dim(), v.carrier_dim());
        for (w, c) in row.iter().enumerate() {
            if !c.is_zero() {
                let (i, j) = wedge_pair_of(ct, w);
                acc = acc.add(&wedge_action(i, j).scale(c));
            }
        }
        if !acc.is_zero() {
            return Err(Error::AxiomViolation(
                "the wedge action does not vanish on S".into(),
            ));
        }
    }
    let z_action = ct
        .class_pairs()
        .iter()
        .map(|&(p, q)| wedge_action(p, q))
        .collect();
    Ok(G0Action {
        carrier_dim: v.carrier_dim(),
        h_action: (0..v.algebra().dim()).map(|i| v.rho_basis(i).clone()).collect(),
        z_action,
    })
}

fn wedge_pair_of(ct: &CentralTerm, mut w: usize) -> (usize, usize) {
    // inverse of the lexicographic wedge indexing
    let mut i = 0;
    loop {
        let row = ct.wedge_row_len(i);
        if w < row {
            return (i, i + 1 + w);
        }
        w -= row;
        i += 1;
    }
}

/// Rebuild the J-space from G_0-module data, checking the class actions are
/// the commutator expressions they must be.
pub fn from_g0_action(
    j: &JordanAlgebra,
    ct: &CentralTerm,
    action: &G0Action,
) -> Result<JSpace> {
    let v = JSpace::new(j.clone(), action.h_action.clone())?;
    let quarter = Rational::frac(1, 4);
    for (k, &(p, q)) in ct.class_pairs().iter().enumerate() {
        let expect = v.rho_basis(p).commutator(v.rho_basis(q)).scale(&quarter);
        if action.z_action[k] != expect {
            return Err(Error::AxiomViolation(format!(
                "class action {k} is not (1/4)[rho({p}), rho({q})]"
            )));
        }
    }
    Ok(v)
}

/// JSON form of a J-space used by the command-line interface.
#[derive(Serialize, Deserialize, Clone, Debug)]
pub struct JSpaceJson {
    pub dim: usize,
    pub level: String,
    /// one carrier matrix per algebra basis vector, dense rows of fractions
    pub rho: Vec<Vec<Vec<String>>>,
}

impl JSpace {
    pub fn to_json(&self) -> JSpaceJson {
        JSpaceJson {
            dim: self.carrier_dim,
            level: self.level.to_string(),
            rho: self
                .rho
                .iter()
                .map(|m| {
                    (0..m.rows())
                        .map(|i| m.row(i).iter().map(|x| x.to_string()).collect())
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(j: &JordanAlgebra, json: &JSpaceJson) -> Result<JSpace> {
        let mut rho = Vec::with_capacity(json.rho.len());
        for m in &json.rho {
            let mut rows = Vec::with_capacity(m.len());
            for r in m {
                let mut row = Vec::with_capacity(r.len());
                for s in r {
                    row.push(s.parse::<Rational>()?);
                }
                rows.push(row);
            }
            rho.push(Mat::from_rows(rows));
        }
        JSpace::new(j.clone(), rho)
    }
}

/// Filtered dimension data for the truncated quotient U_n(J).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedUn {
    pub level: i64,
    pub cap: usize,
    /// exact dimension of the internal-degree-d component, d = 0..=cap
    pub graded_dims: Vec<usize>,
    /// cumulative dimensions of the degree filtration
    pub filtered_dims: Vec<usize>,
    /// rank of the relation component per degree
    pub relation_ranks: Vec<usize>,
}

/// Bracket oracle for the positive part of G_0 = h(J) + {J,J}: generators
/// are h(b) for positive-degree basis vectors b and the class basis of
/// {J,J}; h(1) is central and eliminated against the level.
struct G0Positive<'a> {
    tkk: &'a TKKAlgebra,
    /// local generator -> tkk index
    to_tkk: Vec<usize>,
    /// tkk index -> local generator
    from_tkk: BTreeMap<usize, usize>,
    degrees: Vec<usize>,
}

impl<'a> G0Positive<'a> {
    fn new(tkk: &'a TKKAlgebra) -> Result<G0Positive<'a>> {
        let j = tkk.jordan();
        let grading = j.grading().ok_or_else(|| {
            Error::Unsupported("truncated U_n needs a graded Jordan algebra".into())
        })?;
        let tdeg = tkk
            .degrees()
            .ok_or_else(|| Error::Unsupported("graded TKK algebra required".into()))?;
        let mut to_tkk = Vec::new();
        for i in 0..j.dim() {
            if i != j.unit_index() {
                if grading[i] == 0 {
                    return Err(Error::Unsupported(
                        "grading must place only the unit in degree zero".into(),
                    ));
                }
                to_tkk.push(tkk.h_index(i));
            }
        }
        for k in 0..tkk.central_part_dim() {
            to_tkk.push(tkk.c_index(k));
        }
        let from_tkk = to_tkk
            .iter()
            .enumerate()
            .map(|(local, &t)| (t, local))
            .collect();
        let degrees = to_tkk.iter().map(|&t| tdeg[t] as usize).collect();
        Ok(G0Positive {
            tkk,
            to_tkk,
            from_tkk,
            degrees,
        })
    }
}

impl LieStructure for G0Positive<'_> {
    fn num_gens(&self) -> usize {
        self.to_tkk.len()
    }

    fn bracket(&self, i: u32, j: u32) -> crate::exactlin::SparseVec {
        let v = self
            .tkk
            .bracket(self.to_tkk[i as usize], self.to_tkk[j as usize]);
        v.iter()
            .map(|(t, c)| {
                let local = *self
                    .from_tkk
                    .get(t)
                    .expect("G_0 bracket leaves the positive part");
                (local, c.clone())
            })
            .collect()
    }
}

/// Filtered dimensions of U(G_0) / I_n computed exactly per internal degree
/// using the grading; the relations are h(1) - n (eliminated) and all
/// polarized instances of the partition-sum element.
pub fn un_truncated(
    tkk: &TKKAlgebra,
    n: i64,
    cap: usize,
    max_monomials: usize,
) -> Result<TruncatedUn> {
    if n < 0 {
        return Err(Error::Unsupported("level must be nonnegative".into()));
    }
    let s = G0Positive::new(tkk)?;
    let j = tkk.jordan();
    let d = j.dim();
    let unit = j.unit_index();
    let level = Rational::from_int(n);

    // h(x) in U(G_0)/(h(1) - n) for a dense element x
    let h_of = |x: &[Rational]| -> PbwElement {
        let mut e = PbwElement::zero();
        if !x[unit].is_zero() {
            e.add_term(Vec::new(), &x[unit] * &level);
        }
        let mut local = 0usize;
        for (i, c) in x.iter().enumerate() {
            if i == unit {
                continue;
            }
            if !c.is_zero() {
                e.add_term(vec![(local as u32, 1)], c.clone());
            }
            local += 1;
        }
        // local runs over non-unit indices in order, matching G0Positive
        e
    };

    // defect element for a dense a
    let defect_of = |a: &[Rational]| -> PbwElement {
        let mut out = PbwElement::zero();
        let mut h_pows: Vec<PbwElement> = Vec::new();
        for k in 1..=(n as u32 + 1) {
            h_pows.push(h_of(&j.power(a, k)));
        }
        for sigma in partitions_of(n as u32 + 1) {
            let mut prod = PbwElement::one();
            for &part in sigma.parts() {
                prod = prod.mul(&s, &h_pows[(part - 1) as usize]);
            }
            let coeff = Rational::from(sigma.class_size()) * Rational::from_int(sigma.sign());
            out.add_assign(&prod.scale(&coeff));
        }
        out
    };

    // polarized relation instances over basis multisets of size n+1
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    enumerate_multisets(d, (n + 1) as usize, &mut Vec::new(), &mut tuples);
    let mut relations: Vec<(usize, PbwElement)> = Vec::new(); // (internal degree, element)
    let grading = j.grading().unwrap();
    for t in tuples {
        let deg: usize = t.iter().map(|&i| grading[i] as usize).sum();
        if deg > cap {
            continue;
        }
        let n1 = t.len();
        let mut r = PbwElement::zero();
        for mask in 1u32..(1 << n1) {
            let mut a = vec![Rational::zero(); d];
            for (pos, &i) in t.iter().enumerate() {
                if mask & (1 << pos) != 0 {
                    a[i] = &a[i] + &Rational::one();
                }
            }
            let term = defect_of(&a);
            if (n1 - mask.count_ones() as usize) % 2 == 0 {
                r.add_assign(&term);
            } else {
                r.add_assign(&term.scale(&Rational::from_int(-1)));
            }
        }
        if !r.is_zero() {
            relations.push((deg, r));
        }
    }

    // PBW monomials per internal degree
    let gens = s.num_gens();
    let mut monos_by_degree: Vec<Vec<PbwMonomial>> = vec![Vec::new(); cap + 1];
    fn enumerate_monos(
        gens: usize,
        degrees: &[usize],
        next: usize,
        remaining: usize,
        acc: &mut PbwMonomial,
        out: &mut Vec<PbwMonomial>,
    ) {
        if remaining == 0 {
            out.push(acc.clone());
            return;
        }
        for g in next..gens {
            if degrees[g] <= remaining {
                match acc.last_mut() {
                    Some((last, e)) if *last == g as u32 => *e += 1,
                    _ => acc.push((g as u32, 1)),
                }
                enumerate_monos(gens, degrees, g, remaining - degrees[g], acc, out);
                let last = acc.last_mut().unwrap();
                if last.1 == 1 {
                    acc.pop();
                } else {
                    last.1 -= 1;
                }
            }
        }
    }
    for deg in 0..=cap {
        enumerate_monos(
            gens,
            &s.degrees,
            0,
            deg,
            &mut Vec::new(),
            &mut monos_by_degree[deg],
        );
        if monos_by_degree[deg].len() > max_monomials {
            return Err(Error::ResourceLimit {
                what: format!("PBW monomials at internal degree {deg}"),
                size: monos_by_degree[deg].len(),
                limit: max_monomials,
            });
        }
        monos_by_degree[deg].sort();
    }

    let mut graded_dims = Vec::with_capacity(cap + 1);
    let mut relation_ranks = Vec::with_capacity(cap + 1);
    for deg in 0..=cap {
        let monos = &monos_by_degree[deg];
        let index: BTreeMap<&PbwMonomial, usize> =
            monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut span = Subspace::zero(monos.len());
        for (rdeg, r) in &relations {
            if *rdeg > deg {
                continue;
            }
            let budget = deg - rdeg;
            for left_deg in 0..=budget {
                let right_deg = budget - left_deg;
                for u in &monos_by_degree[left_deg] {
                    for v in &monos_by_degree[right_deg] {
                        let mut el = PbwElement::zero();
                        el.add_term(u.clone(), Rational::one());
                        let el = el.mul(&s, r);
                        let mut vv = PbwElement::zero();
                        vv.add_term(v.clone(), Rational::one());
                        let el = el.mul(&s, &vv);
                        let mut row = vec![Rational::zero(); monos.len()];
                        for (m, c) in el.terms() {
                            row[index[m]] = c.clone();
                        }
                        span.insert(row);
                    }
                }
            }
        }
        relation_ranks.push(span.dim());
        graded_dims.push(monos.len() - span.dim());
    }
    let mut filtered_dims = Vec::with_capacity(cap + 1);
    let mut acc = 0;
    for &g in &graded_dims {
        acc += g;
        filtered_dims.push(acc);
    }
    Ok(TruncatedUn {
        level: n,
        cap,
        graded_dims,
        filtered_dims,
        relation_ranks,
    })
}
