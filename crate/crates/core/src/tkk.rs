//! The Tits-Kantor-Koecher Lie algebra of a Jordan algebra and its
//! universal central extension.
//!
//! Carrier for the extension: (sl2 (x) J) + {J,J} with {J,J} the quotient
//! of wedge^2 J by the span S of the polarized a /\ a^2 relations; carrier
//! for the plain TKK algebra: (sl2 (x) J) + Inn J.  Basis order is f(J),
//! h(J), central part, e(J), which also fixes the short grading tags.

use crate::error::{Error, Result};
use crate::exactlin::{sparse_axpy, sparse_normalize, Mat, Rational, SparseVec, Subspace};
use crate::jordan::{AlgebraJson, DerivationSpace, JordanAlgebra};
use rayon::prelude::*;

/// The fixed sl2 basis {h, e, f} with [h,e] = 2e, [h,f] = -2f, [e,f] = h,
/// and the invariant form normalized by kappa(h,h) = 4, which forces
/// kappa(e,f) = 2 and all other basis pairings zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sl2 {
    H,
    E,
    F,
}

pub fn kappa(x: Sl2, y: Sl2) -> Rational {
    match (x, y) {
        (Sl2::H, Sl2::H) => Rational::from_int(4),
        (Sl2::E, Sl2::F) | (Sl2::F, Sl2::E) => Rational::from_int(2),
        _ => Rational::zero(),
    }
}

/// [x, y] in sl2 as a list of (basis, coefficient).
pub fn sl2_bracket(x: Sl2, y: Sl2) -> Vec<(Sl2, i64)> {
    match (x, y) {
        (Sl2::H, Sl2::E) => vec![(Sl2::E, 2)],
        (Sl2::E, Sl2::H) => vec![(Sl2::E, -2)],
        (Sl2::H, Sl2::F) => vec![(Sl2::F, -2)],
        (Sl2::F, Sl2::H) => vec![(Sl2::F, 2)],
        (Sl2::E, Sl2::F) => vec![(Sl2::H, 1)],
        (Sl2::F, Sl2::E) => vec![(Sl2::H, -1)],
        _ => vec![],
    }
}

/// The central term {J,J} = wedge^2 J / S with S spanned by the trilinear
/// polarization x/\(yz) + y/\(zx) + z/\(xy) over all basis triples.
#[derive(Clone, Debug)]
pub struct CentralTerm {
    j_dim: usize,
    pair_offset: Vec<usize>,
    wedge_pairs: Vec<(usize, usize)>,
    s_space: Subspace,
    class_pairs: Vec<(usize, usize)>,
    /// quotient coordinates of each wedge basis vector
    class_table: Vec<Vec<Rational>>,
}

impl CentralTerm {
    pub fn wedge_dim(&self) -> usize {
        self.wedge_pairs.len()
    }

    pub fn dim(&self) -> usize {
        self.class_pairs.len()
    }

    pub fn s_space(&self) -> &Subspace {
        &self.s_space
    }

    /// Representative wedge pairs of the chosen class basis.
    pub fn class_pairs(&self) -> &[(usize, usize)] {
        &self.class_pairs
    }

    pub fn wedge_index(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j);
        self.pair_offset[i] + (j - i - 1)
    }

    /// Number of wedge pairs with first index i.
    pub fn wedge_row_len(&self, i: usize) -> usize {
        self.j_dim - i - 1
    }

    pub fn wedge_pair(&self, w: usize) -> (usize, usize) {
        self.wedge_pairs[w]
    }

    /// Wedge coordinates of u /\ v for dense vectors u, v.
    pub fn wedge_of_vectors(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.wedge_dim()];
        for i in 0..self.j_dim {
            if u[i].is_zero() && v[i].is_zero() {
                continue;
            }
            for j in i + 1..self.j_dim {
                let c = &(&u[i] * &v[j]) - &(&u[j] * &v[i]);
                if !c.is_zero() {
                    let w = self.wedge_index(i, j);
                    out[w] = &out[w] + &c;
                }
            }
        }
        out
    }

    /// Wedge coordinates of basis_a /\ (sparse vector).
    pub fn wedge_of_basis_sparse(&self, a: usize, v: &SparseVec) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.wedge_dim()];
        for (l, c) in v {
            match a.cmp(l) {
                std::cmp::Ordering::Less => {
                    let w = self.wedge_index(a, *l);
                    out[w] = &out[w] + c;
                }
                std::cmp::Ordering::Greater => {
                    let w = self.wedge_index(*l, a);
                    out[w] = &out[w] - c;
                }
                std::cmp::Ordering::Equal => {}
            }
        }
        out
    }

    /// Class coordinates of a wedge-coordinate vector.
    pub fn class_of_wedge(&self, wedge: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim()];
        for (w, c) in wedge.iter().enumerate() {
            if !c.is_zero() {
                for (k, x) in self.class_table[w].iter().enumerate() {
                    if !x.is_zero() {
                        out[k] = &out[k] + &(c * x);
                    }
                }
            }
        }
        out
    }

    /// Class coordinates of the basis wedge e_i /\ e_j (any order, i != j).
    pub fn class_of_pair(&self, i: usize, j: usize) -> Vec<Rational> {
        if i == j {
            return vec![Rational::zero(); self.dim()];
        }
        let (p, q, sign) = if i < j { (i, j, 1) } else { (j, i, -1) };
        let row = &self.class_table[self.wedge_index(p, q)];
        if sign == 1 {
            row.clone()
        } else {
            row.iter().map(|x| -x).collect()
        }
    }
}

/// Compute {J,J}: S is generated by the full polarization of a /\ a^2.
pub fn central_term(j: &JordanAlgebra) -> CentralTerm {
    let d = j.dim();
    let mut pair_offset = vec![0usize; d];
    let mut wedge_pairs = Vec::new();
    for i in 0..d {
        pair_offset[i] = wedge_pairs.len();
        for k in i + 1..d {
            wedge_pairs.push((i, k));
        }
    }
    let wedge_dim = wedge_pairs.len();

    let mut shell = CentralTerm {
        j_dim: d,
        pair_offset,
        wedge_pairs,
        s_space: Subspace::zero(wedge_dim),
        class_pairs: Vec::new(),
        class_table: Vec::new(),
    };

    let mut s_space = Subspace::zero(wedge_dim);
    for x in 0..d {
        for y in x..d {
            for z in y..d {
                let mut gen = shell.wedge_of_basis_sparse(x, j.mul_basis(y, z));
                for (g, extra) in gen
                    .iter_mut()
                    .zip(shell.wedge_of_basis_sparse(y, j.mul_basis(z, x)).iter())
                {
                    *g = &*g + extra;
                }
                for (g, extra) in gen
                    .iter_mut()
                    .zip(shell.wedge_of_basis_sparse(z, j.mul_basis(x, y)).iter())
                {
                    *g = &*g + extra;
                }
                s_space.insert(gen);
            }
        }
    }

    let class_pairs: Vec<(usize, usize)> = s_space
        .complement_indices()
        .into_iter()
        .map(|w| shell.wedge_pairs[w])
        .collect();
    let mut class_table = Vec::with_capacity(wedge_dim);
    for w in 0..wedge_dim {
        let mut v = vec![Rational::zero(); wedge_dim];
        v[w] = Rational::one();
        class_table.push(s_space.quotient_coords(&v));
    }
    shell.s_space = s_space;
    shell.class_pairs = class_pairs;
    shell.class_table = class_table;
    shell
}

/// Basis label inside a TKK algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TkkGen {
    F(usize),
    H(usize),
    /// central part: {J,J} class (central = true) or Inn J (central = false)
    C(usize),
    E(usize),
}

#[derive(Clone, Debug)]
pub struct TKKAlgebra {
    j: JordanAlgebra,
    central: bool,
    dim: usize,
    jdim: usize,
    cdim: usize,
    names: Vec<String>,
    weights: Vec<i64>,
    degrees: Option<Vec<u32>>,
    table: Vec<SparseVec>,
    central_term: Option<CentralTerm>,
    inn: Option<DerivationSpace>,
}

impl TKKAlgebra {
    pub fn jordan(&self) -> &JordanAlgebra {
        &self.j
    }

    pub fn is_central_extension(&self) -> bool {
        self.central
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn central_part_dim(&self) -> usize {
        self.cdim
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// h-weights of the basis: -2 on f(J), 0 on h(J) and the central part,
    /// +2 on e(J).
    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// Internal J-degrees when the Jordan algebra is graded.
    pub fn degrees(&self) -> Option<&[u32]> {
        self.degrees.as_deref()
    }

    pub fn central_term(&self) -> Option<&CentralTerm> {
        self.central_term.as_ref()
    }

    pub fn inner_derivations(&self) -> Option<&DerivationSpace> {
        self.inn.as_ref()
    }

    pub fn gen_label(&self, idx: usize) -> TkkGen {
        let d = self.jdim;
        if idx < d {
            TkkGen::F(idx)
        } else if idx < 2 * d {
            TkkGen::H(idx - d)
        } else if idx < 2 * d + self.cdim {
            TkkGen::C(idx - 2 * d)
        } else {
            TkkGen::E(idx - 2 * d - self.cdim)
        }
    }

    pub fn f_index(&self, i: usize) -> usize {
        i
    }

    pub fn h_index(&self, i: usize) -> usize {
        self.jdim + i
    }

    pub fn c_index(&self, k: usize) -> usize {
        2 * self.jdim + k
    }

    pub fn e_index(&self, i: usize) -> usize {
        2 * self.jdim + self.cdim + i
    }

    pub fn bracket(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim + j]
    }

    /// [u, v] for dense coordinate vectors.
    pub fn bracket_vectors(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if !vj.is_zero() {
                    sparse_axpy(&mut out, &(ui * vj), self.bracket(i, j));
                }
            }
        }
        out
    }

    /// Exhaustive Jacobi check over all basis triples.  Returns the first
    /// failing triple as an error; expected to pass on every valid input.
    pub fn verify_jacobi(&self) -> Result<()> {
        let n = self.dim;
        let mut triples = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    triples.push((i as u32, j as u32, k as u32));
                }
            }
        }
        let failure = triples
            .par_iter()
            .with_min_len(1024)
            .map_init(
                || vec![Rational::zero(); n],
                |buf, &(i, j, k)| {
                    let (i, j, k) = (i as usize, j as usize, k as usize);
                    for x in buf.iter_mut() {
                        *x = Rational::zero();
                    }
                    self.acc_double_bracket(buf, i, j, k);
                    self.acc_double_bracket(buf, j, k, i);
                    self.acc_double_bracket(buf, k, i, j);
                    if buf.iter().all(|x| x.is_zero()) {
                        None
                    } else {
                        Some((i, j, k))
                    }
                },
            )
            .find_first(|r| r.is_some())
            .flatten();
        match failure {
            Some((i, j, k)) => Err(Error::JacobiFailure { i, j, k }),
            None => Ok(()),
        }
    }

    fn acc_double_bracket(&self, buf: &mut [Rational], i: usize, j: usize, k: usize) {
        for (l, c) in self.bracket(i, j) {
            sparse_axpy(buf, c, self.bracket(*l, k));
        }
    }

    /// Check [G_a, G_b] subset G_{a+b} on the whole table (zero outside the
    /// short grading) and that internal degrees add when present.
    pub fn verify_grading(&self) -> bool {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let w = self.weights[i] + self.weights[j];
                for (l, _) in self.bracket(i, j) {
                    if self.weights[*l] != w || w.abs() > 2 {
                        return false;
                    }
                    if let Some(deg) = &self.degrees {
                        if deg[*l] != deg[i] + deg[j] {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// The subspace (sl2 (x) I) + {I, J} for an ideal I of J, checked to be
    /// a Lie ideal of the central extension.
    pub fn ideal_subalgebra(&self, ideal: &Subspace) -> Result<Subspace> {
        if !self.central {
            return Err(Error::Unsupported(
                "ideal subalgebra is defined on the central extension".into(),
            ));
        }
        if !self.j.is_ideal(ideal) {
            return Err(Error::NotAnIdeal);
        }
        let ct = self.central_term.as_ref().expect("central term present");
        let mut span = Subspace::zero(self.dim);
        for v in ideal.basis() {
            for part in 0..3 {
                let mut vec = vec![Rational::zero(); self.dim];
                for (i, x) in v.iter().enumerate() {
                    if !x.is_zero() {
                        let idx = match part {
                            0 => self.f_index(i),
                            1 => self.h_index(i),
                            _ => self.e_index(i),
                        };
                        vec[idx] = x.clone();
                    }
                }
                span.insert(vec);
            }
            // {I, J} inside the central part
            for b in 0..self.jdim {
                let wedge = ct.wedge_of_vectors(v, &self.j.basis_vector(b));
                let class = ct.class_of_wedge(&wedge);
                let mut vec = vec![Rational::zero(); self.dim];
                for (k, x) in class.into_iter().enumerate() {
                    vec[self.c_index(k)] = x;
                }
                span.insert(vec);
            }
        }
        // bracket closure
        for row in span.basis() {
            for g in 0..self.dim {
                let mut gv = vec![Rational::zero(); self.dim];
                gv[g] = Rational::one();
                let br = self.bracket_vectors(&gv, row);
                if !span.contains(&br) {
                    return Err(Error::AxiomViolation(format!(
                        "ideal subalgebra not closed under bracket with generator {g}"
                    )));
                }
            }
        }
        Ok(span)
    }

    /// Matrix of the natural map to the TKK algebra of a quotient J/I,
    /// x(a) -> x(a mod I) and {a,b} -> {a mod I, b mod I}.
    pub fn quotient_map(&self, other: &TKKAlgebra, projection: &Mat) -> Mat {
        assert!(self.central && other.central);
        let oct = other.central_term.as_ref().expect("central term");
        let mut cols = Vec::with_capacity(self.dim);
        for idx in 0..self.dim {
            let mut col = vec![Rational::zero(); other.dim()];
            match self.gen_label(idx) {
                TkkGen::F(i) => {
                    for (r, x) in projection.col(i).into_iter().enumerate() {
                        col[other.f_index(r)] = x;
                    }
                }
                TkkGen::H(i) => {
                    for (r, x) in projection.col(i).into_iter().enumerate() {
                        col[other.h_index(r)] = x;
                    }
                }
                TkkGen::E(i) => {
                    for (r, x) in projection.col(i).into_iter().enumerate() {
                        col[other.e_index(r)] = x;
                    }
                }
                TkkGen::C(k) => {
                    let (p, q) = self.central_term.as_ref().expect("central").class_pairs()[k];
                    let wedge = oct.wedge_of_vectors(&projection.col(p), &projection.col(q));
                    for (r, x) in oct.class_of_wedge(&wedge).into_iter().enumerate() {
                        col[other.c_index(r)] = x;
                    }
                }
            }
            cols.push(col);
        }
        Mat::from_cols(other.dim(), cols)
    }

    /// Export in the shared structure-constant schema (antisymmetric
    /// products, upper triangle only).
    pub fn to_json(&self) -> AlgebraJson {
        let mut products = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.bracket(i, j);
                if !v.is_empty() {
                    products.push((i, j, crate::jordan::json_sparse_to_pairs(v)));
                }
            }
        }
        AlgebraJson {
            dim: self.dim,
            unit: None,
            names: self.names.clone(),
            kind: Some("lie".into()),
            grading: self.degrees.clone(),
            weights: Some(self.weights.clone()),
            augmentation: None,
            products,
        }
    }
}

/// The linear map from the central extension onto TKK(J), identity on
/// sl2 (x) J, sending {a,b} to the inner derivation d_{a,b}.
pub struct CoverMap {
    pub target: TKKAlgebra,
    pub matrix: Mat,
    pub kernel_dim: usize,
}

pub fn central_cover_map(g: &TKKAlgebra) -> Result<CoverMap> {
    if !g.central {
        return Err(Error::Unsupported(
            "cover map starts from the central extension".into(),
        ));
    }
    let target = build(g.jordan().clone(), false)?;
    let inn = target.inn.as_ref().expect("inner derivations present");
    let mut cols = Vec::with_capacity(g.dim());
    for idx in 0..g.dim() {
        let mut col = vec![Rational::zero(); target.dim()];
        match g.gen_label(idx) {
            TkkGen::F(i) => col[target.f_index(i)] = Rational::one(),
            TkkGen::H(i) => col[target.h_index(i)] = Rational::one(),
            TkkGen::E(i) => col[target.e_index(i)] = Rational::one(),
            TkkGen::C(k) => {
                let (p, q) = g.central_term.as_ref().expect("central").class_pairs()[k];
                let d = g
                    .jordan()
                    .inner_derivation(&g.jordan().basis_vector(p), &g.jordan().basis_vector(q));
                let coords = inn
                    .coords_of(&d)
                    .expect("inner derivation lies in Inn J by construction");
                for (r, x) in coords.into_iter().enumerate() {
                    col[target.c_index(r)] = x;
                }
            }
        }
        cols.push(col);
    }
    let matrix = Mat::from_cols(target.dim(), cols);
    let sm = crate::exactlin::SparseMatrix::from_dense_rows(
        (0..matrix.rows()).map(|i| matrix.row(i).to_vec()).collect(),
    );
    let kernel_dim = sm.kernel_basis().dim();
    Ok(CoverMap {
        target,
        matrix,
        kernel_dim,
    })
}

/// Check that a linear map of Lie algebras respects brackets on all basis
/// pairs of the source.
pub fn is_lie_homomorphism(source: &TKKAlgebra, target: &TKKAlgebra, map: &Mat) -> bool {
    for i in 0..source.dim() {
        for j in i + 1..source.dim() {
            let lhs = {
                let mut v = vec![Rational::zero(); source.dim()];
                for (l, c) in source.bracket(i, j) {
                    v[*l] = c.clone();
                }
                map.apply(&v)
            };
            let rhs = target.bracket_vectors(&map.col(i), &map.col(j));
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// Build TKK(J) (central = false) or its universal central extension
/// (central = true) with full bracket tables.
pub fn build(j: JordanAlgebra, central: bool) -> Result<TKKAlgebra> {
    let d = j.dim();
    let (ct, inn): (Option<CentralTerm>, Option<DerivationSpace>) = if central {
        (Some(central_term(&j)), None)
    } else {
        (None, Some(j.inner_derivation_space()))
    };
    let cdim = ct
        .as_ref()
        .map(|c| c.dim())
        .or_else(|| inn.as_ref().map(|i| i.dim()))
        .unwrap();
    let dim = 3 * d + cdim;

    let mut names = Vec::with_capacity(dim);
    for i in 0..d {
        names.push(format!("f({})", j.names()[i]));
    }
    for i in 0..d {
        names.push(format!("h({})", j.names()[i]));
    }
    for k in 0..cdim {
        if central {
            let (p, q) = ct.as_ref().unwrap().class_pairs()[k];
            names.push(format!("{{{},{}}}", j.names()[p], j.names()[q]));
        } else {
            names.push(format!("d{k}"));
        }
    }
    for i in 0..d {
        names.push(format!("e({})", j.names()[i]));
    }

    let mut weights = vec![0i64; dim];
    for i in 0..d {
        weights[i] = -2;
        weights[2 * d + cdim + i] = 2;
    }

    // Internal degrees are tracked for the central extension only: an
    // echelon basis of Inn J need not be degree-homogeneous.
    let degrees = if central {
        j.grading().map(|g| {
            let mut deg = vec![0u32; dim];
            for i in 0..d {
                deg[i] = g[i];
                deg[d + i] = g[i];
                deg[2 * d + cdim + i] = g[i];
            }
            for k in 0..cdim {
                if let Some(c) = &ct {
                    let (p, q) = c.class_pairs()[k];
                    deg[2 * d + k] = g[p] + g[q];
                }
            }
            deg
        })
    } else {
        None
    };

    // precompute class coordinates of basis wedges and the derivation data
    let class_of_pair: Option<Vec<Vec<Vec<Rational>>>> = ct.as_ref().map(|c| {
        (0..d)
            .map(|i| (0..d).map(|jj| c.class_of_pair(i, jj)).collect())
            .collect()
    });
    let inn_coords: Option<Vec<Vec<Vec<Rational>>>> = inn.as_ref().map(|space| {
        (0..d)
            .map(|i| {
                (0..d)
                    .map(|jj| {
                        let der =
                            j.inner_derivation(&j.basis_vector(i), &j.basis_vector(jj));
                        space
                            .coords_of(&der)
                            .expect("inner derivation lies in its own span")
                    })
                    .collect()
            })
            .collect()
    });
    let central_reps: Vec<Mat> = if central {
        ct.as_ref()
            .unwrap()
            .class_pairs()
            .iter()
            .map(|&(p, q)| j.inner_derivation(&j.basis_vector(p), &j.basis_vector(q)))
            .collect()
    } else {
        inn.as_ref().unwrap().basis_matrices()
    };

    let f_idx = |i: usize| i;
    let h_idx = |i: usize| d + i;
    let c_idx = |k: usize| 2 * d + k;
    let e_idx = |i: usize| 2 * d + cdim + i;

    let central_part = |coords: &[Rational]| -> Vec<(usize, Rational)> {
        coords
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(k, x)| (c_idx(k), x.clone()))
            .collect()
    };

    let mut table = vec![SparseVec::new(); dim * dim];
    {
        let mut set = |a: usize, b: usize, v: SparseVec| {
            table[a * dim + b] = v;
        };

        for i in 0..d {
            for jj in 0..d {
                // [h(i), h(j)] = 4 {i, j}  (or 4 d_{i,j} in Inn coordinates)
                let hh: SparseVec = {
                    let coords = match (&class_of_pair, &inn_coords) {
                        (Some(cp), _) => cp[i][jj].clone(),
                        (None, Some(ic)) => ic[i][jj].clone(),
                        _ => unreachable!(),
                    };
                    sparse_normalize(
                        central_part(&coords)
                            .into_iter()
                            .map(|(k, x)| (k, &x * &Rational::from_int(4)))
                            .collect(),
                    )
                };
                set(h_idx(i), h_idx(jj), hh);

                let prod = j.mul_basis(i, jj);
                // [h(i), e(j)] = 2 e(ij), [h(i), f(j)] = -2 f(ij)
                let he: SparseVec = prod
                    .iter()
                    .map(|(k, c)| (e_idx(*k), c * &Rational::from_int(2)))
                    .collect();
                let eh: SparseVec = he.iter().map(|(k, c)| (*k, -c)).collect();
                set(h_idx(i), e_idx(jj), he);
                set(e_idx(jj), h_idx(i), eh);

                let hf: SparseVec = prod
                    .iter()
                    .map(|(k, c)| (f_idx(*k), c * &Rational::from_int(-2)))
                    .collect();
                let fh: SparseVec = hf.iter().map(|(k, c)| (*k, -c)).collect();
                set(h_idx(i), f_idx(jj), hf);
                set(f_idx(jj), h_idx(i), fh);

                // [e(i), f(j)] = h(ij) + 2 {i, j}
                let coords = match (&class_of_pair, &inn_coords) {
                    (Some(cp), _) => cp[i][jj].clone(),
                    (None, Some(ic)) => ic[i][jj].clone(),
                    _ => unreachable!(),
                };
                let mut ef: Vec<(usize, Rational)> = prod
                    .iter()
                    .map(|(k, c)| (h_idx(*k), c.clone()))
                    .collect();
                ef.extend(
                    central_part(&coords)
                        .into_iter()
                        .map(|(k, x)| (k, &x * &Rational::from_int(2))),
                );
                let ef = sparse_normalize(ef);
                let fe: SparseVec = ef.iter().map(|(k, c)| (*k, -c)).collect();
                set(e_idx(i), f_idx(jj), ef);
                set(f_idx(jj), e_idx(i), fe);
            }
        }

        // central part acting on sl2 (x) J, and on itself
        for k in 0..cdim {
            let der = &central_reps[k];
            for jj in 0..d {
                let img = der.col(jj);
                for (part, mk) in [
                    (0, &f_idx as &dyn Fn(usize) -> usize),
                    (1, &h_idx),
                    (2, &e_idx),
                ] {
                    let _ = part;
                    let v: SparseVec = img
                        .iter()
                        .enumerate()
                        .filter(|(_, x)| !x.is_zero())
                        .map(|(r, x)| (mk(r), x.clone()))
                        .collect();
                    let neg: SparseVec = v.iter().map(|(idx, c)| (*idx, -c)).collect();
                    let src = match part {
                        0 => f_idx(jj),
                        1 => h_idx(jj),
                        _ => e_idx(jj),
                    };
                    set(c_idx(k), src, v);
                    set(src, c_idx(k), neg);
                }
            }
        }
        for k in 0..cdim {
            for l in 0..cdim {
                if k == l {
                    continue;
                }
                let v: SparseVec = if central {
                    let c = ct.as_ref().unwrap();
                    let (r, s) = c.class_pairs()[l];
                    let der = &central_reps[k];
                    // {d r, s} + {r, d s}
                    let dr = der.col(r);
                    let ds = der.col(s);
                    let mut wedge = c.wedge_of_vectors(&dr, &j.basis_vector(s));
                    for (w, extra) in wedge
                        .iter_mut()
                        .zip(c.wedge_of_vectors(&j.basis_vector(r), &ds).iter())
                    {
                        *w = &*w + extra;
                    }
                    central_part(&c.class_of_wedge(&wedge))
                } else {
                    let space = inn.as_ref().unwrap();
                    let comm = central_reps[k].commutator(&central_reps[l]);
                    let coords = space
                        .coords_of(&comm)
                        .expect("Inn J closed under commutator");
                    central_part(&coords)
                };
                set(c_idx(k), c_idx(l), sparse_normalize(v));
            }
        }
    }

    let algebra = TKKAlgebra {
        j,
        central,
        dim,
        jdim: d,
        cdim,
        names,
        weights,
        degrees,
        table,
        central_term: ct,
        inn,
    };

    // antisymmetry of the table, including the (R3) part computed in the
    // quotient, is asserted outright
    for i in 0..dim {
        for jj in 0..dim {
            let ab = algebra.bracket(i, jj);
            let ba = algebra.bracket(jj, i);
            let neg: SparseVec = ba.iter().map(|(k, c)| (*k, -c)).collect();
            if *ab != neg {
                return Err(Error::AxiomViolation(format!(
                    "bracket table not antisymmetric at ({i}, {jj})"
                )));
            }
        }
    }
    Ok(algebra)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jordan::{field, sym3, truncated_polynomial};

    #[test]
    fn kappa_is_invariant_on_sl2() {
        // kappa([x,y], z) = kappa(x, [y,z]) on all basis triples
        let basis = [Sl2::H, Sl2::E, Sl2::F];
        for &x in &basis {
            for &y in &basis {
                for &z in &basis {
                    let mut lhs = Rational::zero();
                    for (g, c) in sl2_bracket(x, y) {
                        lhs = &lhs + &(&Rational::from_int(c) * &kappa(g, z));
                    }
                    let mut rhs = Rational::zero();
                    for (g, c) in sl2_bracket(y, z) {
                        rhs = &rhs + &(&Rational::from_int(c) * &kappa(x, g));
                    }
                    assert_eq!(lhs, rhs, "invariance at ({x:?}, {y:?}, {z:?})");
                }
            }
        }
    }

    #[test]
    fn central_term_examples() {
        // J = K[t]/(t^3): Lambda^2 has basis 1^t, 1^t^2, t^t^2, all killed
        let ct = central_term(&truncated_polynomial(3));
        assert_eq!(ct.dim(), 0);
        // J = K: Lambda^2 K = 0
        assert_eq!(central_term(&field()).dim(), 0);
        for n in 2..=5 {
            assert_eq!(central_term(&truncated_polynomial(n)).dim(), 0, "N = {n}");
        }
        // sym3 is simple, so {J,J} matches Inn J (dimension 3 here)
        let s = sym3();
        let ct = central_term(&s);
        assert_eq!(ct.dim(), s.inner_derivation_space().dim());
        assert_eq!(ct.dim(), 3);
    }

    #[test]
    fn unit_wedges_vanish() {
        // {1, a} = 0 for every basis a
        for j in [truncated_polynomial(4), sym3()] {
            let ct = central_term(&j);
            let unit = j.unit_index();
            for a in 0..j.dim() {
                let class = ct.class_of_pair(unit, a);
                assert!(class.iter().all(|x| x.is_zero()), "{{1, {a}}} nonzero");
            }
        }
    }

    #[test]
    fn sampled_square_wedges_in_s() {
        use rand::{Rng, SeedableRng};
        let j = sym3();
        let ct = central_term(&j);
        let mut rng = rand_chacha::ChaCha20Rng::seed_from_u64(7);
        for _ in 0..25 {
            let a: Vec<Rational> = (0..j.dim())
                .map(|_| Rational::frac(rng.gen_range(-4i64..=4), rng.gen_range(1i64..=3)))
                .collect();
            let a2 = j.mul(&a, &a);
            let wedge = ct.wedge_of_vectors(&a, &a2);
            assert!(ct.s_space().contains(&wedge), "a ^ a^2 escapes S");
        }
    }

    #[test]
    fn field_gives_sl2() {
        let g = build(field(), true).unwrap();
        assert_eq!(g.dim(), 3);
        g.verify_jacobi().unwrap();
        // [e, f] = h, [h, e] = 2e, [h, f] = -2f in the f, h, e basis
        let (f, h, e) = (g.f_index(0), g.h_index(0), g.e_index(0));
        assert_eq!(g.bracket(e, f), &vec![(h, Rational::one())]);
        assert_eq!(g.bracket(h, e), &vec![(e, Rational::from_int(2))]);
        assert_eq!(g.bracket(h, f), &vec![(f, Rational::from_int(-2))]);
    }

    #[test]
    fn ef_bracket_carries_twice_the_class() {
        let s = sym3();
        let g = build(s, true).unwrap();
        let ct = g.central_term().unwrap();
        // [e(a), f(b)] = h(ab) + 2{a,b}: check the central component on a
        // pair with a nonzero class
        let mut found = false;
        for i in 0..g.jordan().dim() {
            for jj in 0..g.jordan().dim() {
                let class = ct.class_of_pair(i, jj);
                if class.iter().all(|x| x.is_zero()) {
                    continue;
                }
                found = true;
                let v = g.bracket(g.e_index(i), g.f_index(jj));
                for (k, x) in class.iter().enumerate() {
                    let entry = v
                        .iter()
                        .find(|(idx, _)| *idx == g.c_index(k))
                        .map(|(_, c)| c.clone())
                        .unwrap_or_else(Rational::zero);
                    assert_eq!(entry, x * &Rational::from_int(2));
                }
            }
        }
        assert!(found, "sym3 should have nonzero classes");
    }

    #[test]
    fn jacobi_small_fixtures() {
        for n in 1..=3 {
            let g = build(truncated_polynomial(n), true).unwrap();
            g.verify_jacobi().unwrap();
            assert!(g.verify_grading());
        }
        let g = build(sym3(), true).unwrap();
        g.verify_jacobi().unwrap();
        assert!(g.verify_grading());
        // the Inn J variant as well
        let g = build(sym3(), false).unwrap();
        g.verify_jacobi().unwrap();
    }

    #[test]
    fn cover_map_properties() {
        // K[t]/(t^3): {J,J} = 0, kernel 0, map is a bijective homomorphism
        let g = build(truncated_polynomial(3), true).unwrap();
        let cover = central_cover_map(&g).unwrap();
        assert_eq!(cover.kernel_dim, 0);
        assert!(is_lie_homomorphism(&g, &cover.target, &cover.matrix));

        // J = K: identity on sl2
        let g = build(field(), true).unwrap();
        let cover = central_cover_map(&g).unwrap();
        assert_eq!(cover.kernel_dim, 0);
        assert_eq!(cover.matrix, Mat::identity(3));

        // sym3: finite dimensional simple, central extension is trivial
        let g = build(sym3(), true).unwrap();
        let cover = central_cover_map(&g).unwrap();
        assert_eq!(cover.kernel_dim, 0);
        assert!(is_lie_homomorphism(&g, &cover.target, &cover.matrix));
        // injective on sl2 (x) J by construction: check columns independent
        for i in 0..3 * g.jordan().dim() {
            let idx = if i < 2 * g.jordan().dim() {
                i
            } else {
                i + g.central_part_dim()
            };
            assert!(!cover.matrix.col(idx).iter().all(|x| x.is_zero()));
        }
    }

    #[test]
    fn ideal_subalgebra_dims_and_closure() {
        let j = truncated_polynomial(3);
        let g = build(j.clone(), true).unwrap();
        // I = 0
        let zero = Subspace::zero(j.dim());
        assert_eq!(g.ideal_subalgebra(&zero).unwrap().dim(), 0);
        // I = J+: dim = 3 * 2 + dim {J+, J} = 6 since {J,J} = 0 here
        let aug = j.augmentation_subspace().unwrap();
        let s = g.ideal_subalgebra(&aug).unwrap();
        assert_eq!(s.dim(), 6);
        // kernel of the map to sl2(J/I) matches
        let (q, proj) = j.quotient_with_projection(&aug).unwrap();
        let gq = build(q, true).unwrap();
        let qmap = g.quotient_map(&gq, &proj);
        let rows: Vec<Vec<Rational>> =
            (0..qmap.rows()).map(|r| qmap.row(r).to_vec()).collect();
        let kernel = crate::exactlin::SparseMatrix::from_dense_rows(rows).kernel_basis();
        assert_eq!(kernel.dim(), s.dim());
        assert!(s.basis().iter().all(|v| kernel.contains(v)));
    }
}
