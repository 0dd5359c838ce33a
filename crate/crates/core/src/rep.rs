//! Right modules over a finite-dimensional algebra.
//!
//! A module is stored as a vector space per vertex together with the action
//! matrix of every basis element: `b in e_i A e_j` acts as `v -> v * R_b`
//! from the space at `i` to the space at `j`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::fdalg::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{is_zero_vec, unit_vec, Echelon, Matrix, QuotientReducer};
use crate::silting::{ProjMap, TwoTermComplex};

#[derive(Clone, PartialEq, Eq)]
pub struct Representation<F> {
    dims: Vec<usize>,
    actions: Vec<Matrix<F>>,
}

/// One linear map per vertex, commuting with the action.
#[derive(Clone, PartialEq, Eq)]
pub struct ModuleMorphism<F> {
    pub maps: Vec<Matrix<F>>,
}

impl<F: Field> ModuleMorphism<F> {
    pub fn compose(&self, then: &ModuleMorphism<F>) -> ModuleMorphism<F> {
        ModuleMorphism { maps: self.maps.iter().zip(&then.maps).map(|(f, g)| f.mul(g)).collect() }
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(|m| m.rows() == m.cols() && (m.rows() == 0 || m.is_invertible()))
    }

    fn trace(&self) -> F {
        let mut t = F::zero();
        for m in &self.maps {
            t.add_assign(&m.trace());
        }
        t
    }

    fn lin_comb(parts: &[ModuleMorphism<F>], coefs: &[F]) -> ModuleMorphism<F> {
        let mut maps: Vec<Matrix<F>> = parts[0].maps.iter().map(|m| Matrix::zeros(m.rows(), m.cols())).collect();
        for (p, c) in parts.iter().zip(coefs) {
            for (acc, m) in maps.iter_mut().zip(&p.maps) {
                *acc = acc.add(&m.scale(c));
            }
        }
        ModuleMorphism { maps }
    }
}

/// A minimal projective presentation `P_1 -> P_0 -> M -> 0`.
#[derive(Clone, Debug)]
pub struct ProjPresentation<F> {
    /// Differential `P_1 -> P_0`; its rows list `P_0`, its columns `P_1`.
    pub d: ProjMap<F>,
}

impl<F: Field> ProjPresentation<F> {
    pub fn p0(&self) -> &[usize] {
        &self.d.rows
    }

    pub fn p1(&self) -> &[usize] {
        &self.d.cols
    }

    pub fn complex(&self) -> TwoTermComplex<F> {
        TwoTermComplex::new(self.d.clone())
    }
}

impl<F: Field> std::fmt::Debug for Representation<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Representation").field("dims", &self.dims).finish_non_exhaustive()
    }
}

impl<F: Field> std::fmt::Debug for ModuleMorphism<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("ModuleMorphism").field("maps", &self.maps).finish()
    }
}

/// Basis elements of the radical that span it modulo its square.
pub fn radical_generators<F: Field>(a: &FiniteDimAlgebra<F>) -> Vec<usize> {
    let d = a.dim();
    let mut ech = Echelon::new(d);
    if let Some(sq) = a.radical_layers().get(1) {
        for v in sq {
            ech.insert(v.clone());
        }
    }
    (0..d).filter(|&x| !a.is_idempotent_index(x) && ech.insert(a.unit(x))).collect()
}

impl<F: Field> Representation<F> {
    /// Builds a module from the action of every basis element and checks the module axioms.
    pub fn from_actions(a: &FiniteDimAlgebra<F>, dims: Vec<usize>, actions: Vec<Matrix<F>>) -> Result<Self> {
        let m = Representation { dims, actions };
        m.validate(a)?;
        Ok(m)
    }

    fn unchecked(dims: Vec<usize>, actions: Vec<Matrix<F>>) -> Self {
        Representation { dims, actions }
    }

    /// Builds a module from one matrix per arrow of the presentation.
    pub fn from_arrow_matrices(a: &FiniteDimAlgebra<F>, dims: Vec<usize>, arrows: &[Matrix<F>]) -> Result<Self> {
        let p = a.presentation().ok_or_else(|| Error::Unsupported("algebra has no presentation".into()))?;
        let q = &p.quiver;
        if arrows.len() != q.arrows.len() || dims.len() != a.num_vertices() {
            return Err(Error::Dimension("one matrix per arrow and one dimension per vertex".into()));
        }
        for (ar, m) in q.arrows.iter().zip(arrows) {
            if (m.rows(), m.cols()) != (dims[ar.src], dims[ar.tgt]) {
                return Err(Error::Dimension(format!("matrix for {} has the wrong shape", ar.name)));
            }
        }
        let word_action = |start: usize, ws: &[usize]| -> Matrix<F> {
            let mut acc = Matrix::identity(dims[start]);
            for &w in ws {
                acc = acc.mul(&arrows[w]);
            }
            acc
        };
        for rel in p.evaluated_relations()? {
            let Some((_, w0)) = rel.first() else { continue };
            let (s, t) = (w0.source(), w0.target(q));
            let mut sum = Matrix::zeros(dims[s], dims[t]);
            for (c, w) in &rel {
                let c = F::from_q(c)?;
                sum = sum.add(&word_action(w.start, &w.arrows).scale(&c));
            }
            if !sum.is_zero() {
                return Err(Error::Dimension("a relation does not act as zero".into()));
            }
        }
        let mut actions = Vec::with_capacity(a.dim());
        for b in a.basis() {
            let w = b.word.as_ref().ok_or_else(|| Error::Unsupported("basis element without a path word".into()))?;
            actions.push(word_action(w.start, &w.arrows));
        }
        Self::from_actions(a, dims, actions)
    }

    pub fn zero(a: &FiniteDimAlgebra<F>) -> Self {
        let actions = a.basis().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation { dims: vec![0; a.num_vertices()], actions }
    }

    pub fn validate(&self, a: &FiniteDimAlgebra<F>) -> Result<()> {
        if self.dims.len() != a.num_vertices() || self.actions.len() != a.dim() {
            return Err(Error::Dimension("representation does not match the algebra".into()));
        }
        for (x, b) in a.basis().iter().enumerate() {
            let m = &self.actions[x];
            if (m.rows(), m.cols()) != (self.dims[b.src], self.dims[b.tgt]) {
                return Err(Error::Dimension(format!("action of {} has the wrong shape", b.label)));
            }
            if a.is_idempotent_index(x) && *m != Matrix::identity(self.dims[b.src]) {
                return Err(Error::Dimension(format!("{} does not act as the identity", b.label)));
            }
        }
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                let (bx, by) = (&a.basis()[x], &a.basis()[y]);
                if bx.tgt != by.src {
                    continue;
                }
                let lhs = self.actions[x].mul(&self.actions[y]);
                let mut rhs = Matrix::zeros(self.dims[bx.src], self.dims[by.tgt]);
                for (z, c) in a.product(x, y) {
                    rhs = rhs.add(&self.actions[*z].scale(c));
                }
                if lhs != rhs {
                    return Err(Error::Dimension("action is not compatible with multiplication".into()));
                }
            }
        }
        Ok(())
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn action(&self, x: usize) -> &Matrix<F> {
        &self.actions[x]
    }

    /// `e_i A` with basis the basis elements starting at `i`.
    pub fn projective(a: &FiniteDimAlgebra<F>, i: usize) -> Self {
        let n = a.num_vertices();
        let dims: Vec<usize> = (0..n).map(|j| a.block_dim(i, j)).collect();
        let actions = (0..a.dim())
            .map(|x| {
                let b = &a.basis()[x];
                let (j, k) = (b.src, b.tgt);
                let mut m = Matrix::zeros(dims[j], dims[k]);
                let (oj, ok) = (a.block_offset(i, j), a.block_offset(i, k));
                for r in 0..dims[j] {
                    for (z, c) in a.product(oj + r, x) {
                        m[(r, z - ok)] = c.clone();
                    }
                }
                m
            })
            .collect();
        Representation { dims, actions }
    }

    pub fn simple(a: &FiniteDimAlgebra<F>, i: usize) -> Self {
        let n = a.num_vertices();
        let dims: Vec<usize> = (0..n).map(|j| usize::from(j == i)).collect();
        let actions = (0..a.dim())
            .map(|x| {
                let b = &a.basis()[x];
                if a.is_idempotent_index(x) && b.src == i {
                    Matrix::identity(1)
                } else {
                    Matrix::zeros(dims[b.src], dims[b.tgt])
                }
            })
            .collect();
        Representation { dims, actions }
    }

    /// `A` as a right module.
    pub fn regular(a: &FiniteDimAlgebra<F>) -> Self {
        let ps: Vec<Self> = (0..a.num_vertices()).map(|i| Self::projective(a, i)).collect();
        Self::direct_sum(a, &ps)
    }

    pub fn direct_sum(a: &FiniteDimAlgebra<F>, parts: &[Self]) -> Self {
        let n = a.num_vertices();
        let dims: Vec<usize> = (0..n).map(|j| parts.iter().map(|p| p.dims[j]).sum()).collect();
        let actions = (0..a.dim())
            .map(|x| {
                let b = &a.basis()[x];
                let mut m = Matrix::zeros(dims[b.src], dims[b.tgt]);
                let (mut r0, mut c0) = (0, 0);
                for p in parts {
                    let px = &p.actions[x];
                    for r in 0..px.rows() {
                        for c in 0..px.cols() {
                            m[(r0 + r, c0 + c)] = px[(r, c)].clone();
                        }
                    }
                    r0 += px.rows();
                    c0 += px.cols();
                }
                m
            })
            .collect();
        Representation { dims, actions }
    }

    /// A module over a quotient `B = A/I` viewed as an `A`-module.
    pub fn restrict_from_quotient(&self, parent: &FiniteDimAlgebra<F>, quotient: &FiniteDimAlgebra<F>) -> Result<Self> {
        let qm = quotient.quotient_map().ok_or_else(|| Error::Unsupported("not a quotient algebra".into()))?;
        if qm.rows() != parent.dim() || qm.cols() != quotient.dim() || parent.num_vertices() != quotient.num_vertices() {
            return Err(Error::Dimension("quotient map does not match".into()));
        }
        let actions = (0..parent.dim())
            .map(|x| {
                let b = &parent.basis()[x];
                let mut m = Matrix::zeros(self.dims[b.src], self.dims[b.tgt]);
                for z in 0..quotient.dim() {
                    let c = &qm[(x, z)];
                    if !c.is_zero() {
                        m = m.add(&self.actions[z].scale(c));
                    }
                }
                m
            })
            .collect();
        Ok(Representation { dims: self.dims.clone(), actions })
    }

    /// `M rad` at each vertex, as a spanning set.
    fn radical_image(&self, a: &FiniteDimAlgebra<F>, gens: &[usize]) -> Vec<Echelon<F>> {
        let mut out: Vec<Echelon<F>> = self.dims.iter().map(|&d| Echelon::new(d)).collect();
        for &x in gens {
            let b = &a.basis()[x];
            for r in 0..self.actions[x].rows() {
                let v = self.actions[x].row(r).to_vec();
                if !is_zero_vec(&v) {
                    out[b.tgt].insert(v);
                }
            }
        }
        out
    }

    /// Dimension vector of `M / M rad`.
    pub fn top_dims(&self, a: &FiniteDimAlgebra<F>) -> Vec<usize> {
        let gens = radical_generators(a);
        self.radical_image(a, &gens).iter().zip(&self.dims).map(|(e, d)| d - e.rank()).collect()
    }

    /// The submodule with the given basis at each vertex.
    fn submodule(&self, a: &FiniteDimAlgebra<F>, bases: &[Vec<Vec<F>>]) -> Self {
        let dims: Vec<usize> = bases.iter().map(Vec::len).collect();
        let solvers: Vec<Option<Matrix<F>>> = bases
            .iter()
            .zip(&self.dims)
            .map(|(b, &d)| if b.is_empty() { None } else { Some(Matrix::from_rows(b.clone(), d)) })
            .collect();
        let actions = (0..a.dim())
            .map(|x| {
                let bx = &a.basis()[x];
                let mut m = Matrix::zeros(dims[bx.src], dims[bx.tgt]);
                if let Some(tgt) = &solvers[bx.tgt] {
                    let tt = tgt.transpose();
                    for (r, v) in bases[bx.src].iter().enumerate() {
                        let img = self.actions[x].vec_mul(v);
                        let c = tt.solve(&img).expect("submodule is closed under the action");
                        for (k, ck) in c.into_iter().enumerate() {
                            m[(r, k)] = ck;
                        }
                    }
                }
                m
            })
            .collect();
        Representation { dims, actions }
    }

    /// The quotient `W / S` of a module given as coordinates per vertex, as in
    /// cokernels: `kill[j]` spans the image at vertex `j`, and `act(x, v)` acts
    /// on the ambient coordinates.
    fn from_quotients(
        a: &FiniteDimAlgebra<F>,
        widths: &[usize],
        kill: Vec<Vec<Vec<F>>>,
        act: impl Fn(usize, &[F]) -> Vec<F>,
    ) -> Self {
        let n = a.num_vertices();
        let mut qs: Vec<QuotientReducer<F>> = widths.iter().map(|&w| QuotientReducer::new(w)).collect();
        for (j, vs) in kill.into_iter().enumerate() {
            for v in vs {
                qs[j].kill(v);
            }
            for k in 0..widths[j] {
                qs[j].extend(unit_vec(widths[j], k));
            }
        }
        let dims: Vec<usize> = (0..n).map(|j| qs[j].dim()).collect();
        let actions = (0..a.dim())
            .map(|x| {
                let b = &a.basis()[x];
                let mut m = Matrix::zeros(dims[b.src], dims[b.tgt]);
                for (r, rep) in qs[b.src].reps().iter().enumerate() {
                    let img = act(x, rep);
                    let c = qs[b.tgt].coords(&img).expect("ambient space is spanned");
                    for (k, ck) in c.into_iter().enumerate() {
                        m[(r, k)] = ck;
                    }
                }
                m
            })
            .collect();
        Representation { dims, actions }
    }

    /// `H^0` of a two-term complex: the cokernel of its differential.
    pub fn cokernel(a: &FiniteDimAlgebra<F>, t: &TwoTermComplex<F>) -> Self {
        let n = a.num_vertices();
        let (p0, p1) = (t.deg0(), t.deg1());
        let offs: Vec<Vec<usize>> = (0..n)
            .map(|j| {
                let mut o = vec![0];
                for &v in p0 {
                    o.push(o.last().unwrap() + a.block_dim(v, j));
                }
                o
            })
            .collect();
        let widths: Vec<usize> = offs.iter().map(|o| *o.last().unwrap()).collect();
        let kill: Vec<Vec<Vec<F>>> = (0..n)
            .map(|j| {
                let mut vs = Vec::new();
                for (c, &u) in p1.iter().enumerate() {
                    for b in 0..a.block_dim(u, j) {
                        let y = unit_vec(a.block_dim(u, j), b);
                        let mut v = vec![F::zero(); widths[j]];
                        for (r, &vr) in p0.iter().enumerate() {
                            let p = a.mul_local(vr, u, j, t.d.entry(r, c), &y);
                            v[offs[j][r]..offs[j][r + 1]].clone_from_slice(&p);
                        }
                        if !is_zero_vec(&v) {
                            vs.push(v);
                        }
                    }
                }
                vs
            })
            .collect();
        let act = |x: usize, v: &[F]| -> Vec<F> {
            let b = &a.basis()[x];
            let (j, k) = (b.src, b.tgt);
            let ox = unit_vec(a.block_dim(j, k), x - a.block_offset(j, k));
            let mut out = vec![F::zero(); widths[k]];
            for (r, &vr) in p0.iter().enumerate() {
                let p = a.mul_local(vr, j, k, &v[offs[j][r]..offs[j][r + 1]], &ox);
                out[offs[k][r]..offs[k][r + 1]].clone_from_slice(&p);
            }
            out
        };
        Self::from_quotients(a, &widths, kill, act)
    }
}

/// Solves the intertwining system for `Hom_A(M, N)`.
pub fn hom_basis<F: Field>(a: &FiniteDimAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> Vec<ModuleMorphism<F>> {
    let nv = a.num_vertices();
    let mut var_off = vec![0usize];
    for i in 0..nv {
        var_off.push(var_off[i] + m.dims[i] * n.dims[i]);
    }
    let nvar = var_off[nv];
    if nvar == 0 {
        return Vec::new();
    }
    let gens = radical_generators(a);
    // one block of equations per generator x: M_x Phi_j - Phi_i N_x
    let mut eq_off = vec![0usize];
    for &x in &gens {
        let b = &a.basis()[x];
        eq_off.push(eq_off.last().unwrap() + m.dims[b.src] * n.dims[b.tgt]);
    }
    let neq = *eq_off.last().unwrap();
    let mut rows = vec![vec![F::zero(); neq]; nvar];
    for (g, &x) in gens.iter().enumerate() {
        let b = &a.basis()[x];
        let (i, j) = (b.src, b.tgt);
        let (mx, nx) = (&m.actions[x], &n.actions[x]);
        let w = n.dims[j];
        // Phi_j variable (p, q) contributes M_x[r][p] at equation (r, q)
        for p in 0..m.dims[j] {
            for q in 0..n.dims[j] {
                let var = var_off[j] + p * n.dims[j] + q;
                for r in 0..m.dims[i] {
                    let c = &mx[(r, p)];
                    if !c.is_zero() {
                        rows[var][eq_off[g] + r * w + q].add_assign(c);
                    }
                }
            }
        }
        // Phi_i variable (r, p) contributes -N_x[p][q] at equation (r, q)
        for r in 0..m.dims[i] {
            for p in 0..n.dims[i] {
                let var = var_off[i] + r * n.dims[i] + p;
                for q in 0..w {
                    let c = &nx[(p, q)];
                    if !c.is_zero() {
                        let e = &mut rows[var][eq_off[g] + r * w + q];
                        *e = e.sub(c);
                    }
                }
            }
        }
    }
    let sols: Vec<Vec<F>> = if neq == 0 {
        (0..nvar).map(|k| unit_vec(nvar, k)).collect()
    } else {
        Matrix::from_rows(rows, neq).left_nullspace()
    };
    sols.into_iter()
        .map(|s| ModuleMorphism {
            maps: (0..nv)
                .map(|i| Matrix::from_fn(m.dims[i], n.dims[i], |r, c| s[var_off[i] + r * n.dims[i] + c].clone()))
                .collect(),
        })
        .collect()
}

/// An isomorphism `M -> N`, searched among a basis of `Hom(M, N)` and seeded random combinations.
pub fn find_module_isomorphism<F: Field>(
    a: &FiniteDimAlgebra<F>,
    m: &Representation<F>,
    n: &Representation<F>,
) -> Option<ModuleMorphism<F>> {
    if m.dims != n.dims {
        return None;
    }
    if m.is_zero() {
        return Some(ModuleMorphism { maps: m.dims.iter().map(|_| Matrix::zeros(0, 0)).collect() });
    }
    let hs = hom_basis(a, m, n);
    if hs.is_empty() {
        return None;
    }
    if let Some(f) = hs.iter().find(|f| f.is_isomorphism()) {
        return Some(f.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x1503);
    for _ in 0..24 {
        let coefs: Vec<F> = hs.iter().map(|_| F::from_i64(rng.gen_range(-999..1000))).collect();
        let f = ModuleMorphism::lin_comb(&hs, &coefs);
        if f.is_isomorphism() {
            return Some(f);
        }
    }
    None
}

pub fn is_isomorphic<F: Field>(a: &FiniteDimAlgebra<F>, m: &Representation<F>, n: &Representation<F>) -> bool {
    find_module_isomorphism(a, m, n).is_some()
}

/// Minimal projective presentation via the top of `M` and the top of the kernel of the cover.
pub fn min_proj_presentation<F: Field>(a: &FiniteDimAlgebra<F>, m: &Representation<F>) -> ProjPresentation<F> {
    let nv = a.num_vertices();
    let gens = radical_generators(a);
    // generators of M: vectors at each vertex completing M rad to M
    let mut tops: Vec<(usize, Vec<F>)> = Vec::new();
    for (j, mut e) in m.radical_image(a, &gens).into_iter().enumerate() {
        for k in 0..m.dims[j] {
            let v = unit_vec(m.dims[j], k);
            if e.insert(v.clone()) {
                tops.push((j, v));
            }
        }
    }
    let p0: Vec<usize> = tops.iter().map(|(j, _)| *j).collect();
    // kernel of the cover at each vertex w, in coordinates of ⊕_r e_{v_r} A e_w
    let offs: Vec<Vec<usize>> = (0..nv)
        .map(|w| {
            let mut o = vec![0];
            for &v in &p0 {
                o.push(o.last().unwrap() + a.block_dim(v, w));
            }
            o
        })
        .collect();
    let kernels: Vec<Vec<Vec<F>>> = (0..nv)
        .map(|w| {
            let width = offs[w][p0.len()];
            if width == 0 {
                return Vec::new();
            }
            let mut rows = Vec::with_capacity(width);
            for (v, gen) in &tops {
                for x in a.block_range(*v, w) {
                    rows.push(m.actions[x].vec_mul(gen));
                }
            }
            if m.dims[w] == 0 {
                (0..width).map(|k| unit_vec(width, k)).collect()
            } else {
                Matrix::from_rows(rows, m.dims[w]).left_nullspace()
            }
        })
        .collect();
    // K rad, then a complement inside K
    let right_act = |x: usize, k: &[F]| -> Vec<F> {
        let b = &a.basis()[x];
        let (j, w) = (b.src, b.tgt);
        let ox = unit_vec(a.block_dim(j, w), x - a.block_offset(j, w));
        let mut out = vec![F::zero(); offs[w][p0.len()]];
        for (r, &vr) in p0.iter().enumerate() {
            let p = a.mul_local(vr, j, w, &k[offs[j][r]..offs[j][r + 1]], &ox);
            out[offs[w][r]..offs[w][r + 1]].clone_from_slice(&p);
        }
        out
    };
    let mut krad: Vec<Echelon<F>> = (0..nv).map(|w| Echelon::new(offs[w][p0.len()])).collect();
    for &x in &gens {
        let b = &a.basis()[x];
        for k in &kernels[b.src] {
            let v = right_act(x, k);
            if !is_zero_vec(&v) {
                krad[b.tgt].insert(v);
            }
        }
    }
    let mut p1 = Vec::new();
    let mut cols: Vec<Vec<F>> = Vec::new();
    for w in 0..nv {
        for k in &kernels[w] {
            if krad[w].insert(k.clone()) {
                p1.push(w);
                cols.push(k.clone());
            }
        }
    }
    let mut d = ProjMap::zero(a, p0.clone(), p1.clone());
    for (c, (&w, k)) in p1.iter().zip(&cols).enumerate() {
        for r in 0..p0.len() {
            *d.entry_mut(r, c) = k[offs[w][r]..offs[w][r + 1]].to_vec();
        }
    }
    ProjPresentation { d }
}

/// The Auslander-Reiten translate `D Tr M`.
pub fn tau<F: Field>(a: &FiniteDimAlgebra<F>, m: &Representation<F>) -> Representation<F> {
    let nv = a.num_vertices();
    let pres = min_proj_presentation(a, m);
    let (p0, p1, d) = (pres.p0(), pres.p1(), &pres.d);
    // Tr M at vertex j: coker(⊕_r e_j A e_{v_r} -> ⊕_c e_j A e_{u_c}, y -> y d)
    let offs: Vec<Vec<usize>> = (0..nv)
        .map(|j| {
            let mut o = vec![0];
            for &u in p1 {
                o.push(o.last().unwrap() + a.block_dim(j, u));
            }
            o
        })
        .collect();
    let widths: Vec<usize> = offs.iter().map(|o| *o.last().unwrap()).collect();
    let mut qs: Vec<QuotientReducer<F>> = widths.iter().map(|&w| QuotientReducer::new(w)).collect();
    for j in 0..nv {
        for (r, &v) in p0.iter().enumerate() {
            for b in 0..a.block_dim(j, v) {
                let y = unit_vec(a.block_dim(j, v), b);
                let mut img = vec![F::zero(); widths[j]];
                for (c, &u) in p1.iter().enumerate() {
                    let p = a.mul_local(j, v, u, &y, d.entry(r, c));
                    img[offs[j][c]..offs[j][c + 1]].clone_from_slice(&p);
                }
                qs[j].kill(img);
            }
        }
        for k in 0..widths[j] {
            qs[j].extend(unit_vec(widths[j], k));
        }
    }
    let dims: Vec<usize> = qs.iter().map(QuotientReducer::dim).collect();
    // left action of x in e_i A e_j maps Tr_j -> Tr_i; the dual acts by the transpose
    let actions = (0..a.dim())
        .map(|x| {
            let b = &a.basis()[x];
            let (i, j) = (b.src, b.tgt);
            let ox = unit_vec(a.block_dim(i, j), x - a.block_offset(i, j));
            let mut left = Matrix::zeros(dims[j], dims[i]);
            for (r, rep) in qs[j].reps().iter().enumerate() {
                let mut img = vec![F::zero(); widths[i]];
                for (c, &u) in p1.iter().enumerate() {
                    let p = a.mul_local(i, j, u, &ox, &rep[offs[j][c]..offs[j][c + 1]]);
                    img[offs[i][c]..offs[i][c + 1]].clone_from_slice(&p);
                }
                let co = qs[i].coords(&img).expect("ambient space is spanned");
                for (k, ck) in co.into_iter().enumerate() {
                    left[(r, k)] = ck;
                }
            }
            left.transpose()
        })
        .collect();
    Representation::unchecked(dims, actions)
}

/// Radical of `End(M)` through the trace form on `M`; characteristic 0.
fn end_radical_dim<F: Field>(ends: &[ModuleMorphism<F>]) -> usize {
    let k = ends.len();
    let gram = Matrix::from_fn(k, k, |i, j| ends[i].compose(&ends[j]).trace());
    gram.left_nullspace().len()
}

fn fitting_split<F: Field>(
    a: &FiniteDimAlgebra<F>,
    m: &Representation<F>,
    ends: &[ModuleMorphism<F>],
) -> Option<(Representation<F>, Representation<F>)> {
    let total = m.total_dim();
    let ident = ModuleMorphism { maps: m.dims.iter().map(|&d| Matrix::identity(d)).collect() };
    let k = ends.len();
    let mut cands: Vec<ModuleMorphism<F>> = ends.to_vec();
    for i in 0..k {
        for j in i + 1..k {
            cands.push(ModuleMorphism::lin_comb(&[ends[i].clone(), ends[j].clone()], &[F::one(), F::one()]));
            cands.push(ModuleMorphism::lin_comb(&[ends[i].clone(), ends[j].clone()], &[F::one(), F::one().neg()]));
        }
    }
    let base = cands.len();
    for i in 0..base {
        for c in [1i64, -1, 2, -2] {
            cands.push(ModuleMorphism::lin_comb(&[cands[i].clone(), ident.clone()], &[F::one(), F::from_i64(-c)]));
        }
    }
    for phi in cands {
        let mut p = phi.clone();
        for _ in 1..total {
            p = p.compose(&phi);
        }
        let image: Vec<Vec<Vec<F>>> = p.maps.iter().map(|mm| {
            let mut t = mm.clone();
            t.rref();
            t.to_rows().into_iter().filter(|r| !is_zero_vec(r)).collect()
        }).collect();
        let kernel: Vec<Vec<Vec<F>>> = p.maps.iter().map(|mm| mm.left_nullspace()).collect();
        let di: usize = image.iter().map(Vec::len).sum();
        if di == 0 || di == total {
            continue;
        }
        return Some((m.submodule(a, &image), m.submodule(a, &kernel)));
    }
    None
}

fn split_all<F: Field>(a: &FiniteDimAlgebra<F>, m: Representation<F>, out: &mut Vec<Representation<F>>) -> Result<()> {
    let ends = hom_basis(a, &m, &m);
    if ends.len() - end_radical_dim(&ends) == 1 {
        out.push(m);
        return Ok(());
    }
    let (x, y) = fitting_split(a, &m, &ends).ok_or(Error::SplittingFailure)?;
    split_all(a, x, out)?;
    split_all(a, y, out)
}

/// Indecomposable summands with multiplicities, grouped by isomorphism class.
pub fn decompose<F: Field>(a: &FiniteDimAlgebra<F>, m: &Representation<F>) -> Result<Vec<(Representation<F>, usize)>> {
    if F::characteristic() != 0 {
        return Err(Error::Unsupported("decomposition uses the trace form and needs characteristic 0".into()));
    }
    if m.is_zero() {
        return Ok(Vec::new());
    }
    let mut parts = Vec::new();
    split_all(a, m.clone(), &mut parts)?;
    parts.sort_by(|x, y| x.dims.cmp(&y.dims));
    let mut classes: Vec<(Representation<F>, usize)> = Vec::new();
    for p in parts {
        match classes.iter_mut().find(|(q, _)| is_isomorphic(a, q, &p)) {
            Some(c) => c.1 += 1,
            None => classes.push((p, 1)),
        }
    }
    Ok(classes)
}

/// Whether `End(M)` is local.
pub fn is_indecomposable_module<F: Field>(a: &FiniteDimAlgebra<F>, m: &Representation<F>) -> Result<bool> {
    if F::characteristic() != 0 {
        return Err(Error::Unsupported("the local test uses the trace form and needs characteristic 0".into()));
    }
    if m.is_zero() {
        return Ok(false);
    }
    let ends = hom_basis(a, m, m);
    Ok(ends.len() - end_radical_dim(&ends) == 1)
}

/// Checks the three conditions for `(M, P)` to be a support τ-tilting pair.
pub fn is_stau_pair<F: Field>(a: &FiniteDimAlgebra<F>, m: &Representation<F>, p: &[usize]) -> Result<bool> {
    let mut pv = p.to_vec();
    pv.sort_unstable();
    pv.dedup();
    if pv.len() != p.len() || pv.iter().any(|&j| j >= a.num_vertices() || m.dims[j] != 0) {
        return Ok(false);
    }
    if !m.is_zero() && !hom_basis(a, m, &tau(a, m)).is_empty() {
        return Ok(false);
    }
    let summands = decompose(a, m)?;
    Ok(summands.len() + p.len() == a.num_vertices())
}
