//! Finite-dimensional basic algebras given by structure constants.

use std::fmt;

use serde::Serialize;

use crate::algebra::presentation::{PathWord, Presentation};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{is_zero_vec, Echelon, Matrix};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BasisElem {
    pub src: usize,
    pub tgt: usize,
    pub label: String,
    pub word: Option<PathWord>,
}

/// Sparse product vector: `(global basis index, coefficient)`.
pub type Sparse<F> = Vec<(usize, F)>;

/// A basic algebra with a basis adapted to the vertex idempotents.
///
/// The basis is grouped into blocks `e_i A e_j`. In block `(i, i)` the first
/// element is `e_i`; every other basis element lies in the radical. Paths
/// compose left to right, so `x * y` is nonzero only when `x` ends where `y`
/// starts.
#[derive(Clone)]
pub struct FiniteDimAlgebra<F> {
    name: String,
    vertex_labels: Vec<i64>,
    basis: Vec<BasisElem>,
    block_start: Vec<usize>,
    mult: Vec<Sparse<F>>,
    radical_layers: Vec<Vec<Vec<F>>>,
    presentation: Option<Presentation>,
    quotient_map: Option<Matrix<F>>,
}

impl<F: Field> FiniteDimAlgebra<F> {
    /// Assembles an algebra from a block-sorted basis and a product table.
    ///
    /// `mult[x * dim + y]` holds the product `b_x * b_y`.
    pub fn from_parts(
        name: String,
        vertex_labels: Vec<i64>,
        basis: Vec<BasisElem>,
        mult: Vec<Sparse<F>>,
    ) -> Result<Self> {
        let n = vertex_labels.len();
        let dim = basis.len();
        if mult.len() != dim * dim {
            return Err(Error::Dimension("product table has the wrong size".into()));
        }
        let mut block_start = vec![0usize; n * n + 1];
        let mut prev = (0usize, 0usize);
        for (k, b) in basis.iter().enumerate() {
            if b.src >= n || b.tgt >= n {
                return Err(Error::Dimension(format!("basis element {} has a bad block", b.label)));
            }
            if (b.src, b.tgt) < prev {
                return Err(Error::Internal("basis not sorted by block".into()));
            }
            prev = (b.src, b.tgt);
            block_start[b.src * n + b.tgt + 1] = k + 1;
        }
        for i in 1..=n * n {
            block_start[i] = block_start[i].max(block_start[i - 1]);
        }
        let mut alg = FiniteDimAlgebra {
            name,
            vertex_labels,
            basis,
            block_start,
            mult,
            radical_layers: Vec::new(),
            presentation: None,
            quotient_map: None,
        };
        for i in 0..n {
            if alg.block_dim(i, i) == 0 {
                return Err(Error::InconsistentPresentation(alg.vertex_labels[i].to_string()));
            }
        }
        alg.compute_radical_layers();
        Ok(alg)
    }

    pub(crate) fn set_presentation(&mut self, p: Presentation) {
        self.presentation = Some(p);
    }

    pub(crate) fn set_quotient_map(&mut self, m: Matrix<F>) {
        self.quotient_map = Some(m);
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn presentation(&self) -> Option<&Presentation> {
        self.presentation.as_ref()
    }

    /// For a quotient `A/I`: row `x` holds the image of the parent's basis element `x`.
    pub fn quotient_map(&self) -> Option<&Matrix<F>> {
        self.quotient_map.as_ref()
    }

    pub fn num_vertices(&self) -> usize {
        self.vertex_labels.len()
    }

    pub fn vertex_labels(&self) -> &[i64] {
        &self.vertex_labels
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElem] {
        &self.basis
    }

    pub fn block_offset(&self, i: usize, j: usize) -> usize {
        self.block_start[i * self.num_vertices() + j]
    }

    pub fn block_dim(&self, i: usize, j: usize) -> usize {
        let n = self.num_vertices();
        self.block_start[i * n + j + 1] - self.block_start[i * n + j]
    }

    pub fn block_range(&self, i: usize, j: usize) -> std::ops::Range<usize> {
        let o = self.block_offset(i, j);
        o..o + self.block_dim(i, j)
    }

    pub fn idempotent(&self, i: usize) -> usize {
        self.block_offset(i, i)
    }

    pub fn is_idempotent_index(&self, x: usize) -> bool {
        let b = &self.basis[x];
        b.src == b.tgt && x == self.idempotent(b.src)
    }

    pub fn product(&self, x: usize, y: usize) -> &Sparse<F> {
        &self.mult[x * self.dim() + y]
    }

    /// Product of two elements given in global coordinates.
    pub fn mul(&self, a: &[F], b: &[F]) -> Vec<F> {
        let d = self.dim();
        let mut out = vec![F::zero(); d];
        for (x, ax) in a.iter().enumerate() {
            if ax.is_zero() {
                continue;
            }
            for (y, by) in b.iter().enumerate() {
                if by.is_zero() {
                    continue;
                }
                let s = ax.mul(by);
                for (z, c) in self.product(x, y) {
                    out[*z].add_assign(&s.mul(c));
                }
            }
        }
        out
    }

    /// Product `x * y` with `x` in block `(i, j)` and `y` in block `(j, k)`, in
    /// block-local coordinates.
    pub fn mul_local(&self, i: usize, j: usize, k: usize, x: &[F], y: &[F]) -> Vec<F> {
        let ox = self.block_offset(i, j);
        let oy = self.block_offset(j, k);
        let oz = self.block_offset(i, k);
        let mut out = vec![F::zero(); self.block_dim(i, k)];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let s = xa.mul(yb);
                for (z, c) in self.product(ox + a, oy + b) {
                    out[z - oz].add_assign(&s.mul(c));
                }
            }
        }
        out
    }

    /// Adds `x * y` into `out` (block-local, as in [`Self::mul_local`]).
    pub fn mul_local_acc(&self, i: usize, j: usize, k: usize, x: &[F], y: &[F], out: &mut [F]) {
        let ox = self.block_offset(i, j);
        let oy = self.block_offset(j, k);
        let oz = self.block_offset(i, k);
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let s = xa.mul(yb);
                for (z, c) in self.product(ox + a, oy + b) {
                    out[z - oz].add_assign(&s.mul(c));
                }
            }
        }
    }

    /// Matrix of `y -> x * y` from `e_j A e_k` to `e_i A e_k` for fixed `x` in `e_i A e_j`,
    /// acting on row vectors.
    pub fn left_mul_matrix(&self, i: usize, j: usize, k: usize, x: &[F]) -> Matrix<F> {
        let (dy, dz) = (self.block_dim(j, k), self.block_dim(i, k));
        let mut m = Matrix::zeros(dy, dz);
        for b in 0..dy {
            let row = self.mul_local(i, j, k, x, &crate::linalg::unit_vec(dy, b));
            for (z, v) in row.into_iter().enumerate() {
                m[(b, z)] = v;
            }
        }
        m
    }

    pub fn one(&self) -> Vec<F> {
        let mut v = vec![F::zero(); self.dim()];
        for i in 0..self.num_vertices() {
            v[self.idempotent(i)] = F::one();
        }
        v
    }

    pub fn unit(&self, x: usize) -> Vec<F> {
        crate::linalg::unit_vec(self.dim(), x)
    }

    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.num_vertices();
        (0..n).map(|i| (0..n).map(|j| self.block_dim(i, j) as i64).collect()).collect()
    }

    /// Basis vectors of `rad^(k+1)`, for `k = 0, 1, ...` until zero.
    pub fn radical_layers(&self) -> &[Vec<Vec<F>>] {
        &self.radical_layers
    }

    /// Loewy length: the least `N` with `rad^N = 0`.
    pub fn loewy_length(&self) -> usize {
        self.radical_layers.len() + 1
    }

    pub fn radical_basis(&self) -> Vec<Vec<F>> {
        self.radical_layers.first().cloned().unwrap_or_default()
    }

    fn compute_radical_layers(&mut self) {
        let d = self.dim();
        let rad: Vec<usize> = (0..d).filter(|&x| !self.is_idempotent_index(x)).collect();
        let mut layers: Vec<Vec<Vec<F>>> = Vec::new();
        if rad.is_empty() {
            self.radical_layers = layers;
            return;
        }
        let first: Vec<Vec<F>> = rad.iter().map(|&x| self.unit(x)).collect();
        layers.push(first);
        loop {
            let prev = layers.last().expect("nonempty");
            let mut e = Echelon::new(d);
            for v in prev {
                for &y in &rad {
                    let p = self.mul(v, &self.unit(y));
                    if !is_zero_vec(&p) {
                        e.insert(p);
                    }
                }
            }
            if e.rank() == 0 {
                break;
            }
            if e.rank() == prev.len() && layers.len() > d {
                // a non-nilpotent radical can only come from a malformed table
                break;
            }
            layers.push(e.rows().to_vec());
        }
        self.radical_layers = layers;
    }

    /// Checks the identity, associativity and radical nilpotency.
    pub fn verify(&self) -> Result<()> {
        let d = self.dim();
        let one = self.one();
        for x in 0..d {
            let u = self.unit(x);
            if self.mul(&one, &u) != u || self.mul(&u, &one) != u {
                return Err(Error::Internal(format!("identity fails on {}", self.basis[x].label)));
            }
        }
        for x in 0..d {
            for y in 0..d {
                let xy = self.product(x, y);
                if xy.is_empty() {
                    continue;
                }
                for z in 0..d {
                    let mut left = vec![F::zero(); d];
                    for (w, c) in xy {
                        for (t, e) in self.product(*w, z) {
                            left[*t].add_assign(&c.mul(e));
                        }
                    }
                    let yz = self.product(y, z);
                    let mut right = vec![F::zero(); d];
                    for (w, c) in yz {
                        for (t, e) in self.product(x, *w) {
                            right[*t].add_assign(&c.mul(e));
                        }
                    }
                    if left != right {
                        return Err(Error::Internal(format!(
                            "associativity fails on ({}, {}, {})",
                            self.basis[x].label, self.basis[y].label, self.basis[z].label
                        )));
                    }
                }
            }
        }
        if self.radical_layers.len() > d {
            return Err(Error::Internal("radical is not nilpotent".into()));
        }
        Ok(())
    }

    /// Splits a global vector into its block components.
    pub fn block_components(&self, v: &[F]) -> Vec<((usize, usize), Vec<F>)> {
        let n = self.num_vertices();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let r = self.block_range(i, j);
                if r.is_empty() {
                    continue;
                }
                let part = v[r].to_vec();
                if !is_zero_vec(&part) {
                    out.push(((i, j), part));
                }
            }
        }
        out
    }

    pub fn format_element(&self, v: &[F]) -> String {
        let mut parts = Vec::new();
        for (x, c) in v.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let l = &self.basis[x].label;
            if c.is_one() {
                parts.push(l.clone());
            } else {
                parts.push(format!("{c}*{l}"));
            }
        }
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

impl<F: Field> fmt::Debug for FiniteDimAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteDimAlgebra")
            .field("name", &self.name)
            .field("vertices", &self.vertex_labels)
            .field("dim", &self.dim())
            .finish()
    }
}

/// Role of a [`Subspace`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SubspaceRole {
    Center,
    Radical,
    Socle,
    RightSocle,
    Ideal,
    Other,
}

/// A subspace of an algebra, as an echelon basis in global coordinates.
#[derive(Clone, Debug)]
pub struct Subspace<F> {
    pub role: SubspaceRole,
    pub basis: Vec<Vec<F>>,
}

impl<F: Field> Subspace<F> {
    pub fn from_vectors(role: SubspaceRole, width: usize, vs: Vec<Vec<F>>) -> Self {
        let mut e = Echelon::new(width);
        for v in vs {
            e.insert(v);
        }
        Subspace { role, basis: e.rows().to_vec() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[F]) -> bool {
        let w = v.len();
        Echelon::from_vectors(w, &self.basis).contains(v)
    }

    /// Closed under left and right multiplication by every basis element.
    pub fn is_ideal(&self, a: &FiniteDimAlgebra<F>) -> bool {
        let e = Echelon::from_vectors(a.dim(), &self.basis);
        for v in &self.basis {
            for x in 0..a.dim() {
                let u = a.unit(x);
                if !e.contains(&a.mul(&u, v)) || !e.contains(&a.mul(v, &u)) {
                    return false;
                }
            }
        }
        true
    }
}
