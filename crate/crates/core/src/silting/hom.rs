//! Morphisms of two-term complexes in the homotopy category.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::fdalg::FiniteDimAlgebra;
use crate::field::Field;
use crate::linalg::{axpy, Echelon, Matrix};
use crate::silting::complex::TwoTermComplex;
use crate::silting::projmap::ProjMap;

/// A chain map `X -> Y`, given by its components in degrees -1 and 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap<F> {
    pub f1: ProjMap<F>,
    pub f0: ProjMap<F>,
}

impl<F: Field> ChainMap<F> {
    pub fn zero(a: &FiniteDimAlgebra<F>, x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> Self {
        ChainMap {
            f1: ProjMap::zero(a, y.deg1().to_vec(), x.deg1().to_vec()),
            f0: ProjMap::zero(a, y.deg0().to_vec(), x.deg0().to_vec()),
        }
    }

    pub fn identity(a: &FiniteDimAlgebra<F>, x: &TwoTermComplex<F>) -> Self {
        ChainMap { f1: ProjMap::identity(a, x.deg1()), f0: ProjMap::identity(a, x.deg0()) }
    }

    pub fn to_flat(&self) -> Vec<F> {
        let mut v = Vec::with_capacity(self.f1.flat_len() + self.f0.flat_len());
        self.f1.flatten_into(&mut v);
        self.f0.flatten_into(&mut v);
        v
    }

    pub fn from_flat(a: &FiniteDimAlgebra<F>, x: &TwoTermComplex<F>, y: &TwoTermComplex<F>, v: &[F]) -> Self {
        let (f1, k) = ProjMap::from_flat(a, y.deg1().to_vec(), x.deg1().to_vec(), v);
        let (f0, _) = ProjMap::from_flat(a, y.deg0().to_vec(), x.deg0().to_vec(), &v[k..]);
        ChainMap { f1, f0 }
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, a: &FiniteDimAlgebra<F>, rhs: &ChainMap<F>) -> ChainMap<F> {
        ChainMap { f1: self.f1.mul(a, &rhs.f1), f0: self.f0.mul(a, &rhs.f0) }
    }

    pub fn is_chain_map(&self, a: &FiniteDimAlgebra<F>, x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> bool {
        let lhs = y.d.mul(a, &self.f1);
        let rhs = self.f0.mul(a, &x.d);
        lhs == rhs
    }

    /// Trace of the induced map on tops; nonzero exactly off the radical of a local endomorphism ring.
    pub fn top_trace(&self) -> F {
        let mut t = F::zero();
        for m in [&self.f0, &self.f1] {
            for k in 0..m.num_rows().min(m.num_cols()) {
                if m.rows[k] == m.cols[k] {
                    t.add_assign(&m.entry(k, k)[0]);
                }
            }
        }
        t
    }

    /// The scalar `c` with `top(f) - c` nilpotent, for `f` in a local endomorphism ring.
    pub fn residue(&self) -> F {
        unique_eigenvalue(&self.top_matrix())
    }

    /// For maps between minimal complexes: an isomorphism of complexes, hence in the homotopy category.
    pub fn is_isomorphism(&self) -> bool {
        [&self.f0, &self.f1].iter().all(|m| {
            m.num_rows() == m.num_cols() && Matrix::from_rows(m.top(), m.num_cols()).is_invertible()
        })
    }

    /// The block-diagonal matrix of induced maps on tops.
    fn top_matrix(&self) -> Matrix<F> {
        let (t0, t1) = (self.f0.top(), self.f1.top());
        let (r0, c0) = (self.f0.num_rows(), self.f0.num_cols());
        let (r1, c1) = (self.f1.num_rows(), self.f1.num_cols());
        Matrix::from_fn(r0 + r1, c0 + c1, |i, j| {
            if i < r0 && j < c0 {
                t0[i][j].clone()
            } else if i >= r0 && j >= c0 {
                t1[i - r0][j - c0].clone()
            } else {
                F::zero()
            }
        })
    }
}

fn unit_maps<F: Field>(a: &FiniteDimAlgebra<F>, rows: &[usize], cols: &[usize]) -> Vec<ProjMap<F>> {
    let mut out = Vec::new();
    for (r, &i) in rows.iter().enumerate() {
        for (c, &j) in cols.iter().enumerate() {
            for b in 0..a.block_dim(i, j) {
                let mut m = ProjMap::zero(a, rows.to_vec(), cols.to_vec());
                m.entry_mut(r, c)[b] = F::one();
                out.push(m);
            }
        }
    }
    out
}

/// `Hom_K(X, Y)`: chain maps modulo null-homotopic ones.
#[derive(Clone, Debug)]
pub struct HomSpace<F> {
    /// Chain maps whose classes form a basis.
    pub basis: Vec<ChainMap<F>>,
    /// Echelon form of the null-homotopic maps, in flat coordinates.
    pub null: Echelon<F>,
    pub width: usize,
}

impl<F: Field> HomSpace<F> {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn flat_basis(&self) -> impl Iterator<Item = Vec<F>> + '_ {
        self.basis.iter().map(ChainMap::to_flat)
    }
}

/// Computes `Hom_K(X, Y)`.
pub fn hom_space<F: Field>(a: &FiniteDimAlgebra<F>, x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> HomSpace<F> {
    let v1 = ProjMap::space_dim(a, y.deg1(), x.deg1());
    let v0 = ProjMap::space_dim(a, y.deg0(), x.deg0());
    let width = v1 + v0;
    let ne = ProjMap::space_dim(a, y.deg0(), x.deg1());
    let mut rows = Vec::with_capacity(width);
    for m in unit_maps(a, y.deg1(), x.deg1()) {
        rows.push(y.d.mul(a, &m).to_flat());
    }
    for m in unit_maps(a, y.deg0(), x.deg0()) {
        rows.push(m.mul(a, &x.d).neg().to_flat());
    }
    let cycles: Vec<Vec<F>> = if ne == 0 || rows.iter().all(|r| r.iter().all(F::is_zero)) {
        (0..width).map(|i| crate::linalg::unit_vec(width, i)).collect()
    } else {
        Matrix::from_rows(rows, ne).left_nullspace()
    };
    let mut null = Echelon::new(width);
    for h in unit_maps(a, y.deg1(), x.deg0()) {
        let f = ChainMap { f1: h.mul(a, &x.d), f0: y.d.mul(a, &h) };
        let v = f.to_flat();
        if !v.iter().all(F::is_zero) {
            null.insert(v);
        }
    }
    let mut ech = null.clone();
    let mut basis = Vec::new();
    for z in cycles {
        if ech.insert(z.clone()) {
            basis.push(ChainMap::from_flat(a, x, y, &z));
        }
    }
    HomSpace { basis, null, width }
}

/// `dim Hom_K(X, Y[1])`.
pub fn hom_shift1_dim<F: Field>(a: &FiniteDimAlgebra<F>, x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> usize {
    let total = ProjMap::space_dim(a, y.deg0(), x.deg1());
    if total == 0 {
        return 0;
    }
    let mut ech = Echelon::new(total);
    for h in unit_maps(a, y.deg0(), x.deg0()) {
        let v = h.mul(a, &x.d).to_flat();
        if !v.iter().all(F::is_zero) {
            ech.insert(v);
        }
    }
    for h in unit_maps(a, y.deg1(), x.deg1()) {
        let v = y.d.mul(a, &h).to_flat();
        if !v.iter().all(F::is_zero) {
            ech.insert(v);
        }
    }
    total - ech.rank()
}

/// `dim Hom_K(X, Y[-1])`: maps `X^0 -> Y^{-1}` killed by both differentials.
pub fn hom_shift_neg1_dim<F: Field>(a: &FiniteDimAlgebra<F>, x: &TwoTermComplex<F>, y: &TwoTermComplex<F>) -> usize {
    let total = ProjMap::space_dim(a, y.deg1(), x.deg0());
    if total == 0 {
        return 0;
    }
    let w1 = ProjMap::space_dim(a, y.deg0(), x.deg0());
    let w2 = ProjMap::space_dim(a, y.deg1(), x.deg1());
    let rows: Vec<Vec<F>> = unit_maps(a, y.deg1(), x.deg0())
        .into_iter()
        .map(|f| {
            let mut v = y.d.mul(a, &f).to_flat();
            v.extend(f.mul(a, &x.d).to_flat());
            v
        })
        .collect();
    if w1 + w2 == 0 {
        return total;
    }
    total - Matrix::from_rows(rows, w1 + w2).rank()
}

/// Dimension of morphisms `X -> Y[shift]` in the homotopy category, for `shift` in `-1..=1`.
pub fn hom_homotopy<F: Field>(a: &FiniteDimAlgebra<F>, x: &TwoTermComplex<F>, y: &TwoTermComplex<F>, shift: i32) -> usize {
    match shift {
        0 => hom_space(a, x, y).dim(),
        1 => hom_shift1_dim(a, x, y),
        -1 => hom_shift_neg1_dim(a, x, y),
        _ => 0,
    }
}

/// The eigenvalue `c` of a square matrix whose minimal polynomial on `e_1` is `(t - c)^j`.
///
/// With `j = p^e u`, `p` not dividing `u`, that polynomial is `(t^(p^e) - c)^u`
/// over a prime field, so `c` is read off the coefficient of `t^(j - p^e)`.
fn unique_eigenvalue<F: Field>(m: &Matrix<F>) -> F {
    let n = m.rows();
    let mut krylov: Vec<Vec<F>> = vec![crate::linalg::unit_vec(n, 0)];
    let coeffs = loop {
        let next = m.vec_mul(krylov.last().expect("nonempty"));
        let basis = Matrix::from_rows(krylov.clone(), n).transpose();
        if let Some(a) = basis.solve(&next) {
            break a;
        }
        krylov.push(next);
    };
    let j = coeffs.len();
    let p = F::characteristic() as usize;
    let (mut q, mut u) = (1, j);
    if p > 1 {
        while u % p == 0 {
            u /= p;
            q *= p;
        }
    }
    coeffs[j - q].div(&F::from_i64(u as i64)).expect("u is a unit")
}

/// A basis of the radical of `End_K(U)` for indecomposable `U`.
pub fn rad_end<F: Field>(end: &HomSpace<F>) -> Vec<ChainMap<F>> {
    let traces: Vec<F> = if F::characteristic() == 0 {
        end.basis.iter().map(ChainMap::top_trace).collect()
    } else {
        end.basis.iter().map(ChainMap::residue).collect()
    };
    let Some(p) = traces.iter().position(|t| !t.is_zero()) else {
        return end.basis.clone();
    };
    let tp = traces[p].inv().expect("nonzero");
    let pf = end.basis[p].to_flat();
    let shape = &end.basis[p];
    let mut out = Vec::with_capacity(end.dim() - 1);
    for (k, b) in end.basis.iter().enumerate() {
        if k == p {
            continue;
        }
        let mut v = b.to_flat();
        axpy(&mut v, &traces[k].mul(&tp).neg(), &pf);
        let (f1, n1) = shape.f1.like_from_flat(&v);
        let (f0, _) = shape.f0.like_from_flat(&v[n1..]);
        out.push(ChainMap { f1, f0 });
    }
    out
}

/// Whether `End_K(U)` is local, i.e. `U` is indecomposable.
pub fn is_indecomposable<F: Field>(u: &TwoTermComplex<F>, end: &HomSpace<F>) -> bool {
    if u.is_zero() || end.dim() == 0 {
        return false;
    }
    let d = u.deg0().len() + u.deg1().len();
    let rad: Vec<Matrix<F>> = rad_end(end).iter().map(ChainMap::top_matrix).collect();
    if rad.is_empty() {
        return true;
    }
    // the images of the radical must span a nilpotent subalgebra of d x d matrices
    let mut layer: Vec<Matrix<F>> = rad.clone();
    for _ in 0..d {
        let mut ech = Echelon::new(d * d);
        let mut next = Vec::new();
        for w in &layer {
            for r in &rad {
                let p = w.mul(r);
                let flat: Vec<F> = p.to_rows().concat();
                if ech.insert(flat) {
                    next.push(p);
                }
            }
        }
        if next.is_empty() {
            return true;
        }
        layer = next;
    }
    false
}

/// An isomorphism `X -> Y` between minimal complexes, if one is found.
pub fn find_isomorphism<F: Field>(
    a: &FiniteDimAlgebra<F>,
    x: &TwoTermComplex<F>,
    y: &TwoTermComplex<F>,
) -> Option<ChainMap<F>> {
    if x.g_vector(a.num_vertices()) != y.g_vector(a.num_vertices()) {
        return None;
    }
    let h = hom_space(a, x, y);
    if let Some(f) = h.basis.iter().find(|f| f.is_isomorphism()) {
        return Some(f.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    for _ in 0..16 {
        let mut v = vec![F::zero(); h.width];
        for b in h.flat_basis() {
            axpy(&mut v, &F::from_i64(rng.gen_range(1..1000)), &b);
        }
        let f = ChainMap::from_flat(a, x, y, &v);
        if f.is_isomorphism() {
            return Some(f);
        }
    }
    None
}
