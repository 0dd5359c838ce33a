//! Maps between direct sums of indecomposable projectives.

use crate::algebra::fdalg::FiniteDimAlgebra;
use crate::field::Field;

/// A map `⊕_c P_{cols[c]} -> ⊕_r P_{rows[r]}`.
///
/// Entry `(r, c)` is an element of `e_{rows[r]} A e_{cols[c]}` in block-local
/// coordinates and acts by left multiplication, so composition is the matrix
/// product `N * M`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProjMap<F> {
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    entries: Vec<Vec<F>>,
}

impl<F: Field> ProjMap<F> {
    pub fn zero(a: &FiniteDimAlgebra<F>, rows: Vec<usize>, cols: Vec<usize>) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &r in &rows {
            for &c in &cols {
                entries.push(vec![F::zero(); a.block_dim(r, c)]);
            }
        }
        ProjMap { rows, cols, entries }
    }

    pub fn identity(a: &FiniteDimAlgebra<F>, vs: &[usize]) -> Self {
        let mut m = Self::zero(a, vs.to_vec(), vs.to_vec());
        for k in 0..vs.len() {
            m.entry_mut(k, k)[0] = F::one();
        }
        m
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    pub fn entry(&self, r: usize, c: usize) -> &[F] {
        &self.entries[r * self.cols.len() + c]
    }

    pub fn entry_mut(&mut self, r: usize, c: usize) -> &mut Vec<F> {
        let w = self.cols.len();
        &mut self.entries[r * w + c]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.iter().all(F::is_zero))
    }

    /// Dimension of the space of all maps with this source and target.
    pub fn space_dim(a: &FiniteDimAlgebra<F>, rows: &[usize], cols: &[usize]) -> usize {
        rows.iter().map(|&r| cols.iter().map(|&c| a.block_dim(r, c)).sum::<usize>()).sum()
    }

    pub fn flat_len(&self) -> usize {
        self.entries.iter().map(Vec::len).sum()
    }

    pub fn flatten_into(&self, out: &mut Vec<F>) {
        for e in &self.entries {
            out.extend(e.iter().cloned());
        }
    }

    pub fn to_flat(&self) -> Vec<F> {
        let mut v = Vec::with_capacity(self.flat_len());
        self.flatten_into(&mut v);
        v
    }

    /// Reads a map from flat coordinates; returns the number of coordinates consumed.
    pub fn from_flat(a: &FiniteDimAlgebra<F>, rows: Vec<usize>, cols: Vec<usize>, v: &[F]) -> (Self, usize) {
        let mut m = Self::zero(a, rows, cols);
        let mut k = 0;
        for e in m.entries.iter_mut() {
            let l = e.len();
            e.clone_from_slice(&v[k..k + l]);
            k += l;
        }
        (m, k)
    }

    /// A map of the same shape read from flat coordinates.
    pub fn like_from_flat(&self, v: &[F]) -> (Self, usize) {
        let mut m = self.clone();
        let mut k = 0;
        for e in m.entries.iter_mut() {
            let l = e.len();
            e.clone_from_slice(&v[k..k + l]);
            k += l;
        }
        (m, k)
    }

    /// `self * rhs`.
    pub fn mul(&self, a: &FiniteDimAlgebra<F>, rhs: &ProjMap<F>) -> ProjMap<F> {
        debug_assert_eq!(self.cols, rhs.rows);
        let mut out = Self::zero(a, self.rows.clone(), rhs.cols.clone());
        for s in 0..self.rows.len() {
            for r in 0..self.cols.len() {
                let x = self.entry(s, r);
                if x.iter().all(F::is_zero) {
                    continue;
                }
                for c in 0..rhs.cols.len() {
                    let y = rhs.entry(r, c);
                    if y.iter().all(F::is_zero) {
                        continue;
                    }
                    let (i, j, k) = (self.rows[s], self.cols[r], rhs.cols[c]);
                    let w = out.cols.len();
                    a.mul_local_acc(i, j, k, x, y, &mut out.entries[s * w + c]);
                }
            }
        }
        out
    }

    pub fn add_assign(&mut self, rhs: &ProjMap<F>) {
        debug_assert_eq!((&self.rows, &self.cols), (&rhs.rows, &rhs.cols));
        for (x, y) in self.entries.iter_mut().zip(&rhs.entries) {
            for (p, q) in x.iter_mut().zip(y) {
                p.add_assign(q);
            }
        }
    }

    pub fn neg(&self) -> ProjMap<F> {
        let mut m = self.clone();
        for e in m.entries.iter_mut() {
            for x in e.iter_mut() {
                *x = x.neg();
            }
        }
        m
    }

    /// Stacks maps with a common source on top of each other.
    pub fn vstack(a: &FiniteDimAlgebra<F>, parts: &[&ProjMap<F>], cols: &[usize]) -> ProjMap<F> {
        let rows: Vec<usize> = parts.iter().flat_map(|p| p.rows.iter().copied()).collect();
        let mut out = Self::zero(a, rows, cols.to_vec());
        let mut r0 = 0;
        for p in parts {
            debug_assert_eq!(p.cols, cols);
            for r in 0..p.rows.len() {
                for c in 0..cols.len() {
                    *out.entry_mut(r0 + r, c) = p.entry(r, c).to_vec();
                }
            }
            r0 += p.rows.len();
        }
        out
    }

    /// Places maps with a common target side by side.
    pub fn hstack(a: &FiniteDimAlgebra<F>, parts: &[&ProjMap<F>], rows: &[usize]) -> ProjMap<F> {
        let cols: Vec<usize> = parts.iter().flat_map(|p| p.cols.iter().copied()).collect();
        let mut out = Self::zero(a, rows.to_vec(), cols);
        let mut c0 = 0;
        for p in parts {
            debug_assert_eq!(p.rows, rows);
            for r in 0..rows.len() {
                for c in 0..p.cols.len() {
                    *out.entry_mut(r, c0 + c) = p.entry(r, c).to_vec();
                }
            }
            c0 += p.cols.len();
        }
        out
    }

    /// Block-diagonal sum.
    pub fn direct_sum(a: &FiniteDimAlgebra<F>, parts: &[&ProjMap<F>]) -> ProjMap<F> {
        let rows: Vec<usize> = parts.iter().flat_map(|p| p.rows.iter().copied()).collect();
        let cols: Vec<usize> = parts.iter().flat_map(|p| p.cols.iter().copied()).collect();
        let mut out = Self::zero(a, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for p in parts {
            for r in 0..p.rows.len() {
                for c in 0..p.cols.len() {
                    *out.entry_mut(r0 + r, c0 + c) = p.entry(r, c).to_vec();
                }
            }
            r0 += p.rows.len();
            c0 += p.cols.len();
        }
        out
    }

    /// The map with row `r` and column `c` deleted.
    pub fn remove(&self, r: Option<usize>, c: Option<usize>) -> ProjMap<F> {
        let keep_r: Vec<usize> = (0..self.rows.len()).filter(|&i| Some(i) != r).collect();
        let keep_c: Vec<usize> = (0..self.cols.len()).filter(|&j| Some(j) != c).collect();
        let mut entries = Vec::with_capacity(keep_r.len() * keep_c.len());
        for &i in &keep_r {
            for &j in &keep_c {
                entries.push(self.entry(i, j).to_vec());
            }
        }
        ProjMap {
            rows: keep_r.iter().map(|&i| self.rows[i]).collect(),
            cols: keep_c.iter().map(|&j| self.cols[j]).collect(),
            entries,
        }
    }

    /// Whether entry `(r, c)` is an isomorphism `P_w -> P_w`.
    pub fn is_unit_entry(&self, r: usize, c: usize) -> bool {
        self.rows[r] == self.cols[c] && !self.entry(r, c)[0].is_zero()
    }

    pub fn find_unit(&self) -> Option<(usize, usize)> {
        for r in 0..self.rows.len() {
            for c in 0..self.cols.len() {
                if self.is_unit_entry(r, c) {
                    return Some((r, c));
                }
            }
        }
        None
    }

    /// Whether every entry lies in the radical.
    pub fn is_radical(&self) -> bool {
        self.find_unit().is_none()
    }

    /// Coefficients of the vertex idempotents: the induced map on tops.
    pub fn top(&self) -> Vec<Vec<F>> {
        (0..self.rows.len())
            .map(|r| {
                (0..self.cols.len())
                    .map(|c| if self.rows[r] == self.cols[c] { self.entry(r, c)[0].clone() } else { F::zero() })
                    .collect()
            })
            .collect()
    }
}

/// Inverse of a unit `u` of `e_w A e_w`, given in local coordinates.
pub fn local_inverse<F: Field>(a: &FiniteDimAlgebra<F>, w: usize, u: &[F]) -> Vec<F> {
    let c = u[0].clone();
    let ci = c.inv().expect("unit has nonzero idempotent coefficient");
    let mut minus_n: Vec<F> = u.iter().map(|x| x.mul(&ci).neg()).collect();
    minus_n[0] = F::zero();
    let mut term = vec![F::zero(); u.len()];
    term[0] = F::one();
    let mut sum = term.clone();
    loop {
        term = a.mul_local(w, w, w, &term, &minus_n);
        if term.iter().all(F::is_zero) {
            break;
        }
        for (s, t) in sum.iter_mut().zip(&term) {
            s.add_assign(t);
        }
    }
    sum.iter().map(|x| x.mul(&ci)).collect()
}
