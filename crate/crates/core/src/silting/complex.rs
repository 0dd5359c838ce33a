//! Two-term complexes of projectives and Gaussian elimination of contractible summands.

use crate::algebra::fdalg::FiniteDimAlgebra;
use crate::field::Field;
use crate::silting::projmap::{local_inverse, ProjMap};

/// An integer vector indexed by the vertices.
pub type GVector = Vec<i64>;

/// A complex `P^{-1} -> P^0` of projectives.
///
/// `d.cols` lists the vertices of the indecomposable summands in degree -1
/// and `d.rows` those in degree 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwoTermComplex<F> {
    pub d: ProjMap<F>,
}

impl<F: Field> TwoTermComplex<F> {
    pub fn new(d: ProjMap<F>) -> Self {
        TwoTermComplex { d }
    }

    /// The stalk `P_i` in degree 0.
    pub fn stalk(a: &FiniteDimAlgebra<F>, i: usize) -> Self {
        TwoTermComplex { d: ProjMap::zero(a, vec![i], vec![]) }
    }

    /// The shifted stalk `P_i[1]`.
    pub fn shifted_stalk(a: &FiniteDimAlgebra<F>, i: usize) -> Self {
        TwoTermComplex { d: ProjMap::zero(a, vec![], vec![i]) }
    }

    /// The stalk complex of the regular module.
    pub fn regular(a: &FiniteDimAlgebra<F>) -> Self {
        TwoTermComplex { d: ProjMap::zero(a, (0..a.num_vertices()).collect(), vec![]) }
    }

    /// `⊕ P_i[1]` over all vertices.
    pub fn regular_shift(a: &FiniteDimAlgebra<F>) -> Self {
        TwoTermComplex { d: ProjMap::zero(a, vec![], (0..a.num_vertices()).collect()) }
    }

    pub fn deg0(&self) -> &[usize] {
        &self.d.rows
    }

    pub fn deg1(&self) -> &[usize] {
        &self.d.cols
    }

    pub fn is_zero(&self) -> bool {
        self.d.rows.is_empty() && self.d.cols.is_empty()
    }

    pub fn g_vector(&self, n: usize) -> GVector {
        let mut g = vec![0i64; n];
        for &v in self.deg0() {
            g[v] += 1;
        }
        for &v in self.deg1() {
            g[v] -= 1;
        }
        g
    }

    /// No component of the differential is an isomorphism.
    pub fn is_minimal(&self) -> bool {
        self.d.is_radical()
    }

    pub fn direct_sum(a: &FiniteDimAlgebra<F>, parts: &[&TwoTermComplex<F>]) -> Self {
        let ds: Vec<&ProjMap<F>> = parts.iter().map(|p| &p.d).collect();
        TwoTermComplex { d: ProjMap::direct_sum(a, &ds) }
    }

    /// The homotopy-equivalent complex with all contractible summands removed.
    pub fn minimize(&self, a: &FiniteDimAlgebra<F>) -> Self {
        let mut ch = Chain { diffs: vec![self.d.clone()] };
        ch.eliminate(a);
        TwoTermComplex { d: ch.diffs.pop().expect("one differential") }
    }
}

/// A bounded complex of projectives with consecutive differentials.
///
/// `diffs[i]` maps term `i` to term `i + 1`.
#[derive(Clone, Debug)]
pub struct Chain<F> {
    pub diffs: Vec<ProjMap<F>>,
}

impl<F: Field> Chain<F> {
    pub fn term(&self, i: usize) -> &[usize] {
        if i < self.diffs.len() {
            &self.diffs[i].cols
        } else {
            &self.diffs[i - 1].rows
        }
    }

    /// Cancels isomorphism components until every differential is radical.
    pub fn eliminate(&mut self, a: &FiniteDimAlgebra<F>) {
        while let Some((i, r, c)) = self.diffs.iter().enumerate().find_map(|(i, d)| d.find_unit().map(|(r, c)| (i, r, c))) {
            self.cancel(a, i, r, c);
        }
    }

    fn cancel(&mut self, a: &FiniteDimAlgebra<F>, i: usize, r: usize, c: usize) {
        let d = &self.diffs[i];
        let w = d.rows[r];
        let uinv = local_inverse(a, w, d.entry(r, c));
        let keep_r: Vec<usize> = (0..d.num_rows()).filter(|&x| x != r).collect();
        let keep_c: Vec<usize> = (0..d.num_cols()).filter(|&y| y != c).collect();
        // gamma u^{-1} for each surviving row
        let gu: Vec<Vec<F>> = keep_r.iter().map(|&x| a.mul_local(d.rows[x], w, w, d.entry(x, c), &uinv)).collect();
        let mut out = d.remove(Some(r), Some(c));
        for (ri, &x) in keep_r.iter().enumerate() {
            if gu[ri].iter().all(F::is_zero) {
                continue;
            }
            for (ci, &y) in keep_c.iter().enumerate() {
                let beta = d.entry(r, y);
                if beta.iter().all(F::is_zero) {
                    continue;
                }
                let p = a.mul_local(d.rows[x], w, d.cols[y], &gu[ri], beta);
                let e = out.entry_mut(ri, ci);
                for (s, t) in e.iter_mut().zip(&p) {
                    *s = s.sub(t);
                }
            }
        }
        self.diffs[i] = out;
        if i > 0 {
            self.diffs[i - 1] = self.diffs[i - 1].remove(Some(c), None);
        }
        if i + 1 < self.diffs.len() {
            self.diffs[i + 1] = self.diffs[i + 1].remove(None, Some(r));
        }
    }
}
