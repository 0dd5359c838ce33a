//! Irreducible mutation of two-term silting complexes.

use std::cell::RefCell;
use std::collections::HashMap;
use std::sync::Arc;

use serde::Serialize;

use crate::algebra::fdalg::FiniteDimAlgebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::silting::complex::{Chain, TwoTermComplex};
use crate::silting::hom::{hom_space, rad_end, ChainMap, HomSpace};
use crate::silting::projmap::ProjMap;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    /// Towards `⊕ P_i[1]`.
    Left,
    /// Towards the regular module.
    Right,
}

impl Direction {
    pub fn reverse(self) -> Direction {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }
}

/// Hom spaces between the summands of a fixed silting complex, indexed by position.
pub trait HomSource<F> {
    /// `Hom_K(S_i, S_j)`.
    fn hom(&self, i: usize, j: usize) -> Arc<HomSpace<F>>;
    /// A basis of `rad End_K(S_i)`.
    fn rad(&self, i: usize) -> Arc<Vec<ChainMap<F>>>;
}

/// Computes Hom spaces on demand and memoizes them for one list of summands.
pub struct LocalHoms<'a, F> {
    a: &'a FiniteDimAlgebra<F>,
    summands: &'a [Arc<TwoTermComplex<F>>],
    homs: RefCell<HashMap<(usize, usize), Arc<HomSpace<F>>>>,
    rads: RefCell<HashMap<usize, Arc<Vec<ChainMap<F>>>>>,
}

impl<'a, F: Field> LocalHoms<'a, F> {
    pub fn new(a: &'a FiniteDimAlgebra<F>, summands: &'a [Arc<TwoTermComplex<F>>]) -> Self {
        LocalHoms { a, summands, homs: RefCell::default(), rads: RefCell::default() }
    }
}

impl<F: Field> HomSource<F> for LocalHoms<'_, F> {
    fn hom(&self, i: usize, j: usize) -> Arc<HomSpace<F>> {
        if let Some(h) = self.homs.borrow().get(&(i, j)) {
            return h.clone();
        }
        let h = Arc::new(hom_space(self.a, &self.summands[i], &self.summands[j]));
        self.homs.borrow_mut().insert((i, j), h.clone());
        h
    }

    fn rad(&self, i: usize) -> Arc<Vec<ChainMap<F>>> {
        if let Some(r) = self.rads.borrow().get(&i) {
            return r.clone();
        }
        let r = Arc::new(rad_end(&self.hom(i, i)));
        self.rads.borrow_mut().insert(i, r.clone());
        r
    }
}

/// Components of a minimal left `add(T/X)`-approximation of `X = S_k`.
pub fn left_approximation<F: Field>(
    a: &FiniteDimAlgebra<F>,
    n: usize,
    k: usize,
    src: &dyn HomSource<F>,
) -> Vec<(usize, ChainMap<F>)> {
    let others: Vec<usize> = (0..n).filter(|&l| l != k).collect();
    let mut chosen = Vec::new();
    for &l in &others {
        let hxl = src.hom(k, l);
        if hxl.dim() == 0 {
            continue;
        }
        let mut ech = hxl.null.clone();
        for &m in &others {
            if m == l {
                continue;
            }
            let (through, onward) = (src.hom(k, m), src.hom(m, l));
            for b in &onward.basis {
                for h in &through.basis {
                    ech.insert(b.compose(a, h).to_flat());
                }
            }
        }
        for r in src.rad(l).iter() {
            for h in &hxl.basis {
                ech.insert(r.compose(a, h).to_flat());
            }
        }
        for f in &hxl.basis {
            if ech.insert(f.to_flat()) {
                chosen.push((l, f.clone()));
            }
        }
    }
    chosen
}

/// Components of a minimal right `add(T/X)`-approximation of `X = S_k`.
pub fn right_approximation<F: Field>(
    a: &FiniteDimAlgebra<F>,
    n: usize,
    k: usize,
    src: &dyn HomSource<F>,
) -> Vec<(usize, ChainMap<F>)> {
    let others: Vec<usize> = (0..n).filter(|&l| l != k).collect();
    let mut chosen = Vec::new();
    for &l in &others {
        let hlx = src.hom(l, k);
        if hlx.dim() == 0 {
            continue;
        }
        let mut ech = hlx.null.clone();
        for &m in &others {
            if m == l {
                continue;
            }
            let (first, then) = (src.hom(l, m), src.hom(m, k));
            for g in &then.basis {
                for b in &first.basis {
                    ech.insert(g.compose(a, b).to_flat());
                }
            }
        }
        for r in src.rad(l).iter() {
            for g in &hlx.basis {
                ech.insert(g.compose(a, r).to_flat());
            }
        }
        for g in &hlx.basis {
            if ech.insert(g.to_flat()) {
                chosen.push((l, g.clone()));
            }
        }
    }
    chosen
}

/// Left mutation at `S_k`, if the result is two-term.
pub fn mutate_left<F: Field>(
    a: &FiniteDimAlgebra<F>,
    summands: &[Arc<TwoTermComplex<F>>],
    k: usize,
    src: &dyn HomSource<F>,
) -> Option<TwoTermComplex<F>> {
    let x = &summands[k];
    let approx = left_approximation(a, summands.len(), k, src);
    let f1: Vec<&ProjMap<F>> = approx.iter().map(|(_, f)| &f.f1).collect();
    let f0: Vec<&ProjMap<F>> = approx.iter().map(|(_, f)| &f.f0).collect();
    let de: Vec<&ProjMap<F>> = approx.iter().map(|(l, _)| &summands[*l].d).collect();
    let d_e = ProjMap::direct_sum(a, &de);
    let f1 = ProjMap::vstack(a, &f1, x.deg1());
    let f0 = ProjMap::vstack(a, &f0, x.deg0());
    let neg_dx = x.d.neg();
    let d1 = ProjMap::vstack(a, &[&neg_dx, &f1], x.deg1());
    let d2 = ProjMap::hstack(a, &[&f0, &d_e], &d_e.rows);
    let mut ch = Chain { diffs: vec![d1, d2] };
    ch.eliminate(a);
    if !ch.term(0).is_empty() {
        return None;
    }
    Some(TwoTermComplex::new(ch.diffs.pop().expect("two differentials")))
}

/// Right mutation at `S_k`, if the result is two-term.
pub fn mutate_right<F: Field>(
    a: &FiniteDimAlgebra<F>,
    summands: &[Arc<TwoTermComplex<F>>],
    k: usize,
    src: &dyn HomSource<F>,
) -> Option<TwoTermComplex<F>> {
    let x = &summands[k];
    let approx = right_approximation(a, summands.len(), k, src);
    let de: Vec<&ProjMap<F>> = approx.iter().map(|(l, _)| &summands[*l].d).collect();
    let d_e = ProjMap::direct_sum(a, &de);
    let g1: Vec<&ProjMap<F>> = approx.iter().map(|(_, g)| &g.f1).collect();
    let g0: Vec<&ProjMap<F>> = approx.iter().map(|(_, g)| &g.f0).collect();
    let g1 = ProjMap::hstack(a, &g1, x.deg1());
    let g0 = ProjMap::hstack(a, &g0, x.deg0());
    let neg_de = d_e.neg();
    let d1 = ProjMap::vstack(a, &[&neg_de, &g1], &d_e.cols);
    let d2 = ProjMap::hstack(a, &[&g0, &x.d], x.deg0());
    let mut ch = Chain { diffs: vec![d1, d2] };
    ch.eliminate(a);
    if !ch.term(2).is_empty() {
        return None;
    }
    Some(TwoTermComplex::new(ch.diffs.swap_remove(0)))
}

/// The unique two-term mutation at `S_k`: left if possible, otherwise right.
pub fn mutate<F: Field>(
    a: &FiniteDimAlgebra<F>,
    summands: &[Arc<TwoTermComplex<F>>],
    k: usize,
    src: &dyn HomSource<F>,
) -> Result<(Direction, TwoTermComplex<F>)> {
    if let Some(y) = mutate_left(a, summands, k, src) {
        return Ok((Direction::Left, y));
    }
    if let Some(y) = mutate_right(a, summands, k, src) {
        return Ok((Direction::Right, y));
    }
    Err(Error::Internal(format!("no two-term mutation at summand {k}")))
}

/// Mutation in a prescribed direction.
pub fn mutate_in<F: Field>(
    a: &FiniteDimAlgebra<F>,
    summands: &[Arc<TwoTermComplex<F>>],
    k: usize,
    dir: Direction,
    src: &dyn HomSource<F>,
) -> Option<TwoTermComplex<F>> {
    match dir {
        Direction::Left => mutate_left(a, summands, k, src),
        Direction::Right => mutate_right(a, summands, k, src),
    }
}
