//! Quotients by central radical ideals and the quiver combinatorics around
//! radical-square-zero algebras.

pub mod dynkin;

use crate::algebra::constructions::quotient_by_ideal;
use crate::algebra::fdalg::{FiniteDimAlgebra, Subspace, SubspaceRole};
use crate::algebra::presentation::{Arrow, Quiver};
use crate::algebra::structure::{center, radical};
use crate::error::Result;
use crate::field::Field;
use crate::linalg::{is_zero_vec, Echelon, Matrix};

pub use dynkin::{classify_graph, DynkinType, ExtendedType, GraphClass, UnderlyingGraph, Witness};

/// `U ∩ V` for subspaces of `F^width`.
pub fn intersect<F: Field>(u: &[Vec<F>], v: &[Vec<F>], width: usize) -> Vec<Vec<F>> {
    if u.is_empty() || v.is_empty() {
        return Vec::new();
    }
    let rows: Vec<Vec<F>> = u.iter().cloned().chain(v.iter().map(|x| x.iter().map(F::neg).collect())).collect();
    let m = Matrix::from_rows(rows, width);
    let mut e = Echelon::new(width);
    for c in m.left_nullspace() {
        let mut x = vec![F::zero(); width];
        for (k, ui) in u.iter().enumerate() {
            if !c[k].is_zero() {
                crate::linalg::axpy(&mut x, &c[k], ui);
            }
        }
        if !is_zero_vec(&x) {
            e.insert(x);
        }
    }
    e.rows().to_vec()
}

/// The largest two-sided ideal inside `Z(A) ∩ rad A`.
///
/// Starts from `Z ∩ rad` and keeps the elements whose products with every
/// basis element stay inside, until the subspace stops shrinking.
pub fn max_central_radical_ideal<F: Field>(a: &FiniteDimAlgebra<F>) -> Subspace<F> {
    let d = a.dim();
    let mut cur = intersect(&center(a).basis, &radical(a).basis, d);
    loop {
        if cur.is_empty() {
            break;
        }
        let e = Echelon::from_vectors(d, &cur);
        let rows: Vec<Vec<F>> = cur
            .iter()
            .map(|v| {
                let mut row = Vec::with_capacity(2 * d * d);
                for x in 0..d {
                    let u = a.unit(x);
                    row.extend(e.reduce(a.mul(&u, v)));
                    row.extend(e.reduce(a.mul(v, &u)));
                }
                row
            })
            .collect();
        let width = rows[0].len();
        let combos = Matrix::from_rows(rows, width).left_nullspace();
        if combos.len() == cur.len() {
            break;
        }
        let mut next = Echelon::new(d);
        for c in combos {
            let mut x = vec![F::zero(); d];
            for (k, v) in cur.iter().enumerate() {
                if !c[k].is_zero() {
                    crate::linalg::axpy(&mut x, &c[k], v);
                }
            }
            next.insert(x);
        }
        cur = next.rows().to_vec();
    }
    Subspace { role: SubspaceRole::Ideal, basis: cur }
}

/// `A / I` for `I` the maximal ideal inside the center and the radical.
pub fn reduce<F: Field>(a: &FiniteDimAlgebra<F>) -> Result<FiniteDimAlgebra<F>> {
    quotient_by_ideal(a, &max_central_radical_ideal(a))
}

/// The quiver of `A`: the presentation's quiver when there is one, otherwise
/// `dim e_i (rad A / rad² A) e_j` arrows from `i` to `j`.
pub fn gabriel_quiver<F: Field>(a: &FiniteDimAlgebra<F>) -> Quiver {
    if let Some(p) = a.presentation() {
        return p.quiver.clone();
    }
    let n = a.num_vertices();
    let layers = a.radical_layers();
    let block_rank = |layer: Option<&Vec<Vec<F>>>, i: usize, j: usize| -> usize {
        let Some(vs) = layer else { return 0 };
        let r = a.block_range(i, j);
        let mut e = Echelon::new(r.len());
        for v in vs {
            e.insert(v[r.clone()].to_vec());
        }
        e.rank()
    };
    let mut q = Quiver::new(a.vertex_labels().to_vec());
    for i in 0..n {
        for j in 0..n {
            let k = block_rank(layers.first(), i, j) - block_rank(layers.get(1), i, j);
            for l in 0..k {
                q.arrows.push(Arrow { name: format!("x{}_{}_{l}", a.vertex_labels()[i], a.vertex_labels()[j]), src: i, tgt: j });
            }
        }
    }
    q
}

/// The separated quiver, with a record of where each vertex came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparatedQuiver {
    pub quiver: Quiver,
    /// `(original vertex index, is the primed copy)`.
    pub origin: Vec<(usize, bool)>,
}

/// Vertices of `Q` and primed copies; an arrow `i -> j'` for each arrow `i -> j`.
///
/// Copies carry the labels `m + 1, m + 2, ...` with `m` the largest label of `Q`.
pub fn separated_quiver(q: &Quiver) -> SeparatedQuiver {
    let n = q.num_vertices();
    let top = q.vertices.iter().copied().max().unwrap_or(0);
    let mut vertices = q.vertices.clone();
    vertices.extend((0..n).map(|i| top + 1 + i as i64));
    let arrows = q.arrows.iter().map(|a| Arrow { name: a.name.clone(), src: a.src, tgt: n + a.tgt }).collect();
    let origin = (0..n).map(|i| (i, false)).chain((0..n).map(|i| (i, true))).collect();
    SeparatedQuiver { quiver: Quiver { vertices, arrows }, origin }
}

/// `Q` with a reversed arrow `as: j -> i` added for every `a: i -> j`.
pub fn double_quiver(q: &Quiver) -> Quiver {
    let mut d = q.clone();
    for a in &q.arrows {
        d.arrows.push(Arrow { name: format!("{}s", a.name), src: a.tgt, tgt: a.src });
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build::build;
    use crate::algebra::catalog::catalog;
    use crate::Q;

    fn alg(name: &str) -> FiniteDimAlgebra<Q> {
        build(&catalog(name, None).unwrap()).unwrap()
    }

    #[test]
    fn nakayama_has_no_central_radical_ideal() {
        assert_eq!(max_central_radical_ideal(&alg("nakayama-2")).dim(), 0);
    }

    #[test]
    fn ideal_is_central_and_closed() {
        for name in ["A1", "A2", "A5", "A12"] {
            let a = alg(name);
            let i = max_central_radical_ideal(&a);
            assert!(i.is_ideal(&a), "{name}");
            let z = center(&a);
            assert!(i.basis.iter().all(|v| z.contains(v)), "{name}");
        }
    }

    #[test]
    fn separated_quiver_shape() {
        let q = catalog("exrs0-1", None).unwrap().quiver;
        let s = separated_quiver(&q);
        assert_eq!(s.quiver.num_vertices(), 8);
        assert_eq!(s.quiver.arrows.len(), q.arrows.len());
        assert!(s.quiver.arrows.iter().all(|a| !s.origin[a.src].1 && s.origin[a.tgt].1));
    }

    #[test]
    fn double_quiver_doubles_arrows() {
        let q = Quiver::new(vec![1, 2]).arrow("a", 1, 2);
        let d = double_quiver(&q);
        assert_eq!(d.arrows.len(), 2);
        assert_eq!(d.arrows[1], Arrow { name: "as".into(), src: 1, tgt: 0 });
    }

    #[test]
    fn gabriel_quiver_of_quotient() {
        let a = alg("A5");
        let r = crate::algebra::constructions::idempotent_quotient(&a, &[1]).unwrap();
        let q = gabriel_quiver(&r);
        assert_eq!(q.num_vertices(), 1);
        assert_eq!(q.arrows.len(), 1);
    }
}
