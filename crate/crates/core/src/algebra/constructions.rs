//! Quotients and trivial extensions of finite-dimensional algebras.

use std::collections::HashMap;

use crate::algebra::fdalg::{BasisElem, FiniteDimAlgebra, Sparse, Subspace, SubspaceRole};
use crate::algebra::presentation::{Coef, Relation};
use crate::error::{Error, Result};
use crate::field::{Field, Q};
use crate::linalg::{is_zero_vec, Echelon, Matrix};

/// Per-block reduction modulo an ideal, keeping the smallest local indices.
struct BlockReducer<F> {
    /// Echelon on reversed local coordinates, one per block `(i, j)`.
    blocks: HashMap<(usize, usize), Echelon<F>>,
}

impl<F: Field> BlockReducer<F> {
    fn new(a: &FiniteDimAlgebra<F>, ideal: &[Vec<F>]) -> Self {
        let mut blocks: HashMap<(usize, usize), Echelon<F>> = HashMap::new();
        for v in ideal {
            for ((i, j), part) in a.block_components(v) {
                let mut rev = part;
                rev.reverse();
                let d = rev.len();
                blocks.entry((i, j)).or_insert_with(|| Echelon::new(d)).insert(rev);
            }
        }
        BlockReducer { blocks }
    }

    /// Local indices in block `(i, j)` that survive the quotient.
    fn survivors(&self, a: &FiniteDimAlgebra<F>, i: usize, j: usize) -> Vec<usize> {
        let d = a.block_dim(i, j);
        match self.blocks.get(&(i, j)) {
            None => (0..d).collect(),
            Some(e) => {
                let mut v: Vec<usize> = e.free_columns().into_iter().map(|c| d - 1 - c).collect();
                v.sort_unstable();
                v
            }
        }
    }

    fn reduce_local(&self, i: usize, j: usize, part: Vec<F>) -> Vec<F> {
        match self.blocks.get(&(i, j)) {
            None => part,
            Some(e) => {
                let mut rev = part;
                rev.reverse();
                let mut r = e.reduce(rev);
                r.reverse();
                r
            }
        }
    }
}

/// Quotient of `a` by the span of `ideal` restricted to the vertices in `keep`.
///
/// Every block touching a removed vertex must lie in the ideal.
fn quotient_blocks<F: Field>(
    a: &FiniteDimAlgebra<F>,
    ideal: &[Vec<F>],
    keep: &[usize],
    name: String,
) -> Result<FiniteDimAlgebra<F>> {
    let red = BlockReducer::new(a, ideal);
    let mut new_index: Vec<Option<usize>> = vec![None; a.dim()];
    let mut basis = Vec::new();
    let mut surv_parent = Vec::new();
    for (ni, &i) in keep.iter().enumerate() {
        for (nj, &j) in keep.iter().enumerate() {
            let off = a.block_offset(i, j);
            for l in red.survivors(a, i, j) {
                let b = &a.basis()[off + l];
                new_index[off + l] = Some(basis.len());
                surv_parent.push(off + l);
                basis.push(BasisElem { src: ni, tgt: nj, label: b.label.clone(), word: b.word.clone() });
            }
        }
    }
    let nd = basis.len();
    let kept: Vec<bool> = (0..a.num_vertices()).map(|v| keep.contains(&v)).collect();
    let project = |v: &[F]| -> Vec<F> {
        let mut out = vec![F::zero(); nd];
        for ((i, j), part) in a.block_components(v) {
            if !kept[i] || !kept[j] {
                continue;
            }
            let r = red.reduce_local(i, j, part);
            let off = a.block_offset(i, j);
            for (l, c) in r.into_iter().enumerate() {
                if !c.is_zero() {
                    let ni = new_index[off + l].expect("reduced vector lives on survivors");
                    out[ni] = c;
                }
            }
        }
        out
    };
    let mut proj = Matrix::zeros(a.dim(), nd);
    for x in 0..a.dim() {
        let img = project(&a.unit(x));
        for (k, c) in img.into_iter().enumerate() {
            proj[(x, k)] = c;
        }
    }
    let mut mult: Vec<Sparse<F>> = vec![Vec::new(); nd * nd];
    for (x, &px) in surv_parent.iter().enumerate() {
        for (y, &py) in surv_parent.iter().enumerate() {
            let prod = a.product(px, py);
            if prod.is_empty() {
                continue;
            }
            let mut out = vec![F::zero(); nd];
            for (z, c) in prod {
                for (k, p) in proj.row(*z).iter().enumerate() {
                    if !p.is_zero() {
                        out[k].add_assign(&c.mul(p));
                    }
                }
            }
            mult[x * nd + y] = out.into_iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
        }
    }
    let labels: Vec<i64> = keep.iter().map(|&v| a.vertex_labels()[v]).collect();
    let mut q = FiniteDimAlgebra::from_parts(name, labels, basis, mult)?;
    q.set_quotient_map(proj);
    Ok(q)
}

/// `A / I` for a two-sided ideal `I` inside the radical.
pub fn quotient_by_ideal<F: Field>(a: &FiniteDimAlgebra<F>, ideal: &Subspace<F>) -> Result<FiniteDimAlgebra<F>> {
    for v in &ideal.basis {
        for i in 0..a.num_vertices() {
            if !v[a.idempotent(i)].is_zero() {
                return Err(Error::NotAnIdeal("subspace is not contained in the radical".into()));
            }
        }
    }
    if !ideal.is_ideal(a) {
        return Err(Error::NotAnIdeal("subspace is not closed under multiplication".into()));
    }
    let keep: Vec<usize> = (0..a.num_vertices()).collect();
    let mut q = quotient_blocks(a, &ideal.basis, &keep, format!("{}/I", a.name()))?;
    if let Some(p) = a.presentation() {
        let mut p = p.clone();
        for v in &ideal.basis {
            for ((i, j), part) in a.block_components(v) {
                let mut w = vec![F::zero(); a.dim()];
                for (l, c) in part.into_iter().enumerate() {
                    w[a.block_offset(i, j) + l] = c;
                }
                if let Some(r) = ideal_relation(a, &w) {
                    if !p.relations.contains(&r) {
                        p.relations.push(r);
                    }
                }
            }
        }
        p.name = Some(q.name().to_string());
        q.set_presentation(p);
    }
    Ok(q)
}

/// Expresses an ideal element as a relation in the arrows of the presentation.
fn ideal_relation<F: Field>(a: &FiniteDimAlgebra<F>, v: &[F]) -> Option<Relation> {
    let p = a.presentation()?;
    let mut terms = Vec::new();
    for (x, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let w = a.basis()[x].word.clone()?;
        let q: Q = c.to_string().parse().ok()?;
        terms.push((Coef::constant(q), w));
    }
    Relation::new(&p.quiver, terms).ok()
}

/// The two-sided ideal generated by the given elements.
pub fn ideal_generated_by<F: Field>(a: &FiniteDimAlgebra<F>, gens: &[Vec<F>]) -> Subspace<F> {
    let d = a.dim();
    let mut e = Echelon::new(d);
    let mut work: Vec<Vec<F>> = gens.to_vec();
    while let Some(v) = work.pop() {
        let r = e.reduce(v.clone());
        if is_zero_vec(&r) {
            continue;
        }
        e.insert(v.clone());
        for x in 0..d {
            let u = a.unit(x);
            let l = a.mul(&u, &v);
            if !is_zero_vec(&l) {
                work.push(l);
            }
            let r = a.mul(&v, &u);
            if !is_zero_vec(&r) {
                work.push(r);
            }
        }
    }
    Subspace { role: SubspaceRole::Ideal, basis: e.rows().to_vec() }
}

/// `A / A e A` with `e` the sum of the idempotents at `kill`; vertices are renumbered.
pub fn idempotent_quotient<F: Field>(a: &FiniteDimAlgebra<F>, kill: &[usize]) -> Result<FiniteDimAlgebra<F>> {
    let n = a.num_vertices();
    let mut gens = Vec::new();
    for &i in kill {
        for s in 0..n {
            for t in 0..n {
                for x in a.block_range(s, i) {
                    for y in a.block_range(i, t) {
                        let prod = a.product(x, y);
                        if !prod.is_empty() {
                            let mut v = vec![F::zero(); a.dim()];
                            for (z, c) in prod {
                                v[*z] = c.clone();
                            }
                            gens.push(v);
                        }
                    }
                }
            }
        }
    }
    let keep: Vec<usize> = (0..n).filter(|v| !kill.contains(v)).collect();
    let labels: Vec<String> = kill.iter().map(|&v| a.vertex_labels()[v].to_string()).collect();
    let name = format!("{}/(e{{{}}})", a.name(), labels.join(","));
    quotient_blocks(a, &gens, &keep, name)
}

/// `A / rad^2 A`.
pub fn radical_square_zero<F: Field>(a: &FiniteDimAlgebra<F>) -> Result<FiniteDimAlgebra<F>> {
    let rad2 = a.radical_layers().get(1).cloned().unwrap_or_default();
    let sub = Subspace { role: SubspaceRole::Ideal, basis: rad2 };
    let mut q = quotient_by_ideal(a, &sub)?;
    q.set_name(format!("{}/rad^2", a.name()));
    Ok(q)
}

/// The trivial extension `A ⋉ DA`, on the basis `A ⊕ {b*}` with dual basis elements `b*`.
///
/// For `b` in `e_s A e_t` the dual `b*` lies in `e_t DA e_s`; the bimodule action is
/// `(a f)(x) = f(x a)` and `(f a)(x) = f(a x)`.
pub fn trivial_extension<F: Field>(a: &FiniteDimAlgebra<F>) -> Result<FiniteDimAlgebra<F>> {
    let n = a.num_vertices();
    let d = a.dim();
    let mut basis = Vec::with_capacity(2 * d);
    // new index of A-element x and of dual x*
    let mut of_a = vec![0usize; d];
    let mut of_d = vec![0usize; d];
    for s in 0..n {
        for t in 0..n {
            for x in a.block_range(s, t) {
                of_a[x] = basis.len();
                let b = &a.basis()[x];
                basis.push(BasisElem { src: s, tgt: t, label: b.label.clone(), word: b.word.clone() });
            }
            for x in a.block_range(t, s) {
                of_d[x] = basis.len();
                let b = &a.basis()[x];
                basis.push(BasisElem { src: s, tgt: t, label: format!("D({})", b.label), word: None });
            }
        }
    }
    let nd = 2 * d;
    let mut mult: Vec<Sparse<F>> = vec![Vec::new(); nd * nd];
    let mut put = |x: usize, y: usize, v: Sparse<F>| {
        let mut v = v;
        v.sort_by_key(|(k, _)| *k);
        mult[x * nd + y] = v;
    };
    for x in 0..d {
        for y in 0..d {
            let p: Sparse<F> = a.product(x, y).iter().map(|(z, c)| (of_a[*z], c.clone())).collect();
            if !p.is_empty() {
                put(of_a[x], of_a[y], p);
            }
        }
    }
    // a * b* = sum_x coef_b(x a) x*,  b* * a = sum_x coef_b(a x) x*
    for ai in 0..d {
        for b in 0..d {
            let mut left: Sparse<F> = Vec::new();
            let mut right: Sparse<F> = Vec::new();
            for x in 0..d {
                if let Some((_, c)) = a.product(x, ai).iter().find(|(z, _)| *z == b) {
                    left.push((of_d[x], c.clone()));
                }
                if let Some((_, c)) = a.product(ai, x).iter().find(|(z, _)| *z == b) {
                    right.push((of_d[x], c.clone()));
                }
            }
            if !left.is_empty() {
                put(of_a[ai], of_d[b], left);
            }
            if !right.is_empty() {
                put(of_d[b], of_a[ai], right);
            }
        }
    }
    let mut t = FiniteDimAlgebra::from_parts(format!("T({})", a.name()), a.vertex_labels().to_vec(), basis, mult)?;
    t.set_name(format!("T({})", a.name()));
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::build::build;
    use crate::algebra::catalog::catalog;

    fn alg(name: &str) -> FiniteDimAlgebra<Q> {
        build(&catalog(name, None).unwrap()).unwrap()
    }

    #[test]
    fn trivial_extension_doubles_dimension() {
        let a = alg("exrs0-2");
        let t = trivial_extension(&a).unwrap();
        assert_eq!(t.dim(), 2 * a.dim());
        t.verify().unwrap();
    }

    #[test]
    fn radical_square_zero_dimension() {
        let a = alg("A5");
        let r = radical_square_zero(&a).unwrap();
        assert_eq!(r.dim(), 2 + 3);
        r.verify().unwrap();
    }

    #[test]
    fn zero_ideal_quotient() {
        let a = alg("A12");
        let z = Subspace { role: SubspaceRole::Ideal, basis: vec![] };
        let q = quotient_by_ideal(&a, &z).unwrap();
        assert_eq!(q.dim(), a.dim());
        assert_eq!(q.cartan_matrix(), a.cartan_matrix());
    }

    #[test]
    fn idempotent_quotient_drops_vertex() {
        let a = alg("nakayama-2");
        let q = idempotent_quotient(&a, &[0]).unwrap();
        assert_eq!(q.num_vertices(), 1);
        assert_eq!(q.dim(), 1);
        assert_eq!(q.vertex_labels(), &[2]);
    }

    #[test]
    fn rejects_non_ideal() {
        let a = alg("nakayama-2");
        let x = a.basis().iter().position(|b| b.label == "x").unwrap();
        let mut v = vec![Q::zero(); a.dim()];
        v[x] = Q::one();
        v[a.idempotent(0)] = Q::one();
        let s = Subspace { role: SubspaceRole::Other, basis: vec![v] };
        assert!(matches!(quotient_by_ideal(&a, &s), Err(Error::NotAnIdeal(_))));
    }
}
