//! Normal forms for path algebras modulo relations.
//!
//! The relation ideal is closed under multiplication by arrows inside the
//! truncated path algebra `KQ / J^(c+1)`. When every path of length `c` lies
//! in that closure, `J^c` is contained in the ideal and the non-leading paths
//! form a basis of the quotient.

use std::collections::{BTreeMap, HashMap};

use crate::algebra::fdalg::{BasisElem, FiniteDimAlgebra, Sparse};
use crate::algebra::presentation::{PathWord, Presentation};
use crate::error::{Error, Result};
use crate::field::Field;

pub const DEFAULT_LENGTH_CAP: usize = 12;
pub const MAX_LENGTH_CAP: usize = 48;

/// All paths of length at most `cap`, ordered by (length, arrow sequence, start).
struct PathTable {
    words: Vec<PathWord>,
    tgt: Vec<usize>,
    index: HashMap<PathWord, usize>,
    /// `right[p][a]` = index of `p * a`.
    right: Vec<Vec<(usize, usize)>>,
    /// `left[p][a]` = index of `a * p`.
    left: Vec<Vec<(usize, usize)>>,
}

impl PathTable {
    fn new(p: &Presentation, cap: usize, path_limit: usize) -> Result<Self> {
        let q = &p.quiver;
        let mut words: Vec<PathWord> = (0..q.num_vertices()).map(PathWord::trivial).collect();
        let mut layer: Vec<usize> = (0..words.len()).collect();
        for _ in 0..cap {
            let mut next = Vec::new();
            for &w in &layer {
                let t = words[w].target(q);
                for (ai, a) in q.arrows.iter().enumerate() {
                    if a.src == t {
                        let mut nw = words[w].clone();
                        nw.arrows.push(ai);
                        next.push(nw);
                    }
                }
            }
            next.sort_by(|a, b| a.arrows.cmp(&b.arrows).then(a.start.cmp(&b.start)));
            layer = (words.len()..words.len() + next.len()).collect();
            words.extend(next);
            if words.len() > path_limit {
                return Err(Error::Unsupported(format!(
                    "more than {path_limit} paths of length at most {cap}"
                )));
            }
        }
        let index: HashMap<PathWord, usize> = words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
        let tgt: Vec<usize> = words.iter().map(|w| w.target(q)).collect();
        let mut right = vec![Vec::new(); words.len()];
        let mut left = vec![Vec::new(); words.len()];
        for (i, w) in words.iter().enumerate() {
            if w.len() == cap {
                continue;
            }
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.src == tgt[i] {
                    let mut nw = w.clone();
                    nw.arrows.push(ai);
                    right[i].push((ai, index[&nw]));
                }
                if a.tgt == w.start {
                    let mut arrows = vec![ai];
                    arrows.extend_from_slice(&w.arrows);
                    let nw = PathWord { start: a.src, arrows };
                    left[i].push((ai, index[&nw]));
                }
            }
        }
        Ok(PathTable { words, tgt, index, right, left })
    }

    fn len_of(&self, id: usize) -> usize {
        self.words[id].len()
    }
}

/// Echelon rows keyed by leading (largest) path index.
struct IdealEchelon<F> {
    rows: HashMap<usize, Vec<(usize, F)>>,
}

impl<F: Field> IdealEchelon<F> {
    fn reduce(&self, mut v: BTreeMap<usize, F>) -> BTreeMap<usize, F> {
        let mut out = BTreeMap::new();
        while let Some((&k, _)) = v.iter().next_back() {
            let c = v.remove(&k).expect("present");
            if let Some(row) = self.rows.get(&k) {
                // row is normalised with leading coefficient 1 and stored without it
                for (j, r) in row {
                    let e = v.entry(*j).or_insert_with(F::zero);
                    e.sub_mul_assign(&c, r);
                    if e.is_zero() {
                        v.remove(j);
                    }
                }
            } else {
                out.insert(k, c);
            }
        }
        out
    }

    /// Inserts a reduced nonzero vector.
    fn insert(&mut self, v: &BTreeMap<usize, F>) {
        let (&k, lead) = v.iter().next_back().expect("nonzero");
        let inv = lead.inv().expect("nonzero");
        let row: Vec<(usize, F)> = v.iter().filter(|(j, _)| **j != k).map(|(j, c)| (*j, c.mul(&inv))).collect();
        self.rows.insert(k, row);
    }
}

fn map_coefficients<F: Field>(p: &Presentation) -> Result<Vec<Vec<(F, PathWord)>>> {
    p.evaluated_relations()?
        .into_iter()
        .map(|r| r.into_iter().map(|(c, w)| Ok((F::from_q(&c)?, w))).collect::<Result<Vec<_>>>())
        .collect()
}

struct Closure<F> {
    table: PathTable,
    ideal: IdealEchelon<F>,
}

fn close_ideal<F: Field>(p: &Presentation, rels: &[Vec<(F, PathWord)>], cap: usize) -> Result<Closure<F>> {
    let table = PathTable::new(p, cap, 2_000_000)?;
    let mut ideal = IdealEchelon { rows: HashMap::new() };
    let mut work: Vec<BTreeMap<usize, F>> = Vec::new();
    for r in rels {
        let mut v = BTreeMap::new();
        for (c, w) in r {
            if w.len() <= cap {
                let id = table.index[w];
                let e: &mut F = v.entry(id).or_insert_with(F::zero);
                e.add_assign(c);
            }
        }
        v.retain(|_, c: &mut F| !c.is_zero());
        work.push(v);
    }
    while let Some(v) = work.pop() {
        let v = ideal.reduce(v);
        if v.is_empty() {
            continue;
        }
        ideal.insert(&v);
        for side in 0..2 {
            for a in 0..p.quiver.arrows.len() {
                let mut w = BTreeMap::new();
                for (id, c) in &v {
                    let ext = if side == 0 { &table.right[*id] } else { &table.left[*id] };
                    if let Some(&(_, nid)) = ext.iter().find(|(ai, _)| *ai == a) {
                        w.insert(nid, c.clone());
                    }
                }
                if !w.is_empty() {
                    work.push(w);
                }
            }
        }
    }
    Ok(Closure { table, ideal })
}

/// Builds the algebra presented by `p`, certifying nilpotency within `length_cap`.
///
/// Caps from the longest relation word up to `length_cap` are tried in turn;
/// the first one whose maximal-length paths all lie in the ideal is used.
pub fn build_algebra<F: Field>(p: &Presentation, length_cap: usize) -> Result<FiniteDimAlgebra<F>> {
    if length_cap < 2 {
        return Err(Error::Unsupported("length cap must be at least 2".into()));
    }
    p.validate()?;
    if p.num_vertices() == 0 {
        return Err(Error::InconsistentPresentation("empty quiver".into()));
    }
    let rels = map_coefficients::<F>(p)?;
    let longest = p.relations.iter().map(|r| r.max_len()).max().unwrap_or(0);
    let start = longest.clamp(2, length_cap);
    for cap in start..=length_cap {
        let closure = close_ideal(p, &rels, cap)?;
        let certified = (0..closure.table.words.len())
            .filter(|&id| closure.table.len_of(id) == cap)
            .all(|id| closure.ideal.reduce(BTreeMap::from([(id, F::one())])).is_empty());
        if certified {
            return assemble(p, closure, cap);
        }
    }
    Err(Error::CapInsufficient { cap: length_cap })
}

/// [`build_algebra`] with the default cap, doubling it on failure up to the maximum.
pub fn build<F: Field>(p: &Presentation) -> Result<FiniteDimAlgebra<F>> {
    let mut cap = DEFAULT_LENGTH_CAP;
    loop {
        match build_algebra(p, cap) {
            Err(Error::CapInsufficient { .. }) if cap < MAX_LENGTH_CAP => cap = (cap * 2).min(MAX_LENGTH_CAP),
            r => return r,
        }
    }
}

fn assemble<F: Field>(p: &Presentation, c: Closure<F>, cap: usize) -> Result<FiniteDimAlgebra<F>> {
    let q = &p.quiver;
    let table = &c.table;
    let mut normal: Vec<usize> = (0..table.words.len())
        .filter(|&id| table.len_of(id) < cap && !c.ideal.rows.contains_key(&id))
        .collect();
    normal.sort_by(|&a, &b| {
        let (wa, wb) = (&table.words[a], &table.words[b]);
        (wa.start, table.tgt[a], wa.len(), &wa.arrows).cmp(&(wb.start, table.tgt[b], wb.len(), &wb.arrows))
    });
    let pos: HashMap<usize, usize> = normal.iter().enumerate().map(|(i, &id)| (id, i)).collect();
    let basis: Vec<BasisElem> = normal
        .iter()
        .map(|&id| {
            let w = &table.words[id];
            BasisElem { src: w.start, tgt: table.tgt[id], label: w.display(q), word: Some(w.clone()) }
        })
        .collect();
    let d = basis.len();
    let mut mult: Vec<Sparse<F>> = vec![Vec::new(); d * d];
    for (x, &ix) in normal.iter().enumerate() {
        for (y, &iy) in normal.iter().enumerate() {
            if table.tgt[ix] != table.words[iy].start {
                continue;
            }
            let (wx, wy) = (&table.words[ix], &table.words[iy]);
            if wx.len() + wy.len() >= cap {
                continue;
            }
            let mut arrows = wx.arrows.clone();
            arrows.extend_from_slice(&wy.arrows);
            let w = PathWord { start: wx.start, arrows };
            let id = table.index[&w];
            let mut v = BTreeMap::new();
            v.insert(id, F::one());
            let r = c.ideal.reduce(v);
            let mut prod: Sparse<F> = r.into_iter().map(|(k, coef)| (pos[&k], coef)).collect();
            prod.sort_by_key(|(k, _)| *k);
            mult[x * d + y] = prod;
        }
    }
    let name = p.name.clone().unwrap_or_else(|| "algebra".into());
    let mut alg = FiniteDimAlgebra::from_parts(name, q.vertices.clone(), basis, mult)?;
    alg.set_presentation(p.clone());
    Ok(alg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::presentation::{word, Coef, Quiver, Relation};
    use crate::field::Q;

    fn monomial(q: &Quiver, s: &str) -> Relation {
        Relation::new(q, vec![(Coef::constant(Q::one()), word(q, s).unwrap())]).unwrap()
    }

    #[test]
    fn nakayama_two_cycle() {
        let q = Quiver::new(vec![1, 2]).arrow("x", 1, 2).arrow("y", 2, 1);
        let mut p = Presentation::new("n2", q.clone());
        p.relations = vec![monomial(&q, "x y"), monomial(&q, "y x")];
        let a: FiniteDimAlgebra<Q> = build(&p).unwrap();
        assert_eq!(a.dim(), 4);
        let labels: Vec<&str> = a.basis().iter().map(|b| b.label.as_str()).collect();
        assert_eq!(labels, vec!["e1", "x", "y", "e2"]);
        assert_eq!(a.cartan_matrix(), vec![vec![1, 1], vec![1, 1]]);
        a.verify().unwrap();
    }

    #[test]
    fn cap_insufficient_is_reported() {
        let q = Quiver::new(vec![1]).arrow("a", 1, 1);
        let mut p = Presentation::new("loop", q.clone());
        p.relations = vec![monomial(&q, "a a a a a a a a a a a a a a a a a a a a")];
        assert!(matches!(build_algebra::<Q>(&p, 12), Err(Error::CapInsufficient { .. })));
        let a: FiniteDimAlgebra<Q> = build(&p).unwrap();
        assert_eq!(a.dim(), 20);
    }

    #[test]
    fn non_homogeneous_relation() {
        // a^2 = a^3 collapses to a^2 = 0 once the ideal is admissible
        let q = Quiver::new(vec![1]).arrow("a", 1, 1);
        let mut p = Presentation::new("loop", q.clone());
        p.relations = vec![Relation::new(
            &q,
            vec![
                (Coef::constant(Q::one()), word(&q, "a a").unwrap()),
                (Coef::constant(Q::from_i64(-1)), word(&q, "a a a").unwrap()),
            ],
        )
        .unwrap()];
        let a: FiniteDimAlgebra<Q> = build(&p).unwrap();
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn deterministic_build() {
        let q = Quiver::new(vec![1, 2]).arrow("x", 1, 2).arrow("y", 2, 1);
        let mut p = Presentation::new("n", q.clone());
        p.relations = vec![monomial(&q, "x y x"), monomial(&q, "y x y")];
        let a: FiniteDimAlgebra<Q> = build(&p).unwrap();
        let b: FiniteDimAlgebra<Q> = build(&p).unwrap();
        assert_eq!(a.basis(), b.basis());
        for x in 0..a.dim() {
            for y in 0..a.dim() {
                assert_eq!(a.product(x, y), b.product(x, y));
            }
        }
    }
}
