//! Breadth-first enumeration of two-term silting complexes by mutation.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, RwLock};

use log::{debug, info};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::constructions::{ideal_generated_by, idempotent_quotient, quotient_by_ideal};
use crate::algebra::fdalg::FiniteDimAlgebra;
use crate::algebra::structure::right_socle;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::int_det;
use crate::rep::{hom_basis, Representation};
use crate::silting::{
    find_isomorphism, hom_space, is_two_term_silting, mutate, mutate_in, rad_end, ChainMap, Direction, GVector,
    HomSource, HomSpace, TwoTermComplex,
};

pub const DEFAULT_LIMIT: usize = 100_000;

/// Entries kept in the shared Hom cache before it is flushed between levels.
const CACHE_CAP: usize = 200_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Parallelism {
    Sequential,
    #[default]
    Parallel,
}

/// Number of support τ-tilting pairs, or a lower bound when the budget ran out.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Count {
    Finite(usize),
    AtLeast(usize),
}

impl Count {
    pub fn value(self) -> usize {
        match self {
            Count::Finite(n) | Count::AtLeast(n) => n,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Count::Finite(_))
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(n) => write!(f, "Finite({n})"),
            Count::AtLeast(n) => write!(f, "AtLeast({n})"),
        }
    }
}

/// A node keyed by the sorted g-vectors of its summands.
#[derive(Clone, Debug)]
pub struct Node {
    pub key: Vec<GVector>,
    /// Registry ids of the summands, aligned with `key`.
    pub summands: Vec<usize>,
    /// For each summand position: the neighbour reached by mutating there, and the direction.
    pub neighbors: Vec<Option<(usize, Direction)>>,
}

impl Node {
    /// Vertices `j` with `P_j[1]` a summand.
    pub fn projective_part(&self) -> Vec<usize> {
        self.key
            .iter()
            .filter_map(|g| {
                let nz: Vec<usize> = (0..g.len()).filter(|&j| g[j] != 0).collect();
                (nz.len() == 1 && g[nz[0]] == -1).then_some(nz[0])
            })
            .collect()
    }
}

/// The exchange graph explored from the regular module.
#[derive(Clone, Debug)]
pub struct ExchangeGraph<F> {
    pub n: usize,
    pub nodes: Vec<Node>,
    /// Indecomposable summands by registry id.
    pub summands: Vec<Arc<TwoTermComplex<F>>>,
    /// Left mutations `(from, to)`, sorted.
    pub edges: Vec<(usize, usize)>,
    pub complete: bool,
    pub limit: usize,
    /// Nodes whose mutations were computed.
    pub expansions: usize,
}

impl<F: Field> ExchangeGraph<F> {
    pub fn count(&self) -> Count {
        if self.complete {
            Count::Finite(self.nodes.len())
        } else {
            Count::AtLeast(self.nodes.len())
        }
    }

    pub fn summands_of(&self, node: usize) -> Vec<&TwoTermComplex<F>> {
        self.nodes[node].summands.iter().map(|&s| &*self.summands[s]).collect()
    }

    pub fn find(&self, key: &[GVector]) -> Option<usize> {
        self.nodes.iter().position(|nd| nd.key == key)
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.nodes.len()];
        for &(_, t) in &self.edges {
            d[t] += 1;
        }
        d
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.nodes.len()];
        for &(s, _) in &self.edges {
            d[s] += 1;
        }
        d
    }
}

struct SharedHoms<'a, F> {
    a: &'a FiniteDimAlgebra<F>,
    homs: RwLock<HashMap<(usize, usize), Arc<HomSpace<F>>>>,
    rads: RwLock<HashMap<usize, Arc<Vec<ChainMap<F>>>>>,
}

impl<'a, F: Field> SharedHoms<'a, F> {
    fn new(a: &'a FiniteDimAlgebra<F>) -> Self {
        SharedHoms { a, homs: RwLock::default(), rads: RwLock::default() }
    }

    fn hom(&self, reg: &[Arc<TwoTermComplex<F>>], i: usize, j: usize) -> Arc<HomSpace<F>> {
        if let Some(h) = self.homs.read().expect("cache lock").get(&(i, j)) {
            return h.clone();
        }
        let h = Arc::new(hom_space(self.a, &reg[i], &reg[j]));
        self.homs.write().expect("cache lock").entry((i, j)).or_insert(h).clone()
    }

    fn rad(&self, reg: &[Arc<TwoTermComplex<F>>], i: usize) -> Arc<Vec<ChainMap<F>>> {
        if let Some(r) = self.rads.read().expect("cache lock").get(&i) {
            return r.clone();
        }
        let r = Arc::new(rad_end(&self.hom(reg, i, i)));
        self.rads.write().expect("cache lock").entry(i).or_insert(r).clone()
    }

    fn trim(&self) {
        let mut h = self.homs.write().expect("cache lock");
        if h.len() > CACHE_CAP {
            h.clear();
        }
    }
}

struct NodeHoms<'s, 'a, F> {
    shared: &'s SharedHoms<'a, F>,
    reg: &'s [Arc<TwoTermComplex<F>>],
    ids: &'s [usize],
}

impl<F: Field> HomSource<F> for NodeHoms<'_, '_, F> {
    fn hom(&self, i: usize, j: usize) -> Arc<HomSpace<F>> {
        self.shared.hom(self.reg, self.ids[i], self.ids[j])
    }

    fn rad(&self, i: usize) -> Arc<Vec<ChainMap<F>>> {
        self.shared.rad(self.reg, self.ids[i])
    }
}

type Expansion<F> = Vec<(Direction, TwoTermComplex<F>)>;

fn expand<F: Field>(
    a: &FiniteDimAlgebra<F>,
    shared: &SharedHoms<'_, F>,
    reg: &[Arc<TwoTermComplex<F>>],
    node: &Node,
) -> Result<Expansion<F>> {
    let arcs: Vec<Arc<TwoTermComplex<F>>> = node.summands.iter().map(|&s| reg[s].clone()).collect();
    let src = NodeHoms { shared, reg, ids: &node.summands };
    (0..arcs.len()).map(|k| mutate(a, &arcs, k, &src)).collect()
}

#[cfg(feature = "parallel")]
fn expand_level<F: Field>(
    a: &FiniteDimAlgebra<F>,
    shared: &SharedHoms<'_, F>,
    reg: &[Arc<TwoTermComplex<F>>],
    nodes: &[Node],
    frontier: &[usize],
    par: Parallelism,
) -> Vec<Result<Expansion<F>>> {
    use rayon::prelude::*;
    match par {
        Parallelism::Parallel => frontier.par_iter().map(|&i| expand(a, shared, reg, &nodes[i])).collect(),
        Parallelism::Sequential => frontier.iter().map(|&i| expand(a, shared, reg, &nodes[i])).collect(),
    }
}

#[cfg(not(feature = "parallel"))]
fn expand_level<F: Field>(
    a: &FiniteDimAlgebra<F>,
    shared: &SharedHoms<'_, F>,
    reg: &[Arc<TwoTermComplex<F>>],
    nodes: &[Node],
    frontier: &[usize],
    _par: Parallelism,
) -> Vec<Result<Expansion<F>>> {
    frontier.iter().map(|&i| expand(a, shared, reg, &nodes[i])).collect()
}

/// Explores the exchange graph from the regular module, mutating in both directions.
///
/// At most `limit` nodes are created; if more exist the graph is returned incomplete.
pub fn enumerate<F: Field>(a: &FiniteDimAlgebra<F>, limit: usize, par: Parallelism) -> Result<ExchangeGraph<F>> {
    let n = a.num_vertices();
    let limit = limit.max(1);
    let mut reg: Vec<Arc<TwoTermComplex<F>>> = Vec::new();
    let mut by_g: HashMap<GVector, usize> = HashMap::new();
    for i in 0..n {
        let s = TwoTermComplex::stalk(a, i);
        by_g.insert(s.g_vector(n), reg.len());
        reg.push(Arc::new(s));
    }
    let mut pairs: Vec<(GVector, usize)> = (0..n).map(|i| (reg[i].g_vector(n), i)).collect();
    pairs.sort();
    let start = Node {
        key: pairs.iter().map(|(g, _)| g.clone()).collect(),
        summands: pairs.iter().map(|&(_, s)| s).collect(),
        neighbors: vec![None; n],
    };
    let mut index: HashMap<Vec<GVector>, usize> = HashMap::new();
    index.insert(start.key.clone(), 0);
    let mut nodes = vec![start];
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut frontier = vec![0usize];
    let mut complete = true;
    let mut expansions = 0;
    let shared = SharedHoms::new(a);
    let mut level = 0;
    'bfs: while !frontier.is_empty() {
        debug!("level {level}: {} nodes to expand, {} known", frontier.len(), nodes.len());
        let results = expand_level(a, &shared, &reg, &nodes, &frontier, par);
        expansions += frontier.len();
        let mut next = Vec::new();
        for (&u, res) in frontier.iter().zip(results) {
            for (k, (dir, y)) in res?.into_iter().enumerate() {
                let g = y.g_vector(n);
                let id = *by_g.entry(g.clone()).or_insert_with(|| {
                    reg.push(Arc::new(y));
                    reg.len() - 1
                });
                let mut pairs: Vec<(GVector, usize)> = nodes[u]
                    .key
                    .iter()
                    .cloned()
                    .zip(nodes[u].summands.iter().copied())
                    .enumerate()
                    .map(|(p, gs)| if p == k { (g.clone(), id) } else { gs })
                    .collect();
                pairs.sort();
                let key: Vec<GVector> = pairs.iter().map(|(g, _)| g.clone()).collect();
                let v = match index.get(&key) {
                    Some(&v) => v,
                    None => {
                        if nodes.len() >= limit {
                            complete = false;
                            break 'bfs;
                        }
                        let v = nodes.len();
                        index.insert(key.clone(), v);
                        nodes.push(Node {
                            key,
                            summands: pairs.iter().map(|&(_, s)| s).collect(),
                            neighbors: vec![None; n],
                        });
                        next.push(v);
                        v
                    }
                };
                nodes[u].neighbors[k] = Some((v, dir));
                match dir {
                    Direction::Left => edges.insert((u, v)),
                    Direction::Right => edges.insert((v, u)),
                };
            }
        }
        next.sort_by(|&x, &y| nodes[x].key.cmp(&nodes[y].key));
        frontier = next;
        shared.trim();
        level += 1;
    }
    info!("{}: {} nodes, complete = {complete}, {} summands", a.name(), nodes.len(), reg.len());
    Ok(ExchangeGraph { n, nodes, summands: reg, edges: edges.into_iter().collect(), complete, limit, expansions })
}

pub fn count<F: Field>(a: &FiniteDimAlgebra<F>, limit: usize, par: Parallelism) -> Result<Count> {
    Ok(enumerate(a, limit, par)?.count())
}

/// The Hasse quiver: requires a complete enumeration. Arrows point along left mutations.
pub fn hasse<F: Field>(a: &FiniteDimAlgebra<F>, limit: usize, par: Parallelism) -> Result<ExchangeGraph<F>> {
    let g = enumerate(a, limit, par)?;
    if !g.complete {
        return Err(Error::Incomplete(g.nodes.len()));
    }
    Ok(g)
}

/// Counts `t_I` of τ-tilting modules over `A/(e_I)`, keyed by the vertex labels in `I`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrataTable {
    pub entries: BTreeMap<Vec<i64>, usize>,
    pub total: usize,
}

impl StrataTable {
    pub fn get(&self, labels: &[i64]) -> Option<usize> {
        let mut l = labels.to_vec();
        l.sort_unstable();
        self.entries.get(&l).copied()
    }
}

fn subset_labels<F: Field>(a: &FiniteDimAlgebra<F>, mask: usize) -> Vec<i64> {
    let mut l: Vec<i64> = (0..a.num_vertices()).filter(|&j| mask >> j & 1 == 1).map(|j| a.vertex_labels()[j]).collect();
    l.sort_unstable();
    l
}

/// Route (a): split a complete graph by the projective part of each node.
pub fn strata_from_graph<F: Field>(a: &FiniteDimAlgebra<F>, g: &ExchangeGraph<F>) -> Result<StrataTable> {
    if !g.complete {
        return Err(Error::Incomplete(g.nodes.len()));
    }
    let n = a.num_vertices();
    let mut entries: BTreeMap<Vec<i64>, usize> = (0..1usize << n).map(|m| (subset_labels(a, m), 0)).collect();
    for nd in &g.nodes {
        let mask = nd.projective_part().iter().fold(0usize, |m, &j| m | 1 << j);
        *entries.get_mut(&subset_labels(a, mask)).expect("all subsets present") += 1;
    }
    Ok(StrataTable { entries, total: g.nodes.len() })
}

/// `t_I` for a single subset, by enumerating `A/(e_I)` and keeping sincere pairs.
pub fn stratum_by_quotient<F: Field>(a: &FiniteDimAlgebra<F>, kill: &[usize], limit: usize, par: Parallelism) -> Result<usize> {
    if kill.len() == a.num_vertices() {
        return Ok(1);
    }
    let b = idempotent_quotient(a, kill)?;
    let g = enumerate(&b, limit, par)?;
    if !g.complete {
        return Err(Error::Incomplete(g.nodes.len()));
    }
    Ok(g.nodes.iter().filter(|nd| nd.projective_part().is_empty()).count())
}

/// Route (b): enumerate every idempotent quotient.
pub fn strata_by_quotients<F: Field>(a: &FiniteDimAlgebra<F>, limit: usize, par: Parallelism) -> Result<StrataTable> {
    let n = a.num_vertices();
    let mut entries = BTreeMap::new();
    let mut total = 0;
    for mask in 0..1usize << n {
        let kill: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
        let t = stratum_by_quotient(a, &kill, limit, par)?;
        total += t;
        entries.insert(subset_labels(a, mask), t);
    }
    Ok(StrataTable { entries, total })
}

/// Strata computed both ways; an error if the two routes disagree.
pub fn strata_counts<F: Field>(a: &FiniteDimAlgebra<F>, limit: usize, par: Parallelism) -> Result<StrataTable> {
    let g = enumerate(a, limit, par)?;
    let from_graph = strata_from_graph(a, &g)?;
    let by_quotients = strata_by_quotients(a, limit, par)?;
    if from_graph != by_quotients {
        return Err(Error::Internal(format!("strata disagree: {from_graph:?} vs {by_quotients:?}")));
    }
    Ok(from_graph)
}

/// `a_s`: the number of support τ-tilting pairs whose module has support of size `s`, for `s <= max_rank`.
pub fn support_rank_counts<F: Field>(
    a: &FiniteDimAlgebra<F>,
    max_rank: usize,
    limit: usize,
    par: Parallelism,
) -> Result<Vec<usize>> {
    let n = a.num_vertices();
    let mut out = vec![0usize; max_rank.min(n) + 1];
    for mask in 0..1usize << n {
        let kill: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
        let s = n - kill.len();
        if s <= max_rank {
            out[s] += stratum_by_quotient(a, &kill, limit, par)?;
        }
    }
    Ok(out)
}

/// The subset 𝒩 for `P = e_v A`: pairs `N` over `A/soc P` with `P/soc P` a summand and `Hom_A(N, P) = 0`.
///
/// Returns the keys of the qualifying nodes of the quotient's exchange graph.
pub fn adachi_subset<F: Field>(a: &FiniteDimAlgebra<F>, v: usize, limit: usize, par: Parallelism) -> Result<Vec<Vec<GVector>>> {
    let soc = right_socle(a);
    let mut gens = Vec::new();
    let rows = 0..a.num_vertices();
    let mut ech = crate::linalg::Echelon::new(a.dim());
    for s in &soc.basis {
        let mut w = vec![F::zero(); a.dim()];
        for j in rows.clone() {
            for x in a.block_range(v, j) {
                w[x] = s[x].clone();
            }
        }
        if !crate::linalg::is_zero_vec(&w) && ech.insert(w.clone()) {
            gens.push(w);
        }
    }
    if gens.len() != 1 {
        return Err(Error::Unsupported(format!("soc P has dimension {}, not 1", gens.len())));
    }
    let ideal = ideal_generated_by(a, &gens);
    let q = quotient_by_ideal(a, &ideal)?;
    let g = enumerate(&q, limit, par)?;
    if !g.complete {
        return Err(Error::Incomplete(g.nodes.len()));
    }
    let n = a.num_vertices();
    let mut ev = vec![0i64; n];
    ev[v] = 1;
    let p = Representation::projective(a, v);
    let mut out = Vec::new();
    for (i, nd) in g.nodes.iter().enumerate() {
        if !nd.key.contains(&ev) {
            continue;
        }
        let t = TwoTermComplex::direct_sum(&q, &g.summands_of(i));
        let m = Representation::cokernel(&q, &t).restrict_from_quotient(a, &q)?;
        if hom_basis(a, &m, &p).is_empty() {
            out.push(nd.key.clone());
        }
    }
    Ok(out)
}

/// Outcome of the structural checks on a complete exchange graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub regular: bool,
    pub unique_source: bool,
    pub unique_sink: bool,
    pub unimodular: bool,
    pub involution_samples: usize,
    pub involution_ok: bool,
}

impl PropertyReport {
    pub fn all_ok(&self) -> bool {
        self.regular && self.unique_source && self.unique_sink && self.unimodular && self.involution_ok
    }
}

/// n-regularity, unique source and sink, unimodular g-matrices, and the exchange involution
/// checked by explicit re-mutation on `samples` seeded random `(node, summand)` pairs.
pub fn check_properties<F: Field>(a: &FiniteDimAlgebra<F>, g: &ExchangeGraph<F>, samples: usize) -> Result<PropertyReport> {
    if !g.complete {
        return Err(Error::Incomplete(g.nodes.len()));
    }
    let n = g.n;
    let regular = g.nodes.iter().enumerate().all(|(i, nd)| {
        let mut nb: Vec<usize> = nd.neighbors.iter().filter_map(|x| x.map(|(v, _)| v)).collect();
        nb.sort_unstable();
        nb.dedup();
        nb.len() == n && !nb.contains(&i)
    });
    let (ind, outd) = (g.in_degrees(), g.out_degrees());
    let sources: Vec<usize> = (0..g.nodes.len()).filter(|&i| ind[i] == 0).collect();
    let sinks: Vec<usize> = (0..g.nodes.len()).filter(|&i| outd[i] == 0).collect();
    let unique_source = sources == [0] && outd[0] == n;
    let unique_sink = sinks.len() == 1 && {
        let s = sinks[0];
        ind[s] == n && g.nodes[s].projective_part().len() == n
    };
    let unimodular = g.nodes.iter().all(|nd| {
        let det = int_det(&nd.key);
        det == 1.into() || det == (-1).into()
    });
    let mut rng = ChaCha8Rng::seed_from_u64(0x1c0);
    let total = g.nodes.len() * n;
    let mut involution_ok = true;
    let count = samples.min(total);
    for _ in 0..count {
        let (u, k) = (rng.gen_range(0..g.nodes.len()), rng.gen_range(0..n));
        let arcs: Vec<Arc<TwoTermComplex<F>>> = g.nodes[u].summands.iter().map(|&s| g.summands[s].clone()).collect();
        let src = crate::silting::LocalHoms::new(a, &arcs);
        let (dir, y) = mutate(a, &arcs, k, &src)?;
        let Some((v, d2)) = g.nodes[u].neighbors[k] else {
            involution_ok = false;
            break;
        };
        let y_g = y.g_vector(n);
        let mut back: Vec<Arc<TwoTermComplex<F>>> = arcs.clone();
        back[k] = Arc::new(y);
        let pos = k;
        let src2 = crate::silting::LocalHoms::new(a, &back);
        let Some(x) = mutate_in(a, &back, pos, dir.reverse(), &src2) else {
            involution_ok = false;
            break;
        };
        let mut key_v = g.nodes[u].key.clone();
        key_v[k] = y_g;
        key_v.sort();
        let ok = d2 == dir
            && g.nodes[v].key == key_v
            && find_isomorphism(a, &x, &arcs[k]).is_some()
            && is_two_term_silting(a, &back.iter().map(|s| &**s).collect::<Vec<_>>());
        if !ok {
            involution_ok = false;
            break;
        }
    }
    Ok(PropertyReport { regular, unique_source, unique_sink, unimodular, involution_samples: count, involution_ok })
}
