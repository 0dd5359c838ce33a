//! Recognition of simply-laced Dynkin and extended Dynkin graphs.

use std::collections::VecDeque;
use std::fmt;

use serde::Serialize;

use crate::algebra::presentation::Quiver;

/// An undirected multigraph on `0..n`; loops are edges `(v, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UnderlyingGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

/// Extended Dynkin types; the subscript is one less than the vertex count.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ExtendedType {
    A(usize),
    D(usize),
    E(usize),
}

/// An extended Dynkin subgraph: vertices and edges of the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub kind: ExtendedType,
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum GraphClass {
    Dynkin(DynkinType),
    ExtendedDynkin(ExtendedType),
    Other { witness: Option<Witness> },
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{n}"),
            DynkinType::D(n) => write!(f, "D{n}"),
            DynkinType::E(n) => write!(f, "E{n}"),
        }
    }
}

impl fmt::Display for ExtendedType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedType::A(n) => write!(f, "~A{n}"),
            ExtendedType::D(n) => write!(f, "~D{n}"),
            ExtendedType::E(n) => write!(f, "~E{n}"),
        }
    }
}

/// Hangs a path of `len` new vertices from `centre`.
fn arm(edges: &mut Vec<(usize, usize)>, centre: usize, next: &mut usize, len: usize) {
    let mut prev = centre;
    for _ in 0..len {
        edges.push((prev, *next));
        prev = *next;
        *next += 1;
    }
}

fn star(arms: &[usize]) -> UnderlyingGraph {
    let mut edges = Vec::new();
    let mut next = 1;
    for &l in arms {
        arm(&mut edges, 0, &mut next, l);
    }
    UnderlyingGraph { n: next, edges }
}

impl DynkinType {
    pub fn graph(self) -> UnderlyingGraph {
        match self {
            DynkinType::A(n) => UnderlyingGraph { n, edges: (1..n).map(|i| (i - 1, i)).collect() },
            DynkinType::D(n) => star(&[1, 1, n - 3]),
            DynkinType::E(n) => star(&[1, 2, n - 4]),
        }
    }
}

impl ExtendedType {
    pub fn graph(self) -> UnderlyingGraph {
        match self {
            ExtendedType::A(0) => UnderlyingGraph { n: 1, edges: vec![(0, 0)] },
            ExtendedType::A(n) => UnderlyingGraph { n: n + 1, edges: (0..=n).map(|i| (i, (i + 1) % (n + 1))).collect() },
            ExtendedType::D(4) => star(&[1, 1, 1, 1]),
            ExtendedType::D(n) => {
                // spine 0..=n-4 with two leaves at each end
                let spine = n - 3;
                let mut edges: Vec<(usize, usize)> = (1..spine).map(|i| (i - 1, i)).collect();
                edges.extend([(0, spine), (0, spine + 1), (spine - 1, spine + 2), (spine - 1, spine + 3)]);
                UnderlyingGraph { n: n + 1, edges }
            }
            ExtendedType::E(6) => star(&[2, 2, 2]),
            ExtendedType::E(7) => star(&[1, 3, 3]),
            ExtendedType::E(n) => star(&[1, 2, n - 3]),
        }
    }
}

impl UnderlyingGraph {
    pub fn from_quiver(q: &Quiver) -> Self {
        UnderlyingGraph { n: q.num_vertices(), edges: q.arrows.iter().map(|a| (a.src, a.tgt)).collect() }
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            if u != v {
                adj[v].push(u);
            }
        }
        adj
    }

    /// Degrees, with a loop counting twice.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }

    /// Connected components, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// The induced subgraph on `vs`, renumbered in the given order.
    pub fn induced(&self, vs: &[usize]) -> UnderlyingGraph {
        let pos = |x: usize| vs.iter().position(|&v| v == x);
        let edges = self.edges.iter().filter_map(|&(u, v)| Some((pos(u)?, pos(v)?))).collect();
        UnderlyingGraph { n: vs.len(), edges }
    }

    /// The subgraph of a witness, renumbered along `w.vertices`.
    pub fn witness_graph(w: &Witness) -> UnderlyingGraph {
        let pos = |x: usize| w.vertices.iter().position(|&v| v == x).expect("edge inside witness");
        UnderlyingGraph { n: w.vertices.len(), edges: w.edges.iter().map(|&(u, v)| (pos(u), pos(v))).collect() }
    }

    fn has_edge_multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| (a, b) == (u, v) || (b, a) == (u, v)).count()
    }

    /// Shortest path from `s` to `t` avoiding the edge with index `skip`.
    fn shortest_path(&self, s: usize, t: usize, skip: Option<usize>) -> Option<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for (k, &(u, v)) in self.edges.iter().enumerate() {
            if Some(k) != skip && u != v {
                adj[u].push(v);
                adj[v].push(u);
            }
        }
        let mut prev = vec![usize::MAX; self.n];
        prev[s] = s;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            if u == t {
                let mut path = vec![t];
                let mut x = t;
                while x != s {
                    x = prev[x];
                    path.push(x);
                }
                path.reverse();
                return Some(path);
            }
            for &v in &adj[u] {
                if prev[v] == usize::MAX {
                    prev[v] = u;
                    queue.push_back(v);
                }
            }
        }
        None
    }
}

/// The arms of a tree at `c`, each listed outward from `c`.
fn arms(adj: &[Vec<usize>], c: usize) -> Vec<Vec<usize>> {
    adj[c]
        .iter()
        .map(|&start| {
            let mut path = vec![start];
            let (mut prev, mut cur) = (c, start);
            while let Some(&nx) = adj[cur].iter().find(|&&x| x != prev) {
                path.push(nx);
                prev = cur;
                cur = nx;
            }
            path
        })
        .collect()
}

fn path_edges(vs: &[usize]) -> Vec<(usize, usize)> {
    vs.windows(2).map(|w| (w[0], w[1])).collect()
}

/// Classifies a connected multigraph, or a single component of a larger graph.
fn classify_connected(g: &UnderlyingGraph) -> GraphClass {
    let n = g.n;
    let m = g.edges.len();
    let deg = g.degrees();
    let loops = g.edges.iter().any(|&(u, v)| u == v);
    let simple = !loops && g.edges.iter().all(|&(u, v)| g.has_edge_multiplicity(u, v) == 1);
    if n == 1 && m == 1 && loops {
        return GraphClass::ExtendedDynkin(ExtendedType::A(0));
    }
    if n == 2 && m == 2 && !loops {
        return GraphClass::ExtendedDynkin(ExtendedType::A(1));
    }
    if simple && m == n && n >= 3 && deg.iter().all(|&d| d == 2) {
        return GraphClass::ExtendedDynkin(ExtendedType::A(n - 1));
    }
    if simple && m + 1 == n {
        let adj = g.adjacency();
        let branch: Vec<usize> = (0..n).filter(|&v| deg[v] >= 3).collect();
        match branch.as_slice() {
            [] => return GraphClass::Dynkin(DynkinType::A(n)),
            [c] if deg[*c] == 3 => {
                let mut l: Vec<usize> = arms(&adj, *c).iter().map(Vec::len).collect();
                l.sort_unstable();
                match (l[0], l[1], l[2]) {
                    (1, 1, _) => return GraphClass::Dynkin(DynkinType::D(n)),
                    (1, 2, 2..=4) => return GraphClass::Dynkin(DynkinType::E(n)),
                    (2, 2, 2) => return GraphClass::ExtendedDynkin(ExtendedType::E(6)),
                    (1, 3, 3) => return GraphClass::ExtendedDynkin(ExtendedType::E(7)),
                    (1, 2, 5) => return GraphClass::ExtendedDynkin(ExtendedType::E(8)),
                    _ => {}
                }
            }
            [c] if deg[*c] == 4 && n == 5 => return GraphClass::ExtendedDynkin(ExtendedType::D(4)),
            [u, v] if deg[*u] == 3 && deg[*v] == 3 => {
                let leaves = |c: usize| adj[c].iter().filter(|&&x| deg[x] == 1).count();
                if leaves(*u) == 2 && leaves(*v) == 2 {
                    return GraphClass::ExtendedDynkin(ExtendedType::D(n - 1));
                }
            }
            _ => {}
        }
    }
    GraphClass::Other { witness: find_witness(g) }
}

/// An extended Dynkin subgraph of a connected graph, if one exists.
fn find_witness(g: &UnderlyingGraph) -> Option<Witness> {
    if let Some(&(v, _)) = g.edges.iter().find(|&&(u, v)| u == v) {
        return Some(Witness { kind: ExtendedType::A(0), vertices: vec![v], edges: vec![(v, v)] });
    }
    if let Some(&(u, v)) = g.edges.iter().find(|&&(u, v)| g.has_edge_multiplicity(u, v) > 1) {
        return Some(Witness { kind: ExtendedType::A(1), vertices: vec![u, v], edges: vec![(u, v), (u, v)] });
    }
    let mut best: Option<Vec<usize>> = None;
    for (k, &(u, v)) in g.edges.iter().enumerate() {
        if let Some(p) = g.shortest_path(v, u, Some(k)) {
            if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                best = Some(p);
            }
        }
    }
    if let Some(cyc) = best {
        let mut edges = path_edges(&cyc);
        edges.push((cyc[cyc.len() - 1], cyc[0]));
        return Some(Witness { kind: ExtendedType::A(cyc.len() - 1), vertices: cyc, edges });
    }
    // a tree from here on
    let adj = g.adjacency();
    let deg = g.degrees();
    if let Some(c) = (0..g.n).find(|&v| deg[v] >= 4) {
        let nb: Vec<usize> = adj[c][..4].to_vec();
        let mut vertices = vec![c];
        vertices.extend(&nb);
        return Some(Witness { kind: ExtendedType::D(4), vertices, edges: nb.iter().map(|&x| (c, x)).collect() });
    }
    let branch: Vec<usize> = (0..g.n).filter(|&v| deg[v] == 3).collect();
    if branch.len() >= 2 {
        let mut best: Option<Vec<usize>> = None;
        for (i, &u) in branch.iter().enumerate() {
            for &v in &branch[i + 1..] {
                let p = g.shortest_path(u, v, None).expect("connected");
                if best.as_ref().is_none_or(|b| p.len() < b.len()) {
                    best = Some(p);
                }
            }
        }
        let path = best.expect("two branch vertices");
        let (u, v) = (path[0], path[path.len() - 1]);
        let mut vertices = path.clone();
        let mut edges = path_edges(&path);
        for (end, inner) in [(u, path[1]), (v, path[path.len() - 2])] {
            for &x in adj[end].iter().filter(|&&x| x != inner).take(2) {
                vertices.push(x);
                edges.push((end, x));
            }
        }
        let kind = ExtendedType::D(vertices.len() - 1);
        return Some(Witness { kind, vertices, edges });
    }
    let &[c] = branch.as_slice() else { return None };
    let mut a = arms(&adj, c);
    a.sort_by_key(Vec::len);
    let take: [usize; 3] = match (a[0].len(), a[1].len(), a[2].len()) {
        (p, _, _) if p >= 2 => [2, 2, 2],
        (1, q, _) if q >= 3 => [1, 3, 3],
        (1, 2, r) if r >= 5 => [1, 2, 5],
        _ => return None,
    };
    let kind = match take {
        [2, 2, 2] => ExtendedType::E(6),
        [1, 3, 3] => ExtendedType::E(7),
        _ => ExtendedType::E(8),
    };
    let mut vertices = vec![c];
    let mut edges = Vec::new();
    for (arm, &l) in a.iter().zip(&take) {
        let mut prev = c;
        for &x in &arm[..l] {
            vertices.push(x);
            edges.push((prev, x));
            prev = x;
        }
    }
    Some(Witness { kind, vertices, edges })
}

/// Dynkin or extended Dynkin type of a connected graph; otherwise `Other`,
/// with an extended Dynkin subgraph when one exists.
///
/// A disconnected graph is `Other`; its witness comes from the first
/// component that is not Dynkin.
pub fn classify_graph(g: &UnderlyingGraph) -> GraphClass {
    if g.n == 0 {
        return GraphClass::Other { witness: None };
    }
    let comps = g.components();
    if comps.len() == 1 {
        return classify_connected(g);
    }
    for comp in comps {
        let sub = g.induced(&comp);
        let w = match classify_connected(&sub) {
            GraphClass::Dynkin(_) => None,
            GraphClass::ExtendedDynkin(kind) => {
                Some(Witness { kind, vertices: (0..sub.n).collect(), edges: sub.edges.clone() })
            }
            GraphClass::Other { witness } => witness,
        };
        if let Some(w) = w {
            let back = |x: usize| comp[x];
            return GraphClass::Other {
                witness: Some(Witness {
                    kind: w.kind,
                    vertices: w.vertices.iter().map(|&x| back(x)).collect(),
                    edges: w.edges.iter().map(|&(u, v)| (back(u), back(v))).collect(),
                }),
            };
        }
    }
    GraphClass::Other { witness: None }
}
