//! DOT and JSON renderings of exchange graphs.

use std::fmt::Write;

use serde::Serialize;

use crate::algebra::fdalg::FiniteDimAlgebra;
use crate::enumerate::ExchangeGraph;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::rep::Representation;
use crate::silting::{GVector, TwoTermComplex};

/// Sorted g-vectors joined by `_`, entries separated by commas.
pub fn node_id(key: &[GVector]) -> String {
    key.iter()
        .map(|g| g.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
        .collect::<Vec<_>>()
        .join("_")
}

/// Node indices in key order, and edges as sorted pairs of positions in that order.
fn canonical_order<F: Field>(g: &ExchangeGraph<F>) -> (Vec<usize>, Vec<(usize, usize)>) {
    let mut order: Vec<usize> = (0..g.nodes.len()).collect();
    order.sort_by(|&x, &y| g.nodes[x].key.cmp(&g.nodes[y].key));
    let mut rank = vec![0; order.len()];
    for (p, &i) in order.iter().enumerate() {
        rank[i] = p;
    }
    let mut edges: Vec<(usize, usize)> = g.edges.iter().map(|&(s, t)| (rank[s], rank[t])).collect();
    edges.sort_unstable();
    (order, edges)
}

pub fn to_dot<F: Field>(a: &FiniteDimAlgebra<F>, g: &ExchangeGraph<F>) -> String {
    let (order, edges) = canonical_order(g);
    let ids: Vec<String> = order.iter().map(|&i| node_id(&g.nodes[i].key)).collect();
    let mut s = String::new();
    writeln!(s, "digraph \"{}\" {{", a.name()).expect("write to string");
    for id in &ids {
        writeln!(s, "  \"{id}\";").expect("write to string");
    }
    for (u, v) in edges {
        writeln!(s, "  \"{}\" -> \"{}\";", ids[u], ids[v]).expect("write to string");
    }
    s.push_str("}\n");
    s
}

#[derive(Serialize)]
struct JsonNode {
    g_matrix: Vec<GVector>,
    support: Vec<i64>,
    dims: Vec<usize>,
}

#[derive(Serialize)]
struct JsonGraph {
    algebra: String,
    dimension: usize,
    cartan: Vec<Vec<i64>>,
    complete: bool,
    count: usize,
    nodes: Vec<JsonNode>,
    edges: Vec<[String; 2]>,
}

/// The schema `{algebra, dimension, cartan, complete, count, nodes, edges}`;
/// `dims` is the dimension vector of `H^0` and `support` its support.
pub fn to_json<F: Field>(a: &FiniteDimAlgebra<F>, g: &ExchangeGraph<F>) -> Result<String> {
    let (order, edges) = canonical_order(g);
    let ids: Vec<String> = order.iter().map(|&i| node_id(&g.nodes[i].key)).collect();
    let nodes = order
        .iter()
        .map(|&i| {
            let t = TwoTermComplex::direct_sum(a, &g.summands_of(i));
            let m = Representation::cokernel(a, &t);
            let dims = m.dims().to_vec();
            let support = (0..dims.len()).filter(|&v| dims[v] > 0).map(|v| a.vertex_labels()[v]).collect();
            JsonNode { g_matrix: g.nodes[i].key.clone(), support, dims }
        })
        .collect();
    let doc = JsonGraph {
        algebra: a.name().to_string(),
        dimension: a.dim(),
        cartan: a.cartan_matrix(),
        complete: g.complete,
        count: g.nodes.len(),
        nodes,
        edges: edges.into_iter().map(|(u, v)| [ids[u].clone(), ids[v].clone()]).collect(),
    };
    serde_json::to_string_pretty(&doc).map_err(|e| Error::Internal(e.to_string()))
}
