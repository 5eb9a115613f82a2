use ccteam::graph::edgelist::EdgeList;
use ccteam::{Graph, Result};

/// A graph on dense ids together with the label each id came from.
pub struct Labeled {
    pub graph: Graph,
    pub labels: Vec<u64>,
}

/// With an `n` header the ids are used as they are, so isolated vertices
/// survive. Without one, the labels that occur are numbered in ascending
/// order.
pub fn from_edgelist(el: &EdgeList) -> Result<Labeled> {
    if let Some(n) = el.declared_n {
        let graph = el.to_graph()?;
        return Ok(Labeled {
            graph,
            labels: (0..n).collect(),
        });
    }
    let mut labels: Vec<u64> = el.edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    labels.sort_unstable();
    labels.dedup();
    let id = |x: u64| labels.binary_search(&x).expect("label collected above");
    let edges: Vec<_> = el.edges.iter().map(|&(u, v)| (id(u), id(v))).collect();
    let graph = Graph::new(labels.len(), edges)?;
    Ok(Labeled { graph, labels })
}
