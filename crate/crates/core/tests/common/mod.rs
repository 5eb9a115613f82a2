#![allow(dead_code)]

use ccteam::{Graph, VertexSet};
use proptest::prelude::*;

pub const INF: u32 = u32::MAX;

/// Any simple graph on `lo..=hi` vertices, connected or not.
pub fn any_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        (Just(n), 0.0..1.0f64, proptest::collection::vec(0.0..1.0f64, pairs))
    })
    .prop_map(|(n, p, coins)| {
        let mut edges = Vec::new();
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if coins[i] < p {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        Graph::new(n, edges).unwrap()
    })
}

/// Connected graphs: a random recursive tree plus extra random edges.
pub fn connected_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo.max(1)..=hi).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (
            Just(n),
            proptest::collection::vec(any::<u64>(), n),
            0.0..0.5f64,
            proptest::collection::vec(0.0..1.0f64, pairs),
        )
    })
    .prop_map(|(n, parents, p, coins)| {
        let mut edges: Vec<(usize, usize)> = (1..n).map(|v| ((parents[v] % v as u64) as usize, v)).collect();
        let mut i = 0;
        for u in 0..n {
            for v in u + 1..n {
                if coins[i] < p * p {
                    edges.push((u, v));
                }
                i += 1;
            }
        }
        Graph::new(n, edges).unwrap()
    })
}

pub fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for &v in g.neighbors(u) {
            d[u][v] = 1;
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if d[u][w] != INF && d[w][v] != INF && d[u][w] + d[w][v] < d[u][v] {
                    d[u][v] = d[u][w] + d[w][v];
                }
            }
        }
    }
    d
}

/// Eccentricities from a Floyd–Warshall matrix; `INF` when disconnected.
pub fn ecc(d: &[Vec<u32>]) -> Vec<u32> {
    d.iter().map(|row| *row.iter().max().unwrap()).collect()
}

/// The less-dispersive condition evaluated from scratch on the induced subgraph.
pub fn reference_less_dispersive(g: &Graph, set: &VertexSet) -> bool {
    let full = ecc(&floyd_warshall(g));
    let (sub, ids) = g.induced_subgraph(set).unwrap();
    let inner = ecc(&floyd_warshall(&sub));
    ids.iter().zip(&inner).all(|(&v, &e)| e < full[v])
}

pub fn reference_coverage(g: &Graph, set: &VertexSet) -> u32 {
    let d = floyd_warshall(g);
    (0..g.n())
        .filter(|&u| !set.contains(u))
        .map(|u| set.iter().map(|s| d[u][s]).min().unwrap())
        .max()
        .unwrap_or(0)
}
