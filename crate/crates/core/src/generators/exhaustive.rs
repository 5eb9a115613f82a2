//! Every graph on a handful of vertices, one representative per isomorphism
//! class.
//!
//! Graphs on `n` vertices are produced by attaching a new vertex to every
//! representative on `n - 1` vertices in every possible way, then keeping
//! canonical forms. The canonical form is the smallest adjacency bit code
//! over all vertex orders compatible with colour refinement; since the
//! refined colour classes are ordered by an isomorphism-invariant signature,
//! isomorphic graphs get the same code.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_N: usize = 9;

type Code = u64;

fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

fn decode(n: usize, code: Code) -> Vec<u16> {
    let mut adj = vec![0u16; n];
    for j in 1..n {
        for i in 0..j {
            if code >> pair_index(i, j) & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    adj
}

fn refine(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    let mut colors: Vec<usize> = adj.iter().map(|a| a.count_ones() as usize).collect();
    let mut classes = 0;
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = (0..n).filter(|&w| adj[v] >> w & 1 == 1).map(|w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut distinct: Vec<_> = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let rank: HashMap<_, _> = distinct.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect();
        colors = signatures.iter().map(|s| rank[s]).collect();
        if distinct.len() == classes {
            return colors;
        }
        classes = distinct.len();
    }
}

fn canonical(adj: &[u16]) -> Code {
    let n = adj.len();
    let colors = refine(adj);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], v));
    let mut bounds = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || colors[order[i]] != colors[order[start]] {
            bounds.push((start, i));
            start = i;
        }
    }
    let mut best = Code::MAX;
    permute_classes(adj, &mut order, &bounds, 0, &mut best);
    best
}

fn code_of(adj: &[u16], order: &[usize]) -> Code {
    let mut code = 0;
    for j in 1..order.len() {
        for i in 0..j {
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1 << pair_index(i, j);
            }
        }
    }
    code
}

fn permute_classes(adj: &[u16], order: &mut [usize], bounds: &[(usize, usize)], class: usize, best: &mut Code) {
    if class == bounds.len() {
        *best = (*best).min(code_of(adj, order));
        return;
    }
    let (lo, hi) = bounds[class];
    permute_range(adj, order, bounds, class, lo, hi, best);
}

fn permute_range(
    adj: &[u16],
    order: &mut [usize],
    bounds: &[(usize, usize)],
    class: usize,
    pos: usize,
    hi: usize,
    best: &mut Code,
) {
    if pos + 1 >= hi {
        permute_classes(adj, order, bounds, class + 1, best);
        return;
    }
    for i in pos..hi {
        order.swap(pos, i);
        permute_range(adj, order, bounds, class, pos + 1, hi, best);
        order.swap(pos, i);
    }
}

fn to_graph(n: usize, code: Code) -> Graph {
    let edges = (1..n).flat_map(|j| (0..j).map(move |i| (i, j)));
    let edges: Vec<_> = edges.filter(|&(i, j)| code >> pair_index(i, j) & 1 == 1).collect();
    Graph::new(n, edges).expect("decoded codes are simple graphs")
}

/// Canonical codes of all graphs on `n` vertices, ascending.
fn codes(n: usize) -> Vec<Code> {
    let mut level: Vec<Code> = vec![0];
    for size in 2..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = decode(size - 1, code);
            for attach in 0u16..(1 << (size - 1)) {
                let mut adj = base.clone();
                adj.push(attach);
                for (v, a) in adj.iter_mut().enumerate().take(size - 1) {
                    if attach >> v & 1 == 1 {
                        *a |= 1 << (size - 1);
                    }
                }
                next.insert(canonical(&adj));
            }
        }
        level = next.into_iter().collect();
    }
    level
}

fn check(n: usize) -> Result<()> {
    if n == 0 || n > MAX_N {
        Err(Error::param(format!("exhaustive enumeration supports 1..={MAX_N} vertices, got {n}")))
    } else {
        Ok(())
    }
}

/// All graphs on `n` vertices up to isomorphism.
pub fn all_graphs(n: usize) -> Result<Vec<Graph>> {
    check(n)?;
    Ok(codes(n).into_iter().map(|c| to_graph(n, c)).collect())
}

/// All connected graphs on `n` vertices up to isomorphism, in ascending
/// canonical-code order.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(all_graphs(n)?.into_iter().filter(Graph::is_connected).collect())
}
