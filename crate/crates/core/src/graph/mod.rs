//! Simple undirected graphs over dense `0..n` vertex ids, with the BFS-based
//! analytics everything else is built on: layers, components, induced
//! subgraphs, graph powers, all-pairs hop distances and eccentricities.

mod distance;
pub mod edgelist;
mod profile;
mod vertex_set;

use std::collections::VecDeque;

pub use distance::{all_pairs_distances, DistanceMatrix, Hops};
pub use profile::{eccentricity_profile, EccentricityProfile};
pub use vertex_set::VertexSet;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Immutable simple undirected graph in compressed adjacency form.
///
/// Neighbor lists are sorted ascending. There are no self-loops and no
/// parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either orientation)
    /// collapse to one; self-loops and out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut pairs = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidEdge(u, v));
            }
            pairs.push((u, v));
            pairs.push((v, u));
        }
        pairs.sort_unstable();
        pairs.dedup();

        let mut offsets = vec![0; n + 1];
        for &(u, _) in &pairs {
            offsets[u + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = pairs.into_iter().map(|(_, v)| v).collect();
        Ok(Self { offsets, targets })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n() && v < self.n() && self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex { vertex: v, n: self.n() })
        }
    }

    /// BFS layers `N_0(src), N_1(src), ...` restricted to the component of
    /// `src`. Each layer is sorted ascending.
    pub fn bfs_layers(&self, src: Vertex) -> Result<Vec<VertexSet>> {
        self.check_vertex(src)?;
        let mut dist = vec![usize::MAX; self.n()];
        dist[src] = 0;
        let mut layers = vec![vec![src]];
        loop {
            let mut next = Vec::new();
            for &u in layers.last().unwrap() {
                for &w in self.neighbors(u) {
                    if dist[w] == usize::MAX {
                        dist[w] = layers.len();
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }
        Ok(layers.into_iter().map(VertexSet::from).collect())
    }

    /// Hop distances from `src`; `None` for vertices in other components.
    pub fn bfs_distances(&self, src: Vertex) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::new();
        dist[src] = Some(0);
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap() + 1;
            for &w in self.neighbors(u) {
                if dist[w].is_none() {
                    dist[w] = Some(d);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Components ordered by their smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            out.push(VertexSet::from(comp));
        }
        out
    }

    /// The empty graph counts as disconnected.
    pub fn is_connected(&self) -> bool {
        self.n() > 0 && self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Subgraph induced by `set`, relabelled to `0..set.len()` in ascending
    /// original-id order. The returned mapping sends new ids to original ids.
    pub fn induced_subgraph(&self, set: &VertexSet) -> Result<(Graph, Vec<Vertex>)> {
        for v in set {
            self.check_vertex(v)?;
        }
        let mapping: Vec<Vertex> = set.iter().collect();
        let mut local = vec![usize::MAX; self.n()];
        for (i, &v) in mapping.iter().enumerate() {
            local[v] = i;
        }
        let edges = mapping.iter().enumerate().flat_map(|(i, &v)| {
            let local = &local;
            self.neighbors(v)
                .iter()
                .filter_map(move |&w| (local[w] != usize::MAX && i < local[w]).then(|| (i, local[w])))
        });
        let sub = Graph::new(mapping.len(), edges.collect::<Vec<_>>())?;
        Ok((sub, mapping))
    }

    /// `G^k`: same vertices, `u ~ v` whenever `1 <= d(u, v) <= k`.
    pub fn power(&self, k: u32) -> Result<Graph> {
        if k < 1 {
            return Err(Error::param("graph power requires k >= 1"));
        }
        let n = self.n();
        let mut edges = Vec::new();
        let mut dist = vec![u32::MAX; n];
        let mut queue = VecDeque::new();
        for src in 0..n {
            let mut touched = vec![src];
            dist[src] = 0;
            queue.push_back(src);
            while let Some(u) = queue.pop_front() {
                if dist[u] == k {
                    continue;
                }
                for &w in self.neighbors(u) {
                    if dist[w] == u32::MAX {
                        dist[w] = dist[u] + 1;
                        touched.push(w);
                        queue.push_back(w);
                        if src < w {
                            edges.push((src, w));
                        }
                    }
                }
            }
            for v in touched {
                dist[v] = u32::MAX;
            }
        }
        Graph::new(n, edges)
    }
}

/// A graph together with its all-pairs distances and eccentricity profile.
///
/// Every team algorithm needs `e_G(v)` for arbitrary members, so this is the
/// unit the algorithms consume.
#[derive(Clone, Debug)]
pub struct Network {
    graph: Graph,
    distances: DistanceMatrix,
    profile: EccentricityProfile,
}

impl Network {
    pub fn new(graph: Graph) -> Self {
        let distances = all_pairs_distances(&graph);
        let profile = eccentricity_profile(&distances);
        Self {
            graph,
            distances,
            profile,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn distances(&self) -> &DistanceMatrix {
        &self.distances
    }

    pub fn profile(&self) -> &EccentricityProfile {
        &self.profile
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn ecc(&self, v: Vertex) -> Hops {
        self.profile.ecc[v]
    }

    /// Diameter as a number; `None` when disconnected or empty.
    pub fn diameter(&self) -> Option<u32> {
        self.profile.diameter.finite()
    }

    pub fn radius(&self) -> Option<u32> {
        self.profile.radius.finite()
    }
}
