//! Domination predicates and constructors.
//!
//! The coverage radius of `D` is the largest distance from an outside vertex
//! to its nearest member of `D`; `D` is k-dominating iff that radius is at
//! most `k`. A set is less dispersive when every member is strictly more
//! central inside the induced subgraph `<D>` than in the whole graph.

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, Graph, Hops, Network, Vertex, VertexSet};

/// Largest distance from a vertex outside `set` to the set. `Finite(0)` when
/// `set` covers every vertex.
pub fn coverage_radius(dm: &DistanceMatrix, set: &VertexSet) -> Result<Hops> {
    check_set(dm.n(), set)?;
    let mask = set.mask(dm.n());
    let mut radius = Hops::Finite(0);
    for u in (0..dm.n()).filter(|&u| !mask[u]) {
        let nearest = set.iter().map(|d| dm.get(u, d)).min().unwrap();
        radius = radius.max(nearest);
        if radius == Hops::Unreachable {
            break;
        }
    }
    Ok(radius)
}

pub fn is_k_dominating(dm: &DistanceMatrix, set: &VertexSet, k: u32) -> Result<bool> {
    if k < 1 {
        return Err(Error::param("k must be at least 1"));
    }
    Ok(coverage_radius(dm, set)? <= Hops::Finite(k))
}

fn check_set(n: usize, set: &VertexSet) -> Result<()> {
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    match set.last() {
        Some(v) if v >= n => Err(Error::InvalidVertex { vertex: v, n }),
        _ => Ok(()),
    }
}

/// A member whose eccentricity inside the team is not strictly below its
/// eccentricity in the graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub vertex: Vertex,
    pub ecc_in_team: Hops,
    pub ecc_in_graph: Hops,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SetEvidence {
    pub subject: VertexSet,
    pub coverage_radius: Hops,
    pub induced_connected: bool,
    pub dispersive_violations: Vec<Violation>,
}

impl SetEvidence {
    pub fn is_less_dispersive(&self) -> bool {
        self.dispersive_violations.is_empty()
    }
}

/// Evaluates the less-dispersive condition for `set`, with the coverage and
/// connectivity facts alongside.
pub fn is_less_dispersive(net: &Network, set: &VertexSet) -> Result<SetEvidence> {
    check_set(net.n(), set)?;
    let team = team_eccentricities(net.graph(), set)?;
    let dispersive_violations = set
        .iter()
        .zip(&team)
        .filter(|&(v, &t)| t >= net.ecc(v))
        .map(|(v, &t)| Violation {
            vertex: v,
            ecc_in_team: t,
            ecc_in_graph: net.ecc(v),
        })
        .collect();
    Ok(SetEvidence {
        subject: set.clone(),
        coverage_radius: coverage_radius(net.distances(), set)?,
        induced_connected: team.iter().all(|t| t.is_finite()),
        dispersive_violations,
    })
}

/// Eccentricity of each member (in ascending id order) within `<set>`.
pub fn team_eccentricities(g: &Graph, set: &VertexSet) -> Result<Vec<Hops>> {
    check_set(g.n(), set)?;
    let mask = set.mask(g.n());
    let mut scratch = InducedBfs::new(g.n());
    Ok(set
        .iter()
        .map(|v| scratch.eccentricity(g, &mask, set.len(), v, None).0)
        .collect())
}

pub fn is_induced_connected(g: &Graph, set: &VertexSet) -> bool {
    match set.first() {
        None => false,
        Some(v) => {
            let mask = set.mask(g.n());
            InducedBfs::new(g.n())
                .eccentricity(g, &mask, set.len(), v, None)
                .0
                .is_finite()
        }
    }
}

/// Number of members violating the less-dispersive condition. Each BFS stops
/// as soon as the member's graph eccentricity is reached inside the team.
pub(crate) fn violation_count(net: &Network, set: &VertexSet) -> usize {
    violation_count_below(net, set, usize::MAX).expect("count is below usize::MAX")
}

/// Like [`violation_count`], but gives up with `None` once `bound`
/// violations have been seen.
pub(crate) fn violation_count_below(net: &Network, set: &VertexSet, bound: usize) -> Option<usize> {
    let mask = set.mask(net.n());
    let mut scratch = InducedBfs::new(net.n());
    let mut count = 0;
    for v in set.iter() {
        let cap = net.ecc(v).finite();
        let (team, _) = scratch.eccentricity(net.graph(), &mask, set.len(), v, cap);
        if team >= net.ecc(v) {
            count += 1;
            if count >= bound {
                return None;
            }
        }
    }
    Some(count)
}

pub(crate) fn satisfies_condition(net: &Network, set: &VertexSet) -> bool {
    !set.is_empty() && violation_count(net, set) == 0
}

/// Reusable BFS buffers for searches confined to a vertex mask.
pub(crate) struct InducedBfs {
    dist: Vec<u32>,
    queue: Vec<Vertex>,
}

impl InducedBfs {
    pub(crate) fn new(n: usize) -> Self {
        Self {
            dist: vec![u32::MAX; n],
            queue: Vec::with_capacity(n),
        }
    }

    /// Eccentricity of `src` inside the masked subgraph of `size` vertices,
    /// `Unreachable` if some masked vertex is not reached. With `cap`, the
    /// search stops once depth `cap` is reached and reports `Finite(cap)`.
    /// Also returns the number of vertices reached.
    pub(crate) fn eccentricity(
        &mut self,
        g: &Graph,
        mask: &[bool],
        size: usize,
        src: Vertex,
        cap: Option<u32>,
    ) -> (Hops, usize) {
        self.queue.clear();
        self.dist[src] = 0;
        self.queue.push(src);
        let mut head = 0;
        let mut depth = 0;
        let mut capped = false;
        'bfs: while head < self.queue.len() {
            let u = self.queue[head];
            head += 1;
            let d = self.dist[u];
            for &w in g.neighbors(u) {
                if mask[w] && self.dist[w] == u32::MAX {
                    self.dist[w] = d + 1;
                    depth = d + 1;
                    self.queue.push(w);
                    if cap == Some(depth) {
                        capped = true;
                        break 'bfs;
                    }
                }
            }
        }
        let reached = self.queue.len();
        for &v in &self.queue {
            self.dist[v] = u32::MAX;
        }
        let ecc = if capped {
            Hops::Finite(depth)
        } else if reached < size {
            Hops::Unreachable
        } else {
            Hops::Finite(depth)
        };
        (ecc, reached)
    }
}

/// Components of `<set>`, ordered by smallest member.
pub(crate) fn induced_components(g: &Graph, set: &VertexSet) -> Vec<VertexSet> {
    let mask = set.mask(g.n());
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for root in set {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut stack = vec![root];
        let mut comp = Vec::new();
        while let Some(u) = stack.pop() {
            comp.push(u);
            for &w in g.neighbors(u) {
                if mask[w] && !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        out.push(VertexSet::from(comp));
    }
    out
}

/// A connected dominating set together with how it was assembled.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdsConstruction {
    pub set: VertexSet,
    /// Vertices in the order the greedy growth added them.
    pub grown: Vec<Vertex>,
    /// Vertices dropped by the pruning pass, in removal order.
    pub pruned: Vec<Vertex>,
    /// Path vertices added to reconnect the set in the base graph.
    pub stitched: Vec<Vertex>,
}

pub fn greedy_connected_dominating_set(g: &Graph) -> Result<VertexSet> {
    greedy_cds_construction(g).map(|c| c.set)
}

/// Greedy growth from a maximum-degree vertex: repeatedly add the frontier
/// vertex whose closed neighborhood covers the most uncovered vertices (ties
/// to the smaller id), then drop members in descending id order whenever the
/// rest stays connected and dominating.
pub fn greedy_cds_construction(g: &Graph) -> Result<CdsConstruction> {
    let n = g.n();
    if n == 0 {
        return Err(Error::param("graph has no vertices"));
    }
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let seed = (0..n).max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();

    let mut in_set = vec![false; n];
    let mut covered = vec![false; n];
    let mut uncovered = n;
    let mut grown = Vec::new();
    let mut add = |v: Vertex, in_set: &mut [bool], covered: &mut [bool], uncovered: &mut usize| {
        in_set[v] = true;
        for w in std::iter::once(v).chain(g.neighbors(v).iter().copied()) {
            if !covered[w] {
                covered[w] = true;
                *uncovered -= 1;
            }
        }
        grown.push(v);
    };
    add(seed, &mut in_set, &mut covered, &mut uncovered);

    while uncovered > 0 {
        let mut best: Option<(usize, Vertex)> = None;
        for f in (0..n).filter(|&f| covered[f] && !in_set[f]) {
            let gain = g.neighbors(f).iter().filter(|&&w| !covered[w]).count();
            if best.is_none_or(|(b, _)| gain > b) {
                best = Some((gain, f));
            }
        }
        // A connected graph with uncovered vertices always has a frontier
        // vertex adjacent to one of them.
        let (_, f) = best.expect("frontier cannot be empty in a connected graph");
        add(f, &mut in_set, &mut covered, &mut uncovered);
    }

    let mut set: VertexSet = (0..n).filter(|&v| in_set[v]).collect();
    let mut pruned = Vec::new();
    let members: Vec<Vertex> = set.iter().rev().collect();
    for v in members {
        if set.len() == 1 {
            break;
        }
        let candidate = set.without(v);
        if is_dominating(g, &candidate) && is_induced_connected(g, &candidate) {
            set = candidate;
            pruned.push(v);
        }
    }
    Ok(CdsConstruction {
        set,
        grown,
        pruned,
        stitched: Vec::new(),
    })
}

fn is_dominating(g: &Graph, set: &VertexSet) -> bool {
    let mask = set.mask(g.n());
    (0..g.n()).all(|u| mask[u] || g.neighbors(u).iter().any(|&w| mask[w]))
}

pub fn connected_k_dominating_set(net: &Network, k: u32) -> Result<VertexSet> {
    connected_k_dominating_construction(net, k).map(|c| c.set)
}

/// Greedy connected dominating set of `G^k`, made connected in `G` by adding
/// the interior of a shortest path from the first component (by smallest
/// member) to the second, repeated until one component remains.
pub fn connected_k_dominating_construction(net: &Network, k: u32) -> Result<CdsConstruction> {
    let g = net.graph();
    if g.n() == 0 {
        return Err(Error::param("graph has no vertices"));
    }
    let diam = net.diameter().ok_or(Error::NotConnected)?;
    if k < 1 || k > diam {
        return Err(Error::param(format!("k = {k} outside 1..={diam}")));
    }
    let mut built = greedy_cds_construction(&g.power(k)?)?;
    loop {
        let comps = induced_components(g, &built.set);
        if comps.len() <= 1 {
            break;
        }
        for v in shortest_bridge(g, &comps[0], &comps[1]) {
            if built.set.insert(v) {
                built.stitched.push(v);
            }
        }
    }
    Ok(built)
}

/// Interior vertices of a shortest path from `from` to `to`.
fn shortest_bridge(g: &Graph, from: &VertexSet, to: &VertexSet) -> Vec<Vertex> {
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::new();
    for s in from {
        parent[s] = s;
        queue.push_back(s);
    }
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if parent[w] != usize::MAX {
                continue;
            }
            parent[w] = u;
            if to.contains(w) {
                let mut path = Vec::new();
                let mut x = u;
                while !from.contains(x) {
                    path.push(x);
                    x = parent[x];
                }
                path.reverse();
                return path;
            }
            queue.push_back(w);
        }
    }
    Vec::new()
}
