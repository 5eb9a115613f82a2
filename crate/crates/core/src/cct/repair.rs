use crate::domination::{violation_count, violation_count_below};
use crate::error::{Error, Result};
use crate::graph::{Network, Vertex, VertexSet};

use super::team::{Step, TraceStep};

/// Shrinks `set` until it is less dispersive, keeping `seed`.
///
/// Members are grouped by BFS distance from `seed` inside `<set>`, and layers
/// are processed outermost first (members unreachable from `seed` form the
/// outermost layer). Within a layer the single removal that leaves the fewest
/// violating members is taken, ties to the smaller id, as long as it strictly
/// lowers the violation count. When no removal in the layer helps, the rest of
/// the layer goes. Removing outermost vertices never disconnects the
/// remainder, and `{seed}` alone is less dispersive in any connected graph
/// with at least two vertices.
pub fn repair_less_dispersive(net: &Network, set: &VertexSet, seed: Vertex) -> Result<VertexSet> {
    let mut trace = Vec::new();
    repair_traced(net, set, seed, &mut trace)
}

pub(crate) fn repair_traced(
    net: &Network,
    set: &VertexSet,
    seed: Vertex,
    trace: &mut Vec<TraceStep>,
) -> Result<VertexSet> {
    if let Some(v) = set.last().filter(|&v| v >= net.n()) {
        return Err(Error::InvalidVertex { vertex: v, n: net.n() });
    }
    if !set.contains(seed) {
        return Err(Error::param(format!("seed {seed} is not a member of the set")));
    }

    let mut current = set.clone();
    let mut violations = violation_count(net, &current);
    for layer in layers_from(net, set, seed).into_iter().skip(1).rev() {
        if violations == 0 {
            break;
        }
        let mut remaining = layer;
        while violations > 0 {
            // Ascending ids, so a later candidate must be strictly better.
            let mut best: Option<(usize, Vertex)> = None;
            for v in remaining.iter() {
                let bound = best.map_or(violations, |(c, _)| c);
                if let Some(count) = violation_count_below(net, &current.without(v), bound) {
                    best = Some((count, v));
                    if count == 0 {
                        break;
                    }
                }
            }
            let Some((count, v)) = best else { break };
            current.remove(v);
            remaining.remove(v);
            violations = count;
            trace.push(TraceStep::remove(v, Step::RepairPartial));
        }
        if violations > 0 {
            for v in &remaining {
                current.remove(v);
                trace.push(TraceStep::remove(v, Step::RepairLayer));
            }
            violations = violation_count(net, &current);
        }
    }
    Ok(current)
}

/// Layers of `set` by distance from `seed` within `<set>`; members not reached
/// form a final layer.
fn layers_from(net: &Network, set: &VertexSet, seed: Vertex) -> Vec<VertexSet> {
    let g = net.graph();
    let mask = set.mask(g.n());
    let mut dist = vec![usize::MAX; g.n()];
    dist[seed] = 0;
    let mut layers: Vec<Vec<Vertex>> = vec![vec![seed]];
    loop {
        let depth = layers.len();
        let mut next = Vec::new();
        for &u in &layers[depth - 1] {
            for &w in g.neighbors(u) {
                if mask[w] && dist[w] == usize::MAX {
                    dist[w] = depth;
                    next.push(w);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    let stray: Vec<Vertex> = set.iter().filter(|&v| dist[v] == usize::MAX).collect();
    if !stray.is_empty() {
        layers.push(stray);
    }
    layers.into_iter().map(VertexSet::from).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::fixtures::*;

    #[test]
    fn cycle_peels_to_arc() {
        let c6 = Network::new(cycle(6));
        let all: VertexSet = (0..6).collect();
        assert_eq!(repair_less_dispersive(&c6, &all, 0), Ok(VertexSet::from([0, 1, 5])));
    }

    #[test]
    fn path_single_removal() {
        let p6 = Network::new(path(6));
        let mut trace = Vec::new();
        let out = repair_traced(&p6, &VertexSet::from([0, 1, 2, 3, 4]), 2, &mut trace).unwrap();
        assert_eq!(out, VertexSet::from([1, 2, 3, 4]));
        assert_eq!(trace, vec![TraceStep::remove(0, Step::RepairPartial)]);
    }

    #[test]
    fn feasible_singleton_unchanged() {
        let p6 = Network::new(path(6));
        assert_eq!(
            repair_less_dispersive(&p6, &VertexSet::from([2]), 2),
            Ok(VertexSet::from([2]))
        );
    }

    #[test]
    fn seed_must_be_member() {
        let p6 = Network::new(path(6));
        assert!(matches!(
            repair_less_dispersive(&p6, &VertexSet::from([1, 2]), 4),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn stray_members_go_first() {
        let c6 = Network::new(cycle(6));
        let out = repair_less_dispersive(&c6, &VertexSet::from([0, 1, 3]), 0).unwrap();
        assert_eq!(out, VertexSet::from([0, 1]));
    }
}
