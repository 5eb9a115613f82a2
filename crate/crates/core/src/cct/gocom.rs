use crate::domination::violation_count;
use crate::error::Result;
use crate::graph::{Network, VertexSet};

use super::repair::repair_traced;
use super::team::{Algorithm, Step, TeamResult, TraceStep};
use super::validate_team_graph;

/// Grows a team outward from a central vertex.
///
/// The seed is the smallest-id central vertex. All BFS layers up to
/// `floor(diam / 2)` are taken at once; after that, whole layers are absorbed
/// one at a time while the team stays less dispersive. The first violation
/// triggers the layered repair, and the repaired set is the output. The seed
/// is never removed, so the coverage radius is at most the graph radius.
pub fn gocom(net: &Network) -> Result<TeamResult> {
    validate_team_graph(net)?;
    let diam = net.diameter().expect("validated connected");
    let seed = net.profile().center.first().expect("connected graph has a center");
    let layers = net.graph().bfs_layers(seed)?;

    let mut trace = vec![TraceStep::add(seed, Step::Seed)];
    let mut team = VertexSet::singleton(seed);
    let mut depth = (diam / 2) as usize;
    for layer in layers.iter().take(depth + 1).skip(1) {
        for v in layer {
            team.insert(v);
            trace.push(TraceStep::add(v, Step::InitialLayers));
        }
    }

    while violation_count(net, &team) == 0 {
        depth += 1;
        // The ball of radius ecc(seed) is the whole graph, which always
        // violates, so the loop ends before running out of layers.
        let layer = &layers[depth];
        for v in layer {
            team.insert(v);
            trace.push(TraceStep::add(v, Step::AbsorbLayer));
        }
    }

    let repaired = repair_traced(net, &team, seed, &mut trace)?;
    TeamResult::assess(net, repaired, Algorithm::Gocom, None, trace)
}
