use crate::domination::{connected_k_dominating_construction, violation_count};
use crate::error::{Error, Result};
use crate::graph::Network;

use super::repair::repair_traced;
use super::team::{Algorithm, Step, TeamResult, TraceStep};
use super::validate_team_graph;

/// Starts from a connected k-dominating set and repairs it by removal.
///
/// The repair keeps the member with the smallest graph eccentricity (ties to
/// the smaller id). Removal can leave outside vertices farther than `k` from
/// the team; the result then reports `radius_overshoot()`.
pub fn concomf(net: &Network, k: u32) -> Result<TeamResult> {
    validate_team_graph(net)?;
    let diam = net.diameter().expect("validated connected");
    if k < 1 || k > diam {
        return Err(Error::param(format!("k = {k} outside 1..={diam}")));
    }

    let built = connected_k_dominating_construction(net, k)?;
    let mut trace: Vec<TraceStep> = built
        .grown
        .iter()
        .map(|&v| TraceStep::add(v, Step::CdsGrow))
        .chain(built.pruned.iter().map(|&v| TraceStep::remove(v, Step::CdsPrune)))
        .chain(built.stitched.iter().map(|&v| TraceStep::add(v, Step::Stitch)))
        .collect();

    let mut team = built.set;
    if violation_count(net, &team) > 0 {
        let seed = team
            .iter()
            .min_by_key(|&v| (net.ecc(v), v))
            .expect("dominating set is non-empty");
        team = repair_traced(net, &team, seed, &mut trace)?;
    }
    TeamResult::assess(net, team, Algorithm::Concomf, Some(k), trace)
}
