//! Min and Max CC post-processing at a fixed coverage radius.

use std::cmp::Reverse;

use crate::domination::{coverage_radius, satisfies_condition};
use crate::error::{Error, Result};
use crate::graph::{Hops, Network, VertexSet};

use super::team::{Algorithm, Step, TeamResult, TraceStep};
use super::validate_team_graph;

fn check_input(net: &Network, set: &VertexSet, k: u32) -> Result<()> {
    validate_team_graph(net)?;
    if k < 1 {
        return Err(Error::param("k must be at least 1"));
    }
    if set.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(v) = set.last().filter(|&v| v >= net.n()) {
        return Err(Error::InvalidVertex { vertex: v, n: net.n() });
    }
    if !satisfies_condition(net, set) {
        return Err(Error::InfeasibleInput(format!("{set} is not less dispersive")));
    }
    Ok(())
}

fn within(net: &Network, set: &VertexSet, k: u32) -> bool {
    coverage_radius(net.distances(), set).is_ok_and(|r| r <= Hops::Finite(k))
}

/// Removes members, highest graph eccentricity first (ties to the smaller
/// id), while the team stays less dispersive, connected and k-dominating.
/// Passes repeat until no single removal is possible.
pub fn minimize_team(net: &Network, set: &VertexSet, k: u32) -> Result<TeamResult> {
    check_input(net, set, k)?;
    if !within(net, set, k) {
        return Err(Error::InfeasibleInput(format!("{set} does not {k}-dominate")));
    }
    let mut team = set.clone();
    let mut trace = Vec::new();
    loop {
        let mut order: Vec<_> = team.iter().collect();
        order.sort_by_key(|&v| (Reverse(net.ecc(v)), v));
        let mut changed = false;
        for v in order {
            if team.len() == 1 {
                break;
            }
            let candidate = team.without(v);
            // Less dispersive implies connected.
            if satisfies_condition(net, &candidate) && within(net, &candidate, k) {
                team = candidate;
                trace.push(TraceStep::remove(v, Step::Minimize));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    TeamResult::assess(net, team, Algorithm::MinCc, Some(k), trace)
}

/// Adds frontier vertices in ascending id order while the team stays less
/// dispersive. Additions never increase the coverage radius, so the input
/// only has to be less dispersive; the final team must `k`-dominate.
pub fn maximize_team(net: &Network, set: &VertexSet, k: u32) -> Result<TeamResult> {
    check_input(net, set, k)?;
    let g = net.graph();
    let mut team = set.clone();
    let mut trace = Vec::new();
    loop {
        let frontier: VertexSet = team
            .iter()
            .flat_map(|v| g.neighbors(v).iter().copied())
            .filter(|&w| !team.contains(w))
            .collect();
        let next = frontier
            .iter()
            .map(|w| team.with(w))
            .zip(frontier.iter())
            .find(|(candidate, _)| satisfies_condition(net, candidate));
        match next {
            Some((candidate, w)) => {
                team = candidate;
                trace.push(TraceStep::add(w, Step::Maximize));
            }
            None => break,
        }
    }
    if !within(net, &team, k) {
        return Err(Error::InfeasibleInput(format!(
            "no less dispersive extension of {set} {k}-dominates"
        )));
    }
    TeamResult::assess(net, team, Algorithm::MaxCc, Some(k), trace)
}
