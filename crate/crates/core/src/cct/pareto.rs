use crate::error::Result;
use crate::graph::Network;

use super::refine::minimize_team;
use super::team::TeamResult;
use super::{concomf, gocom, validate_team_graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParetoEntry {
    pub k: u32,
    /// Smallest team found with coverage radius at most `k`; `None` marks the
    /// radius as infeasible for the heuristics.
    pub team: Option<TeamResult>,
}

impl ParetoEntry {
    pub fn is_feasible(&self) -> bool {
        self.team.is_some()
    }
}

/// Size-versus-radius trade-off: for each `k` in `1..=diam`, the smaller of
/// the minimized CONCOMF and GOCOM teams that stay within radius `k`
/// (CONCOMF wins ties).
pub fn pareto_profile(net: &Network) -> Result<Vec<ParetoEntry>> {
    validate_team_graph(net)?;
    let diam = net.diameter().expect("validated connected");
    let grown = gocom(net)?;
    let mut out = Vec::with_capacity(diam as usize);
    for k in 1..=diam {
        let mut best: Option<TeamResult> = None;
        for candidate in [concomf(net, k)?, grown.clone()] {
            if candidate.k() > k {
                continue;
            }
            let min = minimize_team(net, &candidate.members, k)?;
            if best.as_ref().is_none_or(|b| min.len() < b.len()) {
                best = Some(min);
            }
        }
        out.push(ParetoEntry { k, team: best });
    }
    Ok(out)
}
