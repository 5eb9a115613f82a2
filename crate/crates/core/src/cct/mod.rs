//! Core comfortable team algorithms: GOCOM (layered growth from a central
//! vertex), CONCOMF (repair of a connected k-dominating set), the shared
//! less-dispersive repair, and Min/Max CC post-processing.

mod concomf;
mod gocom;
mod pareto;
mod refine;
mod repair;
mod team;

pub use concomf::concomf;
pub use gocom::gocom;
pub use pareto::{pareto_profile, ParetoEntry};
pub use refine::{maximize_team, minimize_team};
pub use repair::repair_less_dispersive;
pub use team::{Action, Algorithm, MemberEvidence, Step, TeamResult, TraceStep};

use crate::error::{Error, Result};
use crate::graph::Network;

/// Teams need a connected graph on at least two vertices: with one vertex no
/// eccentricity can drop strictly below zero.
fn validate_team_graph(net: &Network) -> Result<()> {
    if net.n() < 2 {
        Err(Error::Degenerate)
    } else if !net.profile().connected {
        Err(Error::NotConnected)
    } else {
        Ok(())
    }
}
