use std::fmt;

use crate::domination::{coverage_radius, team_eccentricities};
use crate::error::Result;
use crate::graph::{Hops, Network, Vertex, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Gocom,
    Concomf,
    MinCc,
    MaxCc,
    Oracle,
}

impl Algorithm {
    pub fn tag(self) -> &'static str {
        match self {
            Algorithm::Gocom => "gocom",
            Algorithm::Concomf => "concomf",
            Algorithm::MinCc => "min_cc",
            Algorithm::MaxCc => "max_cc",
            Algorithm::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Which part of an algorithm made a trace decision.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Seed,
    InitialLayers,
    AbsorbLayer,
    CdsGrow,
    CdsPrune,
    Stitch,
    RepairPartial,
    RepairLayer,
    Minimize,
    Maximize,
}

impl Step {
    pub fn label(self) -> &'static str {
        match self {
            Step::Seed => "seed",
            Step::InitialLayers => "initial-layers",
            Step::AbsorbLayer => "absorb-layer",
            Step::CdsGrow => "cds-grow",
            Step::CdsPrune => "cds-prune",
            Step::Stitch => "stitch",
            Step::RepairPartial => "repair-partial",
            Step::RepairLayer => "repair-layer",
            Step::Minimize => "minimize",
            Step::Maximize => "maximize",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Action {
    Add,
    Remove,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TraceStep {
    pub action: Action,
    pub vertex: Vertex,
    pub step: Step,
}

impl TraceStep {
    pub fn add(vertex: Vertex, step: Step) -> Self {
        Self { action: Action::Add, vertex, step }
    }

    pub fn remove(vertex: Vertex, step: Step) -> Self {
        Self { action: Action::Remove, vertex, step }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MemberEvidence {
    pub vertex: Vertex,
    pub ecc_in_team: Hops,
    pub ecc_in_graph: Hops,
}

impl MemberEvidence {
    pub fn holds(&self) -> bool {
        self.ecc_in_team < self.ecc_in_graph
    }
}

/// A candidate core comfortable team with the evidence for its feasibility.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TeamResult {
    pub members: VertexSet,
    pub coverage_radius: Hops,
    pub evidence: Vec<MemberEvidence>,
    pub algorithm: Algorithm,
    /// The radius the caller asked for, when the algorithm takes one.
    pub requested_k: Option<u32>,
    pub trace: Vec<TraceStep>,
}

impl TeamResult {
    pub(crate) fn assess(
        net: &Network,
        members: VertexSet,
        algorithm: Algorithm,
        requested_k: Option<u32>,
        trace: Vec<TraceStep>,
    ) -> Result<Self> {
        let team = team_eccentricities(net.graph(), &members)?;
        let evidence = members
            .iter()
            .zip(team)
            .map(|(vertex, ecc_in_team)| MemberEvidence {
                vertex,
                ecc_in_team,
                ecc_in_graph: net.ecc(vertex),
            })
            .collect();
        Ok(Self {
            coverage_radius: coverage_radius(net.distances(), &members)?,
            members,
            evidence,
            algorithm,
            requested_k,
            trace,
        })
    }

    /// The less-dispersive condition: every member strictly more central inside the team.
    pub fn is_less_dispersive(&self) -> bool {
        !self.evidence.is_empty() && self.evidence.iter().all(MemberEvidence::holds)
    }

    pub fn is_connected(&self) -> bool {
        self.evidence.iter().all(|e| e.ecc_in_team.is_finite())
    }

    /// Achieved coverage radius as a number.
    pub fn k(&self) -> u32 {
        self.coverage_radius
            .finite()
            .expect("teams are only built on connected graphs")
    }

    /// Set when the achieved radius is larger than the requested one.
    pub fn radius_overshoot(&self) -> bool {
        self.requested_k
            .is_some_and(|k| self.coverage_radius > Hops::Finite(k))
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}
