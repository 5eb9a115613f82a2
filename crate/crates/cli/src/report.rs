//! Serialized analysis results. Vertices are always the input file's labels.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TeamReport {
    pub tool_version: String,
    pub input: InputDigest,
    pub vertex_count: usize,
    pub edge_count: usize,
    pub components: Vec<ComponentReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentReport {
    pub index: usize,
    pub vertices: Vec<u64>,
    /// Parallel to `vertices`.
    pub eccentricities: Vec<u32>,
    pub radius: u32,
    pub diameter: u32,
    pub center: Vec<u64>,
    pub periphery: Vec<u64>,
    pub results: Vec<ResultReport>,
    pub exact: Option<ExactReport>,
    pub pareto: Vec<ParetoReport>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultReport {
    pub algorithm: String,
    pub requested_k: Option<u32>,
    pub members: Vec<u64>,
    /// Achieved coverage radius.
    pub k: u32,
    pub evidence: Vec<EvidenceReport>,
    pub less_dispersive: bool,
    pub connected: bool,
    /// False when the achieved radius exceeds the requested one.
    pub feasible_at_k: bool,
    pub trace: Vec<TraceReport>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvidenceReport {
    pub vertex: u64,
    pub ecc_in_team: u32,
    pub ecc_in_graph: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceReport {
    pub action: String,
    pub vertex: u64,
    pub step: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExactReport {
    pub k: u32,
    pub gamma: Option<usize>,
    pub gamma_max: Option<usize>,
    pub min_witnesses: Vec<Vec<u64>>,
    pub max_witnesses: Vec<Vec<u64>>,
    pub feasible_count: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParetoReport {
    pub k: u32,
    /// `None` when no heuristic team stays within radius `k`.
    pub members: Option<Vec<u64>>,
    pub algorithm: Option<String>,
}

impl TeamReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report types always serialize")
    }

    #[cfg(test)]
    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }
}
