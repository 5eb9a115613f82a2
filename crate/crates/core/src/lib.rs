//! Core comfortable teams in social networks.
//!
//! A team `D` is *less dispersive* when every member has strictly smaller
//! eccentricity inside the induced subgraph `<D>` than in the whole graph.
//! A *core comfortable (CC) team* is a less dispersive set that is
//! k-dominating: every non-member is within `k` hops of the team.
//!
//! The crate provides the graph substrate ([`graph`]), domination predicates
//! ([`domination`]), two polynomial heuristics and post-processing ([`cct`]),
//! an exhaustive solver for small graphs ([`oracle`]), graph families
//! ([`generators`]) and a batch harness ([`experiments`]).

pub mod cct;
pub mod domination;
mod error;
pub mod experiments;
pub mod generators;
pub mod graph;
pub mod oracle;

pub use error::{Error, Result};
pub use graph::{Graph, Hops, Network, Vertex, VertexSet};
