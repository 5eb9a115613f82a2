//! Batch runs of the team algorithms against the exact solver, with CSV and
//! text summaries of size and radius ratios.

mod config;
mod report;
mod scaling;
mod suite;

pub use config::{AlgorithmChoice, ExperimentConfig, FamilyBlock, FamilyKind, KSelection};
pub use report::{csv_line, emit_report, Report, CSV_HEADER};
pub use scaling::{apsp_scaling, growth_factors, sparse_gnp, ScalingPoint};
pub use suite::{run_suite, AssertionFailure, ExperimentRow, PhaseTimes, RowAlgorithm, Source, SuiteOutcome};
