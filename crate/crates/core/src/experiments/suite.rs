use std::fmt;
use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;

use super::config::{AlgorithmChoice, ExperimentConfig, FamilyKind, KSelection};
use crate::cct::{concomf, gocom, TeamResult};
use crate::error::{Error, Result};
use crate::generators::{exhaustive, generate, Fallback, Family, GenSpec};
use crate::graph::{edgelist, Graph, Network};
use crate::oracle::{exact_gamma, OracleOptions};

/// Where an instance came from.
#[derive(Clone, Debug, PartialEq)]
pub enum Source {
    Generated { spec: GenSpec, fallback: Fallback },
    /// `index` is the position in canonical-code order among connected
    /// graphs on `n` vertices.
    Exhaustive { n: usize, index: usize },
    File { path: PathBuf, component: usize },
}

impl fmt::Display for Source {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Source::Generated { spec, .. } => write!(f, "{spec}"),
            Source::Exhaustive { n, index } => write!(f, "exhaustive(n={n},#{index})"),
            Source::File { path, component } => write!(f, "file({},component {component})", path.display()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowAlgorithm {
    Gocom,
    Concomf { k: u32 },
    Oracle { k: u32 },
}

impl fmt::Display for RowAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RowAlgorithm::Gocom => write!(f, "gocom"),
            RowAlgorithm::Concomf { k } => write!(f, "concomf@{k}"),
            RowAlgorithm::Oracle { k } => write!(f, "oracle@{k}"),
        }
    }
}

impl RowAlgorithm {
    pub fn kind(self) -> &'static str {
        match self {
            RowAlgorithm::Gocom => "gocom",
            RowAlgorithm::Concomf { .. } => "concomf",
            RowAlgorithm::Oracle { .. } => "oracle",
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct PhaseTimes {
    /// Distances and eccentricity profile, shared by all rows of an instance.
    pub analyze_ms: f64,
    pub algorithm_ms: f64,
    /// Exact minima used by this row.
    pub oracle_ms: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentRow {
    pub family: FamilyKind,
    pub source: Source,
    pub n: usize,
    pub m: usize,
    pub max_degree: usize,
    pub radius: u32,
    pub diameter: u32,
    pub algorithm: RowAlgorithm,
    /// `None` only for oracle rows without a feasible set.
    pub team_size: Option<usize>,
    /// Achieved coverage radius; the requested radius for oracle rows.
    pub k: u32,
    /// `None`: oracle not run. `Some(None)`: no feasible set at `k`.
    pub oracle_gamma: Option<Option<usize>>,
    pub size_ratio: Option<f64>,
    pub radius_ratio: Option<f64>,
    pub less_dispersive: bool,
    pub connected: bool,
    pub radius_overshoot: bool,
    pub runtime: PhaseTimes,
}

impl ExperimentRow {
    /// The ratio bound checked on exhaustive instances.
    pub fn envelope(&self) -> f64 {
        1.0 + (1.0 + ((self.max_degree + 1) as f64).ln()) * self.k as f64
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct AssertionFailure {
    pub source: Source,
    pub algorithm: RowAlgorithm,
    pub message: String,
}

impl fmt::Display for AssertionFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}: {}", self.source, self.algorithm, self.message)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SuiteOutcome {
    pub rows: Vec<ExperimentRow>,
    pub failures: Vec<AssertionFailure>,
    /// Instances that could not host a team, with the reason.
    pub skipped: Vec<(Source, String)>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Instance {
    family: FamilyKind,
    source: Source,
    graph: Graph,
    oracle: bool,
}

enum Plan {
    Ready(Instance),
    Generate { family: FamilyKind, spec: GenSpec, oracle: bool },
}

pub fn run_suite(cfg: &ExperimentConfig) -> Result<SuiteOutcome> {
    let plans = plan(cfg)?;
    let opts = OracleOptions {
        cap: cfg.oracle_cap,
        ..OracleOptions::default()
    };
    let results: Vec<Result<InstanceOutcome>> = plans
        .into_par_iter()
        .map(|p| {
            let inst = match p {
                Plan::Ready(inst) => inst,
                Plan::Generate { family, spec, oracle } => {
                    let generated = generate(&spec)?;
                    Instance {
                        family,
                        source: Source::Generated {
                            spec,
                            fallback: generated.fallback,
                        },
                        graph: generated.graph,
                        oracle,
                    }
                }
            };
            run_instance(cfg, &opts, inst)
        })
        .collect();

    let mut outcome = SuiteOutcome {
        rows: Vec::new(),
        failures: Vec::new(),
        skipped: Vec::new(),
    };
    for r in results {
        match r? {
            InstanceOutcome::Skipped(source, why) => outcome.skipped.push((source, why)),
            InstanceOutcome::Rows(rows, failures) => {
                outcome.rows.extend(rows);
                outcome.failures.extend(failures);
            }
        }
    }
    Ok(outcome)
}

fn check_cap(cfg: &ExperimentConfig, oracle: bool, n: usize) -> Result<()> {
    if oracle && n > cfg.oracle_cap {
        Err(Error::TooLarge { n, cap: cfg.oracle_cap })
    } else {
        Ok(())
    }
}

fn plan(cfg: &ExperimentConfig) -> Result<Vec<Plan>> {
    let mut plans = Vec::new();
    for block in &cfg.families {
        let oracle = cfg.oracle_enabled(block);
        let family = block.family;
        let mut push_spec = |fam: Family, seed: u64| -> Result<()> {
            check_cap(cfg, oracle, fam.n())?;
            plans.push(Plan::Generate {
                family,
                spec: GenSpec::seeded(fam, seed),
                oracle,
            });
            Ok(())
        };
        match family {
            FamilyKind::Exhaustive => {
                for &n in &block.ns {
                    check_cap(cfg, oracle, n)?;
                    let graphs = exhaustive::connected_graphs(n).map_err(|e| Error::Config(e.to_string()))?;
                    for (index, graph) in graphs.into_iter().enumerate() {
                        plans.push(Plan::Ready(Instance {
                            family,
                            source: Source::Exhaustive { n, index },
                            graph,
                            oracle,
                        }));
                    }
                }
            }
            FamilyKind::File => {
                let path = block.path.clone().expect("validated");
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                let g = edgelist::parse(&text)?.to_graph()?;
                for (component, set) in g.connected_components().into_iter().enumerate() {
                    let (graph, _) = g.induced_subgraph(&set)?;
                    check_cap(cfg, oracle, graph.n())?;
                    plans.push(Plan::Ready(Instance {
                        family,
                        source: Source::File {
                            path: path.clone(),
                            component,
                        },
                        graph,
                        oracle,
                    }));
                }
            }
            FamilyKind::Grid => {
                let fam = Family::Grid {
                    rows: block.rows.expect("validated"),
                    cols: block.cols.expect("validated"),
                };
                push_spec(fam, 0)?;
            }
            FamilyKind::Gnp | FamilyKind::ScaleFree => {
                for &n in &block.ns {
                    for &seed in &block.seeds {
                        let fam = if family == FamilyKind::Gnp {
                            Family::Gnp {
                                n,
                                p: block.p.expect("validated"),
                            }
                        } else {
                            Family::ScaleFree {
                                n,
                                m: block.m.expect("validated"),
                            }
                        };
                        push_spec(fam, seed)?;
                    }
                }
            }
            FamilyKind::Path | FamilyKind::Cycle | FamilyKind::Star | FamilyKind::Complete => {
                for &n in &block.ns {
                    let fam = match family {
                        FamilyKind::Path => Family::Path { n },
                        FamilyKind::Cycle => Family::Cycle { n },
                        FamilyKind::Star => Family::Star { n },
                        _ => Family::Complete { n },
                    };
                    push_spec(fam, 0)?;
                }
            }
        }
    }
    Ok(plans)
}

enum InstanceOutcome {
    Skipped(Source, String),
    Rows(Vec<ExperimentRow>, Vec<AssertionFailure>),
}

fn millis(start: Instant) -> f64 {
    start.elapsed().as_secs_f64() * 1e3
}

/// Exact minima for k = 1..=diam and the time spent on each.
struct Minima {
    gamma: Vec<Option<usize>>,
    ms: Vec<f64>,
    k_opt: Option<u32>,
}

impl Minima {
    fn compute(g: &Graph, diameter: u32, opts: &OracleOptions) -> Result<Self> {
        let mut gamma = Vec::new();
        let mut ms = Vec::new();
        for k in 1..=diameter {
            let t = Instant::now();
            gamma.push(exact_gamma(g, k, opts)?.map(|(size, _)| size));
            ms.push(millis(t));
        }
        let k_opt = gamma.iter().position(Option::is_some).map(|i| i as u32 + 1);
        Ok(Self { gamma, ms, k_opt })
    }

    fn at(&self, k: u32) -> (Option<usize>, f64) {
        (self.gamma[k as usize - 1], self.ms[k as usize - 1])
    }
}

fn run_instance(cfg: &ExperimentConfig, opts: &OracleOptions, inst: Instance) -> Result<InstanceOutcome> {
    let Instance {
        family,
        source,
        graph,
        oracle,
    } = inst;
    let t = Instant::now();
    let net = Network::new(graph);
    let analyze_ms = millis(t);
    let (Some(radius), Some(diameter)) = (net.radius(), net.diameter()) else {
        return Ok(InstanceOutcome::Skipped(source, "disconnected".into()));
    };
    if net.n() < 2 {
        return Ok(InstanceOutcome::Skipped(source, "single vertex".into()));
    }
    let g = net.graph();
    let minima = if oracle {
        Some(Minima::compute(g, diameter, opts)?)
    } else {
        None
    };

    let base = ExperimentRow {
        family,
        source: source.clone(),
        n: g.n(),
        m: g.m(),
        max_degree: g.max_degree(),
        radius,
        diameter,
        algorithm: RowAlgorithm::Gocom,
        team_size: None,
        k: 0,
        oracle_gamma: None,
        size_ratio: None,
        radius_ratio: None,
        less_dispersive: false,
        connected: false,
        radius_overshoot: false,
        runtime: PhaseTimes {
            analyze_ms,
            ..PhaseTimes::default()
        },
    };
    let team_row = |algorithm: RowAlgorithm, team: &TeamResult, algorithm_ms: f64| {
        let k = team.k();
        let mut row = ExperimentRow {
            algorithm,
            team_size: Some(team.len()),
            k,
            less_dispersive: team.is_less_dispersive(),
            connected: team.is_connected(),
            radius_overshoot: team.radius_overshoot(),
            ..base.clone()
        };
        row.runtime.algorithm_ms = algorithm_ms;
        if let Some(minima) = &minima {
            let (gamma, ms) = minima.at(k);
            row.oracle_gamma = Some(gamma);
            row.size_ratio = gamma.map(|gm| team.len() as f64 / gm as f64);
            row.radius_ratio = minima.k_opt.map(|ko| k as f64 / ko as f64);
            row.runtime.oracle_ms = ms;
        }
        row
    };

    let mut rows = Vec::new();
    if cfg.algorithms.contains(&AlgorithmChoice::Gocom) {
        let t = Instant::now();
        let team = gocom(&net)?;
        rows.push(team_row(RowAlgorithm::Gocom, &team, millis(t)));
    }
    if cfg.algorithms.contains(&AlgorithmChoice::Concomf) {
        let ks: Vec<u32> = match &cfg.concomf_k {
            KSelection::All => (1..=diameter).collect(),
            KSelection::List(ks) => ks.iter().copied().filter(|&k| (1..=diameter).contains(&k)).collect(),
        };
        for k in ks {
            let t = Instant::now();
            let team = concomf(&net, k)?;
            rows.push(team_row(RowAlgorithm::Concomf { k }, &team, millis(t)));
        }
    }
    if let (true, Some(minima)) = (cfg.algorithms.contains(&AlgorithmChoice::Oracle), &minima) {
        for k in 1..=diameter {
            let (gamma, ms) = minima.at(k);
            let mut row = ExperimentRow {
                algorithm: RowAlgorithm::Oracle { k },
                team_size: gamma,
                k,
                oracle_gamma: Some(gamma),
                size_ratio: gamma.map(|_| 1.0),
                radius_ratio: gamma.and(minima.k_opt).map(|ko| k as f64 / ko as f64),
                less_dispersive: gamma.is_some(),
                connected: gamma.is_some(),
                ..base.clone()
            };
            row.runtime.oracle_ms = ms;
            rows.push(row);
        }
    }

    let failures = rows.iter().flat_map(check_row).collect();
    Ok(InstanceOutcome::Rows(rows, failures))
}

fn check_row(row: &ExperimentRow) -> Vec<AssertionFailure> {
    let mut messages = Vec::new();
    let is_team = !matches!(row.algorithm, RowAlgorithm::Oracle { .. });
    if is_team {
        if !row.less_dispersive {
            messages.push("output is not less dispersive".to_string());
        }
        if !row.connected {
            messages.push("output does not induce a connected subgraph".to_string());
        }
    }
    match row.algorithm {
        RowAlgorithm::Gocom if row.k > row.radius => {
            messages.push(format!("coverage radius {} exceeds graph radius {}", row.k, row.radius));
        }
        RowAlgorithm::Concomf { .. } if row.k > row.diameter => {
            messages.push(format!("coverage radius {} exceeds diameter {}", row.k, row.diameter));
        }
        _ => {}
    }
    if is_team && row.oracle_gamma == Some(None) {
        messages.push(format!("oracle finds no feasible set at the achieved radius {}", row.k));
    }
    if let Some(ratio) = row.size_ratio {
        if ratio < 1.0 {
            messages.push(format!("size ratio {ratio} below 1"));
        }
        if is_team && row.family == FamilyKind::Exhaustive && ratio > row.envelope() {
            messages.push(format!("size ratio {ratio:.4} above envelope {:.4}", row.envelope()));
        }
    }
    if let Some(ratio) = row.radius_ratio {
        if ratio < 1.0 {
            messages.push(format!("radius ratio {ratio} below 1"));
        }
    }
    messages
        .into_iter()
        .map(|message| AssertionFailure {
            source: row.source.clone(),
            algorithm: row.algorithm,
            message,
        })
        .collect()
}
