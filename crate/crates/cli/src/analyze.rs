use std::fmt::Write as _;

use ccteam::cct::{concomf, gocom, maximize_team, minimize_team, pareto_profile, TeamResult};
use ccteam::graph::edgelist;
use ccteam::oracle::{exact_cc_with, OracleOptions};
use ccteam::{Error, Hops, Network, VertexSet};
use sha2::{Digest, Sha256};

use crate::args::AnalyzeArgs;
use crate::labels::{from_edgelist, Labeled};
use crate::report::{
    ComponentReport, EvidenceReport, ExactReport, InputDigest, ParetoReport, ResultReport, TeamReport, TraceReport,
};

pub struct Analysis {
    pub report: TeamReport,
    /// Some requested radius could not be met in some component.
    pub infeasible: bool,
    pub dot: String,
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

fn hops(h: Hops) -> u32 {
    h.finite().expect("components are connected")
}

struct Component<'a> {
    net: Network,
    /// Local id to input label.
    labels: Vec<u64>,
    args: &'a AnalyzeArgs,
}

impl Component<'_> {
    fn label_set(&self, set: &VertexSet) -> Vec<u64> {
        set.iter().map(|v| self.labels[v]).collect()
    }

    fn result(&self, team: &TeamResult) -> ResultReport {
        ResultReport {
            algorithm: team.algorithm.tag().to_string(),
            requested_k: team.requested_k,
            members: self.label_set(&team.members),
            k: team.k(),
            evidence: team
                .evidence
                .iter()
                .map(|e| EvidenceReport {
                    vertex: self.labels[e.vertex],
                    ecc_in_team: hops(e.ecc_in_team),
                    ecc_in_graph: hops(e.ecc_in_graph),
                })
                .collect(),
            less_dispersive: team.is_less_dispersive(),
            connected: team.is_connected(),
            feasible_at_k: !team.radius_overshoot(),
            trace: team
                .trace
                .iter()
                .map(|t| TraceReport {
                    action: match t.action {
                        ccteam::cct::Action::Add => "add",
                        ccteam::cct::Action::Remove => "remove",
                    }
                    .to_string(),
                    vertex: self.labels[t.vertex],
                    step: t.step.label().to_string(),
                })
                .collect(),
        }
    }

    /// The team followed by its Min/Max refinements at its achieved radius.
    fn with_refinements(&self, team: TeamResult, out: &mut Vec<ResultReport>) -> Result<(), Error> {
        out.push(self.result(&team));
        if self.args.min {
            out.push(self.result(&minimize_team(&self.net, &team.members, team.k())?));
        }
        if self.args.max {
            out.push(self.result(&maximize_team(&self.net, &team.members, team.k())?));
        }
        Ok(())
    }

    fn clamp(&self, flag: &str, k: u32, notes: &mut Vec<String>) -> u32 {
        let diam = self.net.diameter().expect("connected");
        if k > diam {
            notes.push(format!("{flag} k = {k} clamped to the component diameter {diam}"));
            diam
        } else {
            k
        }
    }

    fn report(&self, index: usize, infeasible: &mut bool) -> Result<ComponentReport, Error> {
        let profile = self.net.profile();
        let mut notes = Vec::new();
        let mut results = Vec::new();
        if self.args.gocom {
            self.with_refinements(gocom(&self.net)?, &mut results)?;
        }
        if let Some(k) = self.args.concomf {
            let k = self.clamp("--concomf", k, &mut notes);
            let team = concomf(&self.net, k)?;
            if team.radius_overshoot() {
                *infeasible = true;
                notes.push(format!(
                    "concomf: repair pushed the coverage radius to {}, above the requested {k}",
                    team.k()
                ));
            }
            self.with_refinements(team, &mut results)?;
        }
        let mut exact = None;
        if let Some(k) = self.args.oracle {
            let k = self.clamp("--oracle", k, &mut notes);
            let opts = OracleOptions {
                cap: self.args.oracle_cap,
                ..OracleOptions::default()
            };
            let r = exact_cc_with(self.net.graph(), k, &opts)?;
            if !r.exists() {
                *infeasible = true;
                notes.push(if k == 1 {
                    "no comfortable team: no less dispersive dominating set exists".to_string()
                } else {
                    format!("no comfortable team at k = {k}: no less dispersive {k}-dominating set exists")
                });
            }
            exact = Some(ExactReport {
                k,
                gamma: r.gamma,
                gamma_max: r.gamma_max,
                min_witnesses: r.min_witnesses.iter().map(|w| self.label_set(w)).collect(),
                max_witnesses: r.max_witnesses.iter().map(|w| self.label_set(w)).collect(),
                feasible_count: r.feasible_count,
            });
        }
        let mut pareto = Vec::new();
        if self.args.pareto {
            for entry in pareto_profile(&self.net)? {
                pareto.push(ParetoReport {
                    k: entry.k,
                    members: entry.team.as_ref().map(|t| self.label_set(&t.members)),
                    algorithm: entry.team.as_ref().map(|t| t.algorithm.tag().to_string()),
                });
            }
        }
        Ok(ComponentReport {
            index,
            vertices: self.labels.clone(),
            eccentricities: profile.ecc.iter().map(|&e| hops(e)).collect(),
            radius: hops(profile.radius),
            diameter: hops(profile.diameter),
            center: self.label_set(&profile.center),
            periphery: self.label_set(&profile.periphery),
            results,
            exact,
            pareto,
            notes,
        })
    }
}

fn single_vertex(index: usize, label: u64, args: &AnalyzeArgs) -> ComponentReport {
    let mut notes = vec!["single vertex: no member can have a smaller eccentricity than 0".to_string()];
    if args.gocom || args.concomf.is_some() || args.oracle.is_some() || args.pareto {
        notes.push("no algorithm was run on this component".to_string());
    }
    ComponentReport {
        index,
        vertices: vec![label],
        eccentricities: vec![0],
        radius: 0,
        diameter: 0,
        center: vec![label],
        periphery: vec![label],
        results: Vec::new(),
        exact: None,
        pareto: Vec::new(),
        notes,
    }
}

pub fn analyze(args: &AnalyzeArgs, bytes: &[u8]) -> Result<Analysis, Error> {
    let text = std::str::from_utf8(bytes).map_err(|e| Error::Parse {
        line: 0,
        message: format!("input is not UTF-8: {e}"),
    })?;
    let Labeled { graph, labels } = from_edgelist(&edgelist::parse(text)?)?;
    let mut infeasible = false;
    let mut components = Vec::new();
    for (index, set) in graph.connected_components().into_iter().enumerate() {
        let (sub, mapping) = graph.induced_subgraph(&set)?;
        let local: Vec<u64> = mapping.iter().map(|&v| labels[v]).collect();
        if sub.n() == 1 {
            components.push(single_vertex(index, local[0], args));
            continue;
        }
        let comp = Component {
            net: Network::new(sub),
            labels: local,
            args,
        };
        components.push(comp.report(index, &mut infeasible)?);
    }
    let report = TeamReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        input: InputDigest {
            path: args.path.display().to_string(),
            sha256: hex(&Sha256::digest(bytes)),
        },
        vertex_count: graph.n(),
        edge_count: graph.m(),
        components,
    };
    let dot = crate::dot::render(&graph, &labels, &report);
    Ok(Analysis {
        report,
        infeasible,
        dot,
    })
}

fn list(xs: &[u64]) -> String {
    let items: Vec<String> = xs.iter().map(u64::to_string).collect();
    format!("{{{}}}", items.join(","))
}

pub fn render_text(report: &TeamReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "input {} (sha256 {})", report.input.path, report.input.sha256);
    let _ = writeln!(
        s,
        "{} vertices, {} edges, {} components",
        report.vertex_count,
        report.edge_count,
        report.components.len()
    );
    for c in &report.components {
        let _ = writeln!(
            s,
            "component {}: {} vertices, radius {}, diameter {}",
            c.index,
            c.vertices.len(),
            c.radius,
            c.diameter
        );
        let _ = writeln!(s, "  center {}  periphery {}", list(&c.center), list(&c.periphery));
        let ecc: Vec<String> = c.vertices.iter().zip(&c.eccentricities).map(|(v, e)| format!("{v}:{e}")).collect();
        let _ = writeln!(s, "  eccentricities {}", ecc.join(" "));
        for r in &c.results {
            let requested = r.requested_k.map(|k| format!("@{k}")).unwrap_or_default();
            let _ = writeln!(
                s,
                "  {}{requested}: {} size {} k {}{}",
                r.algorithm,
                list(&r.members),
                r.members.len(),
                r.k,
                if r.less_dispersive { "" } else { " (not less dispersive)" }
            );
        }
        if let Some(e) = &c.exact {
            match (e.gamma, e.gamma_max) {
                (Some(lo), Some(hi)) => {
                    let _ = writeln!(
                        s,
                        "  exact@{}: min size {lo} e.g. {}, max size {hi} e.g. {}, {} feasible sets",
                        e.k,
                        list(&e.min_witnesses[0]),
                        list(&e.max_witnesses[0]),
                        e.feasible_count
                    );
                }
                _ => {
                    let _ = writeln!(s, "  exact@{}: infeasible", e.k);
                }
            }
        }
        for p in &c.pareto {
            match &p.members {
                Some(m) => {
                    let _ = writeln!(s, "  pareto k={}: size {} {}", p.k, m.len(), list(m));
                }
                None => {
                    let _ = writeln!(s, "  pareto k={}: infeasible", p.k);
                }
            }
        }
        for n in &c.notes {
            let _ = writeln!(s, "  note: {n}");
        }
    }
    s
}
