use std::collections::BTreeSet;
use std::fmt::Write as _;

use ccteam::Graph;

use crate::report::TeamReport;

/// Undirected DOT graph on the input labels. In each component the first
/// heuristic team, or else the first exact minimum witness, is filled.
pub fn render(g: &Graph, labels: &[u64], report: &TeamReport) -> String {
    let marked: BTreeSet<u64> = report
        .components
        .iter()
        .filter_map(|c| {
            c.results
                .first()
                .map(|r| r.members.clone())
                .or_else(|| c.exact.as_ref().and_then(|e| e.min_witnesses.first().cloned()))
        })
        .flatten()
        .collect();
    let mut s = String::from("graph ccteam {\n  node [shape=circle];\n");
    for &label in labels {
        if marked.contains(&label) {
            let _ = writeln!(s, "  \"{label}\" [style=filled, fillcolor=lightblue];");
        } else {
            let _ = writeln!(s, "  \"{label}\";");
        }
    }
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  \"{}\" -- \"{}\";", labels[u], labels[v]);
    }
    s.push_str("}\n");
    s
}
