//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use ccteam::cct::{concomf, gocom, TeamResult};
use ccteam::domination::is_induced_connected;
use ccteam::experiments::{apsp_scaling, growth_factors, sparse_gnp};
use ccteam::generators::{exhaustive, generate, Family, GenSpec};
use ccteam::graph::all_pairs_distances;
use ccteam::oracle::{exact_cc, exact_gamma, OracleOptions};
use ccteam::{Graph, Hops, Network, VertexSet};

const EXHAUSTIVE_MAX_N: usize = 7;
const SEEDED_GRAPHS: usize = 500;
const SEEDED_MAX_N: usize = 40;
const POWER_GRAPHS: usize = 200;
const FW_GRAPHS: usize = 100;
const FW_MAX_N: usize = 12;
const LIMIT_EXAMPLE: Duration = Duration::from_secs(1);
const LIMIT_CORPUS: Duration = Duration::from_secs(120);
const LIMIT_CYCLES: Duration = Duration::from_secs(5);
const LIMIT_APSP_2000: Duration = Duration::from_secs(10);
const SOFT_DOUBLING_FACTOR: f64 = 10.0;

const INF: u32 = u32::MAX;

fn floyd_warshall(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let mut d = vec![vec![INF; n]; n];
    for (u, row) in d.iter_mut().enumerate() {
        row[u] = 0;
        for &v in g.neighbors(u) {
            row[v] = 1;
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                if d[u][w] != INF && d[w][v] != INF && d[u][w] + d[w][v] < d[u][v] {
                    d[u][v] = d[u][w] + d[w][v];
                }
            }
        }
    }
    d
}

fn ecc(d: &[Vec<u32>]) -> Vec<u32> {
    d.iter().map(|row| *row.iter().max().unwrap()).collect()
}

/// The less-dispersive condition and induced connectivity, both from Floyd–Warshall.
fn reference_feasible(g: &Graph, set: &VertexSet) -> (bool, bool) {
    let full = ecc(&floyd_warshall(g));
    let (sub, ids) = g.induced_subgraph(set).unwrap();
    let inner = ecc(&floyd_warshall(&sub));
    let less = ids.iter().zip(&inner).all(|(&v, &e)| e < full[v]);
    (less, inner.iter().all(|&e| e != INF))
}

fn reference_coverage(g: &Graph, set: &VertexSet) -> u32 {
    let d = floyd_warshall(g);
    (0..g.n())
        .filter(|&u| !set.contains(u))
        .map(|u| set.iter().map(|s| d[u][s]).min().unwrap())
        .max()
        .unwrap_or(0)
}

fn exhaustive_corpus() -> Vec<Graph> {
    (2..=EXHAUSTIVE_MAX_N)
        .flat_map(|n| exhaustive::connected_graphs(n).unwrap())
        .collect()
}

fn seeded_corpus() -> Vec<Graph> {
    (0..SEEDED_GRAPHS as u64)
        .map(|seed| {
            let n = 5 + (seed as usize * 11) % (SEEDED_MAX_N - 4);
            let family = if seed % 2 == 0 {
                Family::Gnp { n, p: 0.1 + (seed % 7) as f64 * 0.05 }
            } else {
                Family::ScaleFree { n, m: 1 + (seed as usize / 2) % 3 }
            };
            generate(&GenSpec::seeded(family, seed)).unwrap().graph
        })
        .collect()
}

/// Small graphs from seeded G(n, p), connected or not.
fn random_small(count: usize, max_n: usize, salt: u64) -> Vec<Graph> {
    (0..count as u64)
        .map(|i| {
            let n = 2 + (i as usize * 5) % (max_n - 1);
            let p = 0.15 + (i % 5) as f64 * 0.15;
            let g = generate(&GenSpec::seeded(Family::Gnp { n, p }, i ^ salt)).unwrap().graph;
            if i % 3 == 0 {
                // Add an isolated vertex so disconnected inputs are covered too.
                Graph::new(g.n() + 1, g.edges().collect::<Vec<_>>()).unwrap()
            } else {
                g
            }
        })
        .collect()
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome { pass, detail: detail.into() }
}

fn team_runs(net: &Network) -> Vec<TeamResult> {
    let mut out = vec![gocom(net).unwrap()];
    for k in 1..=net.diameter().unwrap() {
        out.push(concomf(net, k).unwrap());
    }
    out
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let p6 = generate(&GenSpec::new(Family::Path { n: 6 })).unwrap().graph;
    let exact = exact_cc(&p6, 1).unwrap();
    let witness = VertexSet::from([1, 2, 3, 4]);
    let team = gocom(&Network::new(p6)).unwrap();
    let elapsed = t.elapsed();
    let pass = exact.gamma == Some(4)
        && exact.min_witnesses.contains(&witness)
        && team.members == witness
        && team.k() == 1
        && elapsed < LIMIT_EXAMPLE;
    outcome(
        pass,
        format!(
            "gamma_1comf(P6) = {:?}, witnesses {:?}; gocom {} k={} in {elapsed:.2?}",
            exact.gamma,
            exact.min_witnesses.iter().map(ToString::to_string).collect::<Vec<_>>(),
            team.members,
            team.k()
        ),
    )
}

fn criterion_2() -> Outcome {
    let t = Instant::now();
    let c6 = generate(&GenSpec::new(Family::Cycle { n: 6 })).unwrap().graph;
    let exact = exact_cc(&c6, 1).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c6.txt");
    std::fs::write(&path, ccteam::graph::edgelist::write(&c6)).unwrap();
    let status = Command::new(env!("CARGO_BIN_EXE_ccteam"))
        .args(["analyze", path.to_str().unwrap(), "--oracle", "1", "--json"])
        .output()
        .unwrap()
        .status;
    let elapsed = t.elapsed();
    let pass = exact.gamma.is_none() && exact.feasible_count == 0 && status.code() == Some(2) && elapsed < LIMIT_EXAMPLE;
    outcome(
        pass,
        format!(
            "feasible 1-dominating sets in C6: {}; CLI exit {:?} in {elapsed:.2?}",
            exact.feasible_count,
            status.code()
        ),
    )
}

fn criterion_3() -> Outcome {
    let t = Instant::now();
    let c6 = generate(&GenSpec::new(Family::Cycle { n: 6 })).unwrap().graph;
    let exact = exact_cc(&c6, 2).unwrap();
    let team = concomf(&Network::new(c6.clone()), 2).unwrap();
    let elapsed = t.elapsed();
    let arc = team.len() == 3 && is_induced_connected(&c6, &team.members);
    let feasible = team.is_less_dispersive() && team.k() <= 2;
    let pass = exact.gamma == Some(3) && exact.gamma_max == Some(3) && arc && feasible && elapsed < LIMIT_EXAMPLE;
    outcome(
        pass,
        format!(
            "expected gamma = Gamma = 3 and a 3-vertex arc; got gamma_2comf(C6) = {:?} (e.g. {}), Gamma_2comf(C6) = {:?}, concomf {} k={}",
            exact.gamma,
            exact.min_witnesses.first().map(ToString::to_string).unwrap_or_default(),
            exact.gamma_max,
            team.members,
            team.k()
        ),
    )
}

struct CorpusCheck {
    graphs: usize,
    teams: usize,
    condition_violations: usize,
    disconnected: usize,
    gocom_over_radius: usize,
    concomf_over_diameter: usize,
    coverage_mismatches: usize,
    elapsed: Duration,
}

fn corpus_check() -> CorpusCheck {
    let t = Instant::now();
    let mut c = CorpusCheck {
        graphs: 0,
        teams: 0,
        condition_violations: 0,
        disconnected: 0,
        gocom_over_radius: 0,
        concomf_over_diameter: 0,
        coverage_mismatches: 0,
        elapsed: Duration::ZERO,
    };
    for g in exhaustive_corpus().into_iter().chain(seeded_corpus()) {
        let net = Network::new(g.clone());
        let (r, d) = (net.radius().unwrap(), net.diameter().unwrap());
        c.graphs += 1;
        for (i, team) in team_runs(&net).iter().enumerate() {
            c.teams += 1;
            let (less, connected) = reference_feasible(&g, &team.members);
            c.condition_violations += usize::from(!less || !team.is_less_dispersive());
            c.disconnected += usize::from(!connected);
            c.coverage_mismatches += usize::from(reference_coverage(&g, &team.members) != team.k());
            if i == 0 {
                c.gocom_over_radius += usize::from(team.k() > r);
            } else {
                c.concomf_over_diameter += usize::from(team.k() > d);
            }
        }
    }
    c.elapsed = t.elapsed();
    c
}

fn criterion_4(c: &CorpusCheck) -> Outcome {
    let pass = c.condition_violations == 0 && c.disconnected == 0 && c.coverage_mismatches == 0 && c.elapsed < LIMIT_CORPUS;
    outcome(
        pass,
        format!(
            "{} graphs, {} teams: {} less-dispersive violations, {} disconnected, {} coverage mismatches in {:.2?}",
            c.graphs, c.teams, c.condition_violations, c.disconnected, c.coverage_mismatches, c.elapsed
        ),
    )
}

fn criterion_5(c: &CorpusCheck) -> Outcome {
    outcome(
        c.gocom_over_radius == 0 && c.concomf_over_diameter == 0,
        format!(
            "gocom k > r(G): {}; concomf k > diam(G): {}",
            c.gocom_over_radius, c.concomf_over_diameter
        ),
    )
}

fn ratio_stats(graphs: &[Graph]) -> (usize, usize, f64, f64, f64) {
    let opts = OracleOptions::default();
    let (mut rows, mut breaches, mut worst_gap, mut max_ratio, mut sum) = (0, 0, 0.0f64, 0.0f64, 0.0);
    for g in graphs {
        let net = Network::new(g.clone());
        let envelope_base = 1.0 + ((g.max_degree() + 1) as f64).ln();
        for team in team_runs(&net) {
            let (gamma, _) = exact_gamma(g, team.k(), &opts).unwrap().expect("team is feasible at its radius");
            let ratio = team.len() as f64 / gamma as f64;
            let envelope = 1.0 + envelope_base * team.k() as f64;
            rows += 1;
            breaches += usize::from(ratio > envelope);
            worst_gap = worst_gap.max(ratio / envelope);
            max_ratio = max_ratio.max(ratio);
            sum += ratio;
        }
    }
    (rows, breaches, worst_gap, max_ratio, sum / rows.max(1) as f64)
}

fn criterion_6() -> Outcome {
    let (rows, breaches, worst, max_ratio, mean) = ratio_stats(&exhaustive_corpus());
    let larger: Vec<Graph> = (0..40u64)
        .map(|seed| {
            let n = 12 + seed as usize % 5;
            generate(&GenSpec::seeded(Family::Gnp { n, p: 0.25 }, seed)).unwrap().graph
        })
        .filter(|g| g.n() >= 10)
        .collect();
    let (lrows, _, _, lmax, lmean) = ratio_stats(&larger);
    outcome(
        breaches == 0,
        format!(
            "n <= {EXHAUSTIVE_MAX_N}: {rows} rows, {breaches} breaches of 1 + (1 + ln(D+1))k, max ratio {max_ratio:.3}, mean {mean:.3}, worst ratio/envelope {worst:.3}; \
             G(12..16, 0.25) report-only: {lrows} rows, max ratio {lmax:.3}, mean {lmean:.3}"
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut witnesses = 0;
    let mut bad_witnesses = 0;
    for g in exhaustive_corpus() {
        let diam = Network::new(g.clone()).diameter().unwrap();
        for k in 1..=diam {
            let power = g.power(k).unwrap();
            let dm = all_pairs_distances(&power);
            let exact = exact_cc(&g, k).unwrap();
            for w in exact.min_witnesses.iter().chain(&exact.max_witnesses) {
                witnesses += 1;
                let dominating = ccteam::domination::is_k_dominating(&dm, w, 1).unwrap();
                if !dominating || !is_induced_connected(&power, w) {
                    bad_witnesses += 1;
                }
            }
        }
    }
    let mut bad_entries = 0;
    let graphs = random_small(POWER_GRAPHS, 20, 0x9e37);
    for (i, g) in graphs.iter().enumerate() {
        let k = 1 + (i as u32 % 4);
        let base = floyd_warshall(g);
        let pw = all_pairs_distances(&g.power(k).unwrap());
        for (u, row) in base.iter().enumerate() {
            for (v, &d) in row.iter().enumerate() {
                let expected = if d == INF { Hops::Unreachable } else { Hops::Finite(d.div_ceil(k)) };
                bad_entries += usize::from(pw.get(u, v) != expected);
            }
        }
    }
    outcome(
        bad_witnesses == 0 && bad_entries == 0,
        format!(
            "{witnesses} witnesses, {bad_witnesses} not connected dominating in G^k; {POWER_GRAPHS} graphs, {bad_entries} distance entries != ceil(d/k)"
        ),
    )
}

fn criterion_8() -> Outcome {
    let mut entries = 0;
    let mut bad = 0;
    for g in random_small(FW_GRAPHS, FW_MAX_N - 1, 0x51ed) {
        assert!(g.n() <= FW_MAX_N);
        let fw = floyd_warshall(&g);
        let dm = all_pairs_distances(&g);
        for (u, row) in fw.iter().enumerate() {
            for (v, &d) in row.iter().enumerate() {
                entries += 1;
                let expected = if d == INF { Hops::Unreachable } else { Hops::Finite(d) };
                bad += usize::from(dm.get(u, v) != expected);
            }
        }
    }
    outcome(bad == 0, format!("{FW_GRAPHS} graphs, {entries} entries, {bad} mismatches"))
}

/// (n, comfortable team exists, gamma_comf) rows of the README cycle table.
fn documented_cycles() -> Result<Vec<(usize, bool, Option<usize>)>, String> {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md");
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read README: {e}"))?;
    let start = text.find("<!-- cycle-table -->").ok_or("README has no cycle table")?;
    let end = text.find("<!-- /cycle-table -->").ok_or("README cycle table is not closed")?;
    let mut rows = Vec::new();
    for line in text[start..end].lines().filter(|l| l.starts_with('|')) {
        let cells: Vec<&str> = line.trim_matches('|').split('|').map(str::trim).collect();
        let Some(n) = cells.first().and_then(|c| c.strip_prefix('C')).and_then(|c| c.parse().ok()) else {
            continue;
        };
        let exists = match cells.get(1) {
            Some(&"yes") => true,
            Some(&"no") => false,
            other => return Err(format!("bad existence cell {other:?}")),
        };
        let gamma = cells.get(2).and_then(|c| c.parse().ok());
        rows.push((n, exists, gamma));
    }
    Ok(rows)
}

fn criterion_9() -> Outcome {
    let t = Instant::now();
    let opts = OracleOptions::default();
    let measured: Vec<(usize, bool, Option<usize>)> = (3..=12)
        .map(|n| {
            let g = generate(&GenSpec::new(Family::Cycle { n })).unwrap().graph;
            let gamma = exact_gamma(&g, 1, &opts).unwrap().map(|(s, _)| s);
            (n, gamma.is_some(), gamma)
        })
        .collect();
    let elapsed = t.elapsed();
    let diverging: Vec<String> = measured.iter().filter(|r| r.1).map(|r| format!("C{}", r.0)).collect();
    match documented_cycles() {
        Err(e) => outcome(false, e),
        Ok(doc) => outcome(
            doc == measured && elapsed < LIMIT_CYCLES,
            format!(
                "README table {} the oracle re-run ({} rows) in {elapsed:.2?}; blanket claim \"no cycle has a comfortable team\" fails for {}",
                if doc == measured { "matches" } else { "DIFFERS from" },
                measured.len(),
                diverging.join(", ")
            ),
        ),
    }
}

fn criterion_10() -> Outcome {
    let t = Instant::now();
    let g = generate(&sparse_gnp(2000, 1)).unwrap().graph;
    let connected = g.is_connected();
    let start = Instant::now();
    let dm = all_pairs_distances(&g);
    let big = start.elapsed();
    std::hint::black_box(&dm);
    let points = apsp_scaling(&[250, 500, 1000, 2000], 1, 3).unwrap();
    let factors = growth_factors(&points);
    let soft = factors.iter().all(|&f| f <= SOFT_DOUBLING_FACTOR);
    let shown: Vec<String> = points.iter().map(|p| format!("n={} {:.1}ms", p.n, p.millis)).collect();
    let fs: Vec<String> = factors.iter().map(|f| format!("{f:.2}x")).collect();
    outcome(
        connected && g.n() == 2000 && big < LIMIT_APSP_2000,
        format!(
            "n=2000 m={} APSP {big:.2?}; doublings {} -> {} (soft <= {SOFT_DOUBLING_FACTOR}x: {}); total {:.2?}",
            g.m(),
            shown.join(", "),
            fs.join(", "),
            if soft { "ok" } else { "exceeded" },
            t.elapsed()
        ),
    )
}

fn main() {
    // `cargo test` passes harness flags such as `--nocapture`; none apply.
    let corpus = corpus_check();
    let results = [
        ("P6 minimum comfortable team and GOCOM", criterion_1()),
        ("C6 has no comfortable team", criterion_2()),
        ("C6 at k = 2", criterion_3()),
        ("Less-dispersive soundness", criterion_4(&corpus)),
        ("Radius bounds", criterion_5(&corpus)),
        ("Ratio envelope", criterion_6()),
        ("Reduction to G^k", criterion_7()),
        ("BFS distances equal Floyd-Warshall", criterion_8()),
        ("Cycle study", criterion_9()),
        ("APSP scaling", criterion_10()),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        println!("{} [{}] {name}: {}", if o.pass { "PASS" } else { "FAIL" }, i + 1, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
