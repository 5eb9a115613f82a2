use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use super::suite::ExperimentRow;
use crate::error::{Error, Result};

pub const CSV_HEADER: &str =
    "family,n,m,max_degree,radius,diameter,algorithm,team_size,k,oracle_gamma,size_ratio,radius_ratio,runtime_ms";

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub csv: String,
    pub summary: String,
}

impl Report {
    pub fn write_csv(&self, path: &Path) -> Result<()> {
        std::fs::write(path, &self.csv).map_err(|e| Error::Report(format!("{}: {e}", path.display())))
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn ratio(v: Option<f64>) -> String {
    v.map(|x| format!("{x:.4}")).unwrap_or_default()
}

/// One CSV line in [`CSV_HEADER`] order.
pub fn csv_line(row: &ExperimentRow) -> String {
    let gamma = match row.oracle_gamma {
        None => String::new(),
        Some(None) => "infeasible".to_string(),
        Some(Some(g)) => g.to_string(),
    };
    let runtime = match row.algorithm {
        super::RowAlgorithm::Oracle { .. } => row.runtime.oracle_ms,
        _ => row.runtime.algorithm_ms,
    };
    format!(
        "{},{},{},{},{},{},{},{},{},{},{},{},{:.3}",
        row.family.tag(),
        row.n,
        row.m,
        row.max_degree,
        row.radius,
        row.diameter,
        row.algorithm,
        opt(row.team_size),
        row.k,
        gamma,
        ratio(row.size_ratio),
        ratio(row.radius_ratio),
        runtime,
    )
}

#[derive(Default)]
struct Stats {
    count: usize,
    sum: f64,
    max: f64,
}

impl Stats {
    fn add(&mut self, x: f64) {
        self.count += 1;
        self.sum += x;
        self.max = self.max.max(x);
    }

    fn show(&self) -> String {
        if self.count == 0 {
            "n/a".to_string()
        } else {
            format!("max {:.3} mean {:.3}", self.max, self.sum / self.count as f64)
        }
    }
}

#[derive(Default)]
struct Group {
    rows: usize,
    size_ratio: Stats,
    radius_ratio: Stats,
    k: Stats,
    overshoots: usize,
    infeasible: usize,
}

/// CSV in row order plus one summary block per family.
pub fn emit_report(rows: &[ExperimentRow]) -> Result<Report> {
    if rows.is_empty() {
        return Err(Error::Report("no rows to report".into()));
    }
    let mut csv = String::with_capacity(rows.len() * 64);
    csv.push_str(CSV_HEADER);
    csv.push('\n');
    for row in rows {
        csv.push_str(&csv_line(row));
        csv.push('\n');
    }

    // Families in order of first appearance, algorithms and sizes sorted.
    let mut families: Vec<&'static str> = Vec::new();
    let mut groups: BTreeMap<(&str, &str), Group> = BTreeMap::new();
    let mut by_n: BTreeMap<(&str, &str, usize), Stats> = BTreeMap::new();
    for row in rows {
        let fam = row.family.tag();
        if !families.contains(&fam) {
            families.push(fam);
        }
        let kind = row.algorithm.kind();
        let g = groups.entry((fam, kind)).or_default();
        g.rows += 1;
        if let Some(r) = row.size_ratio {
            g.size_ratio.add(r);
        }
        if let Some(r) = row.radius_ratio {
            g.radius_ratio.add(r);
        }
        if row.team_size.is_some() {
            g.k.add(row.k as f64);
            by_n.entry((fam, kind, row.n)).or_default().add(row.k as f64);
        } else {
            g.infeasible += 1;
        }
        g.overshoots += usize::from(row.radius_overshoot);
    }

    let mut summary = String::new();
    for fam in families {
        let _ = writeln!(summary, "[{fam}]");
        for ((_, kind), g) in groups.range((fam, "")..).take_while(|((f, _), _)| *f == fam) {
            let _ = writeln!(
                summary,
                "  {kind}: {} rows; size_ratio {}; radius_ratio {}; k {}",
                g.rows,
                g.size_ratio.show(),
                g.radius_ratio.show(),
                g.k.show(),
            );
            if g.overshoots > 0 {
                let _ = writeln!(summary, "    {} rows exceeded the requested radius", g.overshoots);
            }
            if g.infeasible > 0 {
                let _ = writeln!(summary, "    {} rows without a feasible set", g.infeasible);
            }
            let per_n: Vec<String> = by_n
                .range((fam, *kind, 0)..=(fam, *kind, usize::MAX))
                .map(|((_, _, n), s)| format!("n={n}: {:.2}", s.sum / s.count as f64))
                .collect();
            if per_n.len() > 1 {
                let _ = writeln!(summary, "    mean k by n: {}", per_n.join(", "));
            }
        }
    }
    Ok(Report { csv, summary })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::experiments::{run_suite, ExperimentConfig};

    fn report(text: &str) -> Report {
        let out = run_suite(&ExperimentConfig::parse(text).unwrap()).unwrap();
        emit_report(&out.rows).unwrap()
    }

    #[test]
    fn p6_gocom_line() {
        let r = report("algorithms = gocom\nfamily = path\nn = 6\n");
        let lines: Vec<&str> = r.csv.lines().collect();
        assert_eq!(lines[0], CSV_HEADER);
        let fields: Vec<&str> = lines[1].split(',').collect();
        assert_eq!(&fields[..10], ["path", "6", "5", "2", "3", "5", "gocom", "4", "1", ""]);
        assert!(r.summary.starts_with("[path]\n  gocom: 1 rows"));
    }

    #[test]
    fn c6_oracle_lines() {
        let r = report("algorithms = oracle\nfamily = cycle\nn = 6\n");
        let lines: Vec<&str> = r.csv.lines().collect();
        assert!(lines[1].starts_with("cycle,6,6,2,3,3,oracle@1,,1,infeasible,,,"));
        assert!(lines[2].starts_with("cycle,6,6,2,3,3,oracle@2,2,2,2,1.0000,1.0000,"));
        assert!(r.summary.contains("1 rows without a feasible set"));
    }

    #[test]
    fn empty_rows() {
        assert!(matches!(emit_report(&[]), Err(Error::Report(_))));
    }

    #[test]
    fn unwritable_path() {
        let r = report("algorithms = gocom\nfamily = path\nn = 4\n");
        assert!(matches!(
            r.write_csv(Path::new("/nonexistent-dir/x/out.csv")),
            Err(Error::Report(_))
        ));
    }
}
