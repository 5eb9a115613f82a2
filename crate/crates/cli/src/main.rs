mod analyze;
mod args;
mod dot;
mod labels;
mod report;

use std::fmt;
use std::fs;
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use ccteam::experiments::{emit_report, run_suite, ExperimentConfig};
use ccteam::generators::{generate, Fallback, Family, GenSpec};
use ccteam::graph::edgelist;

use args::{AnalyzeArgs, BenchArgs, Cli, Command, FamilyArg, GenArgs};

const EXIT_INPUT: u8 = 1;
const EXIT_INFEASIBLE: u8 = 2;
const EXIT_ASSERTION: u8 = 3;

/// Any failure that ends the run with the input-error exit code.
struct Failure(String);

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<ccteam::Error> for Failure {
    fn from(e: ccteam::Error) -> Self {
        Failure(e.to_string())
    }
}

fn read(path: &Path) -> Result<Vec<u8>, Failure> {
    fs::read(path).map_err(|e| Failure(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<u8, Failure> {
    if (args.min || args.max) && !args.gocom && args.concomf.is_none() {
        return Err(Failure("--min and --max refine a team from --gocom or --concomf".into()));
    }
    let bytes = read(&args.path)?;
    let analysis = analyze::analyze(args, &bytes)?;
    if let Some(path) = &args.dot {
        write(path, &analysis.dot)?;
    }
    if args.json {
        println!("{}", analysis.report.to_json());
    } else {
        print!("{}", analyze::render_text(&analysis.report));
    }
    Ok(if analysis.infeasible { EXIT_INFEASIBLE } else { 0 })
}

fn gen_family(args: &GenArgs) -> Result<Family, Failure> {
    fn need<T>(v: Option<T>, flag: &str, family: &str) -> Result<T, Failure> {
        v.ok_or_else(|| Failure(format!("--family {family} requires {flag}")))
    }
    let tag = args.family.to_possible_value().expect("no skipped variants").get_name().to_string();
    let n = || need(args.n, "--n", &tag);
    Ok(match args.family {
        FamilyArg::Path => Family::Path { n: n()? },
        FamilyArg::Cycle => Family::Cycle { n: n()? },
        FamilyArg::Star => Family::Star { n: n()? },
        FamilyArg::Complete => Family::Complete { n: n()? },
        FamilyArg::Grid => Family::Grid {
            rows: need(args.rows, "--rows", &tag)?,
            cols: need(args.cols, "--cols", &tag)?,
        },
        FamilyArg::Gnp => Family::Gnp {
            n: n()?,
            p: need(args.p, "--p", &tag)?,
        },
        FamilyArg::ScaleFree => Family::ScaleFree {
            n: n()?,
            m: need(args.m, "--m", &tag)?,
        },
    })
}

fn cmd_gen(args: &GenArgs) -> Result<u8, Failure> {
    let spec = GenSpec::seeded(gen_family(args)?, args.seed);
    let generated = generate(&spec)?;
    match generated.fallback {
        Fallback::None => {}
        Fallback::Resampled { attempt } => eprintln!("note: {spec} connected on resample {attempt}"),
        Fallback::LargestComponent { kept } => {
            eprintln!("note: {spec} never connected; kept the largest component ({kept} vertices)")
        }
    }
    let text = edgelist::write(&generated.graph);
    match &args.output {
        Some(path) => write(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_bench(args: &BenchArgs) -> Result<u8, Failure> {
    let bytes = read(&args.config)?;
    let text = String::from_utf8(bytes).map_err(|_| Failure("config is not UTF-8".into()))?;
    let cfg = ExperimentConfig::parse(&text)?;
    let outcome = run_suite(&cfg)?;
    let report = emit_report(&outcome.rows)?;
    match args.output.as_ref().or(cfg.output.as_ref()) {
        Some(path) => {
            report.write_csv(path)?;
            print!("{}", report.summary);
        }
        None => {
            print!("{}", report.csv);
            eprint!("{}", report.summary);
        }
    }
    for (source, why) in &outcome.skipped {
        eprintln!("skipped {source}: {why}");
    }
    if outcome.passed() {
        Ok(0)
    } else {
        for f in &outcome.failures {
            eprintln!("assertion failed: {f}");
        }
        Ok(EXIT_ASSERTION)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INPUT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match &cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Gen(g) => cmd_gen(g),
        Command::Bench(b) => cmd_bench(b),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
