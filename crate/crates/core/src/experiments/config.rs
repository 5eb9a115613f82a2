//! Flat `key = value` experiment configs.
//!
//! ```text
//! # global keys (before the first `family`)
//! algorithms = gocom, concomf, oracle
//! oracle = on
//! oracle_cap = 16
//! concomf_k = all          # or a list such as 1,2
//! output = results.csv
//!
//! # each `family` line opens a block
//! family = exhaustive
//! n = 2..7
//!
//! family = gnp
//! n = 10, 20, 40
//! p = 0.2
//! seeds = 1..20
//! oracle = off             # per-block override
//! ```
//!
//! Families: `exhaustive`, `path`, `cycle`, `star`, `complete`, `grid`
//! (`rows`, `cols`), `gnp` (`p`), `scale_free` (`m`), `file` (`path`).

use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::oracle::{DEFAULT_CAP, HARD_CAP};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgorithmChoice {
    Gocom,
    Concomf,
    Oracle,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    Exhaustive,
    Path,
    Cycle,
    Star,
    Complete,
    Grid,
    Gnp,
    ScaleFree,
    File,
}

impl FamilyKind {
    fn parse(s: &str) -> Option<Self> {
        Some(match s {
            "exhaustive" => Self::Exhaustive,
            "path" => Self::Path,
            "cycle" => Self::Cycle,
            "star" => Self::Star,
            "complete" => Self::Complete,
            "grid" => Self::Grid,
            "gnp" => Self::Gnp,
            "scale_free" => Self::ScaleFree,
            "file" => Self::File,
            _ => return None,
        })
    }

    pub fn tag(self) -> &'static str {
        match self {
            Self::Exhaustive => "exhaustive",
            Self::Path => "path",
            Self::Cycle => "cycle",
            Self::Star => "star",
            Self::Complete => "complete",
            Self::Grid => "grid",
            Self::Gnp => "gnp",
            Self::ScaleFree => "scale_free",
            Self::File => "file",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum KSelection {
    All,
    List(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct FamilyBlock {
    pub family: FamilyKind,
    pub ns: Vec<usize>,
    pub seeds: Vec<u64>,
    pub p: Option<f64>,
    pub m: Option<usize>,
    pub rows: Option<usize>,
    pub cols: Option<usize>,
    pub path: Option<PathBuf>,
    pub oracle: Option<bool>,
}

impl FamilyBlock {
    fn new(family: FamilyKind) -> Self {
        Self {
            family,
            ns: Vec::new(),
            seeds: vec![0],
            p: None,
            m: None,
            rows: None,
            cols: None,
            path: None,
            oracle: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub algorithms: Vec<AlgorithmChoice>,
    pub oracle: bool,
    pub oracle_cap: usize,
    pub concomf_k: KSelection,
    pub output: Option<PathBuf>,
    pub families: Vec<FamilyBlock>,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            algorithms: vec![AlgorithmChoice::Gocom, AlgorithmChoice::Concomf],
            oracle: false,
            oracle_cap: DEFAULT_CAP,
            concomf_k: KSelection::All,
            output: None,
            families: Vec::new(),
        }
    }
}

impl ExperimentConfig {
    pub fn parse(text: &str) -> Result<Self> {
        let mut cfg = ExperimentConfig::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or_default().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| Error::Config(format!("line {}: {msg}", idx + 1));
            let (key, value) = line
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| err(format!("expected `key = value`, got {line:?}")))?;
            let in_block = !cfg.families.is_empty();
            match key {
                "family" => {
                    let family = FamilyKind::parse(value)
                        .ok_or_else(|| err(format!("unknown family {value:?}")))?;
                    cfg.families.push(FamilyBlock::new(family));
                }
                "algorithms" => {
                    cfg.algorithms = value
                        .split(',')
                        .map(|a| match a.trim() {
                            "gocom" => Ok(AlgorithmChoice::Gocom),
                            "concomf" => Ok(AlgorithmChoice::Concomf),
                            "oracle" => Ok(AlgorithmChoice::Oracle),
                            other => Err(err(format!("unknown algorithm {other:?}"))),
                        })
                        .collect::<Result<_>>()?;
                }
                "oracle" => {
                    let on = parse_switch(value).ok_or_else(|| err(format!("oracle expects on/off, got {value:?}")))?;
                    match cfg.families.last_mut() {
                        Some(block) => block.oracle = Some(on),
                        None => cfg.oracle = on,
                    }
                }
                "oracle_cap" => {
                    let cap = parse_num::<usize>(value).map_err(err)?;
                    if cap > HARD_CAP {
                        return Err(err(format!("oracle_cap {cap} exceeds {HARD_CAP}")));
                    }
                    cfg.oracle_cap = cap;
                }
                "concomf_k" => {
                    cfg.concomf_k = if value == "all" {
                        KSelection::All
                    } else {
                        KSelection::List(parse_list::<u32>(value).map_err(err)?)
                    }
                }
                "output" => cfg.output = Some(PathBuf::from(value)),
                _ if !in_block => return Err(err(format!("unknown global key {key:?}"))),
                _ => {
                    let block = cfg.families.last_mut().unwrap();
                    match key {
                        "n" => block.ns = parse_list(value).map_err(err)?,
                        "seeds" => block.seeds = parse_list(value).map_err(err)?,
                        "p" => block.p = Some(parse_num(value).map_err(err)?),
                        "m" => block.m = Some(parse_num(value).map_err(err)?),
                        "rows" => block.rows = Some(parse_num(value).map_err(err)?),
                        "cols" => block.cols = Some(parse_num(value).map_err(err)?),
                        "path" => block.path = Some(PathBuf::from(value)),
                        _ => return Err(err(format!("unknown key {key:?}"))),
                    }
                }
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    fn validate(&self) -> Result<()> {
        if self.families.is_empty() {
            return Err(Error::Config("no `family` blocks".into()));
        }
        if self.algorithms.is_empty() {
            return Err(Error::Config("no algorithms selected".into()));
        }
        for b in &self.families {
            let tag = b.family.tag();
            let need = |ok: bool, what: &str| {
                if ok {
                    Ok(())
                } else {
                    Err(Error::Config(format!("family {tag} requires {what}")))
                }
            };
            match b.family {
                FamilyKind::Grid => need(b.rows.is_some() && b.cols.is_some(), "rows and cols")?,
                FamilyKind::File => need(b.path.is_some(), "path")?,
                FamilyKind::Gnp => {
                    need(b.p.is_some(), "p")?;
                    need(!b.ns.is_empty(), "n")?;
                }
                FamilyKind::ScaleFree => {
                    need(b.m.is_some(), "m")?;
                    need(!b.ns.is_empty(), "n")?;
                }
                _ => need(!b.ns.is_empty(), "n")?,
            }
            if b.seeds.is_empty() {
                return Err(Error::Config(format!("family {tag} has an empty seed list")));
            }
        }
        Ok(())
    }

    /// Listing `oracle` among the algorithms turns it on by default; a
    /// block's own `oracle` key wins.
    pub fn oracle_enabled(&self, block: &FamilyBlock) -> bool {
        block
            .oracle
            .unwrap_or(self.oracle || self.algorithms.contains(&AlgorithmChoice::Oracle))
    }
}

fn parse_switch(s: &str) -> Option<bool> {
    match s {
        "on" | "true" | "yes" => Some(true),
        "off" | "false" | "no" => Some(false),
        _ => None,
    }
}

fn parse_num<T: std::str::FromStr>(s: &str) -> std::result::Result<T, String> {
    s.trim().parse().map_err(|_| format!("invalid number {s:?}"))
}

/// Comma-separated items, each a number or an inclusive range `a..b`.
fn parse_list<T>(s: &str) -> std::result::Result<Vec<T>, String>
where
    T: std::str::FromStr + Copy + TryFrom<u64> + TryInto<u64>,
{
    let mut out = Vec::new();
    for item in s.split(',').map(str::trim) {
        match item.split_once("..") {
            Some((a, b)) => {
                let (a, b): (T, T) = (parse_num(a)?, parse_num(b)?);
                let wide = |x: T| x.try_into().map_err(|_| format!("value out of range in {item:?}"));
                let (a, b): (u64, u64) = (wide(a)?, wide(b)?);
                if a > b {
                    return Err(format!("empty range {item:?}"));
                }
                for x in a..=b {
                    out.push(T::try_from(x).map_err(|_| format!("value out of range in {item:?}"))?);
                }
            }
            None => out.push(parse_num(item)?),
        }
    }
    Ok(out)
}
