//! Exhaustive solver for small graphs.
//!
//! Every non-empty vertex subset is checked with bitmask searches that share
//! no code with [`crate::domination`] or [`crate::cct`], so the results can
//! serve as an independent reference for them.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const DEFAULT_CAP: usize = 16;
/// Subsets are held in a `u64` and enumerated exhaustively; beyond this the
/// enumeration is hopeless anyway.
pub const HARD_CAP: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleOptions {
    pub cap: usize,
    pub witness_limit: usize,
}

impl Default for OracleOptions {
    fn default() -> Self {
        Self {
            cap: DEFAULT_CAP,
            witness_limit: 8,
        }
    }
}

/// Extremal less dispersive k-dominating sets of a small graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactResult {
    pub k: u32,
    /// `γ_kcomf`: minimum size of a feasible set, `None` if there is none.
    pub gamma: Option<usize>,
    /// `Γ_kcomf`: maximum size of a feasible set.
    pub gamma_max: Option<usize>,
    /// Lexicographically smallest witnesses of size `gamma`.
    pub min_witnesses: Vec<VertexSet>,
    /// Lexicographically smallest witnesses of size `gamma_max`.
    pub max_witnesses: Vec<VertexSet>,
    pub feasible_count: u64,
    /// Minimum connected k-dominating set size, for cross-checking.
    pub exact_cds_size: usize,
}

impl ExactResult {
    pub fn exists(&self) -> bool {
        self.gamma.is_some()
    }
}

type Mask = u64;

fn bit(v: usize) -> Mask {
    1 << v
}

fn members(mut mask: Mask) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (mask != 0).then(|| {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            v
        })
    })
}

fn to_set(mask: Mask) -> VertexSet {
    members(mask).collect()
}

struct BitGraph {
    n: usize,
    adj: Vec<Mask>,
    ecc: Vec<u32>,
    diameter: u32,
}

impl BitGraph {
    fn new(g: &Graph, opts: &OracleOptions) -> Result<Self> {
        let n = g.n();
        if opts.cap > HARD_CAP {
            return Err(Error::param(format!("oracle cap {} exceeds {HARD_CAP}", opts.cap)));
        }
        if n > opts.cap {
            return Err(Error::TooLarge { n, cap: opts.cap });
        }
        if n < 2 {
            return Err(Error::Degenerate);
        }
        let adj: Vec<Mask> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | bit(w)))
            .collect();
        let mut bg = Self {
            n,
            adj,
            ecc: Vec::new(),
            diameter: 0,
        };
        let all = bg.full();
        let mut ecc = Vec::with_capacity(n);
        for v in 0..n {
            match bg.spread(all, v) {
                (reached, depth) if reached == all => ecc.push(depth),
                _ => return Err(Error::NotConnected),
            }
        }
        bg.diameter = *ecc.iter().max().unwrap();
        bg.ecc = ecc;
        Ok(bg)
    }

    fn full(&self) -> Mask {
        if self.n == 64 {
            Mask::MAX
        } else {
            bit(self.n) - 1
        }
    }

    /// BFS from `src` inside `within`: the reached set and the last depth.
    fn spread(&self, within: Mask, src: usize) -> (Mask, u32) {
        let mut reached = bit(src);
        let mut frontier = reached;
        let mut depth = 0;
        loop {
            let next = members(frontier).fold(0, |m, u| m | self.adj[u]) & within & !reached;
            if next == 0 {
                return (reached, depth);
            }
            depth += 1;
            reached |= next;
            frontier = next;
        }
    }

    fn balls(&self, k: u32) -> Vec<Mask> {
        let all = self.full();
        (0..self.n)
            .map(|v| {
                let mut reached = bit(v);
                let mut frontier = reached;
                for _ in 0..k {
                    frontier = members(frontier).fold(0, |m, u| m | self.adj[u]) & all & !reached;
                    reached |= frontier;
                }
                reached
            })
            .collect()
    }

    fn connected(&self, mask: Mask) -> bool {
        self.spread(mask, mask.trailing_zeros() as usize).0 == mask
    }

    fn dominates(&self, mask: Mask, balls: &[Mask]) -> bool {
        balls.iter().all(|&b| b & mask != 0)
    }

    fn less_dispersive(&self, mask: Mask) -> bool {
        members(mask).all(|v| {
            let (reached, depth) = self.spread(mask, v);
            reached == mask && depth < self.ecc[v]
        })
    }
}

/// Masks of size `size` over `n` bits, in increasing numeric order.
fn subsets_of_size(n: usize, size: usize) -> impl Iterator<Item = Mask> {
    let limit = bit(n);
    let mut next = if size == 0 || size > n { limit } else { bit(size) - 1 };
    std::iter::from_fn(move || {
        if next >= limit {
            return None;
        }
        let cur = next;
        // Gosper's hack: next larger integer with the same popcount.
        let c = cur & cur.wrapping_neg();
        let r = cur + c;
        next = (((r ^ cur) >> 2) / c) | r;
        Some(cur)
    })
}

fn check_k(bg: &BitGraph, k: u32) -> Result<()> {
    if k < 1 || k > bg.diameter {
        return Err(Error::param(format!("k = {k} outside 1..={}", bg.diameter)));
    }
    Ok(())
}

fn smallest_witnesses(masks: Vec<Mask>, limit: usize) -> Vec<VertexSet> {
    let mut sets: Vec<VertexSet> = masks.into_iter().map(to_set).collect();
    sets.sort();
    sets.truncate(limit);
    sets
}

pub fn exact_cc(g: &Graph, k: u32) -> Result<ExactResult> {
    exact_cc_with(g, k, &OracleOptions::default())
}

/// Scans all subsets by increasing size; feasible means less dispersive and
/// coverage radius at most `k`.
pub fn exact_cc_with(g: &Graph, k: u32, opts: &OracleOptions) -> Result<ExactResult> {
    let bg = BitGraph::new(g, opts)?;
    check_k(&bg, k)?;
    let balls = bg.balls(k);

    let mut gamma = None;
    let mut gamma_max = None;
    let mut min_masks = Vec::new();
    let mut max_masks = Vec::new();
    let mut feasible_count = 0;
    let mut exact_cds_size = None;
    for size in 1..=bg.n {
        let mut found = Vec::new();
        for mask in subsets_of_size(bg.n, size) {
            if !bg.dominates(mask, &balls) {
                continue;
            }
            if exact_cds_size.is_none() && bg.connected(mask) {
                exact_cds_size = Some(size);
            }
            if bg.less_dispersive(mask) {
                found.push(mask);
            }
        }
        if found.is_empty() {
            continue;
        }
        feasible_count += found.len() as u64;
        if gamma.is_none() {
            gamma = Some(size);
            min_masks = found.clone();
        }
        gamma_max = Some(size);
        max_masks = found;
    }
    Ok(ExactResult {
        k,
        gamma,
        gamma_max,
        min_witnesses: smallest_witnesses(min_masks, opts.witness_limit),
        max_witnesses: smallest_witnesses(max_masks, opts.witness_limit),
        feasible_count,
        // The whole vertex set is always connected and dominating.
        exact_cds_size: exact_cds_size.unwrap_or(bg.n),
    })
}

/// Minimum size only, stopping after the first size class with a feasible set.
pub fn exact_gamma(g: &Graph, k: u32, opts: &OracleOptions) -> Result<Option<(usize, Vec<VertexSet>)>> {
    let bg = BitGraph::new(g, opts)?;
    check_k(&bg, k)?;
    let balls = bg.balls(k);
    for size in 1..=bg.n {
        let found: Vec<Mask> = subsets_of_size(bg.n, size)
            .filter(|&m| bg.dominates(m, &balls) && bg.less_dispersive(m))
            .collect();
        if !found.is_empty() {
            return Ok(Some((size, smallest_witnesses(found, opts.witness_limit))));
        }
    }
    Ok(None)
}

/// Every less dispersive k-dominating set, ascending by size then mask.
pub fn feasible_sets(g: &Graph, k: u32, opts: &OracleOptions) -> Result<Vec<VertexSet>> {
    let bg = BitGraph::new(g, opts)?;
    check_k(&bg, k)?;
    let balls = bg.balls(k);
    Ok((1..=bg.n)
        .flat_map(|size| subsets_of_size(bg.n, size))
        .filter(|&m| bg.dominates(m, &balls) && bg.less_dispersive(m))
        .map(to_set)
        .collect())
}

/// A comfortable team is a less dispersive dominating set (k = 1).
pub fn comfortable_team_exists(g: &Graph) -> Result<bool> {
    Ok(exact_gamma(g, 1, &OracleOptions::default())?.is_some())
}

/// Minimum connected k-dominating set and its lexicographically smallest
/// witness.
pub fn exact_connected_dominating(g: &Graph, k: u32) -> Result<(usize, VertexSet)> {
    let bg = BitGraph::new(g, &OracleOptions::default())?;
    check_k(&bg, k)?;
    let balls = bg.balls(k);
    for size in 1..=bg.n {
        let found: Vec<Mask> = subsets_of_size(bg.n, size)
            .filter(|&m| bg.dominates(m, &balls) && bg.connected(m))
            .collect();
        if !found.is_empty() {
            let witness = smallest_witnesses(found, 1).remove(0);
            return Ok((size, witness));
        }
    }
    unreachable!("the full vertex set is connected and dominating")
}
