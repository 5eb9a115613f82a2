use std::time::Instant;

use crate::error::Result;
use crate::generators::{generate, Family, GenSpec};
use crate::graph::all_pairs_distances;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ScalingPoint {
    pub n: usize,
    pub m: usize,
    /// Best of `repeats` runs.
    pub millis: f64,
}

/// Sparse G(n, p) with expected degree about `2 ln n`, which is connected
/// with high probability.
pub fn sparse_gnp(n: usize, seed: u64) -> GenSpec {
    let p = (2.0 * (n as f64).ln() / n as f64).min(1.0);
    GenSpec::seeded(Family::Gnp { n, p }, seed)
}

/// All-pairs BFS timings on sparse random graphs of the given sizes.
pub fn apsp_scaling(sizes: &[usize], seed: u64, repeats: usize) -> Result<Vec<ScalingPoint>> {
    sizes
        .iter()
        .map(|&n| {
            let g = generate(&sparse_gnp(n, seed))?.graph;
            let millis = (0..repeats.max(1))
                .map(|_| {
                    let t = Instant::now();
                    let dm = all_pairs_distances(&g);
                    std::hint::black_box(&dm);
                    t.elapsed().as_secs_f64() * 1e3
                })
                .fold(f64::INFINITY, f64::min);
            Ok(ScalingPoint { n: g.n(), m: g.m(), millis })
        })
        .collect()
}

/// Runtime ratios between consecutive points.
pub fn growth_factors(points: &[ScalingPoint]) -> Vec<f64> {
    points.windows(2).map(|w| w[1].millis / w[0].millis.max(1e-6)).collect()
}
