use std::collections::VecDeque;
use std::fmt;

use rayon::prelude::*;

use super::{Graph, Vertex};

/// A hop count, or the explicit absence of any path.
///
/// `Unreachable` orders above every finite distance, so `max` over a set
/// containing a disconnected pair is `Unreachable`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Hops {
    Finite(u32),
    Unreachable,
}

impl Hops {
    pub fn finite(self) -> Option<u32> {
        match self {
            Hops::Finite(d) => Some(d),
            Hops::Unreachable => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Hops::Finite(_))
    }
}

impl From<Option<u32>> for Hops {
    fn from(d: Option<u32>) -> Self {
        d.map_or(Hops::Unreachable, Hops::Finite)
    }
}

impl fmt::Display for Hops {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Hops::Finite(d) => write!(f, "{d}"),
            Hops::Unreachable => write!(f, "unreachable"),
        }
    }
}

const NO_PATH: u32 = u32::MAX;

/// All-pairs hop distances, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    // NO_PATH marks disconnected pairs; never exposed as a number.
    data: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: Vertex, v: Vertex) -> Hops {
        self.raw(u, v).into()
    }

    pub(crate) fn raw(&self, u: Vertex, v: Vertex) -> Option<u32> {
        match self.data[u * self.n + v] {
            NO_PATH => None,
            d => Some(d),
        }
    }

    pub fn row(&self, u: Vertex) -> impl Iterator<Item = Hops> + '_ {
        self.data[u * self.n..(u + 1) * self.n]
            .iter()
            .map(|&d| if d == NO_PATH { Hops::Unreachable } else { Hops::Finite(d) })
    }
}

/// One BFS per source, run in parallel. Rows are independent, so the result
/// does not depend on scheduling.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut data = vec![NO_PATH; n * n];
    if n > 0 {
        data.par_chunks_mut(n).enumerate().for_each_init(
            || VecDeque::with_capacity(n),
            |queue, (src, row)| bfs_row(g, src, row, queue),
        );
    }
    DistanceMatrix { n, data }
}

fn bfs_row(g: &Graph, src: Vertex, row: &mut [u32], queue: &mut VecDeque<Vertex>) {
    queue.clear();
    row[src] = 0;
    queue.push_back(src);
    while let Some(u) = queue.pop_front() {
        let d = row[u] + 1;
        for &w in g.neighbors(u) {
            if row[w] == NO_PATH {
                row[w] = d;
                queue.push_back(w);
            }
        }
    }
}
