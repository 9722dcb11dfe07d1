//! Unweighted all-pairs distances via per-vertex BFS over bit masks.

use crate::error::{Error, Result};
use crate::graph::{full_mask, BitIter, Graph};

/// Row of hop distances from one source vertex, or `Disconnected` if some
/// vertex is unreachable.
pub(crate) fn bfs_distances(g: &Graph, source: usize) -> Result<Vec<u32>> {
    let n = g.order();
    let mut dist = vec![0u32; n];
    let mut reached = 1u64 << source;
    let mut frontier = reached;
    let mut d = 0u32;
    while frontier != 0 {
        let mut next = 0u64;
        for u in BitIter::new(frontier) {
            next |= g.neighbors_mask(u);
        }
        next &= !reached;
        d += 1;
        for u in BitIter::new(next) {
            dist[u] = d;
        }
        reached |= next;
        frontier = next;
    }
    if reached != full_mask(n) {
        return Err(Error::Disconnected);
    }
    Ok(dist)
}

/// Dense n-by-n matrix of hop distances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn compute(g: &Graph) -> Result<DistanceMatrix> {
        let n = g.order();
        let mut d = Vec::with_capacity(n * n);
        for v in 0..n {
            d.extend_from_slice(&bfs_distances(g, v)?);
        }
        Ok(DistanceMatrix { n, d })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> u32 {
        debug_assert!(u < self.n && v < self.n);
        self.d[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest distance out of `u`.
    pub fn eccentricity(&self, u: usize) -> u32 {
        *self.row(u).iter().max().expect("order >= 1")
    }

    /// Largest distance overall.
    pub fn diameter(&self) -> u32 {
        *self.d.iter().max().expect("order >= 1")
    }
}

/// Eccentricity of `u` in a connected graph.
pub fn eccentricity(g: &Graph, u: usize) -> Result<u32> {
    Ok(*bfs_distances(g, u)?.iter().max().expect("order >= 1"))
}

/// Diameter of a connected graph.
pub fn diameter(g: &Graph) -> Result<u32> {
    let mut best = 0;
    for u in g.vertices() {
        best = best.max(eccentricity(g, u)?);
    }
    Ok(best)
}
