//! Simple undirected graphs on 1..=64 vertices, one `u64` adjacency row per
//! vertex. Everything downstream (distances, canonical labeling, search)
//! leans on cheap mask intersections, so the order cap is a deliberate
//! design constraint rather than an implementation accident.

use crate::error::{Error, Result};

/// Hard cap on the vertex count; an adjacency row is a single 64-bit word.
pub const MAX_ORDER: usize = 64;

/// Iterator over the set bit positions of a `u64` mask, ascending.
#[derive(Clone, Copy)]
pub struct BitIter(u64);

impl BitIter {
    #[inline]
    pub fn new(mask: u64) -> Self {
        BitIter(mask)
    }
}

impl Iterator for BitIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

/// Bit mask with exactly the low `n` bits set.
#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    debug_assert!(n >= 1 && n <= MAX_ORDER);
    if n == MAX_ORDER {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Simple undirected graph; vertices are `0..order()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Build a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if n < 1 || n > MAX_ORDER {
            return Err(Error::OrderOutOfRange(n));
        }
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, order: n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, order: n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Result<Graph> {
        Graph::new(n, &[])
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(|row| row.count_ones() as usize).min().unwrap_or(0)
    }

    /// Neighbors of `u` as a bit mask.
    #[inline]
    pub fn neighbors_mask(&self, u: usize) -> u64 {
        self.adj[u]
    }

    /// Neighbors of `u`, ascending.
    #[inline]
    pub fn neighbors(&self, u: usize) -> BitIter {
        BitIter(self.adj[u])
    }

    #[inline]
    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Edges as `(u, v)` pairs with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            let above = self.adj[u] & !full_mask(u + 1);
            BitIter(above).map(move |v| (u, v))
        })
    }

    /// Apply a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.n);
        debug_assert!({
            let mut seen = 0u64;
            perm.iter().for_each(|&p| seen |= 1 << p);
            seen == full_mask(self.n)
        });
        let mut adj = vec![0u64; self.n];
        for u in 0..self.n {
            let mut row = 0u64;
            for v in BitIter(self.adj[u]) {
                row |= 1 << perm[v];
            }
            adj[perm[u]] = row;
        }
        Graph { n: self.n, adj }
    }

    /// Extend by one vertex adjacent to exactly the vertices in `mask`.
    pub(crate) fn extended(&self, mask: u64) -> Graph {
        debug_assert!(self.n < MAX_ORDER);
        debug_assert_eq!(mask & !full_mask(self.n), 0);
        let v = self.n;
        let mut adj = self.adj.clone();
        adj.push(mask);
        for u in BitIter(mask) {
            adj[u] |= 1 << v;
        }
        Graph { n: self.n + 1, adj }
    }

    /// Cartesian product; vertex `(x, u)` of the product gets index
    /// `x * other.order() + u`. `(x, u) ~ (y, w)` iff `x = y` and `u ~ w`,
    /// or `u = w` and `x ~ y`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let (ng, nh) = (self.n, other.n);
        let n = ng
            .checked_mul(nh)
            .filter(|&n| n <= MAX_ORDER)
            .ok_or(Error::OrderOutOfRange(ng * nh))?;
        let mut edges = Vec::new();
        for x in 0..ng {
            for (u, w) in other.edges() {
                edges.push((x * nh + u, x * nh + w));
            }
        }
        for (x, y) in self.edges() {
            for u in 0..nh {
                edges.push((x * nh + u, y * nh + u));
            }
        }
        Graph::new(n, &edges)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
