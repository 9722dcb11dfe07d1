//! Transmission-based vertex and edge invariants, and the stepwise
//! transmission irregularity verdict.
//!
//! The transmission of a vertex is the sum of its hop distances to every
//! vertex. An edge's imbalance is the absolute difference of its endpoint
//! transmissions. A connected graph is generalized stepwise transmission
//! irregular (generalized STI) when every edge has the same imbalance
//! `k >= 1`; transmissions stay in exact 64-bit integers throughout.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

use crate::distance::{bfs_distances, diameter};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::structure::{bipartition, girth, twin_pairs};

/// The transmission of every vertex of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransmissionProfile {
    tr: Vec<u64>,
}

impl TransmissionProfile {
    #[inline]
    pub fn get(&self, v: usize) -> u64 {
        self.tr[v]
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.tr
    }

    /// Sum over all vertices; always even (each distance is counted twice).
    pub fn total(&self) -> u64 {
        self.tr.iter().sum()
    }
}

/// Compute every vertex transmission.
pub fn transmissions(g: &Graph) -> Result<TransmissionProfile> {
    let mut tr = Vec::with_capacity(g.order());
    for v in g.vertices() {
        tr.push(bfs_distances(g, v)?.iter().map(|&d| d as u64).sum());
    }
    Ok(TransmissionProfile { tr })
}

/// How the remaining vertices split around an edge `uv`: `n_u` counts the
/// vertices strictly closer to `u` (including `u` itself), `n_v` those
/// strictly closer to `v`, and `ties` the rest. On bipartite graphs
/// `ties = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EdgeSideCounts {
    pub u: usize,
    pub v: usize,
    pub n_u: usize,
    pub n_v: usize,
    pub ties: usize,
}

/// Classify every vertex of a connected graph by which endpoint of the
/// edge `uv` it is closer to.
pub fn edge_side_counts(g: &Graph, u: usize, v: usize) -> Result<EdgeSideCounts> {
    for x in [u, v] {
        if x >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: x, order: g.order() });
        }
    }
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let du = bfs_distances(g, u)?;
    let dv = bfs_distances(g, v)?;
    let mut counts = EdgeSideCounts { u, v, n_u: 0, n_v: 0, ties: 0 };
    for x in g.vertices() {
        match du[x].cmp(&dv[x]) {
            std::cmp::Ordering::Less => counts.n_u += 1,
            std::cmp::Ordering::Greater => counts.n_v += 1,
            std::cmp::Ordering::Equal => counts.ties += 1,
        }
    }
    Ok(counts)
}

/// Absolute difference of the endpoint transmissions of an edge.
pub fn imbalance(g: &Graph, u: usize, v: usize) -> Result<u64> {
    for x in [u, v] {
        if x >= g.order() {
            return Err(Error::VertexOutOfRange { vertex: x, order: g.order() });
        }
    }
    if !g.has_edge(u, v) {
        return Err(Error::NotAnEdge { u, v });
    }
    let tr = transmissions(g)?;
    Ok(tr.get(u).abs_diff(tr.get(v)))
}

/// For an edge `uv` of a connected bipartite graph, the difference
/// `(Tr(u) - Tr(v)) - (n_v - n_u)`. It is always zero there — the identity
/// is not asserted (and does not generally hold) off bipartite graphs.
pub fn entringer_residual(g: &Graph, u: usize, v: usize) -> Result<i64> {
    if bipartition(g)?.is_none() {
        return Err(Error::NotBipartite);
    }
    let counts = edge_side_counts(g, u, v)?;
    let tr = transmissions(g)?;
    let lhs = tr.get(u) as i64 - tr.get(v) as i64;
    let rhs = counts.n_v as i64 - counts.n_u as i64;
    Ok(lhs - rhs)
}

/// Outcome of classifying the edge imbalances of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StiVerdict {
    /// Distinct edge imbalances, ascending.
    pub imbalances: Vec<u64>,
    /// The single imbalance, when all edges agree (including 0).
    pub k: Option<u64>,
    /// True iff every edge has the same imbalance `k >= 1`.
    pub is_generalized_sti: bool,
    /// True iff all vertex transmissions are equal.
    pub is_transmission_regular: bool,
}

/// Classify a connected graph. A single vertex yields the vacuous verdict:
/// no imbalances, not generalized STI, transmission regular.
pub fn classify(g: &Graph) -> Result<StiVerdict> {
    let tr = transmissions(g)?;
    let mut set = BTreeSet::new();
    for (u, v) in g.edges() {
        set.insert(tr.get(u).abs_diff(tr.get(v)));
    }
    let imbalances: Vec<u64> = set.into_iter().collect();
    let k = match imbalances.as_slice() {
        [only] => Some(*only),
        _ => None,
    };
    let regular = tr.as_slice().iter().all(|&t| t == tr.get(0));
    Ok(StiVerdict {
        is_generalized_sti: k.is_some_and(|k| k >= 1),
        imbalances,
        k,
        is_transmission_regular: regular,
    })
}

/// True iff all vertex transmissions are equal.
pub fn is_transmission_regular(g: &Graph) -> Result<bool> {
    let tr = transmissions(g)?;
    Ok(tr.as_slice().iter().all(|&t| t == tr.get(0)))
}

/// True iff all vertex transmissions are pairwise distinct.
pub fn is_transmission_irregular(g: &Graph) -> Result<bool> {
    let tr = transmissions(g)?;
    let set: BTreeSet<u64> = tr.as_slice().iter().copied().collect();
    Ok(set.len() == g.order())
}

/// True iff the transmissions are pairwise distinct and form an interval
/// of consecutive integers.
pub fn is_interval_transmission_irregular(g: &Graph) -> Result<bool> {
    let tr = transmissions(g)?;
    let set: BTreeSet<u64> = tr.as_slice().iter().copied().collect();
    if set.len() != g.order() {
        return Ok(false);
    }
    let min = *set.first().expect("order >= 1");
    let max = *set.last().expect("order >= 1");
    Ok(max - min + 1 == g.order() as u64)
}

/// Full per-graph analysis in the shape emitted as JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub n: usize,
    pub m: usize,
    pub imbalances: Vec<u64>,
    pub k: Option<u64>,
    pub generalized_sti: bool,
    pub transmission_regular: bool,
    pub bipartite: bool,
    pub twin_free: bool,
    pub girth: Option<usize>,
    pub diameter: u32,
}

/// Analyze a connected graph: classification plus the structural context.
pub fn analysis_record(g: &Graph) -> Result<AnalysisRecord> {
    let verdict = classify(g)?;
    Ok(AnalysisRecord {
        n: g.order(),
        m: g.edge_count(),
        imbalances: verdict.imbalances,
        k: verdict.k,
        generalized_sti: verdict.is_generalized_sti,
        transmission_regular: verdict.is_transmission_regular,
        bipartite: bipartition(g)?.is_some(),
        twin_free: twin_pairs(g).is_empty(),
        girth: girth(g),
        diameter: diameter(g)?,
    })
}
