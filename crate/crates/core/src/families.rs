//! Deterministic constructors for the graph families used throughout the
//! crate, with fixed vertex numberings so that serialized fixtures stay
//! byte-stable across releases.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metrics::classify;
use crate::structure::{bipartition, is_connected};

/// A named family member: the family plus its parameters (and operand
/// graphs where the family is built from other graphs).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    /// `K_{p,q}` with sides `0..p` and `p..p+q`.
    CompleteBipartite { p: usize, q: usize },
    /// Star with `m` leaves (`K_{1,m}`), center at vertex 0.
    Star { m: usize },
    /// Path on `m` vertices, labeled consecutively.
    Path { m: usize },
    /// Cycle on `m` vertices, labeled consecutively.
    Cycle { m: usize },
    /// `r` disjoint copies of `operand` glued at one shared copy of `root`.
    Amalgamation {
        operand: Graph,
        root: usize,
        copies: usize,
    },
    /// Ring of `2q` copies of `K_{2,p}` sharing consecutive degree-two hubs.
    Gamma { p: usize, q: usize },
    /// Ring alternating `K_{2,p}` and `K_{2,2}` blocks, `q` of each.
    HGraph { p: usize, q: usize },
    /// Path on `n - r` vertices plus `r` extra vertices joined to both ends.
    GGraph { n: usize, r: usize },
    /// Cycle on `2m` vertices plus a hub adjacent to every second vertex.
    AlternatingWheel { m: usize },
    /// Cartesian product of two graphs.
    Product { left: Graph, right: Graph },
}

impl FamilySpec {
    /// Constructs the member this spec describes.
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::CompleteBipartite { p, q } => complete_bipartite(*p, *q),
            FamilySpec::Star { m } => star(*m),
            FamilySpec::Path { m } => path(*m),
            FamilySpec::Cycle { m } => cycle(*m),
            FamilySpec::Amalgamation {
                operand,
                root,
                copies,
            } => amalgamation(operand, *root, *copies),
            FamilySpec::Gamma { p, q } => gamma_graph(*p, *q),
            FamilySpec::HGraph { p, q } => h_graph(*p, *q),
            FamilySpec::GGraph { n, r } => g_graph(*n, *r),
            FamilySpec::AlternatingWheel { m } => alternating_wheel(*m),
            FamilySpec::Product { left, right } => left.cartesian_product(right),
        }
    }

    /// The uniform edge imbalance this family is proven to have, when the
    /// hypotheses of the corresponding result hold for these parameters.
    ///
    /// Returns `None` whenever the hypotheses fail (wrong parity, even ring
    /// length, operand not transmission regular, ...), without extrapolating
    /// beyond the proven cases. `Some(k)` always has `k >= 1`.
    pub fn predicted_k(&self) -> Option<u64> {
        match self {
            FamilySpec::CompleteBipartite { p, q } => {
                if *p >= 1 && *q >= 1 && p != q {
                    Some(p.abs_diff(*q) as u64)
                } else {
                    None
                }
            }
            // A star with m leaves is K_{m,1}.
            FamilySpec::Star { m } => {
                if *m >= 2 {
                    Some((*m - 1) as u64)
                } else {
                    None
                }
            }
            // The three-vertex path is the star with two leaves; longer
            // paths have non-uniform imbalances.
            FamilySpec::Path { m } => {
                if *m == 3 {
                    Some(1)
                } else {
                    None
                }
            }
            // Cycles are transmission regular: every imbalance is zero.
            FamilySpec::Cycle { .. } => None,
            FamilySpec::Amalgamation {
                operand,
                root,
                copies,
            } => {
                let n = operand.order();
                if *root >= n || *copies < 2 {
                    return None;
                }
                let verdict = classify(operand).ok()?;
                let bipartite = bipartition(operand).ok()?.is_some();
                if !(bipartite && verdict.is_transmission_regular) {
                    return None;
                }
                let k = ((copies - 1) * (n - 1)) as u64;
                (k >= 1).then_some(k)
            }
            FamilySpec::Gamma { p, q } => {
                if *p >= 2 && *q >= 2 {
                    Some((2 * p - 2) as u64)
                } else {
                    None
                }
            }
            // The uniform-imbalance proof needs an odd number of blocks of
            // each kind; even q yields the two-value imbalance set instead.
            FamilySpec::HGraph { p, q } => {
                if *p >= 2 && *q >= 3 && q % 2 == 1 {
                    Some(*p as u64)
                } else {
                    None
                }
            }
            FamilySpec::GGraph { n, r } => {
                let well_formed = *n >= 5 && *r >= 2 && *n >= r + 3;
                if well_formed && n % 2 == (r - 1) % 2 {
                    Some((*r - 1) as u64)
                } else {
                    None
                }
            }
            // No proven uniform imbalance for general m; small members are
            // classified directly instead.
            FamilySpec::AlternatingWheel { .. } => None,
            FamilySpec::Product { left, right } => {
                let n = left.order();
                if right.order() != n {
                    return None;
                }
                let kl = classify(left).ok()?.k.filter(|k| *k >= 1)?;
                let kr = classify(right).ok()?.k.filter(|k| *k >= 1)?;
                if kl != kr {
                    return None;
                }
                Some(n as u64 * kl)
            }
        }
    }
}

fn params_err(msg: impl Into<String>) -> Error {
    Error::FamilyParameters(msg.into())
}

/// Checks the family invariant that every constructed member is connected.
/// Simplicity is already guaranteed by `Graph`'s constructor.
fn finish(g: Graph) -> Graph {
    debug_assert!(is_connected(&g), "family member must be connected");
    g
}

/// Complete bipartite graph `K_{p,q}`: vertices `0..p` on one side,
/// `p..p+q` on the other.
pub fn complete_bipartite(p: usize, q: usize) -> Result<Graph> {
    if p < 1 || q < 1 {
        return Err(params_err(format!(
            "complete bipartite sides must be nonempty, got p={p}, q={q}"
        )));
    }
    if p + q > crate::graph::MAX_ORDER {
        return Err(params_err(format!(
            "complete bipartite order p+q={} exceeds {}",
            p + q,
            crate::graph::MAX_ORDER
        )));
    }
    let mut edges = Vec::with_capacity(p * q);
    for a in 0..p {
        for b in p..p + q {
            edges.push((a, b));
        }
    }
    Ok(finish(Graph::new(p + q, &edges)?))
}

/// Star with `m >= 1` leaves: center is vertex 0, leaves are `1..=m`.
pub fn star(m: usize) -> Result<Graph> {
    if m < 1 {
        return Err(params_err("star needs at least one leaf"));
    }
    if m + 1 > crate::graph::MAX_ORDER {
        return Err(params_err(format!(
            "star order {} exceeds {}",
            m + 1,
            crate::graph::MAX_ORDER
        )));
    }
    let edges: Vec<(usize, usize)> = (1..=m).map(|v| (0, v)).collect();
    Ok(finish(Graph::new(m + 1, &edges)?))
}

/// Path on `m >= 2` vertices `0 - 1 - ... - m-1`.
pub fn path(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(params_err("path needs at least two vertices"));
    }
    if m > crate::graph::MAX_ORDER {
        return Err(params_err(format!(
            "path order {m} exceeds {}",
            crate::graph::MAX_ORDER
        )));
    }
    let edges: Vec<(usize, usize)> = (0..m - 1).map(|v| (v, v + 1)).collect();
    Ok(finish(Graph::new(m, &edges)?))
}

/// Cycle on `m >= 3` vertices `0 - 1 - ... - m-1 - 0`.
pub fn cycle(m: usize) -> Result<Graph> {
    if m < 3 {
        return Err(params_err("cycle needs at least three vertices"));
    }
    if m > crate::graph::MAX_ORDER {
        return Err(params_err(format!(
            "cycle order {m} exceeds {}",
            crate::graph::MAX_ORDER
        )));
    }
    let mut edges: Vec<(usize, usize)> = (0..m - 1).map(|v| (v, v + 1)).collect();
    edges.push((m - 1, 0));
    Ok(finish(Graph::new(m, &edges)?))
}

/// Vertex amalgamation: `copies` disjoint copies of `g` glued at a single
/// shared copy of `root`.
///
/// Vertex 0 of the result is the identified root. Copy `i` (counting from
/// zero) occupies indices `1 + i*(n-1) .. 1 + (i+1)*(n-1)`, keeping the
/// order of `g`'s vertices with `root` removed. The result has order
/// `copies * (n - 1) + 1`.
pub fn amalgamation(g: &Graph, root: usize, copies: usize) -> Result<Graph> {
    let n = g.order();
    if root >= n {
        return Err(Error::VertexOutOfRange {
            vertex: root,
            order: n,
        });
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    if copies < 2 {
        return Err(params_err("amalgamation needs at least two copies"));
    }
    let order = copies * (n - 1) + 1;
    if order > crate::graph::MAX_ORDER {
        return Err(params_err(format!(
            "amalgamation order {order} exceeds {}",
            crate::graph::MAX_ORDER
        )));
    }

    // Rank of each non-root vertex of g among the surviving vertices.
    let rank: Vec<usize> = g
        .vertices()
        .map(|v| if v < root { v } else { v.saturating_sub(1) })
        .collect();
    let mut edges = Vec::with_capacity(copies * g.edge_count());
    for i in 0..copies {
        let base = 1 + i * (n - 1);
        let map = |v: usize| if v == root { 0 } else { base + rank[v] };
        for (a, b) in g.edges() {
            edges.push((map(a), map(b)));
        }
    }
    Ok(finish(Graph::new(order, &edges)?))
}

/// Ring of `2q` copies of `K_{2,p}`: hub vertices `v_1..v_{2q}` at indices
/// `0..2q`, then block vertices `w_{i,j}` in lexicographic `(i, j)` order.
/// Block `w_{i,*}` is joined to the consecutive hubs `v_i` and `v_{i+1}`
/// (cyclically). Order `2q(p+1)`.
pub fn gamma_graph(p: usize, q: usize) -> Result<Graph> {
    if p < 2 || q < 2 {
        return Err(params_err(format!(
            "ring of complete bipartite blocks needs p >= 2 and q >= 2, got p={p}, q={q}"
        )));
    }
    let order = 2 * q * (p + 1);
    if order > crate::graph::MAX_ORDER {
        return Err(params_err(format!(
            "order 2q(p+1)={order} exceeds {}",
            crate::graph::MAX_ORDER
        )));
    }
    let hubs = 2 * q;
    let mut edges = Vec::with_capacity(2 * hubs * p);
    for i in 0..hubs {
        let block = hubs + i * p;
        for j in 0..p {
            edges.push((i, block + j));
            edges.push(((i + 1) % hubs, block + j));
        }
    }
    Ok(finish(Graph::new(order, &edges)?))
}

/// Ring alternating `K_{2,p}` and `K_{2,2}` blocks: hub vertices
/// `v_1..v_{2q}` at indices `0..2q`, then blocks `w_{i,*}` in lexicographic
/// `(i, j)` order, where odd-position blocks have `p` vertices and
/// even-position blocks have 2. Block `w_{i,*}` is joined to hubs `v_i` and
/// `v_{i+1}` (cyclically). Order `q(p+4)`.
pub fn h_graph(p: usize, q: usize) -> Result<Graph> {
    if p < 2 || q < 2 {
        return Err(params_err(format!(
            "alternating ring needs p >= 2 and q >= 2, got p={p}, q={q}"
        )));
    }
    let order = q * (p + 4);
    if order > crate::graph::MAX_ORDER {
        return Err(params_err(format!(
            "order q(p+4)={order} exceeds {}",
            crate::graph::MAX_ORDER
        )));
    }
    let hubs = 2 * q;
    let mut edges = Vec::new();
    let mut block = hubs;
    for i in 0..hubs {
        // Blocks alternate sizes: position 1, 3, 5, ... (0, 2, 4, ...
        // zero-based) carry p vertices, the rest carry 2.
        let size = if i % 2 == 0 { p } else { 2 };
        for j in 0..size {
            edges.push((i, block + j));
            edges.push(((i + 1) % hubs, block + j));
        }
        block += size;
    }
    debug_assert_eq!(block, order);
    Ok(finish(Graph::new(order, &edges)?))
}

/// Path `v_1..v_{n-r}` (indices `0..n-r`) plus `r` extra vertices
/// (indices `n-r..n`) each adjacent to both path ends `v_1` and `v_{n-r}`.
pub fn g_graph(n: usize, r: usize) -> Result<Graph> {
    if n < 5 || r < 2 || n < r + 3 {
        return Err(params_err(format!(
            "path-with-end-hubs needs n >= 5, r >= 2, n-r >= 3, got n={n}, r={r}"
        )));
    }
    if n > crate::graph::MAX_ORDER {
        return Err(params_err(format!(
            "order {n} exceeds {}",
            crate::graph::MAX_ORDER
        )));
    }
    let last = n - r - 1;
    let mut edges: Vec<(usize, usize)> = (0..last).map(|v| (v, v + 1)).collect();
    for v in n - r..n {
        edges.push((0, v));
        edges.push((last, v));
    }
    Ok(finish(Graph::new(n, &edges)?))
}

/// Cycle `w_1..w_{2m}` (indices `0..2m`) plus a hub (index `2m`) adjacent
/// to the even-position vertices `w_2, w_4, ..., w_{2m}` (odd indices).
pub fn alternating_wheel(m: usize) -> Result<Graph> {
    if m < 2 {
        return Err(params_err("alternating wheel needs m >= 2"));
    }
    let order = 2 * m + 1;
    if order > crate::graph::MAX_ORDER {
        return Err(params_err(format!(
            "order {order} exceeds {}",
            crate::graph::MAX_ORDER
        )));
    }
    let rim = 2 * m;
    let mut edges: Vec<(usize, usize)> = (0..rim).map(|v| (v, (v + 1) % rim)).collect();
    for v in 0..m {
        edges.push((2 * v + 1, rim));
    }
    Ok(finish(Graph::new(order, &edges)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::metrics::{edge_side_counts, transmissions};

    fn verdict_of(g: &Graph) -> crate::metrics::StiVerdict {
        classify(g).unwrap()
    }

    #[test]
    fn complete_bipartite_classification() {
        let g = complete_bipartite(4, 1).unwrap();
        assert_eq!(g.order(), 5);
        assert_eq!(verdict_of(&g).k, Some(3));

        let g = complete_bipartite(5, 3).unwrap();
        assert_eq!(verdict_of(&g).k, Some(2));

        let g = complete_bipartite(3, 3).unwrap();
        let v = verdict_of(&g);
        assert_eq!(v.imbalances, vec![0]);
        assert!(v.is_transmission_regular);
    }

    #[test]
    fn complete_bipartite_rejects_bad_parameters() {
        assert!(matches!(
            complete_bipartite(0, 3),
            Err(Error::FamilyParameters(_))
        ));
        assert!(matches!(
            complete_bipartite(3, 0),
            Err(Error::FamilyParameters(_))
        ));
        assert!(matches!(
            complete_bipartite(33, 32),
            Err(Error::FamilyParameters(_))
        ));
    }

    #[test]
    fn star_path_cycle_shapes() {
        let s = star(3).unwrap();
        assert_eq!(s.order(), 4);
        assert_eq!(s.degree(0), 3);
        assert_eq!(verdict_of(&s).k, Some(2));

        let p = path(3).unwrap();
        assert_eq!(verdict_of(&p).k, Some(1));
        assert_eq!(p.degree(0), 1);
        assert_eq!(p.degree(1), 2);

        let c = cycle(4).unwrap();
        assert_eq!(verdict_of(&c).imbalances, vec![0]);

        assert!(star(0).is_err());
        assert!(path(1).is_err());
        assert!(cycle(2).is_err());
    }

    #[test]
    fn amalgamation_layout_and_classification() {
        // Two four-cycles glued at a vertex: 7 vertices, uniform imbalance 3.
        let c4 = cycle(4).unwrap();
        let g = amalgamation(&c4, 0, 2).unwrap();
        assert_eq!(g.order(), 7);
        assert_eq!(g.degree(0), 4);
        assert_eq!(verdict_of(&g).k, Some(3));

        let c6 = cycle(6).unwrap();
        let g = amalgamation(&c6, 2, 2).unwrap();
        assert_eq!(g.order(), 11);
        assert_eq!(verdict_of(&g).k, Some(5));

        let k33 = complete_bipartite(3, 3).unwrap();
        let g = amalgamation(&k33, 0, 3).unwrap();
        assert_eq!(g.order(), 16);
        assert_eq!(g.degree(0), 9);
        assert_eq!(verdict_of(&g).k, Some(10));
    }

    #[test]
    fn amalgamation_copy_indexing_preserves_operand_order() {
        // P_4 rooted at vertex 1: copy 0 holds ranks of vertices 0, 2, 3 at
        // indices 1, 2, 3; copy 1 at indices 4, 5, 6.
        let p4 = path(4).unwrap();
        let g = amalgamation(&p4, 1, 2).unwrap();
        assert_eq!(g.order(), 7);
        // Root keeps the edges 1-0 and 1-2 of each copy.
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(0, 2));
        assert!(g.has_edge(2, 3));
        assert!(g.has_edge(0, 4));
        assert!(g.has_edge(0, 5));
        assert!(g.has_edge(5, 6));
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn amalgamation_rejects_bad_input() {
        let c4 = cycle(4).unwrap();
        assert!(matches!(
            amalgamation(&c4, 4, 2),
            Err(Error::VertexOutOfRange { vertex: 4, order: 4 })
        ));
        assert!(matches!(
            amalgamation(&c4, 0, 1),
            Err(Error::FamilyParameters(_))
        ));
        // 22 copies of C_4 would need 67 vertices.
        assert!(matches!(
            amalgamation(&c4, 0, 22),
            Err(Error::FamilyParameters(_))
        ));
        let disconnected = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            amalgamation(&disconnected, 0, 2),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn gamma_ring_fixtures() {
        let g = gamma_graph(2, 2).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(verdict_of(&g).k, Some(2));
        // Edge from the first hub into the first block: the hub side of the
        // split has pq + p + q - 1 = 7 vertices.
        let counts = edge_side_counts(&g, 0, 4).unwrap();
        assert_eq!(counts.n_u, 7);
        assert_eq!(counts.ties, 0);

        let g = gamma_graph(3, 3).unwrap();
        assert_eq!(g.order(), 24);
        assert_eq!(verdict_of(&g).k, Some(4));

        assert!(gamma_graph(1, 2).is_err());
        assert!(gamma_graph(2, 11).is_err());
    }

    #[test]
    fn alternating_ring_fixtures() {
        let g = h_graph(2, 3).unwrap();
        assert_eq!(g.order(), 18);
        assert_eq!(verdict_of(&g).k, Some(2));

        let g = h_graph(3, 5).unwrap();
        assert_eq!(g.order(), 35);
        assert_eq!(verdict_of(&g).k, Some(3));

        // Even ring length: imbalances split into the two values 2 and 2p-2.
        let g = h_graph(3, 4).unwrap();
        assert_eq!(g.order(), 28);
        assert_eq!(verdict_of(&g).imbalances, vec![2, 4]);

        // For p = 2 those two values coincide, so the member is uniform
        // even though the odd-ring hypothesis fails.
        let g = h_graph(2, 4).unwrap();
        assert_eq!(verdict_of(&g).k, Some(2));

        assert!(h_graph(1, 3).is_err());
        assert!(h_graph(9, 5).is_err());
    }

    #[test]
    fn path_with_end_hubs_fixtures() {
        let g = g_graph(9, 2).unwrap();
        assert_eq!(g.order(), 9);
        assert_eq!(verdict_of(&g).k, Some(1));

        let g = g_graph(10, 3).unwrap();
        assert_eq!(verdict_of(&g).k, Some(2));

        // Parity fails: n even, r - 1 odd.
        let g = g_graph(10, 2).unwrap();
        let v = verdict_of(&g);
        assert!(v.k.is_none());
        assert!(v.imbalances.len() > 1);

        assert!(g_graph(4, 2).is_err());
        assert!(g_graph(7, 5).is_err());
        assert!(g_graph(9, 1).is_err());
        assert!(g_graph(65, 2).is_err());
    }

    #[test]
    fn alternating_wheel_fixtures() {
        // m = 2 is the complete bipartite K_{2,3}: the hub and the two
        // odd-position rim vertices are all adjacent to both even-position
        // rim vertices.
        let w = alternating_wheel(2).unwrap();
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!(canonical_form(&w), canonical_form(&k23));

        let w = alternating_wheel(3).unwrap();
        assert_eq!(w.order(), 7);
        assert_eq!(verdict_of(&w).k, Some(1));

        let w = alternating_wheel(4).unwrap();
        let tr = transmissions(&w).unwrap();
        assert_eq!(tr.get(8), 12);
        for v in 0..8 {
            assert_eq!(tr.get(v), if v % 2 == 1 { 15 } else { 18 });
        }
        assert_eq!(verdict_of(&w).k, Some(3));

        assert!(alternating_wheel(1).is_err());
        assert!(alternating_wheel(32).is_err());
    }

    #[test]
    fn predicted_k_follows_the_proven_hypotheses() {
        assert_eq!(
            FamilySpec::CompleteBipartite { p: 7, q: 3 }.predicted_k(),
            Some(4)
        );
        assert_eq!(
            FamilySpec::CompleteBipartite { p: 3, q: 3 }.predicted_k(),
            None
        );
        assert_eq!(FamilySpec::Star { m: 5 }.predicted_k(), Some(4));
        assert_eq!(FamilySpec::Star { m: 1 }.predicted_k(), None);
        assert_eq!(FamilySpec::Path { m: 3 }.predicted_k(), Some(1));
        assert_eq!(FamilySpec::Path { m: 4 }.predicted_k(), None);
        assert_eq!(FamilySpec::Cycle { m: 6 }.predicted_k(), None);
        assert_eq!(FamilySpec::Gamma { p: 3, q: 2 }.predicted_k(), Some(4));
        assert_eq!(FamilySpec::HGraph { p: 2, q: 4 }.predicted_k(), None);
        assert_eq!(FamilySpec::HGraph { p: 2, q: 3 }.predicted_k(), Some(2));
        assert_eq!(FamilySpec::GGraph { n: 9, r: 2 }.predicted_k(), Some(1));
        assert_eq!(FamilySpec::GGraph { n: 10, r: 2 }.predicted_k(), None);
        assert_eq!(FamilySpec::AlternatingWheel { m: 4 }.predicted_k(), None);

        let c4 = cycle(4).unwrap();
        assert_eq!(
            FamilySpec::Amalgamation {
                operand: c4,
                root: 0,
                copies: 2
            }
            .predicted_k(),
            Some(3)
        );
        // A path is not transmission regular, so no prediction.
        let p4 = path(4).unwrap();
        assert_eq!(
            FamilySpec::Amalgamation {
                operand: p4,
                root: 0,
                copies: 2
            }
            .predicted_k(),
            None
        );

        let p3 = path(3).unwrap();
        let product = FamilySpec::Product {
            left: p3.clone(),
            right: p3,
        };
        assert_eq!(product.predicted_k(), Some(3));
        let mismatched = FamilySpec::Product {
            left: complete_bipartite(4, 1).unwrap(),
            right: complete_bipartite(2, 3).unwrap(),
        };
        assert_eq!(mismatched.predicted_k(), None);
    }

    #[test]
    fn build_matches_direct_constructors() {
        let spec = FamilySpec::Gamma { p: 2, q: 2 };
        assert_eq!(spec.build().unwrap(), gamma_graph(2, 2).unwrap());
        let spec = FamilySpec::Product {
            left: path(3).unwrap(),
            right: path(3).unwrap(),
        };
        let built = spec.build().unwrap();
        assert_eq!(built.order(), 9);
        assert_eq!(verdict_of(&built).k, Some(3));
    }

    #[test]
    fn predicted_k_matches_classification_when_present() {
        let specs = vec![
            FamilySpec::CompleteBipartite { p: 6, q: 2 },
            FamilySpec::Star { m: 7 },
            FamilySpec::Path { m: 3 },
            FamilySpec::Gamma { p: 4, q: 2 },
            FamilySpec::HGraph { p: 4, q: 3 },
            FamilySpec::GGraph { n: 12, r: 3 },
            FamilySpec::Amalgamation {
                operand: complete_bipartite(2, 2).unwrap(),
                root: 1,
                copies: 3,
            },
        ];
        for spec in specs {
            let k = spec.predicted_k().expect("hypotheses hold");
            let g = spec.build().unwrap();
            assert_eq!(verdict_of(&g).k, Some(k), "{spec:?}");
        }
    }
}
