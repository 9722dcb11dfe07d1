//! Structural predicates: connectivity, bipartitions, twins, bridges,
//! articulation points, and girth.

use crate::error::{Error, Result};
use crate::graph::{full_mask, BitIter, Graph};

/// Mask of every vertex reachable from `start`.
pub(crate) fn reachable_mask(g: &Graph, start: usize) -> u64 {
    let mut reached = 1u64 << start;
    let mut frontier = reached;
    while frontier != 0 {
        let mut next = 0u64;
        for u in BitIter::new(frontier) {
            next |= g.neighbors_mask(u);
        }
        next &= !reached;
        reached |= next;
        frontier = next;
    }
    reached
}

/// True iff every vertex is reachable from vertex 0.
pub fn is_connected(g: &Graph) -> bool {
    reachable_mask(g, 0) == full_mask(g.order())
}

/// True iff the graph is connected and has exactly `n - 1` edges.
pub fn is_tree(g: &Graph) -> bool {
    is_connected(g) && g.edge_count() == g.order() - 1
}

/// The unique 2-coloring of a connected bipartite graph. `side_a` is the
/// side containing vertex 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub side_a: u64,
    pub side_b: u64,
}

impl Bipartition {
    pub fn side_of(&self, v: usize) -> usize {
        if self.side_a >> v & 1 == 1 {
            0
        } else {
            1
        }
    }
}

/// 2-color a connected graph, or report `None` if it contains an odd cycle.
pub fn bipartition(g: &Graph) -> Result<Option<Bipartition>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut side_a = 1u64; // vertex 0
    let mut side_b = 0u64;
    let mut frontier = 1u64;
    let mut on_a = true;
    while frontier != 0 {
        let mut next = 0u64;
        for u in BitIter::new(frontier) {
            next |= g.neighbors_mask(u);
        }
        next &= !(side_a | side_b);
        if on_a {
            side_b |= next;
        } else {
            side_a |= next;
        }
        on_a = !on_a;
        frontier = next;
    }
    // The layering is a proper 2-coloring iff no edge stays inside a side.
    for u in g.vertices() {
        let same = if side_a >> u & 1 == 1 { side_a } else { side_b };
        if g.neighbors_mask(u) & same != 0 {
            return Ok(None);
        }
    }
    Ok(Some(Bipartition { side_a, side_b }))
}

/// All pairs `u < v` whose neighborhoods outside `{u, v}` coincide,
/// regardless of whether `u` and `v` are themselves adjacent.
pub fn twin_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            let outside = !((1u64 << u) | (1u64 << v));
            if g.neighbors_mask(u) & outside == g.neighbors_mask(v) & outside {
                pairs.push((u, v));
            }
        }
    }
    pairs
}

struct CutSearch<'a> {
    g: &'a Graph,
    discovery: Vec<usize>,
    low: Vec<usize>,
    timer: usize,
    bridges: Vec<(usize, usize)>,
    articulation: Vec<bool>,
}

impl<'a> CutSearch<'a> {
    fn run(g: &'a Graph) -> CutSearch<'a> {
        let n = g.order();
        let mut search = CutSearch {
            g,
            discovery: vec![usize::MAX; n],
            low: vec![usize::MAX; n],
            timer: 0,
            bridges: Vec::new(),
            articulation: vec![false; n],
        };
        search.visit(0, usize::MAX);
        search
    }

    fn visit(&mut self, u: usize, parent: usize) {
        self.discovery[u] = self.timer;
        self.low[u] = self.timer;
        self.timer += 1;
        let mut children = 0;
        for v in self.g.neighbors(u) {
            if self.discovery[v] == usize::MAX {
                children += 1;
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] > self.discovery[u] {
                    self.bridges.push((u.min(v), u.max(v)));
                }
                if parent != usize::MAX && self.low[v] >= self.discovery[u] {
                    self.articulation[u] = true;
                }
            } else if v != parent {
                self.low[u] = self.low[u].min(self.discovery[v]);
            }
        }
        if parent == usize::MAX && children > 1 {
            self.articulation[u] = true;
        }
    }
}

/// Bridges of a connected graph as sorted `(u, v)` pairs with `u < v`.
pub fn bridges(g: &Graph) -> Result<Vec<(usize, usize)>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let mut found = CutSearch::run(g).bridges;
    found.sort_unstable();
    Ok(found)
}

/// Articulation points of a connected graph, ascending.
pub fn articulation_points(g: &Graph) -> Result<Vec<usize>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let cut = CutSearch::run(g).articulation;
    Ok((0..g.order()).filter(|&v| cut[v]).collect())
}

/// Length of a shortest cycle, or `None` for forests. Works per component,
/// so connectivity is not required.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.order();
    let mut best: Option<usize> = None;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for root in 0..n {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push(root);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for v in g.neighbors(u) {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push(v);
                } else if v != parent[u] {
                    // Non-tree edge: closes a cycle through the root of
                    // length at most dist[u] + dist[v] + 1. Minimizing this
                    // over all roots yields the girth exactly.
                    let len = dist[u] + dist[v] + 1;
                    if best.is_none_or(|b| len < b) {
                        best = Some(len);
                    }
                }
            }
        }
    }
    best
}

/// True iff the graph is connected, has at least 3 vertices, and no
/// articulation point.
pub fn is_two_connected(g: &Graph) -> Result<bool> {
    Ok(g.order() >= 3 && articulation_points(g)?.is_empty())
}

/// True iff the graph is connected, has at least 2 vertices, and no bridge.
pub fn is_two_edge_connected(g: &Graph) -> Result<bool> {
    Ok(g.order() >= 2 && bridges(g)?.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (0..n - 1).map(|i| (i, i + 1)).collect();
        Graph::new(n, &edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).unwrap()
    }

    fn complete_bipartite(p: usize, q: usize) -> Graph {
        let mut edges = Vec::new();
        for a in 0..p {
            for b in 0..q {
                edges.push((a, p + b));
            }
        }
        Graph::new(p + q, &edges).unwrap()
    }

    #[test]
    fn connectivity_basics() {
        assert!(is_connected(&Graph::new(1, &[]).unwrap()));
        assert!(!is_connected(&Graph::new(2, &[]).unwrap()));
        assert!(is_connected(&path(5)));
        assert!(!is_connected(&Graph::new(4, &[(0, 1), (2, 3)]).unwrap()));
    }

    #[test]
    fn bipartition_sides() {
        let b = bipartition(&cycle(6)).unwrap().unwrap();
        assert_eq!(b.side_a, 0b010101);
        assert_eq!(b.side_b, 0b101010);
        assert_eq!(b.side_of(0), 0);
        assert_eq!(b.side_of(1), 1);

        assert_eq!(bipartition(&cycle(5)).unwrap(), None);
        assert_eq!(
            bipartition(&Graph::new(2, &[]).unwrap()),
            Err(Error::Disconnected)
        );

        // Single vertex: trivially bipartite with an empty second side.
        let b = bipartition(&Graph::new(1, &[]).unwrap()).unwrap().unwrap();
        assert_eq!((b.side_a, b.side_b), (1, 0));
    }

    #[test]
    fn twin_pairs_ignore_mutual_adjacency() {
        // In K_{2,3} (sides {0,1} and {2,3,4}) the degree-3 pair and the
        // three degree-2 pairs are twins: 4 pairs in total.
        let g = complete_bipartite(2, 3);
        assert_eq!(twin_pairs(&g), vec![(0, 1), (2, 3), (2, 4), (3, 4)]);

        // The two leaves of a path on 3 vertices are twins.
        assert_eq!(twin_pairs(&path(3)), vec![(0, 2)]);

        // Adjacent vertices with the same outside neighborhood also count.
        let k3 = Graph::new(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(twin_pairs(&k3).len(), 3);

        assert!(twin_pairs(&cycle(6)).is_empty());
    }

    /// Oracle: an edge is a bridge iff deleting it disconnects the graph.
    fn bridges_by_deletion(g: &Graph) -> Vec<(usize, usize)> {
        let mut found = Vec::new();
        for (u, v) in g.edges() {
            let kept: Vec<_> = g.edges().filter(|&e| e != (u, v)).collect();
            let h = Graph::new(g.order(), &kept).unwrap();
            if !is_connected(&h) {
                found.push((u, v));
            }
        }
        found
    }

    /// Oracle: a vertex is an articulation point iff deleting it
    /// disconnects the rest.
    fn articulation_by_deletion(g: &Graph) -> Vec<usize> {
        let n = g.order();
        if n < 3 {
            return Vec::new();
        }
        let mut found = Vec::new();
        for v in 0..n {
            // Relabel the remaining vertices down into 0..n-1.
            let mut edges = Vec::new();
            for (a, b) in g.edges() {
                if a != v && b != v {
                    let shift = |x: usize| if x > v { x - 1 } else { x };
                    edges.push((shift(a), shift(b)));
                }
            }
            let h = Graph::new(n - 1, &edges).unwrap();
            if !is_connected(&h) {
                found.push(v);
            }
        }
        found
    }

    /// Oracle: shortest cycle by exhaustive DFS path enumeration.
    fn girth_by_cycle_enumeration(g: &Graph) -> Option<usize> {
        fn extend(
            g: &Graph,
            start: usize,
            current: usize,
            visited: u64,
            len: usize,
            best: &mut Option<usize>,
        ) {
            for v in g.neighbors(current) {
                if v == start && len >= 2 {
                    let cycle = len + 1;
                    if best.is_none_or(|b| cycle < b) {
                        *best = Some(cycle);
                    }
                } else if v > start && visited >> v & 1 == 0 {
                    extend(g, start, v, visited | 1 << v, len + 1, best);
                }
            }
        }
        let mut best = None;
        for start in g.vertices() {
            extend(g, start, start, 1 << start, 0, &mut best);
        }
        best
    }

    #[test]
    fn bridges_and_articulation_fixtures() {
        assert_eq!(bridges(&path(4)).unwrap(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(articulation_points(&path(4)).unwrap(), vec![1, 2]);

        assert!(bridges(&cycle(5)).unwrap().is_empty());
        assert!(articulation_points(&cycle(5)).unwrap().is_empty());

        assert_eq!(bridges(&star(4)).unwrap().len(), 4);
        assert_eq!(articulation_points(&star(4)).unwrap(), vec![0]);

        // Two 4-cycles glued at a vertex: a cut vertex but no bridge.
        let glued = Graph::new(
            7,
            &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5), (5, 6), (6, 0)],
        )
        .unwrap();
        assert_eq!(bridges(&glued).unwrap(), vec![]);
        assert_eq!(articulation_points(&glued).unwrap(), vec![0]);

        // K_2: the edge is a bridge but neither endpoint is a cut vertex.
        let k2 = Graph::new(2, &[(0, 1)]).unwrap();
        assert_eq!(bridges(&k2).unwrap(), vec![(0, 1)]);
        assert!(articulation_points(&k2).unwrap().is_empty());
    }

    #[test]
    fn girth_fixtures() {
        assert_eq!(girth(&cycle(5)), Some(5));
        assert_eq!(girth(&cycle(4)), Some(4));
        assert_eq!(girth(&path(6)), None);
        assert_eq!(girth(&star(5)), None);
        assert_eq!(girth(&complete_bipartite(2, 3)), Some(4));
        // A triangle with a long tail.
        let g = Graph::new(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        assert_eq!(girth(&g), Some(3));
    }

    #[test]
    fn cut_structure_matches_deletion_oracle_on_random_graphs() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(0x62726964);
        let mut checked = 0;
        while checked < 300 {
            let n = rng.random_range(2..=9);
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rng.random_bool(0.35) {
                        edges.push((u, v));
                    }
                }
            }
            let g = Graph::new(n, &edges).unwrap();
            if !is_connected(&g) {
                continue;
            }
            checked += 1;
            assert_eq!(bridges(&g).unwrap(), bridges_by_deletion(&g));
            assert_eq!(articulation_points(&g).unwrap(), articulation_by_deletion(&g));
            assert_eq!(girth(&g), girth_by_cycle_enumeration(&g));
        }
    }

    #[test]
    fn is_tree_cases() {
        assert!(is_tree(&path(5)));
        assert!(is_tree(&star(6)));
        assert!(is_tree(&Graph::new(1, &[]).unwrap()));
        assert!(!is_tree(&cycle(4)));
        assert!(!is_tree(&Graph::new(3, &[(0, 1)]).unwrap()));
    }
}
