//! Exhaustive generation of pairwise non-isomorphic connected graphs by
//! canonical augmentation: a graph on `m + 1` vertices is produced from its
//! canonical parent (delete the accepted vertex) exactly once, so no global
//! seen-set is needed.

use crate::canon::{canonical_labeling, vertex_orbits, UnionFind};
use crate::error::{Error, Result};
use crate::graph::{BitIter, Graph};
use crate::structure::{articulation_points, bipartition};

/// Largest order the built-in enumerator accepts. Connected graph classes
/// roughly multiply by 20 per added vertex; beyond this cap an external
/// generator plus graph6 ingestion is the supported route.
pub const ENUMERATION_CAP: usize = 9;

/// Applies a vertex permutation to a subset mask.
fn permute_mask(mask: u64, perm: &[usize]) -> u64 {
    BitIter::new(mask).fold(0u64, |acc, v| acc | 1u64 << perm[v])
}

/// One representative per orbit of the automorphism group acting on the
/// nonempty vertex subsets of `g`. Each representative is the smallest mask
/// in its orbit.
fn mask_orbit_representatives(order: usize, generators: &[Vec<usize>]) -> Vec<u64> {
    let total = 1usize << order;
    let mut uf = UnionFind::new(total);
    for perm in generators {
        for mask in 1..total as u64 {
            uf.union(mask as usize, permute_mask(mask, perm) as usize);
        }
    }
    (1..total)
        .filter(|&mask| uf.find(mask) == mask)
        .map(|mask| mask as u64)
        .collect()
}

/// Decides whether `child` is the designated extension of its parent: the
/// newest vertex must lie in the automorphism orbit of the non-cut vertex
/// with the largest canonical position. Returns the child's automorphism
/// generators on acceptance so the caller can reuse them for its own
/// extension step.
fn accept_newest_vertex(child: &Graph) -> Option<Vec<Vec<usize>>> {
    let n = child.order();
    let newest = n - 1;
    let outcome = canonical_labeling(child);
    let cuts = articulation_points(child).expect("augmented graphs stay connected");
    let mut cut_mask = 0u64;
    for v in cuts {
        cut_mask |= 1 << v;
    }
    let target = child
        .vertices()
        .filter(|v| cut_mask & (1 << v) == 0)
        .max_by_key(|&v| outcome.labeling[v])
        .expect("a connected graph always has a non-cut vertex");
    let mut orbits = vertex_orbits(n, &outcome.generators);
    if orbits.find(newest) == orbits.find(target) {
        Some(outcome.generators)
    } else {
        None
    }
}

struct Frame {
    graph: Graph,
    /// Orbit representatives of the candidate neighbor sets for a new vertex.
    masks: Vec<u64>,
    next: usize,
}

impl Frame {
    fn new(graph: Graph, generators: &[Vec<usize>]) -> Frame {
        let masks = mask_orbit_representatives(graph.order(), generators);
        Frame {
            graph,
            masks,
            next: 0,
        }
    }
}

/// Depth-first stream of all connected graphs of one fixed order, exactly
/// one per isomorphism class.
pub struct ConnectedEnumerator {
    target: usize,
    bipartite_only: bool,
    stack: Vec<Frame>,
    root_pending: bool,
}

impl ConnectedEnumerator {
    fn new(target: usize, bipartite_only: bool) -> ConnectedEnumerator {
        let single = Graph::edgeless(1).expect("one vertex is in range");
        ConnectedEnumerator {
            target,
            bipartite_only,
            stack: if target > 1 {
                vec![Frame::new(single, &[])]
            } else {
                Vec::new()
            },
            root_pending: target == 1,
        }
    }
}

impl Iterator for ConnectedEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        if self.root_pending {
            self.root_pending = false;
            return Some(Graph::edgeless(1).expect("one vertex is in range"));
        }
        while let Some(frame) = self.stack.last_mut() {
            let Some(&mask) = frame.masks.get(frame.next) else {
                self.stack.pop();
                continue;
            };
            frame.next += 1;
            let child = frame.graph.extended(mask);
            if self.bipartite_only && bipartition(&child).expect("connected").is_none() {
                continue;
            }
            let Some(generators) = accept_newest_vertex(&child) else {
                continue;
            };
            if child.order() == self.target {
                return Some(child);
            }
            self.stack.push(Frame::new(child, &generators));
        }
        None
    }
}

/// Streams one representative per isomorphism class of connected graphs on
/// exactly `n` vertices.
pub fn enumerate_connected(n: usize) -> Result<ConnectedEnumerator> {
    enumerate_connected_filtered(n, false)
}

/// Like [`enumerate_connected`], optionally restricted to bipartite graphs.
/// The restriction prunes during generation: a graph with an odd cycle is
/// neither emitted nor extended, which is lossless because deleting a
/// vertex never removes an odd cycle's image from a parent.
pub fn enumerate_connected_filtered(n: usize, bipartite_only: bool) -> Result<ConnectedEnumerator> {
    if n < 1 || n > ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            requested: n,
            cap: ENUMERATION_CAP,
        });
    }
    Ok(ConnectedEnumerator::new(n, bipartite_only))
}
