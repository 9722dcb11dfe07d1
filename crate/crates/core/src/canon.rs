//! Exact canonical labeling by individualization–refinement.
//!
//! The search explores ordered equitable partitions, individualizing one
//! vertex of the first smallest non-singleton cell at a time. Leaves are
//! discrete partitions; the lexicographically largest relabeled adjacency
//! matrix wins. Two leaves with equal certificates reveal an automorphism;
//! discovered automorphisms prune sibling branches whose target vertex lies
//! in the orbit of one already explored (under generators fixing the
//! individualized prefix pointwise), which keeps highly symmetric graphs
//! tractable and, as a byproduct, yields a generating set of the full
//! automorphism group.

use std::collections::{HashSet, VecDeque};

use crate::graph::{BitIter, Graph};
use crate::graph6;

/// graph6 text of the canonically relabeled graph. Two graphs are
/// isomorphic iff their canonical forms are equal.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(String);

impl CanonicalForm {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Canonical labeling plus a generating set of the automorphism group.
pub struct CanonOutcome {
    /// `labeling[v]` is the canonical position of vertex `v`.
    pub labeling: Vec<usize>,
    /// Automorphisms as vertex maps `gen[v] = image of v`.
    pub generators: Vec<Vec<usize>>,
}

/// Compute the canonical labeling and automorphism generators.
pub fn canonical_labeling(g: &Graph) -> CanonOutcome {
    let mut search = Search {
        g,
        n: g.order(),
        first: None,
        best: None,
        gens: Vec::new(),
        gen_set: HashSet::new(),
        prefix: Vec::new(),
    };
    let mut cells = vec![(0..g.order()).collect::<Vec<usize>>()];
    equitable_refine(g, &mut cells);
    search.descend(&cells);
    let best = search.best.expect("search visits at least one leaf");
    CanonOutcome {
        labeling: best.labeling,
        generators: search.gens,
    }
}

/// The canonical form of a graph.
pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let outcome = canonical_labeling(g);
    CanonicalForm(graph6::to_graph6(&g.relabel(&outcome.labeling)))
}

/// Disjoint-set structure over `0..n` with path halving.
pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> UnionFind {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}

/// Orbit partition of the vertices under a set of automorphisms.
pub(crate) fn vertex_orbits(n: usize, gens: &[Vec<usize>]) -> UnionFind {
    let mut uf = UnionFind::new(n);
    for gen in gens {
        for v in 0..n {
            uf.union(v, gen[v]);
        }
    }
    uf
}

#[derive(Clone)]
struct Leaf {
    cert: Vec<u64>,
    labeling: Vec<usize>,
    inverse: Vec<usize>,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    best: Option<Leaf>,
    gens: Vec<Vec<usize>>,
    gen_set: HashSet<Vec<usize>>,
    prefix: Vec<usize>,
}

impl<'a> Search<'a> {
    fn descend(&mut self, cells: &[Vec<usize>]) {
        let target = match cells.iter().enumerate().filter(|(_, c)| c.len() > 1).min_by_key(|(i, c)| (c.len(), *i)) {
            Some((i, _)) => i,
            None => {
                self.leaf(cells);
                return;
            }
        };
        let candidates = cells[target].clone();
        let mut processed: Vec<usize> = Vec::new();
        let mut orbits = UnionFind::new(self.n);
        let mut gens_absorbed = 0;
        for &v in &candidates {
            // Absorb automorphisms discovered in earlier siblings' subtrees;
            // only those fixing the individualized prefix may prune here.
            while gens_absorbed < self.gens.len() {
                let gen = self.gens[gens_absorbed].clone();
                gens_absorbed += 1;
                if self.prefix.iter().all(|&p| gen[p] == p) {
                    for u in 0..self.n {
                        orbits.union(u, gen[u]);
                    }
                }
            }
            let rv = orbits.find(v);
            if processed.iter().any(|&w| orbits.find(w) == rv) {
                continue;
            }
            processed.push(v);

            let mut child: Vec<Vec<usize>> = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(vec![v]);
            child.push(candidates.iter().copied().filter(|&w| w != v).collect());
            child.extend_from_slice(&cells[target + 1..]);
            equitable_refine(self.g, &mut child);

            self.prefix.push(v);
            self.descend(&child);
            self.prefix.pop();
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let mut labeling = vec![0usize; self.n];
        let mut inverse = vec![0usize; self.n];
        for (pos, cell) in cells.iter().enumerate() {
            labeling[cell[0]] = pos;
            inverse[pos] = cell[0];
        }
        let mut cert = vec![0u64; self.n];
        for v in 0..self.n {
            let mut row = 0u64;
            for w in BitIter::new(self.g.neighbors_mask(v)) {
                row |= 1 << labeling[w];
            }
            cert[labeling[v]] = row;
        }
        let leaf = Leaf { cert, labeling, inverse };

        let Some(first) = &self.first else {
            self.first = Some(leaf.clone());
            self.best = Some(leaf);
            return;
        };
        if leaf.cert == first.cert {
            let reference = first.clone();
            self.record_automorphism(&reference, &leaf);
        }
        let best = self.best.as_ref().expect("set alongside first");
        match leaf.cert.cmp(&best.cert) {
            std::cmp::Ordering::Greater => self.best = Some(leaf),
            std::cmp::Ordering::Equal => {
                if best.cert != self.first.as_ref().unwrap().cert {
                    let reference = best.clone();
                    self.record_automorphism(&reference, &leaf);
                }
            }
            std::cmp::Ordering::Less => {}
        }
    }

    fn record_automorphism(&mut self, reference: &Leaf, leaf: &Leaf) {
        let perm: Vec<usize> = (0..self.n).map(|v| reference.inverse[leaf.labeling[v]]).collect();
        if perm.iter().enumerate().all(|(v, &img)| v == img) {
            return;
        }
        if self.gen_set.insert(perm.clone()) {
            self.gens.push(perm);
        }
    }
}

/// Refine an ordered partition to the coarsest equitable one: every vertex
/// of a cell has the same number of neighbors in every cell. Subcells are
/// ordered by neighbor count, descending, so the outcome depends only on
/// the partition structure, never on vertex names.
fn equitable_refine(g: &Graph, cells: &mut Vec<Vec<usize>>) {
    let mask_of = |cell: &[usize]| cell.iter().fold(0u64, |m, &v| m | 1 << v);
    let mut queue: VecDeque<u64> = cells.iter().map(|c| mask_of(c)).collect();
    while let Some(splitter) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            if cells[i].len() == 1 {
                i += 1;
                continue;
            }
            let counts: Vec<u32> = cells[i]
                .iter()
                .map(|&v| (g.neighbors_mask(v) & splitter).count_ones())
                .collect();
            let max = counts.iter().copied().max().unwrap();
            let min = counts.iter().copied().min().unwrap();
            if max == min {
                i += 1;
                continue;
            }
            let cell = std::mem::take(&mut cells[i]);
            let mut groups: Vec<Vec<usize>> = Vec::new();
            let mut seen: Vec<u32> = counts.clone();
            seen.sort_unstable_by(|a, b| b.cmp(a));
            seen.dedup();
            for &c in &seen {
                let group: Vec<usize> = cell
                    .iter()
                    .zip(&counts)
                    .filter(|&(_, &cnt)| cnt == c)
                    .map(|(&v, _)| v)
                    .collect();
                queue.push_back(mask_of(&group));
                groups.push(group);
            }
            let added = groups.len();
            cells.splice(i..=i, groups);
            i += added;
        }
    }
}
