//! Exhaustive generation of pairwise non-isomorphic free trees via level
//! sequences: rooted trees are generated in canonical order, then filtered
//! to those rooted at a center (with a deterministic tie-break between the
//! two centers of a bicentral tree), which keeps exactly one rooted
//! representative per free tree.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order the tree enumerator accepts.
pub const TREE_ENUMERATION_CAP: usize = 16;

/// The lexicographically next canonical level sequence, or `None` after the
/// star `[1, 2, 2, ..., 2]`. A canonical sequence lists vertex depths (root
/// depth 1) in preorder with subtrees in non-increasing order; the successor
/// truncates at the last entry deeper than 2 and repeats the segment
/// starting at that entry's parent level.
fn successor(s: &[usize]) -> Option<Vec<usize>> {
    let p = (0..s.len()).rev().find(|&i| s[i] > 2)?;
    let q = (0..p)
        .rev()
        .find(|&i| s[i] == s[p] - 1)
        .expect("a preorder sequence contains the parent level earlier");
    let mut t = s.to_vec();
    for i in p..t.len() {
        t[i] = t[i - (p - q)];
    }
    Some(t)
}

/// Builds the tree a level sequence describes; vertex `i` is the `i`-th
/// vertex in preorder, and its parent is the most recent shallower vertex.
fn tree_from_levels(s: &[usize]) -> Graph {
    let n = s.len();
    let mut last_at_level = vec![0usize; n + 2];
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (i, &level) in s.iter().enumerate().skip(1) {
        edges.push((last_at_level[level - 1], i));
        last_at_level[level] = i;
    }
    Graph::new(n, &edges).expect("level sequences describe simple trees")
}

/// The one or two centers of a tree, found by peeling leaf layers.
fn tree_centers(g: &Graph) -> Vec<usize> {
    let n = g.order();
    if n <= 2 {
        return g.vertices().collect();
    }
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut layer: Vec<usize> = g.vertices().filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        let mut next = Vec::new();
        for &v in &layer {
            removed[v] = true;
            remaining -= 1;
            for u in g.neighbors(v) {
                if !removed[u] {
                    degree[u] -= 1;
                    if degree[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    g.vertices().filter(|&v| !removed[v]).collect()
}

/// Canonical code of the tree rooted at `root`: `0` opens a vertex, its
/// children's codes follow in sorted order, `1` closes it. Two rooted trees
/// are isomorphic exactly when their codes are equal.
fn rooted_code(g: &Graph, root: usize) -> Vec<u8> {
    fn rec(g: &Graph, v: usize, parent: usize) -> Vec<u8> {
        let mut children: Vec<Vec<u8>> = g
            .neighbors(v)
            .filter(|&u| u != parent)
            .map(|u| rec(g, u, v))
            .collect();
        children.sort();
        let mut code = Vec::with_capacity(2 + children.iter().map(Vec::len).sum::<usize>());
        code.push(0);
        for child in children {
            code.extend(child);
        }
        code.push(1);
        code
    }
    rec(g, root, usize::MAX)
}

/// Keeps exactly one rooted representative per free tree: the root must be
/// a center, and for bicentral trees with non-equivalent centers only the
/// rooting with the smaller canonical code survives.
fn root_is_canonical_center(g: &Graph) -> bool {
    let centers = tree_centers(g);
    match centers.as_slice() {
        [c] => *c == 0,
        [a, b] => {
            let other = match (*a, *b) {
                (0, other) | (other, 0) => other,
                _ => return false,
            };
            rooted_code(g, 0) <= rooted_code(g, other)
        }
        _ => unreachable!("a tree has one or two centers"),
    }
}

/// Stream of all free trees on exactly `n` vertices, one per isomorphism
/// class. Vertex 0 of each emitted tree is a center; the rest follow in
/// preorder of the underlying rooted generation.
pub struct TreeEnumerator {
    sequence: Option<Vec<usize>>,
}

impl Iterator for TreeEnumerator {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while let Some(s) = self.sequence.take() {
            let g = tree_from_levels(&s);
            self.sequence = successor(&s);
            if root_is_canonical_center(&g) {
                return Some(g);
            }
        }
        None
    }
}

/// Streams one representative per isomorphism class of free trees on
/// exactly `n` vertices.
pub fn enumerate_trees(n: usize) -> Result<TreeEnumerator> {
    if n < 1 || n > TREE_ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            requested: n,
            cap: TREE_ENUMERATION_CAP,
        });
    }
    Ok(TreeEnumerator {
        sequence: Some((1..=n).collect()),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::canonical_form;
    use crate::structure::is_tree;
    use std::collections::BTreeSet;

    /// Labeled tree from a code word over `{0, ..., n-1}` of length `n - 2`;
    /// every labeled tree on `n >= 2` vertices arises from exactly one word.
    fn tree_from_code_word(word: &[usize], n: usize) -> Graph {
        let mut degree = vec![1usize; n];
        for &x in word {
            degree[x] += 1;
        }
        let mut edges = Vec::with_capacity(n - 1);
        let mut used = vec![false; n];
        for &x in word {
            let leaf = (0..n).find(|&v| degree[v] == 1 && !used[v]).unwrap();
            edges.push((leaf, x));
            used[leaf] = true;
            degree[x] -= 1;
        }
        let rest: Vec<usize> = (0..n).filter(|&v| !used[v]).collect();
        edges.push((rest[0], rest[1]));
        Graph::new(n, &edges).unwrap()
    }

    fn all_labeled_tree_forms(n: usize) -> BTreeSet<String> {
        if n == 1 {
            let g = Graph::edgeless(1).unwrap();
            return BTreeSet::from([canonical_form(&g).into_string()]);
        }
        let mut forms = BTreeSet::new();
        let words = n.pow((n - 2) as u32);
        for index in 0..words {
            let mut word = Vec::with_capacity(n - 2);
            let mut rest = index;
            for _ in 0..n - 2 {
                word.push(rest % n);
                rest /= n;
            }
            let g = tree_from_code_word(&word, n);
            forms.insert(canonical_form(&g).into_string());
        }
        forms
    }

    #[test]
    fn counts_match_the_reference_table() {
        let expected = [
            1usize, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320,
        ];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(enumerate_trees(n).unwrap().count(), count, "order {n}");
        }
    }

    #[test]
    fn rooted_sequence_generation_matches_the_reference_table() {
        // Count raw level sequences before the free-tree filter.
        let expected = [1usize, 1, 2, 4, 9, 20, 48, 115, 286, 719];
        for (i, &count) in expected.iter().enumerate() {
            let n = i + 1;
            let mut seen = 0;
            let mut seq = Some((1..=n).collect::<Vec<usize>>());
            while let Some(s) = seq {
                seen += 1;
                seq = successor(&s);
            }
            assert_eq!(seen, count, "order {n}");
        }
    }

    #[test]
    fn matches_labeled_tree_classification_up_to_seven_vertices() {
        for n in 1..=7 {
            let enumerated: Vec<String> = enumerate_trees(n)
                .unwrap()
                .map(|g| {
                    assert_eq!(g.order(), n);
                    assert!(is_tree(&g));
                    canonical_form(&g).into_string()
                })
                .collect();
            let as_set: BTreeSet<String> = enumerated.iter().cloned().collect();
            assert_eq!(as_set.len(), enumerated.len(), "duplicate tree at order {n}");
            assert_eq!(as_set, all_labeled_tree_forms(n), "order {n}");
        }
    }

    #[test]
    fn outputs_are_distinct_trees_at_order_ten() {
        let forms: Vec<String> = enumerate_trees(10)
            .unwrap()
            .map(|g| {
                assert!(is_tree(&g));
                canonical_form(&g).into_string()
            })
            .collect();
        let dedup: BTreeSet<&String> = forms.iter().collect();
        assert_eq!(dedup.len(), forms.len());
        assert_eq!(forms.len(), 106);
    }

    #[test]
    fn rejects_orders_outside_the_cap() {
        assert!(matches!(
            enumerate_trees(0),
            Err(Error::EnumerationCap { requested: 0, .. })
        ));
        assert!(matches!(
            enumerate_trees(17),
            Err(Error::EnumerationCap {
                requested: 17,
                cap: 16
            })
        ));
    }

    #[test]
    fn smallest_orders_are_explicit() {
        let trees: Vec<Graph> = enumerate_trees(1).unwrap().collect();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].order(), 1);

        let trees: Vec<Graph> = enumerate_trees(2).unwrap().collect();
        assert_eq!(trees.len(), 1);
        assert_eq!(trees[0].edge_count(), 1);
    }

    #[test]
    fn emitted_roots_are_centers() {
        for g in enumerate_trees(9).unwrap() {
            assert!(tree_centers(&g).contains(&0));
        }
    }
}
