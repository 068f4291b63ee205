//! Minimal separators and full blocks.
//!
//! A minimal separator is a nonempty `S` such that `G \ S` has at least two
//! full components (components `C` with `N(C) = S`). The empty set is never
//! reported, even for disconnected graphs: each separator lives inside one
//! connected component of `G`.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A minimal separator `S` together with one of its full components `C`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    pub separator: VertexSet,
    pub component: VertexSet,
    pub is_full: bool,
    pub is_inclusion_minimal: bool,
}

impl Block {
    /// `S ∪ C`.
    pub fn vertices(&self) -> VertexSet {
        self.separator.union(&self.component)
    }
}

pub fn full_components(g: &Graph, s: &VertexSet) -> Vec<VertexSet> {
    g.components_without(s)
        .into_iter()
        .filter(|c| &g.neighborhood(c) == s)
        .collect()
}

pub fn is_minimal_separator(g: &Graph, s: &VertexSet) -> bool {
    if s.is_empty() || s.len() >= g.n() {
        return false;
    }
    full_components(g, s).len() >= 2
}

/// All minimal separators, sorted.
///
/// Seeds with `N(C)` for each component `C` of `G \ N[v]`, then closes under
/// `S ↦ N(C)` for components `C` of `G \ (S ∪ N[x])`, `x ∈ S`.
pub fn enumerate_minimal_separators(g: &Graph) -> Vec<VertexSet> {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    let mut queue: VecDeque<VertexSet> = VecDeque::new();
    let push = |s: VertexSet, seen: &mut HashSet<VertexSet>, queue: &mut VecDeque<VertexSet>| {
        if !s.is_empty() && seen.insert(s.clone()) {
            queue.push_back(s);
        }
    };
    for v in 0..g.n() {
        let closed = g.closed_neighborhood(&VertexSet::singleton(g.n(), v));
        for c in g.components_without(&closed) {
            push(g.neighborhood(&c), &mut seen, &mut queue);
        }
    }
    while let Some(s) = queue.pop_front() {
        for x in &s {
            let mut removed = g.closed_neighborhood(&VertexSet::singleton(g.n(), x));
            removed.union_with(&s);
            for c in g.components_without(&removed) {
                push(g.neighborhood(&c), &mut seen, &mut queue);
            }
        }
    }
    let mut out: Vec<VertexSet> = seen.into_iter().collect();
    out.sort();
    out
}

/// Every full block of the given separators, sorted by `|S ∪ C|` then
/// lexicographically by `S ∪ C`, with inclusion-minimality flags filled in.
pub fn all_full_blocks(g: &Graph, separators: &[VertexSet]) -> Vec<Block> {
    let mut blocks: Vec<Block> = separators
        .iter()
        .flat_map(|s| {
            full_components(g, s).into_iter().map(move |c| Block {
                separator: s.clone(),
                component: c,
                is_full: true,
                is_inclusion_minimal: false,
            })
        })
        .collect();

    // Bucket by size; the lexicographic tie-break keeps ids deterministic.
    let mut buckets: Vec<Vec<(VertexSet, Block)>> = vec![Vec::new(); g.n() + 1];
    for b in blocks.drain(..) {
        let vs = b.vertices();
        buckets[vs.len()].push((vs, b));
    }
    let mut sorted: Vec<(VertexSet, Block)> = Vec::new();
    for mut bucket in buckets {
        bucket.sort_by(|a, b| a.0.cmp(&b.0));
        sorted.extend(bucket);
    }

    let flags: Vec<bool> = (0..sorted.len())
        .map(|i| {
            let (vs, _) = &sorted[i];
            !sorted[..i]
                .iter()
                .any(|(other, _)| other.len() < vs.len() && other.is_subset(vs))
        })
        .collect();
    sorted
        .into_iter()
        .zip(flags)
        .map(|((_, mut b), minimal)| {
            b.is_inclusion_minimal = minimal;
            b
        })
        .collect()
}

/// Looks blocks up by their component; a full block is determined by `C`
/// since `S = N(C)`.
#[derive(Clone, Debug, Default)]
pub struct BlockIndex {
    by_component: HashMap<VertexSet, usize>,
}

impl BlockIndex {
    pub fn new(blocks: &[Block]) -> Self {
        BlockIndex {
            by_component: blocks
                .iter()
                .enumerate()
                .map(|(i, b)| (b.component.clone(), i))
                .collect(),
        }
    }

    pub fn get(&self, component: &VertexSet) -> Option<usize> {
        self.by_component.get(component).copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    #[test]
    fn minimal_separator_examples() {
        assert!(is_minimal_separator(&path(3), &set(3, &[1])));
        assert!(is_minimal_separator(&cycle(4), &set(4, &[0, 2])));
        assert!(!is_minimal_separator(&cycle(4), &set(4, &[0, 1])));
        let k4 = complete(4);
        for mask in 0u64..16 {
            assert!(!is_minimal_separator(&k4, &VertexSet::from_mask(4, mask)));
        }
        assert!(!is_minimal_separator(&Graph::empty(3), &set(3, &[])));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_minimal_separators(&path(3)), vec![set(3, &[1])]);
        assert_eq!(
            enumerate_minimal_separators(&cycle(4)),
            vec![set(4, &[0, 2]), set(4, &[1, 3])]
        );
        let c5 = enumerate_minimal_separators(&cycle(5));
        assert_eq!(
            c5,
            vec![
                set(5, &[0, 2]),
                set(5, &[0, 3]),
                set(5, &[1, 3]),
                set(5, &[1, 4]),
                set(5, &[2, 4])
            ]
        );
        assert!(enumerate_minimal_separators(&complete(4)).is_empty());
        assert!(enumerate_minimal_separators(&Graph::empty(5)).is_empty());
    }

    #[test]
    fn disconnected_graph_separators_stay_inside_components() {
        // P3 on {0,1,2} plus an edge {3,4}.
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (3, 4)]);
        assert_eq!(enumerate_minimal_separators(&g), vec![set(5, &[1])]);
    }

    #[test]
    fn block_examples() {
        let c4 = cycle(4);
        let blocks = all_full_blocks(&c4, &enumerate_minimal_separators(&c4));
        let got: Vec<(VertexSet, VertexSet, bool)> = blocks
            .iter()
            .map(|b| (b.separator.clone(), b.component.clone(), b.is_inclusion_minimal))
            .collect();
        assert_eq!(
            got,
            vec![
                (set(4, &[0, 2]), set(4, &[1]), true),
                (set(4, &[1, 3]), set(4, &[0]), true),
                (set(4, &[0, 2]), set(4, &[3]), true),
                (set(4, &[1, 3]), set(4, &[2]), true),
            ]
        );
        assert!(all_full_blocks(&complete(4), &[]).is_empty());
        let p3 = path(3);
        let blocks = all_full_blocks(&p3, &enumerate_minimal_separators(&p3));
        assert_eq!(blocks.len(), 2);
        assert_eq!(blocks[0].component, set(3, &[0]));
        assert_eq!(blocks[1].component, set(3, &[2]));
    }

    #[test]
    fn inclusion_minimality_on_a_path() {
        let p5 = path(5);
        let blocks = all_full_blocks(&p5, &enumerate_minimal_separators(&p5));
        // Separators {1},{2},{3}; blocks of size 2 are the two end edges.
        let minimal: Vec<VertexSet> = blocks
            .iter()
            .filter(|b| b.is_inclusion_minimal)
            .map(Block::vertices)
            .collect();
        assert_eq!(minimal, vec![set(5, &[0, 1]), set(5, &[3, 4])]);
        assert!(blocks.windows(2).all(|w| w[0].vertices().len() <= w[1].vertices().len()));
    }
}
