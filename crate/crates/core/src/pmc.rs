//! Potential maximal cliques: recognition, enumeration through small
//! connected sets, and good triples.

use std::collections::HashSet;

use crate::graph::Graph;
use crate::minsep::{Block, BlockIndex};
use crate::vertex_set::VertexSet;

/// A potential maximal clique `Ω` with the minimal separators it contains,
/// i.e. the distinct nonempty `N(C)` over components `C` of `G \ Ω`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PmcRecord {
    pub omega: VertexSet,
    pub local_separators: Vec<VertexSet>,
}

/// A full block `(S, C)` paired with a PMC `Ω` such that `S ⊆ Ω ⊆ S ∪ C`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GoodTriple {
    pub block_id: usize,
    pub omega_id: usize,
}

/// Distinct nonempty neighborhoods of the components of `G \ k`, sorted.
pub fn component_separators(g: &Graph, k: &VertexSet) -> Vec<VertexSet> {
    let mut seps: Vec<VertexSet> = g
        .components_without(k)
        .iter()
        .map(|c| g.neighborhood(c))
        .filter(|s| !s.is_empty())
        .collect();
    seps.sort();
    seps.dedup();
    seps
}

/// Whether `k` is a potential maximal clique: no component of `G \ k` is full
/// for `k`, and completing every `N(C)` into a clique makes `k` a clique.
pub fn is_pmc(g: &Graph, k: &VertexSet) -> bool {
    if k.is_empty() {
        return false;
    }
    let seps: Vec<VertexSet> = g
        .components_without(k)
        .iter()
        .map(|c| g.neighborhood(c))
        .collect();
    if seps.iter().any(|s| s == k) {
        return false;
    }
    k.iter().all(|u| {
        let mut reach = g.neighbors(u).clone();
        reach.insert(u);
        for s in seps.iter().filter(|s| s.contains(u)) {
            reach.union_with(s);
        }
        k.is_subset(&reach)
    })
}

/// Depth-first enumeration of connected vertex sets containing a start vertex.
///
/// Each set is produced once. A set is produced, and extended further, only if
/// `prune` accepts it; a branch stops at the first rejected set.
pub struct ConnectedSets<'g, P> {
    graph: &'g Graph,
    prune: P,
    stack: Vec<Frame>,
    pending: Option<VertexSet>,
}

struct Frame {
    set: VertexSet,
    candidates: VertexSet,
    excluded: VertexSet,
}

pub fn enumerate_connected_sets<P>(g: &Graph, z: usize, prune: P) -> ConnectedSets<'_, P>
where
    P: FnMut(&VertexSet) -> bool,
{
    assert!(z < g.n(), "start vertex {z} outside 0..{}", g.n());
    let start = VertexSet::singleton(g.n(), z);
    ConnectedSets {
        graph: g,
        prune,
        stack: Vec::new(),
        pending: Some(start),
    }
}

impl<P> ConnectedSets<'_, P> {
    fn push_frame(&mut self, set: VertexSet, excluded: VertexSet) {
        let mut candidates = self.graph.neighborhood(&set);
        candidates.difference_with(&excluded);
        self.stack.push(Frame {
            set,
            candidates,
            excluded,
        });
    }
}

impl<P> Iterator for ConnectedSets<'_, P>
where
    P: FnMut(&VertexSet) -> bool,
{
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if let Some(start) = self.pending.take() {
            if (self.prune)(&start) {
                let excluded = VertexSet::new(self.graph.n());
                self.push_frame(start.clone(), excluded);
                return Some(start);
            }
            return None;
        }
        loop {
            let frame = self.stack.last_mut()?;
            let Some(v) = frame.candidates.first() else {
                self.stack.pop();
                continue;
            };
            frame.candidates.remove(v);
            let child_excluded = frame.excluded.clone();
            frame.excluded.insert(v);
            let mut child = frame.set.clone();
            child.insert(v);
            if (self.prune)(&child) {
                self.push_frame(child.clone(), child_excluded);
                return Some(child);
            }
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct PmcOptions {
    /// Apply the `|Z| − 1 ≤ 2·|V \ N[Z \ {z}]|` size filter while growing `Z`.
    pub prune: bool,
    /// Worker threads for the loop over start vertices.
    pub threads: usize,
}

impl Default for PmcOptions {
    fn default() -> Self {
        PmcOptions {
            prune: true,
            threads: 1,
        }
    }
}

pub fn enumerate_pmcs(g: &Graph) -> Vec<PmcRecord> {
    enumerate_pmcs_with(g, PmcOptions::default())
}

/// All potential maximal cliques, sorted by `Ω`.
///
/// For every start vertex `z` and connected `Z ∋ z` inside `z`'s component
/// `D` with `|Z| − 1 ≤ 2·|D \ N[Z \ {z}]|`, the candidates `N(Z \ {z})` and
/// `N(Z) ∪ {z}` are tested with [`is_pmc`].
pub fn enumerate_pmcs_with(g: &Graph, opts: PmcOptions) -> Vec<PmcRecord> {
    let n = g.n();
    let components = g.components(&g.vertices());
    let mut home = vec![0usize; n];
    for (i, c) in components.iter().enumerate() {
        for v in c {
            home[v] = i;
        }
    }

    let scan = |z: usize| -> HashSet<VertexSet> {
        let domain = &components[home[z]];
        let mut found = HashSet::new();
        let mut tested: HashSet<VertexSet> = HashSet::new();
        let zs = VertexSet::singleton(n, z);
        let prune = |set: &VertexSet| {
            if !opts.prune {
                return true;
            }
            let inner = set.difference(&zs);
            let outside = domain.difference(&g.closed_neighborhood(&inner)).len();
            set.len() - 1 <= 2 * outside
        };
        for set in enumerate_connected_sets(g, z, prune) {
            let inner = set.difference(&zs);
            let mut with_z = g.neighborhood(&set);
            with_z.insert(z);
            for candidate in [g.neighborhood(&inner), with_z] {
                if candidate.is_empty() || !tested.insert(candidate.clone()) {
                    continue;
                }
                if is_pmc(g, &candidate) {
                    found.insert(candidate);
                }
            }
        }
        found
    };

    let mut all: HashSet<VertexSet> = HashSet::new();
    let threads = opts.threads.max(1).min(n.max(1));
    if threads <= 1 {
        for z in 0..n {
            all.extend(scan(z));
        }
    } else {
        let starts: Vec<usize> = (0..n).collect();
        let chunk = n.div_ceil(threads);
        let partials: Vec<HashSet<VertexSet>> = std::thread::scope(|scope| {
            let handles: Vec<_> = starts
                .chunks(chunk)
                .map(|zs| {
                    let scan = &scan;
                    scope.spawn(move || {
                        let mut local = HashSet::new();
                        for &z in zs {
                            local.extend(scan(z));
                        }
                        local
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("pmc worker panicked"))
                .collect()
        });
        for p in partials {
            all.extend(p);
        }
    }

    let mut omegas: Vec<VertexSet> = all.into_iter().collect();
    omegas.sort();
    omegas
        .into_iter()
        .map(|omega| PmcRecord {
            local_separators: component_separators(g, &omega),
            omega,
        })
        .collect()
}

/// Every good triple, grouped by block id (ascending), then by PMC id.
///
/// Each separator `S ⊆ Ω` is some `N(C)` for a component `C` of `G \ Ω`, so
/// only the PMC's local separators need to be tried; the block is the full
/// component of `S` that contains `Ω \ S`.
pub fn good_triples(
    g: &Graph,
    blocks: &[Block],
    index: &BlockIndex,
    pmcs: &[PmcRecord],
) -> Vec<GoodTriple> {
    let mut triples = Vec::new();
    for (omega_id, rec) in pmcs.iter().enumerate() {
        for s in &rec.local_separators {
            let rest = rec.omega.difference(s);
            let Some(start) = rest.first() else { continue };
            let domain = s.complement();
            let c = g.component_of(&domain, start);
            if !rest.is_subset(&c) {
                continue;
            }
            if let Some(block_id) = index.get(&c) {
                debug_assert_eq!(&blocks[block_id].separator, s);
                triples.push(GoodTriple { block_id, omega_id });
            }
        }
    }
    triples.sort();
    triples.dedup();
    triples
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path};
    use crate::minsep::{all_full_blocks, enumerate_minimal_separators};

    fn set(n: usize, v: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, v.iter().copied())
    }

    fn omegas(g: &Graph) -> Vec<VertexSet> {
        enumerate_pmcs(g).into_iter().map(|r| r.omega).collect()
    }

    #[test]
    fn is_pmc_examples() {
        let c4 = cycle(4);
        assert!(is_pmc(&c4, &set(4, &[0, 1, 2])));
        assert!(!is_pmc(&c4, &set(4, &[0, 1])));
        assert!(!is_pmc(&c4, &set(4, &[0, 2])));
        assert!(!is_pmc(&c4, &c4.vertices()));
        assert!(is_pmc(&complete(3), &set(3, &[0, 1, 2])));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(omegas(&path(3)), vec![set(3, &[0, 1]), set(3, &[1, 2])]);
        assert_eq!(
            omegas(&cycle(4)),
            vec![set(4, &[0, 1, 2]), set(4, &[0, 1, 3]), set(4, &[0, 2, 3]), set(4, &[1, 2, 3])]
        );
        assert_eq!(omegas(&complete(4)), vec![set(4, &[0, 1, 2, 3])]);
        assert_eq!(omegas(&Graph::empty(5)).len(), 5);
        assert!(omegas(&Graph::empty(0)).is_empty());
    }

    #[test]
    fn local_separators_of_c4() {
        let recs = enumerate_pmcs(&cycle(4));
        assert_eq!(recs[0].omega, set(4, &[0, 1, 2]));
        assert_eq!(recs[0].local_separators, vec![set(4, &[0, 2])]);
    }

    #[test]
    fn connected_set_examples() {
        let p3 = path(3);
        let got: Vec<VertexSet> = enumerate_connected_sets(&p3, 0, |_| true).collect();
        assert_eq!(got, vec![set(3, &[0]), set(3, &[0, 1]), set(3, &[0, 1, 2])]);

        let k3 = complete(3);
        let mut got: Vec<VertexSet> = enumerate_connected_sets(&k3, 0, |_| true).collect();
        got.sort();
        assert_eq!(got, vec![set(3, &[0]), set(3, &[0, 1]), set(3, &[0, 1, 2]), set(3, &[0, 2])]);

        let c5 = cycle(5);
        let got: Vec<VertexSet> = enumerate_connected_sets(&c5, 2, |s| s.len() <= 1).collect();
        assert_eq!(got, vec![set(5, &[2])]);
    }

    #[test]
    fn connected_sets_are_complete_and_distinct() {
        // Connected sets of C6 containing 0: arcs of length 1..5 through 0, plus the cycle.
        let c6 = cycle(6);
        let got: Vec<VertexSet> = enumerate_connected_sets(&c6, 0, |_| true).collect();
        let distinct: HashSet<VertexSet> = got.iter().cloned().collect();
        assert_eq!(got.len(), distinct.len());
        assert_eq!(got.len(), 1 + 2 + 3 + 4 + 5 + 1);
        assert!(got.iter().all(|s| s.contains(0) && c6.components(s).len() == 1));
    }

    fn triples_of(g: &Graph) -> Vec<(Block, VertexSet)> {
        let seps = enumerate_minimal_separators(g);
        let blocks = all_full_blocks(g, &seps);
        let index = BlockIndex::new(&blocks);
        let pmcs = enumerate_pmcs(g);
        good_triples(g, &blocks, &index, &pmcs)
            .into_iter()
            .map(|t| (blocks[t.block_id].clone(), pmcs[t.omega_id].omega.clone()))
            .collect()
    }

    /// All (block, PMC) pairs passing `S ⊆ Ω ⊆ S ∪ C`, by exhaustion.
    fn triples_by_predicate(g: &Graph) -> HashSet<(VertexSet, VertexSet, VertexSet)> {
        let seps = enumerate_minimal_separators(g);
        let blocks = all_full_blocks(g, &seps);
        let pmcs = enumerate_pmcs(g);
        let mut out = HashSet::new();
        for b in &blocks {
            for p in &pmcs {
                if b.separator.is_subset(&p.omega) && p.omega.is_subset(&b.vertices()) {
                    out.insert((b.separator.clone(), b.component.clone(), p.omega.clone()));
                }
            }
        }
        out
    }

    #[test]
    fn good_triple_examples() {
        let c4 = cycle(4);
        let t = triples_of(&c4);
        let for_012: Vec<&(Block, VertexSet)> =
            t.iter().filter(|(_, o)| *o == set(4, &[0, 1, 2])).collect();
        assert_eq!(for_012.len(), 1);
        assert_eq!(for_012[0].0.separator, set(4, &[0, 2]));
        assert_eq!(for_012[0].0.component, set(4, &[1]));
        assert_eq!(t.len(), 4);

        assert!(triples_of(&complete(4)).is_empty());

        let p3 = triples_of(&path(3));
        assert!(p3.iter().any(|(b, o)| b.separator == set(3, &[1])
            && b.component == set(3, &[0])
            && *o == set(3, &[0, 1])));
    }

    #[test]
    fn good_triples_match_predicate() {
        for g in [cycle(4), cycle(6), path(5), crate::generators::petersen()] {
            let got: HashSet<(VertexSet, VertexSet, VertexSet)> = triples_of(&g)
                .into_iter()
                .map(|(b, o)| (b.separator, b.component, o))
                .collect();
            assert_eq!(got, triples_by_predicate(&g));
        }
    }

    #[test]
    fn threaded_enumeration_matches() {
        let g = crate::generators::petersen();
        let serial = enumerate_pmcs(&g);
        let parallel = enumerate_pmcs_with(&g, PmcOptions { prune: true, threads: 4 });
        assert_eq!(serial, parallel);
        let unpruned = enumerate_pmcs_with(&g, PmcOptions { prune: false, threads: 1 });
        assert_eq!(serial, unpruned);
    }
}
