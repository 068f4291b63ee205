//! Enumerations shared by the induced-subgraph solvers: minimal separators,
//! full blocks, potential maximal cliques and good triples, computed once
//! per host graph.

use std::ops::Range;
use std::time::{Duration, Instant};

use crate::graph::Graph;
use crate::minsep::{all_full_blocks, enumerate_minimal_separators, Block, BlockIndex};
use crate::pmc::{enumerate_pmcs_with, good_triples, GoodTriple, PmcOptions, PmcRecord};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, Default)]
pub struct PhaseTimes {
    pub separators: Duration,
    pub pmcs: Duration,
    pub blocks_and_triples: Duration,
}

#[derive(Clone, Debug)]
pub struct Artifacts {
    pub separators: Vec<VertexSet>,
    /// Full blocks, ascending by `|S ∪ C|`.
    pub blocks: Vec<Block>,
    pub pmcs: Vec<PmcRecord>,
    /// Grouped by `block_id`.
    pub triples: Vec<GoodTriple>,
    pub block_index: BlockIndex,
    triple_ranges: Vec<Range<usize>>,
    pub times: PhaseTimes,
}

impl Artifacts {
    pub fn compute(g: &Graph) -> Self {
        Self::compute_with(g, PmcOptions::default())
    }

    pub fn compute_with(g: &Graph, opts: PmcOptions) -> Self {
        let t0 = Instant::now();
        let separators = enumerate_minimal_separators(g);
        let t1 = Instant::now();
        let pmcs = enumerate_pmcs_with(g, opts);
        let t2 = Instant::now();
        let blocks = all_full_blocks(g, &separators);
        let block_index = BlockIndex::new(&blocks);
        let triples = good_triples(g, &blocks, &block_index, &pmcs);
        let mut triple_ranges = vec![0..0; blocks.len()];
        let mut start = 0;
        while start < triples.len() {
            let b = triples[start].block_id;
            let end = start
                + triples[start..]
                    .iter()
                    .take_while(|t| t.block_id == b)
                    .count();
            triple_ranges[b] = start..end;
            start = end;
        }
        let t3 = Instant::now();
        Artifacts {
            separators,
            blocks,
            pmcs,
            triples,
            block_index,
            triple_ranges,
            times: PhaseTimes {
                separators: t1 - t0,
                pmcs: t2 - t1,
                blocks_and_triples: t3 - t2,
            },
        }
    }

    pub fn triples_of(&self, block_id: usize) -> &[GoodTriple] {
        &self.triples[self.triple_ranges[block_id].clone()]
    }

    /// Indices into `triples` of the triples of `block_id`.
    pub fn triple_ids(&self, block_id: usize) -> Range<usize> {
        self.triple_ranges[block_id].clone()
    }

    /// Block id of the full block whose component is `component`.
    pub fn block_of(&self, component: &VertexSet) -> Option<usize> {
        self.block_index.get(component)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cycle, petersen};

    #[test]
    fn triple_ranges_cover_all_triples() {
        for g in [cycle(6), petersen()] {
            let a = Artifacts::compute(&g);
            let total: usize = (0..a.blocks.len()).map(|b| a.triples_of(b).len()).sum();
            assert_eq!(total, a.triples.len());
            for b in 0..a.blocks.len() {
                assert!(a.triples_of(b).iter().all(|t| t.block_id == b));
                assert!(!a.triples_of(b).is_empty(), "every full block has a triple");
            }
        }
    }
}
