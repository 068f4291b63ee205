//! Induced subgraph isomorphism for patterns of bounded treewidth.
//!
//! The pattern is given a minimal triangulation `TF` of clique number at most
//! `t + 1`. The host is explored through its full blocks and good triples; a
//! state places a clique `Q` of `TF` onto the block's separator and a union
//! `P` of components of `TF \ Q` inside the block's component.

mod dp;
pub mod matching;
pub mod pattern;

use thiserror::Error;

use crate::artifacts::Artifacts;
use crate::graph::Graph;
use crate::oracle::is_induced_embedding;

pub use matching::{maximum_bipartite_matching, Matching};
pub use pattern::{pattern_treewidth, triangulate_pattern, PatternDecomposition, MAX_PATTERN};

#[derive(Debug, Error)]
pub enum IsoError {
    #[error("pattern has {n} vertices; at most {cap} are supported")]
    PatternTooLarge { n: usize, cap: usize },
    #[error("pattern treewidth exceeds {t}")]
    TreewidthExceeded { t: usize },
    #[error("internal error: {0}")]
    Internal(String),
}

#[derive(Clone, Copy, Debug)]
pub struct IsoOptions {
    /// Allow several pattern components to share one host component when a
    /// one-to-one matching does not exist.
    pub grouping: bool,
}

impl Default for IsoOptions {
    fn default() -> Self {
        IsoOptions { grouping: true }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IsoStats {
    pub alpha_states: usize,
    /// Assignments settled by a saturating matching.
    pub matching_hits: usize,
    /// Assignments that needed several pattern components in one host component.
    pub grouped_hits: usize,
    /// Largest number of bijections tried for a single image set.
    pub max_bijections_per_image: usize,
}

#[derive(Clone, Debug)]
pub struct IsoOutcome {
    /// `embedding[p]` is the host vertex of pattern vertex `p`.
    pub embedding: Option<Vec<usize>>,
    pub stats: IsoStats,
}

pub fn solve_induced_iso(
    g: &Graph,
    f: &Graph,
    t: usize,
    art: &Artifacts,
    opts: IsoOptions,
) -> Result<IsoOutcome, IsoError> {
    if f.n() > g.n() {
        return Ok(IsoOutcome {
            embedding: None,
            stats: IsoStats::default(),
        });
    }
    let pd = triangulate_pattern(f, t)?;
    let mut search = dp::Search::new(g, art, &pd, opts);
    let embedding = search.run();
    let stats = search.stats;
    let factorial: usize = (1..=t + 1).product();
    if stats.max_bijections_per_image > factorial {
        return Err(IsoError::Internal(format!(
            "{} bijections for one image set exceeds ({})!",
            stats.max_bijections_per_image,
            t + 1
        )));
    }
    if let Some(map) = &embedding {
        if !is_induced_embedding(g, f, map) {
            return Err(IsoError::Internal(format!("embedding {map:?} failed verification")));
        }
    }
    Ok(IsoOutcome { embedding, stats })
}

/// Computes host artifacts and the pattern's exact treewidth, then solves.
pub fn induced_iso(g: &Graph, f: &Graph) -> Result<Option<Vec<usize>>, IsoError> {
    let t = pattern_treewidth(f)?;
    let art = Artifacts::compute(g);
    Ok(solve_induced_iso(g, f, t, &art, IsoOptions::default())?.embedding)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle, path, petersen};

    fn find(g: &Graph, f: &Graph) -> Option<Vec<usize>> {
        induced_iso(g, f).unwrap()
    }

    #[test]
    fn fixed_examples() {
        assert!(find(&cycle(4), &path(3)).is_some());
        assert!(find(&cycle(4), &complete(3)).is_none());
        assert!(find(&petersen(), &cycle(4)).is_none());
        assert!(find(&petersen(), &cycle(5)).is_some());
        assert!(find(&cycle(5), &path(3)).is_some());
        assert!(find(&Graph::empty(3), &complete(2)).is_none());
        assert!(find(&cycle(4), &Graph::empty(1)).is_some());
        assert_eq!(find(&cycle(4), &Graph::empty(0)), Some(vec![]));
        assert!(find(&path(2), &path(3)).is_none());
    }

    #[test]
    fn disconnected_pattern_and_host() {
        // Two disjoint edges inside a C6; and across two host components.
        let two_edges = Graph::from_edges(4, [(0, 1), (2, 3)]);
        assert!(find(&cycle(6), &two_edges).is_some());
        assert!(find(&cycle(5), &two_edges).is_none());
        let host = Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]);
        assert!(find(&host, &two_edges).is_some());
        assert!(find(&host, &Graph::empty(4)).is_some());
        assert!(find(&host, &Graph::empty(5)).is_none());
    }

    #[test]
    fn several_components_in_one_host_component() {
        // Three isolated vertices land on the leaves of a star.
        let star = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        let out = solve_induced_iso(&star, &Graph::empty(3), 0, &Artifacts::compute(&star), IsoOptions::default())
            .unwrap();
        assert!(out.embedding.is_some());
    }

    #[test]
    fn one_to_one_matching_is_not_enough() {
        // Triangle 1-2-4 with pendants 3 (on 2) and 0 (on 4). The only
        // independent triple is {0, 1, 3}; under either separator two of its
        // vertices share a host component.
        let g = Graph::from_edges(5, [(0, 4), (1, 2), (1, 4), (2, 3), (2, 4)]);
        let f = Graph::empty(3);
        let art = Artifacts::compute(&g);
        let strict = solve_induced_iso(&g, &f, 0, &art, IsoOptions { grouping: false }).unwrap();
        assert!(strict.embedding.is_none());
        let out = solve_induced_iso(&g, &f, 0, &art, IsoOptions::default()).unwrap();
        let mut image = out.embedding.unwrap();
        image.sort();
        assert_eq!(image, vec![0, 1, 3]);
        assert!(out.stats.grouped_hits > 0);
    }

    #[test]
    fn treewidth_too_small_is_an_error() {
        let art = Artifacts::compute(&petersen());
        assert!(matches!(
            solve_induced_iso(&petersen(), &cycle(5), 1, &art, IsoOptions::default()),
            Err(IsoError::TreewidthExceeded { t: 1 })
        ));
    }
}
