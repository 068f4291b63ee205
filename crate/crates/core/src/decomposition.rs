//! Tree decompositions as certificates.

use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A rooted forest of bags. Parents always precede their children.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub parents: Vec<Option<usize>>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DecompositionError {
    #[error("node {node} has parent {parent}, which does not precede it")]
    BadParent { node: usize, parent: usize },
    #[error("bag {node} contains vertex {vertex} outside the decomposed set")]
    StrayVertex { node: usize, vertex: usize },
    #[error("vertex {0} is not covered by any bag")]
    Uncovered(usize),
    #[error("edge ({0}, {1}) is not covered by any bag")]
    EdgeUncovered(usize, usize),
    #[error("bags containing vertex {0} are not connected")]
    Disconnected(usize),
}

impl TreeDecomposition {
    pub fn push(&mut self, bag: VertexSet, parent: Option<usize>) -> usize {
        self.bags.push(bag);
        self.parents.push(parent);
        self.bags.len() - 1
    }

    /// Largest bag size minus one; 0 when there are no nonempty bags.
    pub fn width(&self) -> usize {
        self.bags.iter().map(VertexSet::len).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn vertices(&self, n: usize) -> VertexSet {
        let mut all = VertexSet::new(n);
        for b in &self.bags {
            all.union_with(b);
        }
        all
    }

    /// Checks that this is a tree decomposition of `g[set]` and returns its width.
    pub fn validate(&self, g: &Graph, set: &VertexSet) -> Result<usize, DecompositionError> {
        for (node, parent) in self.parents.iter().enumerate() {
            if let Some(p) = *parent {
                if p >= node {
                    return Err(DecompositionError::BadParent { node, parent: p });
                }
            }
        }
        for (node, bag) in self.bags.iter().enumerate() {
            if let Some(vertex) = bag.difference(set).first() {
                return Err(DecompositionError::StrayVertex { node, vertex });
            }
        }
        for v in set {
            let holders: Vec<usize> = (0..self.bags.len())
                .filter(|&i| self.bags[i].contains(v))
                .collect();
            if holders.is_empty() {
                return Err(DecompositionError::Uncovered(v));
            }
            let links = holders
                .iter()
                .filter(|&&i| self.parents[i].is_some_and(|p| self.bags[p].contains(v)))
                .count();
            if holders.len() - links != 1 {
                return Err(DecompositionError::Disconnected(v));
            }
        }
        for (u, v) in g.edges() {
            if set.contains(u)
                && set.contains(v)
                && !self.bags.iter().any(|b| b.contains(u) && b.contains(v))
            {
                return Err(DecompositionError::EdgeUncovered(u, v));
            }
        }
        Ok(self.width())
    }
}
