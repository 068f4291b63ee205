//! Simple undirected graphs with bit-set adjacency.

use crate::vertex_set::VertexSet;

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    edge_count: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![VertexSet::new(n); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    ///
    /// Panics on self-loops or endpoints `>= n`; untrusted input goes through
    /// [`crate::io`] instead.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            assert!(u < n && v < n, "edge ({u}, {v}) outside 0..{n}");
            assert_ne!(u, v, "self-loop on vertex {u}");
            adjacency[u].insert(v);
            adjacency[v].insert(u);
        }
        let edge_count = adjacency.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph {
            adjacency,
            edge_count,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n())
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adjacency[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Open neighborhood `N(S) = ⋃_{v∈S} N(v) \ S`.
    pub fn neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut r = self.empty_set();
        for v in s {
            r.union_with(&self.adjacency[v]);
        }
        r.difference_with(s);
        r
    }

    /// Closed neighborhood `N[S] = N(S) ∪ S`.
    pub fn closed_neighborhood(&self, s: &VertexSet) -> VertexSet {
        let mut r = s.clone();
        for v in s {
            r.union_with(&self.adjacency[v]);
        }
        r
    }

    /// The component of `g[domain]` containing `start`.
    pub fn component_of(&self, domain: &VertexSet, start: usize) -> VertexSet {
        debug_assert!(domain.contains(start));
        let mut comp = VertexSet::singleton(self.n(), start);
        let mut frontier = comp.clone();
        loop {
            let mut next = self.empty_set();
            for u in &frontier {
                next.union_with(&self.adjacency[u]);
            }
            next.intersect_with(domain);
            next.difference_with(&comp);
            if next.is_empty() {
                return comp;
            }
            comp.union_with(&next);
            frontier = next;
        }
    }

    /// Connected components of `g[domain]`, ordered by minimum vertex.
    pub fn components(&self, domain: &VertexSet) -> Vec<VertexSet> {
        let mut rest = domain.clone();
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.component_of(&rest, v);
            rest.difference_with(&c);
            out.push(c);
        }
        out
    }

    /// Connected components of `g \ removed`.
    pub fn components_without(&self, removed: &VertexSet) -> Vec<VertexSet> {
        self.components(&removed.complement())
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components(&self.vertices()).len() == 1
    }

    pub fn is_clique(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset(&self.adjacency[v])
        })
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(&self.vertices())
    }

    /// Maximum cardinality search order; reversed, it is a perfect
    /// elimination order exactly when the graph is chordal.
    pub fn maximum_cardinality_search(&self) -> Vec<usize> {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut numbered = self.empty_set();
        let mut order = Vec::with_capacity(n);
        for _ in 0..n {
            let v = (0..n)
                .filter(|&v| !numbered.contains(v))
                .max_by(|&a, &b| weight[a].cmp(&weight[b]).then(b.cmp(&a)))
                .expect("unnumbered vertex");
            numbered.insert(v);
            order.push(v);
            for u in &self.adjacency[v] {
                if !numbered.contains(u) {
                    weight[u] += 1;
                }
            }
        }
        order
    }

    /// A perfect elimination order, or `None` if the graph is not chordal.
    pub fn perfect_elimination_order(&self) -> Option<Vec<usize>> {
        let mut peo = self.maximum_cardinality_search();
        peo.reverse();
        self.is_perfect_elimination_order(&peo).then_some(peo)
    }

    /// Checks that for each vertex its neighbors later in `order` form a clique.
    pub fn is_perfect_elimination_order(&self, order: &[usize]) -> bool {
        let n = self.n();
        if order.len() != n {
            return false;
        }
        let mut position = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || position[v] != usize::MAX {
                return false;
            }
            position[v] = i;
        }
        order.iter().all(|&v| {
            let later: VertexSet = VertexSet::from_vertices(
                n,
                self.adjacency[v].iter().filter(|&u| position[u] > position[v]),
            );
            match later.iter().min_by_key(|&u| position[u]) {
                None => true,
                Some(parent) => {
                    let mut rest = later.clone();
                    rest.remove(parent);
                    rest.is_subset(&self.adjacency[parent])
                }
            }
        })
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_order().is_some()
    }

    /// Maximal cliques of a chordal graph, sorted; `None` if not chordal.
    pub fn chordal_maximal_cliques(&self) -> Option<Vec<VertexSet>> {
        let peo = self.perfect_elimination_order()?;
        let n = self.n();
        let mut position = vec![0; n];
        for (i, &v) in peo.iter().enumerate() {
            position[v] = i;
        }
        let candidates: Vec<VertexSet> = peo
            .iter()
            .map(|&v| {
                let mut c = VertexSet::from_vertices(
                    n,
                    self.adjacency[v].iter().filter(|&u| position[u] > position[v]),
                );
                c.insert(v);
                c
            })
            .collect();
        let mut cliques: Vec<VertexSet> = candidates
            .iter()
            .filter(|c| {
                !candidates
                    .iter()
                    .any(|d| d.len() > c.len() && c.is_subset(d))
            })
            .cloned()
            .collect();
        cliques.sort();
        cliques.dedup();
        Some(cliques)
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in ascending order,
    /// with the map from new labels back to the originals.
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        let labels = s.to_vec();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in labels.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges()
            .filter(|&(u, v)| s.contains(u) && s.contains(v))
            .map(|(u, v)| (index[u], index[v]));
        (Graph::from_edges(labels.len(), edges), labels)
    }

    /// Copy of this graph with the extra edges added.
    pub fn with_edges<I>(&self, extra: I) -> Graph
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Graph::from_edges(self.n(), self.edges().chain(extra))
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges().collect::<Vec<_>>())
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
    fn neighborhood_examples() {
        let c4 = cycle(4);
        assert_eq!(c4.neighborhood(&set(4, &[1])), set(4, &[0, 2]));
        assert_eq!(c4.neighborhood(&set(4, &[])), set(4, &[]));
        let p3 = path(3);
        assert_eq!(p3.neighborhood(&set(3, &[0, 2])), set(3, &[1]));
    }

    #[test]
    fn component_examples() {
        let c4 = cycle(4);
        assert_eq!(c4.components(&c4.vertices()), vec![set(4, &[0, 1, 2, 3])]);
        assert_eq!(c4.components(&set(4, &[1, 3])), vec![set(4, &[1]), set(4, &[3])]);
        let p3 = path(3);
        assert_eq!(p3.components(&set(3, &[0, 2])), vec![set(3, &[0]), set(3, &[2])]);
    }

    #[test]
    fn clique_examples() {
        assert!(complete(3).is_clique(&set(3, &[0, 1, 2])));
        assert!(!cycle(4).is_clique(&set(4, &[0, 1, 2])));
        assert!(cycle(4).is_clique(&set(4, &[])));
    }

    #[test]
    fn chordal_examples() {
        assert!(!cycle(4).is_chordal());
        assert!(path(6).is_chordal());
        assert!(Graph::from_edges(5, [(0, 1), (0, 2), (0, 3), (3, 4)]).is_chordal());
        assert!(complete(4).is_chordal());
        assert!(cycle(3).is_chordal());
        assert!(Graph::empty(0).is_chordal());
    }

    #[test]
    fn chordal_cliques_of_a_chorded_square() {
        let g = cycle(4).with_edges([(0, 2)]);
        assert_eq!(
            g.chordal_maximal_cliques().unwrap(),
            vec![set(4, &[0, 1, 2]), set(4, &[0, 2, 3])]
        );
        assert!(cycle(4).chordal_maximal_cliques().is_none());
    }

    #[test]
    fn induced_subgraph_relabels() {
        let (h, labels) = cycle(5).induced_subgraph(&set(5, &[0, 1, 3, 4]));
        assert_eq!(labels, vec![0, 1, 3, 4]);
        assert_eq!(h.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (2, 3)]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]);
        assert_eq!(g.m(), 1);
    }
}
