//! Minimal triangulations of small pattern graphs.

use std::collections::HashSet;

use crate::graph::Graph;
use crate::minsep::{all_full_blocks, enumerate_minimal_separators, Block, BlockIndex};
use crate::pmc::{component_separators, good_triples, PmcRecord};
use crate::vertex_set::VertexSet;

use super::IsoError;

/// Patterns are handled with one machine word per vertex set.
pub const MAX_PATTERN: usize = 24;

pub(crate) fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |&i| mask >> i & 1 == 1)
}

pub(crate) fn rows_of(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u))
        .collect()
}

#[derive(Clone, Debug)]
pub struct PatternDecomposition {
    pub f: Graph,
    /// Minimal triangulation of `f` with clique number at most `t + 1`.
    pub tf: Graph,
    pub t: usize,
    pub maximal_cliques: Vec<VertexSet>,
    pub pattern_blocks: Vec<Block>,
    /// `(block id, maximal clique)` pairs of `tf`.
    pub pattern_triples: Vec<(usize, VertexSet)>,
    pub(crate) f_rows: Vec<u32>,
    pub(crate) tf_rows: Vec<u32>,
    /// Every clique of `tf`, including the empty one, ascending by size.
    pub(crate) cliques: Vec<u32>,
}

impl PatternDecomposition {
    pub(crate) fn full(&self) -> u32 {
        if self.f.n() == 32 {
            u32::MAX
        } else {
            (1u32 << self.f.n()) - 1
        }
    }

    /// Components of `tf[set]`, ordered by lowest vertex.
    pub(crate) fn tf_components(&self, set: u32) -> Vec<u32> {
        let mut rest = set;
        let mut out = Vec::new();
        while rest != 0 {
            let mut comp = rest & rest.wrapping_neg();
            let mut frontier = comp;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let new = self.tf_rows[v] & set & !comp;
                comp |= new;
                frontier |= new;
            }
            rest &= !comp;
            out.push(comp);
        }
        out
    }

    /// Open neighbourhood of `set` in `tf`.
    pub(crate) fn tf_neighborhood(&self, set: u32) -> u32 {
        bits(set).fold(0, |m, v| m | self.tf_rows[v]) & !set
    }

    pub(crate) fn f_adjacent(&self, a: usize, b: usize) -> bool {
        self.f_rows[a] >> b & 1 == 1
    }
}

/// Vertices outside `eliminated ∪ {v}` reachable from `v` through eliminated
/// vertices: the neighbourhood of `v` once `eliminated` has been eliminated.
fn fill_neighbors(rows: &[u32], eliminated: u32, v: usize) -> u32 {
    let mut seen = 1u32 << v;
    let mut frontier = 1u32 << v;
    let mut out = 0u32;
    while frontier != 0 {
        let u = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let nb = rows[u] & !seen;
        seen |= nb;
        out |= nb & !eliminated;
        frontier |= nb & eliminated;
    }
    out
}

fn is_clique_after(rows: &[u32], eliminated: u32, set: u32) -> bool {
    bits(set).all(|a| {
        let nb = fill_neighbors(rows, eliminated, a);
        set & !(1 << a) & !nb == 0
    })
}

/// Elimination order whose fill graph has clique number at most `t + 1`,
/// by depth-first search over eliminated sets with a memo of dead ends.
pub fn elimination_order(f: &Graph, t: usize) -> Option<Vec<usize>> {
    assert!(f.n() <= MAX_PATTERN);
    let rows = rows_of(f);
    let full = if f.n() == 0 { 0 } else { (1u32 << f.n()) - 1 };
    let mut order = Vec::with_capacity(f.n());
    let mut dead = HashSet::new();
    search(&rows, full, 0, t, &mut order, &mut dead).then_some(order)
}

fn search(rows: &[u32], full: u32, eliminated: u32, t: usize, order: &mut Vec<usize>, dead: &mut HashSet<u32>) -> bool {
    if eliminated == full {
        return true;
    }
    if dead.contains(&eliminated) {
        return false;
    }
    let remaining = full & !eliminated;
    // A simplicial vertex of small degree can always be eliminated first.
    for v in bits(remaining) {
        let nb = fill_neighbors(rows, eliminated, v);
        if nb.count_ones() as usize <= t && is_clique_after(rows, eliminated, nb) {
            order.push(v);
            if search(rows, full, eliminated | 1 << v, t, order, dead) {
                return true;
            }
            order.pop();
            dead.insert(eliminated);
            return false;
        }
    }
    for v in bits(remaining) {
        if fill_neighbors(rows, eliminated, v).count_ones() as usize <= t {
            order.push(v);
            if search(rows, full, eliminated | 1 << v, t, order, dead) {
                return true;
            }
            order.pop();
        }
    }
    dead.insert(eliminated);
    false
}

/// Exact treewidth of a pattern.
pub fn pattern_treewidth(f: &Graph) -> Result<usize, IsoError> {
    if f.n() > MAX_PATTERN {
        return Err(IsoError::PatternTooLarge { n: f.n(), cap: MAX_PATTERN });
    }
    Ok((0..f.n().max(1))
        .find(|&t| elimination_order(f, t).is_some())
        .unwrap_or(0))
}

fn fill_graph(f: &Graph, order: &[usize]) -> Graph {
    let rows = rows_of(f);
    let mut eliminated = 0u32;
    let mut edges: Vec<(usize, usize)> = f.edges().collect();
    for &v in order {
        let nb: Vec<usize> = bits(fill_neighbors(&rows, eliminated, v)).collect();
        for (i, &a) in nb.iter().enumerate() {
            for &b in &nb[i + 1..] {
                edges.push((a, b));
            }
        }
        eliminated |= 1 << v;
    }
    Graph::from_edges(f.n(), edges)
}

/// Drops fill edges one at a time while the graph stays chordal. A
/// triangulation is minimal exactly when no single fill edge can be dropped.
fn minimalize(f: &Graph, mut h: Graph) -> Graph {
    'outer: loop {
        let fill: Vec<(usize, usize)> = h.edges().filter(|&(a, b)| !f.has_edge(a, b)).collect();
        for &(a, b) in &fill {
            let candidate = Graph::from_edges(h.n(), h.edges().filter(|&e| e != (a, b)));
            if candidate.is_chordal() {
                h = candidate;
                continue 'outer;
            }
        }
        return h;
    }
}

pub fn triangulate_pattern(f: &Graph, t: usize) -> Result<PatternDecomposition, IsoError> {
    if f.n() > MAX_PATTERN {
        return Err(IsoError::PatternTooLarge { n: f.n(), cap: MAX_PATTERN });
    }
    let order = elimination_order(f, t).ok_or(IsoError::TreewidthExceeded { t })?;
    let tf = minimalize(f, fill_graph(f, &order));
    let maximal_cliques = tf.chordal_maximal_cliques().expect("triangulation is chordal");
    debug_assert!(maximal_cliques.iter().all(|c| c.len() <= t + 1));

    let seps = enumerate_minimal_separators(&tf);
    let pattern_blocks = all_full_blocks(&tf, &seps);
    let index = BlockIndex::new(&pattern_blocks);
    let records: Vec<PmcRecord> = maximal_cliques
        .iter()
        .map(|c| PmcRecord {
            omega: c.clone(),
            local_separators: component_separators(&tf, c),
        })
        .collect();
    let pattern_triples = good_triples(&tf, &pattern_blocks, &index, &records)
        .into_iter()
        .map(|tr| (tr.block_id, records[tr.omega_id].omega.clone()))
        .collect();

    let mut cliques: Vec<u32> = maximal_cliques
        .iter()
        .flat_map(|c| c.subsets_up_to(c.len()))
        .map(|s| s.iter().fold(0u32, |m, v| m | 1 << v))
        .collect::<HashSet<u32>>()
        .into_iter()
        .collect();
    if cliques.is_empty() {
        cliques.push(0);
    }
    cliques.sort_by_key(|&c| (c.count_ones(), c));

    Ok(PatternDecomposition {
        f_rows: rows_of(f),
        tf_rows: rows_of(&tf),
        f: f.clone(),
        tf,
        t,
        maximal_cliques,
        pattern_blocks,
        pattern_triples,
        cliques,
    })
}
