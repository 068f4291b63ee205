//! Brute-force reference implementations.
//!
//! Everything here works on plain `u32` adjacency masks and exhaustive sweeps,
//! sharing no code with the fast paths it is used to check. Exponential sweeps
//! are guarded by [`OracleBudget`] before they start.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest pattern the induced-isomorphism oracle accepts.
pub const MAX_ISO_PATTERN: usize = 7;

/// Hard ceiling from the `u32` mask representation.
pub const MASK_BITS: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBudget {
    /// Cap on `n` for sweeps over all `2^n` vertex subsets.
    pub max_n_subsets: usize,
    /// Cap on `n` for the elimination-order dynamic program.
    pub max_n_treewidth: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n_subsets: 16,
            max_n_treewidth: 20,
        }
    }
}

impl OracleBudget {
    /// Both caps set to `n`.
    pub fn uniform(n: usize) -> Self {
        OracleBudget {
            max_n_subsets: n,
            max_n_treewidth: n,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle budget exceeded for {task}: n = {n} > cap {cap}")]
    BudgetExceeded { task: &'static str, n: usize, cap: usize },
}

fn guard(task: &'static str, n: usize, cap: usize) -> Result<(), OracleError> {
    let cap = cap.min(MASK_BITS);
    if n > cap {
        Err(OracleError::BudgetExceeded { task, n, cap })
    } else {
        Ok(())
    }
}

/// Adjacency as one `u32` row per vertex.
#[derive(Clone)]
struct Masks {
    n: usize,
    rows: Vec<u32>,
}

impl Masks {
    fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut rows = vec![0u32; n];
        for (u, v) in g.edges() {
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
        }
        Masks { n, rows }
    }

    fn full(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u] >> v & 1 == 1
    }

    fn open_nbhd(&self, set: u32) -> u32 {
        let mut r = 0;
        for v in bits(set) {
            r |= self.rows[v];
        }
        r & !set
    }

    /// Components of the subgraph induced by `domain`, by repeated search.
    fn components(&self, domain: u32) -> Vec<u32> {
        let mut seen = 0u32;
        let mut out = Vec::new();
        for start in bits(domain) {
            if seen >> start & 1 == 1 {
                continue;
            }
            let mut comp = 0u32;
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if comp >> v & 1 == 1 {
                    continue;
                }
                comp |= 1 << v;
                for u in bits(self.rows[v] & domain) {
                    if comp >> u & 1 == 0 {
                        stack.push(u);
                    }
                }
            }
            seen |= comp;
            out.push(comp);
        }
        out
    }

    fn edges_within(&self, set: u32) -> usize {
        bits(set)
            .map(|v| (self.rows[v] & set).count_ones() as usize)
            .sum::<usize>()
            / 2
    }
}

fn bits(mut x: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if x == 0 {
            None
        } else {
            let b = x.trailing_zeros() as usize;
            x &= x - 1;
            Some(b)
        }
    })
}

fn to_set(n: usize, mask: u32) -> VertexSet {
    VertexSet::from_vertices(n, bits(mask))
}

/// All `k`-subsets of `0..n` as masks, in increasing numeric order.
fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u32> {
    let limit: u64 = 1u64 << n;
    let mut cur: u64 = if k == 0 { 0 } else { (1u64 << k) - 1 };
    let mut done = k > n;
    std::iter::from_fn(move || {
        if done || cur >= limit {
            return None;
        }
        let out = cur as u32;
        if cur == 0 {
            done = true;
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            cur = (((r ^ cur) >> 2) / c) | r;
        }
        Some(out)
    })
}

fn full_components(g: &Masks, sep: u32) -> usize {
    g.components(g.full() & !sep)
        .into_iter()
        .filter(|&c| g.open_nbhd(c) == sep)
        .count()
}

/// All nonempty `S ≠ V` with at least two full components in `G \ S`.
pub fn brute_minimal_separators(
    g: &Graph,
    budget: &OracleBudget,
) -> Result<BTreeSet<VertexSet>, OracleError> {
    guard("minimal separators", g.n(), budget.max_n_subsets)?;
    let m = Masks::of(g);
    let full = m.full();
    Ok((1..full)
        .filter(|&s| full_components(&m, s) >= 2)
        .map(|s| to_set(g.n(), s))
        .collect())
}

fn pmc_by_definition(g: &Masks, k: u32) -> bool {
    if k == 0 {
        return false;
    }
    let comps = g.components(g.full() & !k);
    let seps: Vec<u32> = comps.iter().map(|&c| g.open_nbhd(c)).collect();
    if seps.contains(&k) {
        return false;
    }
    let members: Vec<usize> = bits(k).collect();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            let pair = 1 << u | 1 << v;
            if !g.adjacent(u, v) && !seps.iter().any(|&s| s & pair == pair) {
                return false;
            }
        }
    }
    true
}

/// Every nonempty vertex set passing the two-condition PMC test.
pub fn brute_pmcs(g: &Graph, budget: &OracleBudget) -> Result<BTreeSet<VertexSet>, OracleError> {
    guard("potential maximal cliques", g.n(), budget.max_n_subsets)?;
    let m = Masks::of(g);
    Ok((1..=m.full())
        .filter(|&k| pmc_by_definition(&m, k))
        .map(|k| to_set(g.n(), k))
        .collect())
}

/// Vertices outside `eliminated ∪ {v}` reachable from `v` through `eliminated`.
fn elimination_neighbors(g: &Masks, eliminated: u32, v: usize) -> u32 {
    let mut reach = 1u32 << v;
    loop {
        let grown = (g.open_nbhd(reach) & eliminated) | reach;
        if grown == reach {
            break;
        }
        reach = grown;
    }
    g.open_nbhd(reach) & !eliminated
}

/// Exact treewidth by dynamic programming over eliminated vertex sets.
pub fn brute_treewidth(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    guard("treewidth", g.n(), budget.max_n_treewidth)?;
    let m = Masks::of(g);
    if m.n == 0 {
        return Ok(0);
    }
    // best[S] = min over orders of S of the max elimination degree, offset by one
    // so that the empty set can hold "-1".
    let size = 1usize << m.n;
    let mut best = vec![u8::MAX; size];
    best[0] = 0;
    for s in 1..size as u32 {
        let mut value = u8::MAX;
        for v in bits(s) {
            let prev = best[(s & !(1 << v)) as usize];
            let q = elimination_neighbors(&m, s & !(1 << v), v).count_ones() as u8 + 1;
            value = value.min(prev.max(q));
        }
        best[s as usize] = value;
    }
    Ok(best[size - 1] as usize - 1)
}

/// Whether the subgraph induced by `within` has treewidth at most `t`:
/// a search over eliminated subsets where each step's elimination degree is
/// at most `t`.
fn treewidth_within_at_most(g: &Masks, within: u32, t: usize) -> bool {
    let k = within.count_ones() as usize;
    if k <= t + 1 {
        return true;
    }
    let local: Vec<usize> = bits(within).collect();
    let mut sub = Masks {
        n: k,
        rows: vec![0; k],
    };
    for (i, &u) in local.iter().enumerate() {
        for (j, &v) in local.iter().enumerate() {
            if g.adjacent(u, v) {
                sub.rows[i] |= 1 << j;
            }
        }
    }
    let full = sub.full();
    let mut visited = vec![false; 1usize << k];
    let mut stack = vec![0u32];
    visited[0] = true;
    while let Some(s) = stack.pop() {
        if s == full {
            return true;
        }
        for v in bits(full & !s) {
            let next = s | 1 << v;
            if visited[next as usize] {
                continue;
            }
            if elimination_neighbors(&sub, s, v).count_ones() as usize <= t {
                visited[next as usize] = true;
                stack.push(next);
            }
        }
    }
    false
}

/// Whether `g[set]` has treewidth at most `t`.
pub fn treewidth_at_most(
    g: &Graph,
    set: &VertexSet,
    t: usize,
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    guard("treewidth certification", set.len(), budget.max_n_treewidth)?;
    let (h, _) = g.induced_subgraph(set);
    let m = Masks::of(&h);
    Ok(treewidth_within_at_most(&m, m.full(), t))
}

/// Maximum `|X|` with `tw(g[X]) ≤ t`, and the lexicographically first such `X`
/// among those of that size in mask order. The empty set always qualifies.
pub fn brute_max_induced_tw(
    g: &Graph,
    t: usize,
    budget: &OracleBudget,
) -> Result<(usize, VertexSet), OracleError> {
    guard("max induced treewidth", g.n(), budget.max_n_subsets)?;
    let m = Masks::of(g);
    for k in (0..=m.n).rev() {
        // A graph of treewidth t on k > t vertices has at most t·k − t(t+1)/2 edges.
        let edge_cap = if k > t { t * k - t * (t + 1) / 2 } else { usize::MAX };
        for x in k_subsets(m.n, k) {
            if m.edges_within(x) <= edge_cap && treewidth_within_at_most(&m, x, t) {
                return Ok((k, to_set(g.n(), x)));
            }
        }
    }
    unreachable!("the empty set always has treewidth 0")
}

/// Maximum independent set by exhaustive sweep.
pub fn brute_max_independent_set(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    guard("independent set", g.n(), budget.max_n_subsets)?;
    let m = Masks::of(g);
    Ok((0..=m.full())
        .filter(|&x| m.edges_within(x) == 0)
        .map(|x| x.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Maximum induced forest by exhaustive sweep (`edges = vertices − components`).
pub fn brute_max_induced_forest(g: &Graph, budget: &OracleBudget) -> Result<usize, OracleError> {
    guard("induced forest", g.n(), budget.max_n_subsets)?;
    let m = Masks::of(g);
    Ok((0..=m.full())
        .filter(|&x| m.edges_within(x) + m.components(x).len() == x.count_ones() as usize)
        .map(|x| x.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Whether some induced subgraph on at least four vertices is a cycle.
pub fn has_chordless_cycle(g: &Graph, budget: &OracleBudget) -> Result<bool, OracleError> {
    guard("chordless cycle", g.n(), budget.max_n_subsets)?;
    let m = Masks::of(g);
    Ok((0..=m.full()).any(|x| {
        x.count_ones() >= 4
            && bits(x).all(|v| (m.rows[v] & x).count_ones() == 2)
            && m.components(x).len() == 1
    }))
}

fn sorted_degrees(g: &Masks, set: u32) -> Vec<u32> {
    let mut d: Vec<u32> = bits(set).map(|v| (g.rows[v] & set).count_ones()).collect();
    d.sort_unstable();
    d
}

/// Some induced embedding of `pattern` into `host` (as `pattern vertex → host
/// vertex`), by trying every vertex subset of the right size against every
/// bijection. `prune` skips subsets whose degree sequence differs from the
/// pattern's; it never changes the answer.
pub fn brute_induced_iso(
    host: &Graph,
    pattern: &Graph,
    prune: bool,
    budget: &OracleBudget,
) -> Result<Option<Vec<usize>>, OracleError> {
    guard("induced isomorphism host", host.n(), budget.max_n_subsets)?;
    guard("induced isomorphism pattern", pattern.n(), MAX_ISO_PATTERN)?;
    let k = pattern.n();
    if k > host.n() {
        return Ok(None);
    }
    let h = Masks::of(host);
    let f = Masks::of(pattern);
    let target = sorted_degrees(&f, f.full());
    for x in k_subsets(h.n, k) {
        if prune && sorted_degrees(&h, x) != target {
            continue;
        }
        let mut image: Vec<usize> = bits(x).collect();
        if let Some(found) = try_permutations(&h, &f, &mut image, 0) {
            return Ok(Some(found));
        }
    }
    Ok(None)
}

fn try_permutations(h: &Masks, f: &Masks, image: &mut Vec<usize>, at: usize) -> Option<Vec<usize>> {
    let k = image.len();
    if at == k {
        let ok = (0..k).all(|a| (a + 1..k).all(|b| f.adjacent(a, b) == h.adjacent(image[a], image[b])));
        return ok.then(|| image.clone());
    }
    for i in at..k {
        image.swap(at, i);
        if let Some(found) = try_permutations(h, f, image, at + 1) {
            return Some(found);
        }
        image.swap(at, i);
    }
    None
}

/// Checks that `map` is an induced embedding of `pattern` into `host`.
pub fn is_induced_embedding(host: &Graph, pattern: &Graph, map: &[usize]) -> bool {
    if map.len() != pattern.n() || map.iter().any(|&v| v >= host.n()) {
        return false;
    }
    let distinct: BTreeSet<usize> = map.iter().copied().collect();
    if distinct.len() != map.len() {
        return false;
    }
    (0..map.len()).all(|a| {
        (a + 1..map.len()).all(|b| pattern.has_edge(a, b) == host.has_edge(map[a], map[b]))
    })
}
