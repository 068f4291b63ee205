//! Named graph families and seeded random graphs.

use rand::Rng;

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// The cycle `C_n`; for `n < 3` this degenerates to a path.
pub fn cycle(n: usize) -> Graph {
    if n < 3 {
        return path(n);
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

pub fn complete(n: usize) -> Graph {
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
}

/// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i — i+5`.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    Graph::from_edges(10, edges)
}

/// Erdős–Rényi `G(n, p)`.
pub fn gnp<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Uniform random labelled tree (random attachment).
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    Graph::from_edges(n, (1..n).map(|v| (rng.gen_range(0..v), v)))
}

/// Random partial 2-tree: grow a 2-tree by stacking vertices on edges,
/// then keep each edge with probability `keep`.
pub fn random_partial_2tree<R: Rng + ?Sized>(n: usize, keep: f64, rng: &mut R) -> Graph {
    if n <= 2 {
        return path(n);
    }
    let mut edges = vec![(0, 1)];
    for v in 2..n {
        let (a, b) = edges[rng.gen_range(0..edges.len())];
        edges.push((a, v));
        edges.push((b, v));
    }
    Graph::from_edges(n, edges.into_iter().filter(|_| rng.gen_bool(keep)))
}

/// Fixture families with up to `max_n` vertices: paths, cycles, cliques and
/// complete bipartite graphs.
pub fn fixture_families(max_n: usize) -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push((format!("P{n}"), path(n)));
        if n >= 3 {
            out.push((format!("C{n}"), cycle(n)));
        }
        out.push((format!("K{n}"), complete(n)));
    }
    for a in 1..=max_n {
        for b in a..=max_n - a {
            out.push((format!("K{a},{b}"), complete_bipartite(a, b)));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn family_sizes() {
        assert_eq!(cycle(5).m(), 5);
        assert_eq!(complete(5).m(), 10);
        assert_eq!(complete_bipartite(2, 3).m(), 6);
        let p = petersen();
        assert_eq!(p.m(), 15);
        assert!((0..10).all(|v| p.degree(v) == 3));
    }

    #[test]
    fn random_partial_2trees_are_sparse() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let g = random_partial_2tree(9, 0.8, &mut rng);
            assert!(g.m() <= 2 * 9 - 3);
        }
    }
}
