#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use triangulex::generators::{cycle, fixture_families, gnp, random_tree};
use triangulex::iso::pattern_treewidth;
use triangulex::Graph;

/// Random graphs with `n` drawn from `sizes` and edge probability from `0.1..0.9`.
pub fn random_graphs(rng: &mut ChaCha8Rng, count: usize, sizes: std::ops::RangeInclusive<usize>) -> Vec<Graph> {
    (0..count)
        .map(|_| {
            let n = rng.gen_range(sizes.clone());
            let p = rng.gen_range(0.1..0.9);
            gnp(n, p, rng)
        })
        .collect()
}

/// 500 random graphs on 4..=8 vertices, 200 on 9..=13, and the fixture
/// families up to 10 vertices.
pub fn enumeration_suite(rng: &mut ChaCha8Rng) -> Vec<Graph> {
    let mut out = random_graphs(rng, 500, 4..=8);
    out.extend(random_graphs(rng, 200, 9..=13));
    out.extend(fixture_families(10).into_iter().map(|(_, g)| g));
    out
}

fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let k = a.n();
    Graph::from_edges(k + b.n(), a.edges().chain(b.edges().map(|(u, v)| (u + k, v + k))))
}

/// A pattern with 1..=6 vertices and treewidth at most 2: a tree, a cycle, a
/// forest of two trees, or a random graph filtered by treewidth.
pub fn random_pattern(rng: &mut ChaCha8Rng) -> Graph {
    let k = rng.gen_range(1..=6);
    match rng.gen_range(0..5) {
        0 => random_tree(k, rng),
        1 if k >= 3 => cycle(k),
        2 if k >= 2 => {
            let a = rng.gen_range(1..k);
            let ta = random_tree(a, rng);
            let tb = random_tree(k - a, rng);
            disjoint_union(&ta, &tb)
        }
        _ => loop {
            let f = gnp(k, rng.gen_range(0.2..0.8), rng);
            if pattern_treewidth(&f).unwrap() <= 2 {
                break f;
            }
        },
    }
}
