//! Maximum bipartite matching (Hopcroft–Karp).

use std::collections::VecDeque;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    pub size: usize,
    /// `(left, right)` pairs, ascending by left vertex.
    pub pairs: Vec<(usize, usize)>,
}

/// `adj[x]` lists the right vertices adjacent to left vertex `x`; right
/// vertices are `0..right`. Deterministic for a given input order.
pub fn maximum_bipartite_matching(right: usize, adj: &[Vec<usize>]) -> Matching {
    const NONE: usize = usize::MAX;
    let left = adj.len();
    let mut match_l = vec![NONE; left];
    let mut match_r = vec![NONE; right];
    let mut dist = vec![0usize; left];

    loop {
        // Layer free left vertices, stopping at the first layer that reaches a free right vertex.
        let mut queue = VecDeque::new();
        for x in 0..left {
            if match_l[x] == NONE {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = usize::MAX;
            }
        }
        let mut found = false;
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                let z = match_r[y];
                if z == NONE {
                    found = true;
                } else if dist[z] == usize::MAX {
                    dist[z] = dist[x] + 1;
                    queue.push_back(z);
                }
            }
        }
        if !found {
            break;
        }
        for x in 0..left {
            if match_l[x] == NONE {
                augment(x, adj, &mut match_l, &mut match_r, &mut dist);
            }
        }
    }

    let pairs: Vec<(usize, usize)> = match_l
        .iter()
        .enumerate()
        .filter(|&(_, &y)| y != NONE)
        .map(|(x, &y)| (x, y))
        .collect();
    Matching {
        size: pairs.len(),
        pairs,
    }
}

fn augment(x: usize, adj: &[Vec<usize>], match_l: &mut [usize], match_r: &mut [usize], dist: &mut [usize]) -> bool {
    for &y in &adj[x] {
        let z = match_r[y];
        let ok = z == usize::MAX || (dist[z] == dist[x] + 1 && augment(z, adj, match_l, match_r, dist));
        if ok {
            match_l[x] = y;
            match_r[y] = x;
            return true;
        }
    }
    dist[x] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        let full: Vec<Vec<usize>> = vec![vec![0, 1, 2]; 3];
        assert_eq!(maximum_bipartite_matching(3, &full).size, 3);
        assert_eq!(maximum_bipartite_matching(3, &[vec![], vec![]]).size, 0);
        // x1 - y1 - x2
        let m = maximum_bipartite_matching(1, &[vec![0], vec![0]]);
        assert_eq!(m.size, 1);
        assert_eq!(m.pairs, vec![(0, 0)]);
        assert_eq!(maximum_bipartite_matching(0, &[]).size, 0);
    }

    #[test]
    fn needs_augmenting_path() {
        // Greedy would match x0-y0 and leave x1 stuck.
        let m = maximum_bipartite_matching(2, &[vec![0, 1], vec![0]]);
        assert_eq!(m.size, 2);
        assert_eq!(m.pairs, vec![(0, 1), (1, 0)]);
    }

    fn brute(adj: &[Vec<usize>], x: usize, used: &mut [bool]) -> usize {
        if x == adj.len() {
            return 0;
        }
        let mut best = brute(adj, x + 1, used);
        for &y in &adj[x] {
            if !used[y] {
                used[y] = true;
                best = best.max(1 + brute(adj, x + 1, used));
                used[y] = false;
            }
        }
        best
    }

    proptest! {
        #[test]
        fn matches_brute_force(edges in proptest::collection::vec((0usize..6, 0usize..6), 0..20)) {
            let mut adj = vec![Vec::new(); 6];
            for (x, y) in edges {
                if !adj[x].contains(&y) {
                    adj[x].push(y);
                }
            }
            let m = maximum_bipartite_matching(6, &adj);
            prop_assert_eq!(m.size, brute(&adj, 0, &mut [false; 6]));
            let mut seen = [false; 6];
            for &(x, y) in &m.pairs {
                prop_assert!(adj[x].contains(&y));
                prop_assert!(!seen[y]);
                seen[y] = true;
            }
        }
    }
}
