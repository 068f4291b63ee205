//! Acceptance criteria. Each test prints one `criterion N ...: PASS|FAIL` line.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use triangulex::cli::bench::separator_ceiling;
use triangulex::generators::{complete, cycle, fixture_families, gnp, path, petersen};
use triangulex::io::{parse_dimacs, parse_edge_list, to_dimacs, to_edge_list};
use triangulex::iso::{pattern_treewidth, solve_induced_iso, IsoOptions};
use triangulex::maxsub::solve_max_induced_tw;
use triangulex::minsep::{enumerate_minimal_separators, is_minimal_separator};
use triangulex::oracle::{
    brute_induced_iso, brute_max_induced_tw, brute_minimal_separators, brute_pmcs, has_chordless_cycle,
    is_induced_embedding, treewidth_at_most, OracleBudget,
};
use triangulex::pmc::enumerate_pmcs;
use triangulex::{Artifacts, Graph, VertexSet};

fn report(id: u32, name: &str, failures: &[String], detail: String) {
    let verdict = if failures.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {id} {name}: {verdict} ({detail})");
    for f in failures.iter().take(5) {
        println!("  {f}");
    }
    assert!(failures.is_empty(), "criterion {id} failed with {} problems", failures.len());
}

fn within(elapsed: Duration, limit_s: u64, failures: &mut Vec<String>) {
    if elapsed > Duration::from_secs(limit_s) {
        failures.push(format!("took {elapsed:.1?}, limit {limit_s} s"));
    }
}

fn suite() -> Vec<Graph> {
    common::enumeration_suite(&mut ChaCha8Rng::seed_from_u64(2024))
}

#[test]
fn criterion_1_pmc_enumeration_exactness() {
    let graphs = suite();
    let budget = OracleBudget::default();
    let start = Instant::now();
    let mut failures = Vec::new();
    for g in &graphs {
        let got: BTreeSet<VertexSet> = enumerate_pmcs(g).into_iter().map(|r| r.omega).collect();
        let expected = brute_pmcs(g, &budget).unwrap();
        if got != expected {
            failures.push(format!("{g:?}: {} vs oracle {}", got.len(), expected.len()));
        }
    }
    within(start.elapsed(), 120, &mut failures);
    let detail = format!("{} graphs, {:.1?}", graphs.len(), start.elapsed());
    report(1, "pmc enumeration exactness", &failures, detail);
}

#[test]
fn criterion_2_minimal_separator_exactness() {
    let graphs = suite();
    let budget = OracleBudget::default();
    let start = Instant::now();
    let mut failures = Vec::new();
    for g in &graphs {
        let got: BTreeSet<VertexSet> = enumerate_minimal_separators(g).into_iter().collect();
        let expected = brute_minimal_separators(g, &budget).unwrap();
        if got != expected {
            failures.push(format!("{g:?}: {} vs oracle {}", got.len(), expected.len()));
        }
    }
    within(start.elapsed(), 60, &mut failures);
    let detail = format!("{} graphs, {:.1?}", graphs.len(), start.elapsed());
    report(2, "minimal separator exactness", &failures, detail);
}

#[test]
fn criterion_3_max_induced_treewidth() {
    let budget = OracleBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut graphs = common::random_graphs(&mut rng, 300, 4..=13);
    graphs.extend(fixture_families(10).into_iter().map(|(_, g)| g));
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut solves = 0;
    let mut check = |g: &Graph, t: usize, expected: Option<usize>, failures: &mut Vec<String>| {
        let sol = solve_max_induced_tw(g, t, &Artifacts::compute(g)).unwrap();
        solves += 1;
        let expected = expected.unwrap_or_else(|| brute_max_induced_tw(g, t, &budget).unwrap().0);
        if sol.ell_max != expected {
            failures.push(format!("t={t} {g:?}: {} vs {expected}", sol.ell_max));
        }
        if sol.witness.len() != sol.ell_max || !treewidth_at_most(g, &sol.witness, t, &budget).unwrap() {
            failures.push(format!("t={t} {g:?}: witness {:?} not certified", sol.witness.to_vec()));
        }
    };
    for g in &graphs {
        for t in 0..=2 {
            check(g, t, None, &mut failures);
        }
    }
    check(&cycle(5), 0, Some(2), &mut failures);
    check(&petersen(), 0, Some(4), &mut failures);
    check(&petersen(), 1, Some(7), &mut failures);
    for n in 3..=12 {
        check(&cycle(n), 1, Some(n - 1), &mut failures);
    }
    check(&complete(5), 2, Some(3), &mut failures);
    within(start.elapsed(), 600, &mut failures);
    let detail = format!("{solves} solves on {} graphs, {:.1?}", graphs.len(), start.elapsed());
    report(3, "max induced subgraph of treewidth t", &failures, detail);
}

#[test]
fn criterion_4_induced_isomorphism() {
    let budget = OracleBudget::default();
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    let start = Instant::now();
    let mut failures = Vec::new();
    let (mut yes, mut no, mut grouped) = (0, 0, 0);
    let mut pairs: Vec<(Graph, Graph, Option<bool>)> = (0..300)
        .map(|_| {
            let n = rng.gen_range(3..=11);
            let g = gnp(n, rng.gen_range(0.15..0.75), &mut rng);
            (g, common::random_pattern(&mut rng), None)
        })
        .collect();
    pairs.push((cycle(4), path(3), Some(true)));
    pairs.push((cycle(4), complete(3), Some(false)));
    pairs.push((petersen(), cycle(4), Some(false)));
    pairs.push((petersen(), cycle(5), Some(true)));
    for (g, f, fixed) in &pairs {
        let t = pattern_treewidth(f).unwrap();
        if t > 2 {
            failures.push(format!("pattern {f:?} has treewidth {t}"));
            continue;
        }
        let out = solve_induced_iso(g, f, t, &Artifacts::compute(g), IsoOptions::default()).unwrap();
        let expected = match fixed {
            Some(b) => *b,
            None => brute_induced_iso(g, f, true, &budget).unwrap().is_some(),
        };
        if out.embedding.is_some() != expected {
            failures.push(format!("host {g:?} pattern {f:?}: expected {expected}"));
        }
        if let Some(map) = &out.embedding {
            if !is_induced_embedding(g, f, map) {
                failures.push(format!("host {g:?} pattern {f:?}: bad embedding {map:?}"));
            }
        }
        if out.stats.grouped_hits > 0 {
            grouped += 1;
        }
        if expected {
            yes += 1;
        } else {
            no += 1;
        }
    }
    within(start.elapsed(), 600, &mut failures);
    let detail = format!(
        "{} pairs, {yes} yes / {no} no, {grouped} needed grouped assignment, {:.1?}",
        pairs.len(),
        start.elapsed()
    );
    report(4, "induced isomorphism", &failures, detail);
}

#[test]
fn criterion_5_local_separators_are_minimal() {
    let graphs = suite();
    let mut failures = Vec::new();
    let mut checked = 0;
    for g in &graphs {
        for rec in enumerate_pmcs(g) {
            for s in &rec.local_separators {
                checked += 1;
                if !is_minimal_separator(g, s) || !s.is_subset(&rec.omega) || s == &rec.omega {
                    failures.push(format!("{g:?}: Ω={:?} S={:?}", rec.omega.to_vec(), s.to_vec()));
                }
            }
        }
    }
    let detail = format!("{checked} local separators over {} graphs", graphs.len());
    report(5, "local separators of PMCs", &failures, detail);
}

#[test]
fn criterion_6_scaling_smoke_test() {
    let mut failures = Vec::new();
    let mut notes = Vec::new();
    for (p, seed) in [(0.2, 6001u64), (0.5, 6002)] {
        let g = gnp(20, p, &mut ChaCha8Rng::seed_from_u64(seed));
        let start = Instant::now();
        let pmcs = enumerate_pmcs(&g);
        within(start.elapsed(), 300, &mut failures);
        let pmc_time = start.elapsed();

        let start = Instant::now();
        let art = Artifacts::compute(&g);
        let sol = solve_max_induced_tw(&g, 1, &art).unwrap();
        within(start.elapsed(), 300, &mut failures);
        let ceiling = separator_ceiling(g.n());
        if art.separators.len() as f64 > ceiling {
            failures.push(format!("p={p}: {} separators above {ceiling}", art.separators.len()));
        }
        notes.push(format!(
            "p={p}: {} PMCs in {pmc_time:.1?}, {} separators, maxsub t=1 -> {} in {:.1?}",
            pmcs.len(),
            art.separators.len(),
            sol.ell_max,
            start.elapsed()
        ));
    }
    report(6, "scaling smoke test", &failures, notes.join("; "));
}

fn graph_from_bits(n: usize, bits: u32) -> Graph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Graph::from_edges(n, pairs.iter().enumerate().filter(|(i, _)| bits >> i & 1 == 1).map(|(_, &e)| e))
}

#[test]
fn criterion_7_chordality_and_parsing() {
    let budget = OracleBudget::default();
    let mut failures = Vec::new();
    let mut graphs = 0u64;
    for n in 0..=7usize {
        let pairs = n * n.saturating_sub(1) / 2;
        for bits in 0..(1u32 << pairs) {
            let g = graph_from_bits(n, bits);
            graphs += 1;
            if g.is_chordal() == has_chordless_cycle(&g, &budget).unwrap() {
                failures.push(format!("{g:?}"));
            }
        }
    }
    let fixtures = fixture_families(10);
    for (name, g) in &fixtures {
        if parse_dimacs(to_dimacs(g).as_bytes()).unwrap() != *g {
            failures.push(format!("{name}: DIMACS round trip"));
        }
        if parse_edge_list(to_edge_list(g).as_bytes()).unwrap() != *g {
            failures.push(format!("{name}: edge-list round trip"));
        }
    }
    let detail = format!("{graphs} labelled graphs, {} fixtures", fixtures.len());
    report(7, "chordality and parsing invariants", &failures, detail);
}
