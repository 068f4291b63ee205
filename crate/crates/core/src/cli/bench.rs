use std::io::Write;
use std::time::Instant;

use clap::{Args, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::artifacts::Artifacts;
use crate::generators::{complete, cycle, gnp, path, petersen, random_partial_2tree, random_tree};
use crate::graph::Graph;
use crate::maxsub::solve_max_induced_tw;
use crate::pmc::PmcOptions;

use super::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Gnp,
    Path,
    Cycle,
    Complete,
    Empty,
    Tree,
    Partial2tree,
    Petersen,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 18)]
    pub n: usize,
    /// Edge probability for `gnp`, keep probability for `partial2tree`.
    #[arg(long, default_value_t = 0.3)]
    pub p: f64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Also time the treewidth-t subgraph solver.
    #[arg(long, short = 't')]
    pub treewidth: Option<usize>,
    #[arg(long, value_enum, default_value_t = Family::Gnp)]
    pub family: Family,
    /// Number of instances, with seeds `seed, seed + 1, ...`.
    #[arg(long, default_value_t = 1)]
    pub instances: usize,
}

/// Sanity ceiling on the number of minimal separators: `⌈1.6181^n⌉`.
pub fn separator_ceiling(n: usize) -> f64 {
    1.6181f64.powi(n as i32).ceil()
}

pub fn instance(family: Family, n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match family {
        Family::Gnp => gnp(n, p, &mut rng),
        Family::Path => path(n),
        Family::Cycle => cycle(n),
        Family::Complete => complete(n),
        Family::Empty => Graph::empty(n),
        Family::Tree => random_tree(n, &mut rng),
        Family::Partial2tree => random_partial_2tree(n, p, &mut rng),
        Family::Petersen => petersen(),
    }
}

fn ms(d: std::time::Duration) -> f64 {
    d.as_secs_f64() * 1e3
}

pub fn bench(a: &BenchArgs, opts: PmcOptions, out: &mut dyn Write) -> Result<(), CliError> {
    for i in 0..a.instances as u64 {
        let seed = a.seed + i;
        let g = instance(a.family, a.n, a.p, seed);
        let art = Artifacts::compute_with(&g, opts);
        let ceiling = separator_ceiling(g.n());
        if art.separators.len() as f64 > ceiling {
            return Err(CliError::Mismatch(format!(
                "{} minimal separators exceed the ceiling {ceiling}",
                art.separators.len()
            )));
        }
        let mut times = json!({
            "separators": ms(art.times.separators),
            "pmcs": ms(art.times.pmcs),
            "blocks_and_triples": ms(art.times.blocks_and_triples),
        });
        let mut counts = json!({
            "separators": art.separators.len(),
            "pmcs": art.pmcs.len(),
            "blocks": art.blocks.len(),
            "triples": art.triples.len(),
        });
        let mut ell_max = None;
        if let Some(t) = a.treewidth {
            let start = Instant::now();
            let sol = solve_max_induced_tw(&g, t, &art)?;
            times["maxsub"] = json!(ms(start.elapsed()));
            counts["alpha_entries"] = json!(sol.alpha_entries);
            ell_max = Some(sol.ell_max);
        }
        let line = json!({
            "family": format!("{:?}", a.family).to_lowercase(),
            "n": g.n(),
            "m": g.m(),
            "p": a.p,
            "seed": seed,
            "treewidth": a.treewidth,
            "ell_max": ell_max,
            "separator_ceiling": ceiling,
            "times_ms": times,
            "counts": counts,
        });
        writeln!(out, "{line}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_pmcs, OracleBudget};

    #[test]
    fn c10_pmc_count_matches_oracle() {
        let g = instance(Family::Cycle, 10, 0.0, 0);
        let art = Artifacts::compute(&g);
        assert_eq!(art.pmcs.len(), brute_pmcs(&g, &OracleBudget::default()).unwrap().len());
    }

    #[test]
    fn empty_graph_counts() {
        let g = instance(Family::Empty, 5, 0.0, 0);
        let art = Artifacts::compute(&g);
        assert_eq!(art.separators.len(), 0);
        assert_eq!(art.pmcs.len(), 5);
    }

    #[test]
    fn gnp18_within_ceiling() {
        let mut buf = Vec::new();
        let args = BenchArgs {
            n: 18,
            p: 0.3,
            seed: 4,
            treewidth: None,
            family: Family::Gnp,
            instances: 1,
        };
        bench(&args, PmcOptions::default(), &mut buf).unwrap();
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert!(v["counts"]["separators"].as_f64().unwrap() <= separator_ceiling(18));
    }
}
