//! Command-line front end.

pub mod bench;

use std::collections::BTreeSet;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use thiserror::Error;

use crate::artifacts::Artifacts;
use crate::graph::Graph;
use crate::io::{detect_format, parse_graph, Format, ParseError};
use crate::iso::{pattern_treewidth, solve_induced_iso, IsoError, IsoOptions};
use crate::maxsub::{certify_witness, solve_max_induced_tw, DpError, MaxSubSolution};
use crate::minsep::enumerate_minimal_separators;
use crate::oracle::{
    brute_induced_iso, brute_max_induced_tw, brute_minimal_separators, brute_pmcs, brute_treewidth,
    OracleBudget, OracleError, MASK_BITS,
};
use crate::pmc::{enumerate_pmcs_with, PmcOptions};
use crate::vertex_set::VertexSet;

pub use bench::{bench, BenchArgs, Family};

/// Largest `n` for which `pmcs --verify` runs the oracle.
pub const PMC_VERIFY_MAX_N: usize = 13;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    #[default]
    Auto,
    Dimacs,
    Edgelist,
}

#[derive(Debug, Parser)]
#[command(name = "triangulex", version, about = "Minimal separators, potential maximal cliques and induced-subgraph solvers")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,

    /// Input graph format.
    #[arg(long, value_enum, global = true, default_value_t = FormatArg::Auto)]
    pub format: FormatArg,

    /// Worker threads for PMC enumeration.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,

    /// Raise or lower the oracle size caps.
    #[arg(long, global = true, env = "TRIANGULEX_BUDGET_N")]
    pub budget_n: Option<usize>,
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    pub file: PathBuf,
    /// Print only the number of sets.
    #[arg(long)]
    pub count: bool,
    #[arg(long)]
    pub json: bool,
    /// Cross-check against the brute-force oracle.
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enumerate minimal separators.
    Seps(EnumArgs),
    /// Enumerate potential maximal cliques.
    Pmcs(EnumArgs),
    /// Largest induced subgraph of treewidth at most t.
    Maxsub {
        file: PathBuf,
        #[arg(long, short = 't')]
        treewidth: Option<usize>,
        /// Print the yes/no vector over subgraph sizes.
        #[arg(long)]
        profile: bool,
        #[arg(long)]
        json: bool,
        /// Certify the witness with the brute-force treewidth routine.
        #[arg(long)]
        certify: bool,
        /// Compare the optimum with the brute-force oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Induced subgraph isomorphism for a bounded-treewidth pattern.
    Iso {
        host: PathBuf,
        #[arg(long)]
        pattern: PathBuf,
        /// Width bound for the pattern; defaults to its exact treewidth.
        #[arg(long, short = 't')]
        treewidth: Option<usize>,
        #[arg(long)]
        json: bool,
        /// Compare yes/no with the brute-force oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Run a brute-force reference routine.
    Oracle {
        task: OracleTask,
        file: PathBuf,
        #[arg(long, short = 't')]
        treewidth: Option<usize>,
        #[arg(long)]
        pattern: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Time the pipeline on generated graphs; one JSON line per instance.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleTask {
    Seps,
    Pmcs,
    Maxsub,
    Iso,
    Treewidth,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Iso(#[from] IsoError),
    #[error(transparent)]
    Dp(#[from] DpError),
    #[error("verification failed: {0}")]
    Mismatch(String),
    #[error("output error: {0}")]
    Output(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Mismatch(_) => 1,
            _ => 2,
        }
    }
}

pub fn load_graph(path: &Path, format: FormatArg) -> Result<Graph, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.display().to_string(),
        source,
    })?;
    let fmt = match format {
        FormatArg::Auto => detect_format(&text),
        FormatArg::Dimacs => Format::Dimacs,
        FormatArg::Edgelist => Format::EdgeList,
    };
    parse_graph(text.as_bytes(), fmt).map_err(|source| CliError::Parse {
        path: path.display().to_string(),
        source,
    })
}

fn sets_json(sets: &[VertexSet]) -> Value {
    Value::Array(sets.iter().map(|s| json!(s.to_vec())).collect())
}

fn line(set: &VertexSet) -> String {
    set.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
}

fn envelope(command: &str, g: &Graph, result: Value, counts: Value, start: Instant) -> Value {
    json!({
        "command": command,
        "n": g.n(),
        "m": g.m(),
        "result": result,
        "counts": counts,
        "elapsed_ms": start.elapsed().as_secs_f64() * 1e3,
    })
}

struct Ctx<'a> {
    cfg: &'a RunConfig,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn budget(&self) -> OracleBudget {
        self.cfg.budget_n.map(OracleBudget::uniform).unwrap_or_default()
    }

    fn pmc_options(&self) -> PmcOptions {
        PmcOptions {
            threads: self.cfg.threads.max(1),
            ..PmcOptions::default()
        }
    }

    fn load(&self, path: &Path) -> Result<Graph, CliError> {
        load_graph(path, self.cfg.format)
    }

    fn emit_json(&mut self, v: &Value) -> Result<(), CliError> {
        writeln!(self.out, "{v}")?;
        Ok(())
    }

    fn emit_sets(&mut self, command: &str, key: &str, g: &Graph, sets: &[VertexSet], a: &EnumArgs, start: Instant) -> Result<(), CliError> {
        if a.json {
            let result = json!({ "n": g.n(), key: sets_json(sets) });
            let v = envelope(command, g, result, json!({ key: sets.len() }), start);
            self.emit_json(&v)
        } else if a.count {
            writeln!(self.out, "{}", sets.len())?;
            Ok(())
        } else {
            for s in sets {
                writeln!(self.out, "{}", line(s))?;
            }
            Ok(())
        }
    }

    fn seps(&mut self, a: &EnumArgs) -> Result<(), CliError> {
        let start = Instant::now();
        let g = self.load(&a.file)?;
        let seps = enumerate_minimal_separators(&g);
        if a.verify {
            let expected: Vec<VertexSet> = brute_minimal_separators(&g, &self.budget())?.into_iter().collect();
            if expected != seps {
                return Err(CliError::Mismatch(format!(
                    "{} separators enumerated, oracle found {}",
                    seps.len(),
                    expected.len()
                )));
            }
            writeln!(self.err, "verified {} separators against the oracle", seps.len())?;
        }
        self.emit_sets("seps", "separators", &g, &seps, a, start)
    }

    fn pmcs(&mut self, a: &EnumArgs) -> Result<(), CliError> {
        let start = Instant::now();
        let g = self.load(&a.file)?;
        let mut pmcs: Vec<VertexSet> = enumerate_pmcs_with(&g, self.pmc_options())
            .into_iter()
            .map(|r| r.omega)
            .collect();
        pmcs.sort();
        if a.verify {
            if g.n() > PMC_VERIFY_MAX_N {
                return Err(CliError::Usage(format!(
                    "--verify supports n <= {PMC_VERIFY_MAX_N}, got n = {}",
                    g.n()
                )));
            }
            let budget = OracleBudget {
                max_n_subsets: PMC_VERIFY_MAX_N,
                ..self.budget()
            };
            let expected: Vec<VertexSet> = brute_pmcs(&g, &budget)?.into_iter().collect();
            if expected != pmcs {
                return Err(CliError::Mismatch(format!(
                    "{} PMCs enumerated, oracle found {}",
                    pmcs.len(),
                    expected.len()
                )));
            }
            writeln!(self.err, "verified {} PMCs against the oracle", pmcs.len())?;
        }
        self.emit_sets("pmcs", "pmcs", &g, &pmcs, a, start)
    }

    fn solve(&self, g: &Graph, art: &Artifacts, t: usize) -> Result<MaxSubSolution, CliError> {
        Ok(solve_max_induced_tw(g, t, art)?)
    }

    #[allow(clippy::too_many_arguments)]
    fn maxsub(&mut self, file: &Path, t: Option<usize>, profile: bool, as_json: bool, certify: bool, verify: bool) -> Result<(), CliError> {
        let start = Instant::now();
        let g = self.load(file)?;
        let art = Artifacts::compute_with(&g, self.pmc_options());
        let Some(t) = t else {
            if !profile {
                return Err(CliError::Usage("maxsub needs --treewidth unless --profile is given".into()));
            }
            return self.maxsub_sweep(&g, &art, as_json, start);
        };
        if certify && g.n() > 20 && t > 3 {
            return Err(CliError::Usage(format!(
                "--certify refuses n = {} > 20 with t = {t} > 3",
                g.n()
            )));
        }
        let sol = self.solve(&g, &art, t)?;
        if certify {
            let mut budget = self.budget();
            budget.max_n_treewidth = budget.max_n_treewidth.max(sol.witness.len()).min(MASK_BITS);
            certify_witness(&g, &sol.witness, t, &budget)?;
            writeln!(self.err, "witness certified by the oracle")?;
        }
        if verify {
            let (expected, _) = brute_max_induced_tw(&g, t, &self.budget())?;
            if expected != sol.ell_max {
                return Err(CliError::Mismatch(format!(
                    "solver found {}, oracle found {expected}",
                    sol.ell_max
                )));
            }
            certify_witness(&g, &sol.witness, t, &self.budget())?;
            writeln!(self.err, "verified ell_max = {expected} against the oracle")?;
        }
        if as_json {
            let mut result = json!({
                "treewidth": t,
                "ell_max": sol.ell_max,
                "witness": sol.witness.to_vec(),
                "decomposition_width": sol.decomposition.width(),
            });
            if profile {
                result["profile"] = json!(sol.decisions);
            }
            let counts = json!({
                "separators": art.separators.len(),
                "pmcs": art.pmcs.len(),
                "blocks": art.blocks.len(),
                "triples": art.triples.len(),
                "alpha_entries": sol.alpha_entries,
            });
            let v = envelope("maxsub", &g, result, counts, start);
            return self.emit_json(&v);
        }
        writeln!(self.out, "{}", sol.ell_max)?;
        writeln!(self.out, "{}", line(&sol.witness))?;
        if profile {
            writeln!(self.out, "{}", bits_line(&sol.decisions))?;
        }
        Ok(())
    }

    fn maxsub_sweep(&mut self, g: &Graph, art: &Artifacts, as_json: bool, start: Instant) -> Result<(), CliError> {
        let mut rows = Vec::new();
        for t in 0..=g.n() {
            let sol = self.solve(g, art, t)?;
            let done = sol.ell_max == g.n();
            rows.push((t, sol.ell_max, sol.decisions));
            if done {
                break;
            }
        }
        if as_json {
            let result: Vec<Value> = rows
                .iter()
                .map(|(t, ell, d)| json!({ "treewidth": t, "ell_max": ell, "profile": d }))
                .collect();
            let counts = json!({
                "separators": art.separators.len(),
                "pmcs": art.pmcs.len(),
                "blocks": art.blocks.len(),
                "triples": art.triples.len(),
            });
            let v = envelope("maxsub", g, json!({ "profiles": result }), counts, start);
            return self.emit_json(&v);
        }
        for (t, ell, d) in rows {
            writeln!(self.out, "t={t} ell_max={ell} {}", bits_line(&d))?;
        }
        Ok(())
    }

    fn iso(&mut self, host: &Path, pattern: &Path, t: Option<usize>, as_json: bool, verify: bool) -> Result<(), CliError> {
        let start = Instant::now();
        let g = self.load(host)?;
        let f = self.load(pattern)?;
        let t = match t {
            Some(t) => t,
            None => pattern_treewidth(&f)?,
        };
        let art = Artifacts::compute_with(&g, self.pmc_options());
        let outcome = solve_induced_iso(&g, &f, t, &art, IsoOptions::default())?;
        if verify {
            let expected = brute_induced_iso(&g, &f, true, &self.budget())?;
            if expected.is_some() != outcome.embedding.is_some() {
                return Err(CliError::Mismatch(format!(
                    "solver says {}, oracle says {}",
                    yes_no(outcome.embedding.is_some()),
                    yes_no(expected.is_some())
                )));
            }
            writeln!(self.err, "verified answer against the oracle")?;
        }
        if as_json {
            let result = json!({
                "treewidth": t,
                "found": outcome.embedding.is_some(),
                "embedding": outcome.embedding,
            });
            let s = &outcome.stats;
            let counts = json!({
                "separators": art.separators.len(),
                "pmcs": art.pmcs.len(),
                "blocks": art.blocks.len(),
                "triples": art.triples.len(),
                "alpha_states": s.alpha_states,
                "matching_hits": s.matching_hits,
                "grouped_hits": s.grouped_hits,
            });
            let v = envelope("iso", &g, result, counts, start);
            return self.emit_json(&v);
        }
        match outcome.embedding {
            Some(map) => {
                for (p, h) in map.iter().enumerate() {
                    writeln!(self.out, "{p} -> {h}")?;
                }
            }
            None => writeln!(self.out, "none")?,
        }
        Ok(())
    }

    fn oracle(&mut self, task: OracleTask, file: &Path, t: Option<usize>, pattern: Option<&Path>, as_json: bool) -> Result<(), CliError> {
        let start = Instant::now();
        let g = self.load(file)?;
        let budget = self.budget();
        let (result, text): (Value, Vec<String>) = match task {
            OracleTask::Seps | OracleTask::Pmcs => {
                let (key, sets): (&str, BTreeSet<VertexSet>) = if task == OracleTask::Seps {
                    ("separators", brute_minimal_separators(&g, &budget)?)
                } else {
                    ("pmcs", brute_pmcs(&g, &budget)?)
                };
                let sets: Vec<VertexSet> = sets.into_iter().collect();
                (json!({ "n": g.n(), key: sets_json(&sets) }), sets.iter().map(line).collect())
            }
            OracleTask::Maxsub => {
                let t = t.ok_or_else(|| CliError::Usage("oracle maxsub needs --treewidth".into()))?;
                let (ell, witness) = brute_max_induced_tw(&g, t, &budget)?;
                (
                    json!({ "treewidth": t, "ell_max": ell, "witness": witness.to_vec() }),
                    vec![ell.to_string(), line(&witness)],
                )
            }
            OracleTask::Iso => {
                let p = pattern.ok_or_else(|| CliError::Usage("oracle iso needs --pattern".into()))?;
                let f = self.load(p)?;
                let found = brute_induced_iso(&g, &f, true, &budget)?;
                let text = match &found {
                    Some(map) => map.iter().enumerate().map(|(p, h)| format!("{p} -> {h}")).collect(),
                    None => vec!["none".to_string()],
                };
                (json!({ "found": found.is_some(), "embedding": found }), text)
            }
            OracleTask::Treewidth => {
                let tw = brute_treewidth(&g, &budget)?;
                (json!({ "treewidth": tw }), vec![tw.to_string()])
            }
        };
        if as_json {
            let v = envelope("oracle", &g, result, json!({}), start);
            return self.emit_json(&v);
        }
        for l in text {
            writeln!(self.out, "{l}")?;
        }
        Ok(())
    }

    fn dispatch(&mut self) -> Result<(), CliError> {
        let cfg = self.cfg;
        match &cfg.command {
            Command::Seps(a) => self.seps(a),
            Command::Pmcs(a) => self.pmcs(a),
            Command::Maxsub {
                file,
                treewidth,
                profile,
                json,
                certify,
                verify,
            } => self.maxsub(file, *treewidth, *profile, *json, *certify, *verify),
            Command::Iso {
                host,
                pattern,
                treewidth,
                json,
                verify,
            } => self.iso(host, pattern, *treewidth, *json, *verify),
            Command::Oracle {
                task,
                file,
                treewidth,
                pattern,
                json,
            } => self.oracle(*task, file, *treewidth, pattern.as_deref(), *json),
            Command::Bench(a) => bench(a, self.pmc_options(), self.out),
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn bits_line(d: &[bool]) -> String {
    d.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// Runs one command; results go to `out`, diagnostics to `err`. Returns the
/// process exit code: 0 on success, 1 on a verification mismatch, 2 on
/// input or usage errors.
pub fn run(cfg: &RunConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let mut ctx = Ctx { cfg, out, err };
    match ctx.dispatch() {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Mismatch("x".into()).exit_code(), 1);
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        let budget = OracleError::BudgetExceeded { task: "x", n: 3, cap: 2 };
        assert_eq!(CliError::from(budget).exit_code(), 2);
    }

    #[test]
    fn bits_line_renders_decisions() {
        assert_eq!(bits_line(&[true, true, false]), "110");
    }
}
