//! Largest induced subgraph of treewidth at most `t`.
//!
//! Tables hold, per full block `(S, C)` and `W ⊆ S` with `|W| ≤ t + 1`, the
//! set of sizes `ℓ` for which the recurrences produce a selection `F ⊆ S ∪ C`
//! with `F ∩ S = W`. Triple-level values (β, and its prefixes γ) are computed
//! on demand from the children's α entries, so only α is stored.

use std::collections::HashMap;

use thiserror::Error;

use crate::artifacts::Artifacts;
use crate::decomposition::{DecompositionError, TreeDecomposition};
use crate::graph::Graph;
use crate::oracle::{treewidth_at_most, OracleBudget, OracleError};
use crate::vertex_set::VertexSet;

/// Witnesses up to this size are also checked by the brute-force treewidth
/// routine on every run.
pub const AUTO_ORACLE_CERTIFY: usize = 16;

/// A set of achievable sizes `ℓ ∈ 0..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Profile(VertexSet);

impl Profile {
    pub fn empty(n: usize) -> Self {
        Profile(VertexSet::new(n + 1))
    }

    pub fn single(n: usize, ell: usize) -> Self {
        Profile(VertexSet::singleton(n + 1, ell))
    }

    pub fn range(n: usize, lo: usize, hi: usize) -> Self {
        Profile(VertexSet::from_vertices(n + 1, lo..=hi.min(n)))
    }

    pub fn contains(&self, ell: usize) -> bool {
        ell < self.0.universe() && self.0.contains(ell)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.iter().last()
    }

    pub fn sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter()
    }

    pub fn union_with(&mut self, other: &Profile) {
        self.0.union_with(&other.0);
    }

    pub fn shifted_down(&self, k: usize) -> Profile {
        Profile(self.0.shifted_down(k))
    }

    /// `{a + b : a ∈ self, b ∈ other}`, truncated at `n`.
    pub fn sum(&self, other: &Profile) -> Profile {
        let mut out = VertexSet::new(self.0.universe());
        for a in &self.0 {
            out.union_with(&other.0.shifted_up(a));
        }
        Profile(out)
    }

    /// The yes/no vector over `ℓ = 0..=n`.
    pub fn to_decisions(&self) -> Vec<bool> {
        (0..self.0.universe()).map(|l| self.0.contains(l)).collect()
    }
}

#[derive(Debug, Error)]
pub enum DpError {
    #[error("block {block} needs sub-block for component {component:?}, which is not an earlier full block")]
    MissingSubBlock { block: usize, component: Vec<usize> },
    #[error("separator {separator} has a component {component:?} that is not a full block")]
    MissingSeparatorBlock { separator: usize, component: Vec<usize> },
    #[error("reconstruction failed: {0}")]
    BrokenPayload(String),
    #[error("decision vector is not monotone at {0}")]
    NotMonotone(usize),
    #[error("witness certificate rejected: {0}")]
    Certificate(#[from] DecompositionError),
    #[error("witness has treewidth above {t}")]
    OracleRejected { t: usize },
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Which form of the block recurrences to use.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Recurrence {
    /// Base entries project any small `W′ ⊆ S ∪ C` onto `W′ ∩ S`, and a
    /// triple value at `W′` lifts to `α(W′ ∩ S)` only.
    #[default]
    Projected,
    /// Base entries only at `ℓ = |W|`, and a triple value at `W′` lifts to
    /// every `W ⊆ W′ ∩ S`. Kept for comparison; it undercounts (on C4 with
    /// `t = 1` it reports 2 instead of 3) and can overcount.
    AsPrinted,
}

#[derive(Clone, Debug, Default)]
pub struct DpTables {
    pub t: usize,
    pub recurrence: Recurrence,
    pub alpha: Vec<HashMap<VertexSet, Profile>>,
}

impl DpTables {
    pub fn alpha(&self, block: usize, w: &VertexSet) -> Option<&Profile> {
        self.alpha[block].get(w)
    }

    pub fn alpha_holds(&self, block: usize, ell: usize, w: &VertexSet) -> bool {
        self.alpha(block, w).is_some_and(|p| p.contains(ell))
    }

    pub fn entry_count(&self) -> usize {
        self.alpha.iter().map(HashMap::len).sum()
    }
}

/// A child block of a triple or a separator, with its separator `S_j`.
#[derive(Clone, Debug)]
struct Child {
    block: usize,
    separator: VertexSet,
}

fn triple_children(g: &Graph, art: &Artifacts, block: usize, omega: &VertexSet) -> Result<Vec<Child>, DpError> {
    let c = &art.blocks[block].component;
    let rest = c.difference(omega);
    g.components(&rest)
        .into_iter()
        .map(|ci| match art.block_of(&ci) {
            Some(id) if id < block => Ok(Child {
                block: id,
                separator: art.blocks[id].separator.clone(),
            }),
            _ => Err(DpError::MissingSubBlock {
                block,
                component: ci.to_vec(),
            }),
        })
        .collect()
}

fn separator_children(g: &Graph, art: &Artifacts, sep_id: usize) -> Result<Vec<Child>, DpError> {
    let s = &art.separators[sep_id];
    g.components_without(s)
        .into_iter()
        .filter(|c| !g.neighborhood(c).is_empty())
        .map(|c| match art.block_of(&c) {
            Some(id) => Ok(Child {
                block: id,
                separator: art.blocks[id].separator.clone(),
            }),
            None => Err(DpError::MissingSeparatorBlock {
                separator: sep_id,
                component: c.to_vec(),
            }),
        })
        .collect()
}

/// Prefix profiles `γ_0 = {|W|}, γ_j = γ_{j-1} ⊕ (α_j(W ∩ S_j) − |W ∩ S_j|)`.
/// The last entry is β (or δ at a separator). Returns `None` as soon as a
/// prefix becomes empty.
fn gamma_chain(n: usize, w: &VertexSet, children: &[Child], tables: &DpTables) -> Option<Vec<Profile>> {
    let mut chain = Vec::with_capacity(children.len() + 1);
    chain.push(Profile::single(n, w.len()));
    for ch in children {
        let key = w.intersection(&ch.separator);
        let alpha = tables.alpha(ch.block, &key)?;
        let next = chain.last().unwrap().sum(&alpha.shifted_down(key.len()));
        if next.is_empty() {
            return None;
        }
        chain.push(next);
    }
    Some(chain)
}

fn beta_profile(n: usize, w: &VertexSet, children: &[Child], tables: &DpTables) -> Profile {
    gamma_chain(n, w, children, tables)
        .and_then(|mut c| c.pop())
        .unwrap_or_else(|| Profile::empty(n))
}

/// α entries of an inclusion-minimal block: any `W′ ⊆ S ∪ C` with
/// `|W′| ≤ t + 1` is selectable, recorded under `W′ ∩ S`.
pub fn compute_alpha_base(n: usize, t: usize, block: &crate::minsep::Block) -> HashMap<VertexSet, Profile> {
    let mut out = HashMap::new();
    for w in block.separator.subsets_up_to(t + 1) {
        let extra = block.component.len().min(t + 1 - w.len());
        out.insert(w.clone(), Profile::range(n, w.len(), w.len() + extra));
    }
    out
}

/// γ chain for one good triple and `W′ ⊆ Ω`.
pub fn compute_gamma(
    g: &Graph,
    art: &Artifacts,
    tables: &DpTables,
    triple: usize,
    w: &VertexSet,
) -> Result<Vec<Profile>, DpError> {
    let tr = art.triples[triple];
    let children = triple_children(g, art, tr.block_id, &art.pmcs[tr.omega_id].omega)?;
    Ok(gamma_chain(g.n(), w, &children, tables).unwrap_or_default())
}

/// α entries of a non-minimal block, from β over its good triples and every
/// `W′ ⊆ Ω` with `|W′| ≤ t + 1`; β at `W′` contributes to `α(W′ ∩ S)`.
pub fn lift_alpha(
    g: &Graph,
    art: &Artifacts,
    tables: &DpTables,
    block: usize,
) -> Result<HashMap<VertexSet, Profile>, DpError> {
    let n = g.n();
    let t = tables.t;
    let s = &art.blocks[block].separator;
    let mut out: HashMap<VertexSet, Profile> = HashMap::new();
    for tr in art.triples_of(block) {
        let omega = &art.pmcs[tr.omega_id].omega;
        let children = triple_children(g, art, block, omega)?;
        for w in omega.subsets_up_to(t + 1) {
            let beta = beta_profile(n, &w, &children, tables);
            if beta.is_empty() {
                continue;
            }
                let on_s = w.intersection(s);
            let keys = match tables.recurrence {
                Recurrence::Projected => vec![on_s],
                Recurrence::AsPrinted => on_s.subsets_up_to(t + 1),
            };
            for key in keys {
                out.entry(key)
                    .or_insert_with(|| Profile::empty(n))
                    .union_with(&beta);
            }
        }
    }
    Ok(out)
}

pub fn compute_tables(g: &Graph, t: usize, art: &Artifacts) -> Result<DpTables, DpError> {
    compute_tables_with(g, t, art, Recurrence::default())
}

pub fn compute_tables_with(
    g: &Graph,
    t: usize,
    art: &Artifacts,
    recurrence: Recurrence,
) -> Result<DpTables, DpError> {
    let mut tables = DpTables {
        t,
        recurrence,
        alpha: Vec::with_capacity(art.blocks.len()),
    };
    for (id, block) in art.blocks.iter().enumerate() {
        let entries = if block.is_inclusion_minimal {
            match recurrence {
                Recurrence::Projected => compute_alpha_base(g.n(), t, block),
                Recurrence::AsPrinted => block
                    .separator
                    .subsets_up_to(t + 1)
                    .into_iter()
                    .map(|w| {
                        let p = Profile::single(g.n(), w.len());
                        (w, p)
                    })
                    .collect(),
            }
        } else {
            lift_alpha(g, art, &tables, id)?
        };
        tables.alpha.push(entries);
    }
    Ok(tables)
}

/// How a size is realized inside one connected component of `G`.
#[derive(Clone, Debug)]
enum Payload {
    Clique,
    Separator { sep_id: usize, w: VertexSet },
}

#[derive(Clone, Debug)]
pub struct ComponentProfile {
    pub vertices: VertexSet,
    pub profile: Profile,
    payloads: Vec<Option<Payload>>,
}

#[derive(Clone, Debug)]
pub struct Gluing {
    pub components: Vec<ComponentProfile>,
    /// Yes/no over `ℓ = 0..=n`.
    pub decisions: Vec<bool>,
}

/// Per connected component of `G`, the union over its minimal separators `S`
/// and `W ⊆ S` of δ; components without separators are cliques. The
/// component profiles are then combined by a knapsack.
pub fn glue_at_separators(g: &Graph, art: &Artifacts, tables: &DpTables) -> Result<Gluing, DpError> {
    let n = g.n();
    let t = tables.t;
    let comps = g.components(&g.vertices());
    let mut out: Vec<ComponentProfile> = comps
        .iter()
        .map(|d| ComponentProfile {
            vertices: d.clone(),
            profile: Profile::empty(n),
            payloads: vec![None; n + 1],
        })
        .collect();
    for (sep_id, s) in art.separators.iter().enumerate() {
        let v = s.first().expect("separators are nonempty");
        let ci = comps.iter().position(|d| d.contains(v)).unwrap();
        let children = separator_children(g, art, sep_id)?;
        for w in s.subsets_up_to(t + 1) {
            let delta = beta_profile(n, &w, &children, tables);
            let cp = &mut out[ci];
            for ell in delta.sizes() {
                if cp.payloads[ell].is_none() {
                    cp.payloads[ell] = Some(Payload::Separator {
                        sep_id,
                        w: w.clone(),
                    });
                }
            }
            cp.profile.union_with(&delta);
        }
    }
    for cp in &mut out {
        if cp.profile.is_empty() {
            debug_assert!(g.is_clique(&cp.vertices));
            cp.profile = Profile::range(n, 0, cp.vertices.len().min(t + 1));
            for ell in cp.profile.sizes() {
                cp.payloads[ell] = Some(Payload::Clique);
            }
        }
    }
    let mut total = Profile::single(n, 0);
    for cp in &out {
        total = total.sum(&cp.profile);
    }
    Ok(Gluing {
        components: out,
        decisions: total.to_decisions(),
    })
}

/// Splits `target` into `base + Σ c_j` with `c_j ∈ parts[j]`.
fn split(n: usize, base: usize, parts: &[Profile], target: usize) -> Option<Vec<usize>> {
    let mut prefix = vec![Profile::single(n, base)];
    for p in parts {
        let next = prefix.last().unwrap().sum(p);
        prefix.push(next);
    }
    if !prefix.last().unwrap().contains(target) {
        return None;
    }
    let mut cur = target;
    let mut picks = vec![0; parts.len()];
    for j in (0..parts.len()).rev() {
        let c = parts[j]
            .sizes()
            .find(|&c| c <= cur && prefix[j].contains(cur - c))?;
        picks[j] = c;
        cur -= c;
    }
    Some(picks)
}

struct Builder<'a> {
    g: &'a Graph,
    art: &'a Artifacts,
    tables: &'a DpTables,
    td: TreeDecomposition,
}

impl Builder<'_> {
    fn children_with(
        &mut self,
        w: &VertexSet,
        ell: usize,
        children: &[Child],
        parent: usize,
    ) -> Result<(), DpError> {
        let n = self.g.n();
        let mut parts = Vec::with_capacity(children.len());
        let mut keys = Vec::with_capacity(children.len());
        for ch in children {
            let key = w.intersection(&ch.separator);
            let alpha = self
                .tables
                .alpha(ch.block, &key)
                .ok_or_else(|| DpError::BrokenPayload(format!("no α entry for block {}", ch.block)))?;
            parts.push(alpha.shifted_down(key.len()));
            keys.push(key);
        }
        let picks = split(n, w.len(), &parts, ell)
            .ok_or_else(|| DpError::BrokenPayload(format!("size {ell} does not split")))?;
        for ((ch, key), c) in children.iter().zip(keys).zip(picks) {
            let size = c + key.len();
            self.realize_block(ch.block, &key, size, Some(parent))?;
        }
        Ok(())
    }

    fn realize_block(&mut self, block: usize, w: &VertexSet, ell: usize, parent: Option<usize>) -> Result<(), DpError> {
        let b = &self.art.blocks[block];
        let t = self.tables.t;
        if b.is_inclusion_minimal {
            let extra = ell
                .checked_sub(w.len())
                .filter(|&e| e <= b.component.len() && ell <= t + 1)
                .ok_or_else(|| DpError::BrokenPayload(format!("base block {block} cannot hold {ell}")))?;
            let mut bag = w.clone();
            for v in b.component.iter().take(extra) {
                bag.insert(v);
            }
            self.td.push(bag, parent);
            return Ok(());
        }
        let s = b.separator.clone();
        for tr in self.art.triples_of(block) {
            let omega = &self.art.pmcs[tr.omega_id].omega;
            let children = triple_children(self.g, self.art, block, omega)?;
            let free = omega.difference(&s);
            for x in free.subsets_up_to(t + 1 - w.len()) {
                let wp = w.union(&x);
                if beta_profile(self.g.n(), &wp, &children, self.tables).contains(ell) {
                    let node = self.td.push(wp.clone(), parent);
                    return self.children_with(&wp, ell, &children, node);
                }
            }
        }
        Err(DpError::BrokenPayload(format!(
            "block {block} has no triple realizing ({ell}, {:?})",
            w.to_vec()
        )))
    }

    fn realize_component(&mut self, cp: &ComponentProfile, ell: usize) -> Result<(), DpError> {
        match cp.payloads.get(ell).cloned().flatten() {
            Some(Payload::Clique) => {
                let bag = VertexSet::from_vertices(self.g.n(), cp.vertices.iter().take(ell));
                self.td.push(bag, None);
                Ok(())
            }
            Some(Payload::Separator { sep_id, w }) => {
                let children = separator_children(self.g, self.art, sep_id)?;
                let root = self.td.push(w.clone(), None);
                self.children_with(&w, ell, &children, root)
            }
            None => Err(DpError::BrokenPayload(format!("no payload for size {ell}"))),
        }
    }
}

/// Rebuilds a selection of `ell` vertices together with a tree
/// decomposition of width at most `t` witnessing it.
pub fn reconstruct_witness(
    g: &Graph,
    art: &Artifacts,
    tables: &DpTables,
    gluing: &Gluing,
    ell: usize,
) -> Result<(VertexSet, TreeDecomposition), DpError> {
    let n = g.n();
    let parts: Vec<Profile> = gluing.components.iter().map(|c| c.profile.clone()).collect();
    let picks = split(n, 0, &parts, ell)
        .ok_or_else(|| DpError::BrokenPayload(format!("size {ell} is not decided yes")))?;
    let mut builder = Builder {
        g,
        art,
        tables,
        td: TreeDecomposition::default(),
    };
    for (cp, size) in gluing.components.iter().zip(picks) {
        if size > 0 {
            builder.realize_component(cp, size)?;
        }
    }
    let td = builder.td;
    let witness = td.vertices(n);
    if witness.len() != ell {
        return Err(DpError::BrokenPayload(format!(
            "witness has {} vertices, expected {ell}",
            witness.len()
        )));
    }
    Ok((witness, td))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Certification {
    /// Tree decomposition checked; the brute-force routine also agreed.
    Oracle,
    /// Tree decomposition checked only.
    Decomposition,
}

#[derive(Clone, Debug)]
pub struct MaxSubSolution {
    pub t: usize,
    pub ell_max: usize,
    pub witness: VertexSet,
    /// Yes/no over `ℓ = 0..=n`.
    pub decisions: Vec<bool>,
    pub decomposition: TreeDecomposition,
    pub certification: Certification,
    pub alpha_entries: usize,
}

/// Certifies a witness with the brute-force treewidth routine.
pub fn certify_witness(g: &Graph, witness: &VertexSet, t: usize, budget: &OracleBudget) -> Result<(), DpError> {
    if treewidth_at_most(g, witness, t, budget)? {
        Ok(())
    } else {
        Err(DpError::OracleRejected { t })
    }
}

pub fn solve_max_induced_tw(g: &Graph, t: usize, art: &Artifacts) -> Result<MaxSubSolution, DpError> {
    let tables = compute_tables(g, t, art)?;
    let gluing = glue_at_separators(g, art, &tables)?;
    let decisions = gluing.decisions.clone();
    let ell_max = decisions.iter().rposition(|&d| d).unwrap_or(0);
    if let Some(gap) = decisions[..=ell_max].iter().position(|&d| !d) {
        return Err(DpError::NotMonotone(gap));
    }
    let (witness, decomposition) = reconstruct_witness(g, art, &tables, &gluing, ell_max)?;
    let width = decomposition.validate(g, &witness)?;
    if width > t {
        return Err(DpError::OracleRejected { t });
    }
    let certification = if witness.len() <= AUTO_ORACLE_CERTIFY {
        certify_witness(g, &witness, t, &OracleBudget::default())?;
        Certification::Oracle
    } else {
        Certification::Decomposition
    };
    Ok(MaxSubSolution {
        t,
        ell_max,
        witness,
        decisions,
        decomposition,
        certification,
        alpha_entries: tables.entry_count(),
    })
}

/// Computes the shared artifacts and solves.
pub fn max_induced_tw(g: &Graph, t: usize) -> Result<MaxSubSolution, DpError> {
    solve_max_induced_tw(g, t, &Artifacts::compute(g))
}
