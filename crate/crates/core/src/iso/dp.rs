use std::collections::{HashMap, HashSet};
use std::rc::Rc;

use crate::artifacts::Artifacts;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

use super::matching::maximum_bipartite_matching;
use super::pattern::{bits, PatternDecomposition};
use super::{IsoOptions, IsoStats};

/// `(pattern vertex, host vertex)` pairs.
type Pairs = Vec<(usize, usize)>;

#[derive(Clone, Debug)]
struct HostChild {
    block: usize,
    separator: VertexSet,
}

#[derive(Clone, PartialEq, Eq, Hash)]
struct StateKey {
    block: usize,
    /// `μ` on `Q`, ascending by pattern vertex.
    mu: Pairs,
    p: u32,
}

pub(super) struct Search<'a> {
    g: &'a Graph,
    art: &'a Artifacts,
    pd: &'a PatternDecomposition,
    opts: IsoOptions,
    memo: HashMap<StateKey, Option<Rc<Pairs>>>,
    triple_children: Vec<Option<Rc<Vec<HostChild>>>>,
    pub stats: IsoStats,
}

fn mask_of(pairs: &[(usize, usize)]) -> u32 {
    pairs.iter().fold(0, |m, &(p, _)| m | 1 << p)
}

impl<'a> Search<'a> {
    pub fn new(g: &'a Graph, art: &'a Artifacts, pd: &'a PatternDecomposition, opts: IsoOptions) -> Self {
        Search {
            g,
            art,
            pd,
            opts,
            memo: HashMap::new(),
            triple_children: vec![None; art.triples.len()],
            stats: IsoStats::default(),
        }
    }

    fn children_of_triple(&mut self, triple: usize) -> Rc<Vec<HostChild>> {
        if let Some(c) = &self.triple_children[triple] {
            return c.clone();
        }
        let art = self.art;
        let tr = art.triples[triple];
        let rest = art.blocks[tr.block_id]
            .component
            .difference(&art.pmcs[tr.omega_id].omega);
        let children: Vec<HostChild> = self
            .g
            .components(&rest)
            .into_iter()
            .map(|c| {
                let block = art.block_of(&c).expect("components beside a PMC are full blocks");
                HostChild {
                    block,
                    separator: art.blocks[block].separator.clone(),
                }
            })
            .collect();
        let rc = Rc::new(children);
        self.triple_children[triple] = Some(rc.clone());
        rc
    }

    fn separator_children(&self, sep: &VertexSet) -> Vec<HostChild> {
        self.g
            .components_without(sep)
            .into_iter()
            .filter(|c| !self.g.neighborhood(c).is_empty())
            .map(|c| {
                let block = self.art.block_of(&c).expect("components of a minimal separator are full blocks");
                HostChild {
                    block,
                    separator: self.art.blocks[block].separator.clone(),
                }
            })
            .collect()
    }

    /// Whether host vertex `h` can take pattern vertex `a` next to `fixed`.
    fn compatible(&self, a: usize, h: usize, fixed: &[(usize, usize)]) -> bool {
        fixed
            .iter()
            .all(|&(b, hb)| hb != h && self.pd.f_adjacent(a, b) == self.g.has_edge(h, hb))
    }

    /// All extensions of `fixed` placing `new` injectively into `targets`,
    /// preserving adjacency and non-adjacency.
    fn injections(&mut self, new: &[usize], targets: &VertexSet, fixed: &[(usize, usize)]) -> Vec<Pairs> {
        let mut out = Vec::new();
        let mut cur: Pairs = Vec::with_capacity(new.len());
        let mut attempts: HashMap<VertexSet, usize> = HashMap::new();
        self.extend(new, targets, fixed, &mut cur, &mut out, &mut attempts);
        let worst = attempts.values().copied().max().unwrap_or(0);
        self.stats.max_bijections_per_image = self.stats.max_bijections_per_image.max(worst);
        out
    }

    fn extend(
        &self,
        new: &[usize],
        targets: &VertexSet,
        fixed: &[(usize, usize)],
        cur: &mut Pairs,
        out: &mut Vec<Pairs>,
        attempts: &mut HashMap<VertexSet, usize>,
    ) {
        if cur.len() == new.len() {
            let image = VertexSet::from_vertices(self.g.n(), cur.iter().map(|&(_, h)| h));
            *attempts.entry(image).or_default() += 1;
            out.push(cur.clone());
            return;
        }
        let a = new[cur.len()];
        for h in targets {
            if self.compatible(a, h, fixed) && self.compatible(a, h, cur) {
                cur.push((a, h));
                self.extend(new, targets, fixed, cur, out, attempts);
                cur.pop();
            }
        }
    }

    /// Places `p` inside the component of `block` so that the pattern
    /// vertices on the block's separator are exactly the domain of `mu`.
    fn alpha(&mut self, block: usize, mu: &[(usize, usize)], p: u32) -> Option<Rc<Pairs>> {
        if p == 0 {
            return Some(Rc::new(Vec::new()));
        }
        if p.count_ones() as usize > self.art.blocks[block].component.len() {
            return None;
        }
        let key = StateKey {
            block,
            mu: mu.to_vec(),
            p,
        };
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        self.stats.alpha_states += 1;
        let mut found = None;
        for triple in self.art.triple_ids(block) {
            if let Some(pairs) = self.beta(triple, mu, p) {
                found = Some(Rc::new(pairs));
                break;
            }
        }
        self.memo.insert(key, found.clone());
        found
    }

    fn beta(&mut self, triple: usize, mu: &[(usize, usize)], p: u32) -> Option<Pairs> {
        let art = self.art;
        let pd = self.pd;
        let tr = art.triples[triple];
        let free = art.pmcs[tr.omega_id].omega.difference(&art.blocks[tr.block_id].separator);
        let children = self.children_of_triple(triple);
        let q = mask_of(mu);
        for &k in &pd.cliques {
            let q_new = k & !q;
            if k & q != q || q_new & !p != 0 || q_new.count_ones() as usize > free.len() {
                continue;
            }
            let groups = pd.tf_components(p & !q_new);
            if !groups.is_empty() && children.is_empty() {
                continue;
            }
            let new: Vec<usize> = bits(q_new).collect();
            for nu in self.injections(&new, &free, mu) {
                let mut mu2: Pairs = mu.iter().copied().chain(nu.iter().copied()).collect();
                mu2.sort_unstable();
                if let Some(rest) = self.assign(&groups, &children, &mu2) {
                    let mut out = nu;
                    out.extend(rest);
                    return Some(out);
                }
            }
        }
        None
    }

    /// Distributes pattern groups over host child components.
    fn assign(&mut self, groups: &[u32], children: &[HostChild], mu: &[(usize, usize)]) -> Option<Pairs> {
        if groups.is_empty() {
            return Some(Vec::new());
        }
        let pd = self.pd;
        let child_mu: Vec<Pairs> = children
            .iter()
            .map(|c| mu.iter().copied().filter(|&(_, h)| c.separator.contains(h)).collect())
            .collect();
        let child_q: Vec<u32> = child_mu.iter().map(|m| mask_of(m)).collect();
        let allowed = |g: u32, i: usize| pd.tf_neighborhood(g) & !child_q[i] == 0;

        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); groups.len()];
        let mut found: HashMap<(usize, usize), Rc<Pairs>> = HashMap::new();
        for (x, &grp) in groups.iter().enumerate() {
            for (i, c) in children.iter().enumerate() {
                if allowed(grp, i) {
                    if let Some(pairs) = self.alpha(c.block, &child_mu[i], grp) {
                        adj[x].push(i);
                        found.insert((x, i), pairs);
                    }
                }
            }
            if adj[x].is_empty() {
                return None;
            }
        }
        let m = maximum_bipartite_matching(children.len(), &adj);
        if m.size == groups.len() {
            self.stats.matching_hits += 1;
            return Some(m.pairs.iter().flat_map(|xy| found[xy].iter().copied()).collect());
        }
        if !self.opts.grouping {
            return None;
        }
        let allowed_masks: Vec<u32> = (0..children.len())
            .map(|i| {
                (0..groups.len())
                    .filter(|&x| allowed(groups[x], i))
                    .fold(0u32, |m, x| m | 1 << x)
            })
            .collect();
        let mut failed = HashSet::new();
        let full = (1u32 << groups.len()) - 1;
        let out = self.place(groups, children, &child_mu, &allowed_masks, 0, full, &mut failed)?;
        self.stats.grouped_hits += 1;
        Some(out)
    }

    #[allow(clippy::too_many_arguments)]
    fn place(
        &mut self,
        groups: &[u32],
        children: &[HostChild],
        child_mu: &[Pairs],
        allowed: &[u32],
        i: usize,
        remaining: u32,
        failed: &mut HashSet<(usize, u32)>,
    ) -> Option<Pairs> {
        if remaining == 0 {
            return Some(Vec::new());
        }
        if i == children.len() || failed.contains(&(i, remaining)) {
            return None;
        }
        let avail = remaining & allowed[i];
        let mut sub = avail;
        while sub != 0 {
            let union = bits(sub).fold(0u32, |m, x| m | groups[x]);
            if let Some(here) = self.alpha(children[i].block, &child_mu[i], union) {
                if let Some(rest) = self.place(groups, children, child_mu, allowed, i + 1, remaining & !sub, failed) {
                    let mut out: Pairs = here.as_ref().clone();
                    out.extend(rest);
                    return Some(out);
                }
            }
            sub = (sub - 1) & avail;
        }
        let skip = self.place(groups, children, child_mu, allowed, i + 1, remaining, failed);
        if skip.is_none() {
            failed.insert((i, remaining));
        }
        skip
    }

    /// Places `p` (a union of pattern components) in the connected host
    /// component `host`, whose minimal separators are `seps`.
    fn embed_component(&mut self, host: &VertexSet, seps: &[usize], p: u32) -> Option<Pairs> {
        if p == 0 {
            return Some(Vec::new());
        }
        if p.count_ones() as usize > host.len() {
            return None;
        }
        let pd = self.pd;
        if seps.is_empty() {
            let clique = bits(p).all(|a| (pd.f_rows[a] | 1 << a) & p == p);
            return clique.then(|| bits(p).zip(host.iter()).collect());
        }
        let art = self.art;
        for &sep_id in seps {
            let s = &art.separators[sep_id];
            let children = self.separator_children(s);
            for &k in &pd.cliques {
                if k & !p != 0 || k.count_ones() as usize > s.len() {
                    continue;
                }
                let groups = pd.tf_components(p & !k);
                let new: Vec<usize> = bits(k).collect();
                for mu in self.injections(&new, s, &[]) {
                    let mut sorted = mu.clone();
                    sorted.sort_unstable();
                    if let Some(rest) = self.assign(&groups, &children, &sorted) {
                        let mut out = mu;
                        out.extend(rest);
                        return Some(out);
                    }
                }
            }
        }
        None
    }

    pub fn run(&mut self) -> Option<Vec<usize>> {
        let k = self.pd.f.n();
        if k == 0 {
            return Some(Vec::new());
        }
        let g = self.g;
        let hosts = g.components(&g.vertices());
        let host_seps: Vec<Vec<usize>> = hosts
            .iter()
            .map(|h| {
                (0..self.art.separators.len())
                    .filter(|&i| self.art.separators[i].is_subset(h))
                    .collect()
            })
            .collect();
        let parts = self.pd.tf_components(self.pd.full());
        let full = (1u32 << parts.len()) - 1;
        let mut cache: HashMap<(usize, u32), Option<Pairs>> = HashMap::new();
        let mut failed = HashSet::new();
        let pairs = self.place_top(&hosts, &host_seps, &parts, 0, full, &mut cache, &mut failed)?;
        let mut map = vec![usize::MAX; k];
        for (a, h) in pairs {
            map[a] = h;
        }
        Some(map)
    }

    #[allow(clippy::too_many_arguments)]
    fn place_top(
        &mut self,
        hosts: &[VertexSet],
        host_seps: &[Vec<usize>],
        parts: &[u32],
        j: usize,
        remaining: u32,
        cache: &mut HashMap<(usize, u32), Option<Pairs>>,
        failed: &mut HashSet<(usize, u32)>,
    ) -> Option<Pairs> {
        if remaining == 0 {
            return Some(Vec::new());
        }
        if j == hosts.len() || failed.contains(&(j, remaining)) {
            return None;
        }
        let mut sub = remaining;
        while sub != 0 {
            let union = bits(sub).fold(0u32, |m, x| m | parts[x]);
            let here = match cache.get(&(j, sub)) {
                Some(hit) => hit.clone(),
                None => {
                    let r = self.embed_component(&hosts[j], &host_seps[j], union);
                    cache.insert((j, sub), r.clone());
                    r
                }
            };
            if let Some(here) = here {
                if let Some(rest) = self.place_top(hosts, host_seps, parts, j + 1, remaining & !sub, cache, failed) {
                    let mut out = here;
                    out.extend(rest);
                    return Some(out);
                }
            }
            sub = (sub - 1) & remaining;
        }
        let skip = self.place_top(hosts, host_seps, parts, j + 1, remaining, cache, failed);
        if skip.is_none() {
            failed.insert((j, remaining));
        }
        skip
    }
}
