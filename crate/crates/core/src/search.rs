//! Existence search for integer additive set-graceful labelings.
//!
//! The search assigns masks (subsets of `X`) to vertices injectively. The
//! top level branches on which vertex carries `{0}`: every graceful
//! labeling has exactly one such vertex, so the branches partition the
//! search space and may run on separate workers. Branch results are merged
//! in branch order, which keeps the outcome independent of scheduling.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::classify::{decomposition_table, Classification, SummandMode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ground::{canonical_ground_sets, GroundSet, Mask, ShiftTable};
use crate::labeling::{structural_gate, verify_iasgl, GateReport, Labeling};

/// Largest ground set the search accepts.
pub const SEARCH_CAP: usize = 8;

/// Switches for each pruning rule. Turning one off never changes whether a
/// labeling is found, only how much of the tree is walked.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneRules {
    /// Run the structural gate before searching.
    pub gate: bool,
    /// `{0}` only on vertices whose degree covers every non-sumset.
    pub zero_degree: bool,
    /// Non-summand labels only on pendants hanging off the `{0}` vertex.
    pub non_summand_pendant: bool,
    /// Reject as soon as an edge label escapes `X`, is `{0}`, or repeats.
    pub edge_check: bool,
    /// Every unrealised target must still have a realisable decomposition.
    pub coverage: bool,
}

impl Default for PruneRules {
    fn default() -> Self {
        PruneRules {
            gate: true,
            zero_degree: true,
            non_summand_pendant: true,
            edge_check: true,
            coverage: true,
        }
    }
}

impl PruneRules {
    pub fn none() -> Self {
        PruneRules {
            gate: false,
            zero_degree: false,
            non_summand_pendant: false,
            edge_check: false,
            coverage: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchConfig {
    pub mode: SummandMode,
    /// Node cap for each top-level branch.
    pub node_budget: u64,
    /// Wall-clock cap for the whole search; `None` disables it.
    pub time_budget_ms: Option<u64>,
    pub find_all: bool,
    /// 0 tries labels in mask order; anything else shuffles that order.
    pub seed: u64,
    pub rules: PruneRules,
    /// Run top-level branches and sweep items on the rayon pool.
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            mode: SummandMode::DistinctLabels,
            node_budget: 10_000_000,
            time_budget_ms: Some(60_000),
            find_all: false,
            seed: 0,
            rules: PruneRules::default(),
            parallel: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    Found,
    ExhaustedNone,
    BudgetExceeded,
    GateRejected,
}

impl SearchStatus {
    /// Whether the outcome proves that no labeling exists.
    pub fn is_nonexistence(self) -> bool {
        matches!(self, SearchStatus::ExhaustedNone | SearchStatus::GateRejected)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruneCounts {
    pub zero_degree: u64,
    pub non_summand_pendant: u64,
    pub edge_check: u64,
    pub coverage: u64,
}

impl PruneCounts {
    fn add(&mut self, o: &PruneCounts) {
        self.zero_degree += o.zero_degree;
        self.non_summand_pendant += o.non_summand_pendant;
        self.edge_check += o.edge_check;
        self.coverage += o.coverage;
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    pub nodes: u64,
    pub branches: u64,
    pub prunes: PruneCounts,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub witnesses: Vec<Labeling>,
    pub stats: SearchStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub gate: Option<GateReport>,
}

struct Problem<'a> {
    g: &'a Graph,
    x: &'a GroundSet,
    table: &'a ShiftTable,
    cls: Option<Arc<Classification>>,
    rules: PruneRules,
    zero: Mask,
    target_count: usize,
    /// decompositions of each target mask into two distinct masks,
    /// `{0}` allowed; empty when coverage pruning is off
    decomps: Vec<Vec<(Mask, Mask)>>,
    labels: Vec<Mask>,
    node_budget: u64,
    deadline: Option<Instant>,
    find_all: bool,
}

#[derive(Default)]
struct BranchResult {
    witnesses: Vec<Vec<Mask>>,
    stats: SearchStats,
    budget_hit: bool,
    cancelled: bool,
}

struct Walker<'p, 'a> {
    p: &'p Problem<'a>,
    zero_vertex: usize,
    order: Vec<usize>,
    label_of: Vec<Mask>,
    owner: Vec<Option<usize>>,
    realised: Vec<u16>,
    escaped: u32,
    open_degree: Vec<usize>,
    free_edges: usize,
    out: BranchResult,
    stop: bool,
    cancel: Option<(&'p AtomicUsize, usize)>,
}

impl<'p, 'a> Walker<'p, 'a> {
    fn new(p: &'p Problem<'a>, zero_vertex: usize, cancel: Option<(&'p AtomicUsize, usize)>) -> Self {
        let g = p.g;
        let mut order: Vec<usize> = (0..g.order()).filter(|&v| v != zero_vertex).collect();
        order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
        let slots = p.x.full_mask() as usize + 1;
        Walker {
            p,
            zero_vertex,
            order,
            label_of: vec![0; g.order()],
            owner: vec![None; slots],
            realised: vec![0; slots],
            escaped: 0,
            open_degree: (0..g.order()).map(|v| g.degree(v)).collect(),
            free_edges: g.size(),
            out: BranchResult::default(),
            stop: false,
            cancel,
        }
    }

    fn run(mut self) -> BranchResult {
        self.out.stats.nodes = 1;
        let z = self.zero_vertex;
        self.assign(z, self.p.zero);
        self.descend(0);
        self.out
    }

    /// Assigns without checks; returns the edge sums it recorded.
    fn assign(&mut self, v: usize, label: Mask) -> Vec<Option<Mask>> {
        let g = self.p.g;
        let mut sums = Vec::new();
        for &u in g.neighbors(v) {
            if self.label_of[u] != 0 {
                let s = self.p.table.sum(label, self.label_of[u]);
                match s {
                    Some(m) => self.realised[m as usize] += 1,
                    None => self.escaped += 1,
                }
                sums.push(s);
            } else {
                self.free_edges -= 1;
            }
            self.open_degree[u] -= 1;
        }
        self.label_of[v] = label;
        self.owner[label as usize] = Some(v);
        sums
    }

    fn unassign(&mut self, v: usize, sums: Vec<Option<Mask>>) {
        let g = self.p.g;
        let label = self.label_of[v];
        self.label_of[v] = 0;
        self.owner[label as usize] = None;
        for &u in g.neighbors(v) {
            self.open_degree[u] += 1;
            if self.label_of[u] == 0 {
                self.free_edges += 1;
            }
        }
        for s in sums {
            match s {
                Some(m) => self.realised[m as usize] -= 1,
                None => self.escaped -= 1,
            }
        }
    }

    /// Edge sums `label` would create, or `None` if one is invalid.
    fn edge_check(&self, v: usize, label: Mask) -> bool {
        let mut seen: Vec<Mask> = Vec::new();
        for &u in self.p.g.neighbors(v) {
            let other = self.label_of[u];
            if other == 0 {
                continue;
            }
            match self.p.table.sum(label, other) {
                Some(s) if s != self.p.zero && self.realised[s as usize] == 0 && !seen.contains(&s) => {
                    seen.push(s)
                }
                _ => return false,
            }
        }
        true
    }

    fn open(&self, m: Mask) -> Option<bool> {
        // None: unused label; Some(true): placed on a vertex with a free edge
        self.owner[m as usize].map(|v| self.open_degree[v] > 0)
    }

    fn coverage_holds(&self) -> bool {
        for (t, pairs) in self.p.decomps.iter().enumerate() {
            if pairs.is_empty() && (t == 0 || t as Mask == self.p.zero) {
                continue;
            }
            if self.realised[t] > 0 {
                continue;
            }
            let ok = pairs.iter().any(|&(a, b)| match (self.open(a), self.open(b)) {
                (None, None) => self.free_edges > 0,
                (None, Some(true)) | (Some(true), None) => true,
                _ => false,
            });
            if !ok {
                return false;
            }
        }
        true
    }

    fn leaf_is_graceful(&self) -> bool {
        if self.escaped > 0 || self.realised[self.p.zero as usize] > 0 {
            return false;
        }
        let mut distinct = 0;
        for &c in &self.realised {
            match c {
                0 => {}
                1 => distinct += 1,
                _ => return false,
            }
        }
        distinct == self.p.target_count && self.p.g.size() == self.p.target_count
    }

    fn over_budget(&mut self) -> bool {
        if self.out.stats.nodes > self.p.node_budget {
            self.out.budget_hit = true;
            return true;
        }
        if self.out.stats.nodes % 1024 == 0 {
            if let Some(d) = self.p.deadline {
                if Instant::now() >= d {
                    self.out.budget_hit = true;
                    return true;
                }
            }
            if let Some((found_at, me)) = self.cancel {
                if found_at.load(Ordering::Relaxed) < me {
                    self.out.cancelled = true;
                    return true;
                }
            }
        }
        false
    }

    fn descend(&mut self, pos: usize) {
        if pos == self.order.len() {
            if self.leaf_is_graceful() {
                self.out.witnesses.push(self.label_of.clone());
                if !self.p.find_all {
                    self.stop = true;
                }
            }
            return;
        }
        let v = self.order[pos];
        let p = self.p;
        for &label in &p.labels {
            if self.owner[label as usize].is_some() {
                continue;
            }
            if p.rules.non_summand_pendant {
                if let Some(cls) = &p.cls {
                    let g = p.g;
                    if cls.is_non_summand_mask(label)
                        && !(g.degree(v) == 1 && g.neighbors(v)[0] == self.zero_vertex)
                    {
                        self.out.stats.prunes.non_summand_pendant += 1;
                        continue;
                    }
                }
            }
            self.out.stats.nodes += 1;
            if self.over_budget() {
                self.stop = true;
                return;
            }
            if p.rules.edge_check && !self.edge_check(v, label) {
                self.out.stats.prunes.edge_check += 1;
                continue;
            }
            let sums = self.assign(v, label);
            if p.rules.coverage && !self.coverage_holds() {
                self.out.stats.prunes.coverage += 1;
                self.unassign(v, sums);
                continue;
            }
            self.descend(pos + 1);
            self.unassign(v, sums);
            if self.stop {
                return;
            }
        }
    }
}

/// Decides whether `g` admits an IASGL over `x`.
pub fn search_iasgl(g: &Graph, x: &GroundSet, cfg: &SearchConfig) -> Result<SearchOutcome> {
    x.require_zero()?;
    if x.n() > SEARCH_CAP {
        return Err(Error::GroundSetTooLarge { n: x.n(), cap: SEARCH_CAP });
    }
    let rules = cfg.rules;
    if rules.gate {
        let report = structural_gate(g, x, cfg.mode)?;
        if !report.passed {
            return Ok(SearchOutcome {
                status: SearchStatus::GateRejected,
                witnesses: vec![],
                stats: SearchStats::default(),
                gate: Some(report),
            });
        }
    }
    let deadline = cfg
        .time_budget_ms
        .map(|ms| Instant::now() + Duration::from_millis(ms));
    let full = x.full_mask();
    // injectivity needs one distinct non-empty subset per vertex
    if g.order() > full as usize || x.n() < 2 {
        return Ok(SearchOutcome {
            status: SearchStatus::ExhaustedNone,
            witnesses: vec![],
            stats: SearchStats::default(),
            gate: None,
        });
    }

    let table = x.shift_table()?;
    let needs_cls = rules.zero_degree || rules.non_summand_pendant;
    let cls = if needs_cls { Some(x.classification(cfg.mode)?) } else { None };
    let zero = x.zero_mask();
    let mut decomps = Vec::new();
    if rules.coverage {
        decomps = decomposition_table(x, SummandMode::DistinctLabels, true)?;
        decomps[zero as usize].clear();
    }
    let mut labels: Vec<Mask> = (1..=full).filter(|&m| m != zero).collect();
    if cfg.seed != 0 {
        labels.shuffle(&mut ChaCha8Rng::seed_from_u64(cfg.seed));
    }
    let problem = Problem {
        g,
        x,
        table,
        cls: cls.clone(),
        rules,
        zero,
        target_count: full as usize - 1,
        decomps,
        labels,
        node_budget: cfg.node_budget,
        deadline,
        find_all: cfg.find_all,
    };

    let mut candidates: Vec<usize> = (0..g.order()).collect();
    candidates.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    let mut excluded = 0;
    if let (true, Some(cls)) = (rules.zero_degree, &cls) {
        let need = cls.non_sumsets.len();
        let before = candidates.len();
        candidates.retain(|&v| g.degree(v) >= need);
        excluded = (before - candidates.len()) as u64;
    }

    let results = run_branches(&problem, &candidates, cfg.parallel);

    let mut stats = SearchStats { prunes: PruneCounts { zero_degree: excluded, ..Default::default() }, ..Default::default() };
    let mut witnesses = Vec::new();
    let mut budget_hit = false;
    for r in results {
        stats.nodes += r.stats.nodes;
        stats.branches += 1;
        stats.prunes.add(&r.stats.prunes);
        budget_hit |= r.budget_hit;
        let found = !r.witnesses.is_empty();
        for w in r.witnesses {
            witnesses.push(to_labeling(g, x, &w)?);
        }
        if found && !cfg.find_all {
            break;
        }
    }
    for w in &witnesses {
        let verdict = verify_iasgl(g, w)?;
        assert!(verdict.ok, "search produced an invalid witness: {:?}", verdict.violations);
    }
    let status = if !witnesses.is_empty() {
        SearchStatus::Found
    } else if budget_hit {
        SearchStatus::BudgetExceeded
    } else {
        SearchStatus::ExhaustedNone
    };
    Ok(SearchOutcome { status, witnesses, stats, gate: None })
}

#[cfg(feature = "parallel")]
fn run_branches(p: &Problem<'_>, candidates: &[usize], parallel: bool) -> Vec<BranchResult> {
    use rayon::prelude::*;
    if !parallel || candidates.len() < 2 {
        return run_sequential(p, candidates);
    }
    let found_at = AtomicUsize::new(usize::MAX);
    candidates
        .par_iter()
        .enumerate()
        .map(|(i, &z)| {
            let cancel = (!p.find_all).then_some((&found_at, i));
            let r = Walker::new(p, z, cancel).run();
            if !r.witnesses.is_empty() {
                found_at.fetch_min(i, Ordering::Relaxed);
            }
            r
        })
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn run_branches(p: &Problem<'_>, candidates: &[usize], _parallel: bool) -> Vec<BranchResult> {
    run_sequential(p, candidates)
}

fn run_sequential(p: &Problem<'_>, candidates: &[usize]) -> Vec<BranchResult> {
    let mut out = Vec::new();
    for &z in candidates {
        let r = Walker::new(p, z, None).run();
        let found = !r.witnesses.is_empty();
        out.push(r);
        if found && !p.find_all {
            break;
        }
    }
    // a cancelled branch is never merged: it always sits after a found one
    debug_assert!(out.iter().all(|r| !r.cancelled));
    out
}

fn to_labeling(g: &Graph, x: &GroundSet, masks: &[Mask]) -> Result<Labeling> {
    let assignment: BTreeMap<String, _> = masks
        .iter()
        .enumerate()
        .map(|(v, &m)| (g.id(v).to_string(), x.set_of(m)))
        .collect();
    Labeling::new(x.clone(), assignment)
}

/// Runs [`search_iasgl`] on every canonical ground set with `|X| = n`
/// and `max(X) <= max_element`, in lexicographic order of `X`.
pub fn sweep_ground_sets(
    g: &Graph,
    n: usize,
    max_element: u64,
    cfg: &SearchConfig,
) -> Result<Vec<(GroundSet, SearchOutcome)>> {
    if max_element + 1 < n as u64 {
        return Err(Error::EmptySweep { n, max_element });
    }
    let family = canonical_ground_sets(n, max_element)?;
    let run = |x: &GroundSet| search_iasgl(g, x, cfg).map(|o| (x.clone(), o));
    #[cfg(feature = "parallel")]
    if cfg.parallel {
        use rayon::prelude::*;
        return family.par_iter().map(run).collect();
    }
    family.iter().map(run).collect()
}
