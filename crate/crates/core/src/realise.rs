//! Graceful graph-realisations: given `X`, build a graph together with an
//! IASGL over `X`.
//!
//! The skeleton is a vertex `v0` labelled `{0}` joined to a vertex for each
//! non-sumset (and, unless an odd cycle is wanted, each non-summand). Every
//! other target is then matched to exactly one vertex pair by
//! [`assign_edge_labels`], so no edge label is produced twice.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::classify::{decomposition_table, SummandMode};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ground::{GroundSet, Mask};
use crate::labeling::{verify_iasgl, Labeling};
use crate::set::IntegerSet;

/// Largest ground set the builder accepts.
pub const BUILD_CAP: usize = 10;

/// Assignment-search nodes spent looking for an odd cycle once a bipartite
/// solution is in hand.
const ODD_CYCLE_BUDGET: u64 = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub target: IntegerSet,
    pub edge: [String; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealisationResult {
    pub graph: Graph,
    pub labeling: Labeling,
    pub non_bipartite: bool,
    /// Set when an odd cycle was requested and the assignment search ran to
    /// completion without one. Every realisation of `X` is some assignment,
    /// so this proves `X` has no non-bipartite realisation.
    pub bipartite_forced: bool,
    /// One entry per target, shortlex by target.
    pub assignment_trace: Vec<TraceEntry>,
    pub notes: Vec<String>,
}

/// Output of [`assign_edge_labels`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeAssignment {
    /// Unfixed target -> the pair realising it.
    pub pairs: BTreeMap<IntegerSet, (IntegerSet, IntegerSet)>,
    /// Labels of vertices added to the pool, in creation order.
    pub added: Vec<IntegerSet>,
}

struct Assigner<'a> {
    decomps: &'a [Vec<(Mask, Mask)>],
    rank: &'a [usize],
    prefer_odd: bool,
    targets: Vec<Mask>,
    present: Vec<bool>,
    created: Vec<Mask>,
    adj: Vec<Vec<Mask>>,
    chosen: Vec<(Mask, Mask)>,
    nodes: u64,
    best: Option<(Vec<(Mask, Mask)>, Vec<Mask>)>,
    exhausted: bool,
}

impl<'a> Assigner<'a> {
    fn has_edge(&self, a: Mask, b: Mask) -> bool {
        self.adj[a as usize].contains(&b)
    }

    /// Whether `a` and `b` are joined by a path of even length, so the edge
    /// `ab` would close an odd cycle.
    fn closes_odd_cycle(&self, a: Mask, b: Mask) -> bool {
        if !self.present[a as usize] || !self.present[b as usize] {
            return false;
        }
        let mut parity: BTreeMap<Mask, bool> = BTreeMap::new();
        parity.insert(a, false);
        let mut queue = std::collections::VecDeque::from([a]);
        while let Some(u) = queue.pop_front() {
            let pu = parity[&u];
            for &w in &self.adj[u as usize] {
                if !parity.contains_key(&w) {
                    parity.insert(w, !pu);
                    queue.push_back(w);
                }
            }
        }
        parity.get(&b) == Some(&false)
    }

    fn add_edge(&mut self, a: Mask, b: Mask) -> Vec<Mask> {
        let mut fresh = Vec::new();
        for m in [a, b] {
            if !self.present[m as usize] {
                self.present[m as usize] = true;
                self.created.push(m);
                fresh.push(m);
            }
        }
        self.adj[a as usize].push(b);
        self.adj[b as usize].push(a);
        fresh
    }

    fn remove_edge(&mut self, a: Mask, b: Mask, fresh: Vec<Mask>) {
        self.adj[a as usize].pop();
        self.adj[b as usize].pop();
        for m in fresh.into_iter().rev() {
            self.present[m as usize] = false;
            self.created.pop();
        }
    }

    fn is_bipartite(&self) -> bool {
        let mut colour: BTreeMap<Mask, bool> = BTreeMap::new();
        for &s in self.created.iter() {
            if colour.contains_key(&s) {
                continue;
            }
            colour.insert(s, false);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                let cu = colour[&u];
                for &w in &self.adj[u as usize] {
                    match colour.get(&w) {
                        Some(&cw) if cw == cu => return false,
                        Some(_) => {}
                        None => {
                            colour.insert(w, !cu);
                            stack.push(w);
                        }
                    }
                }
            }
        }
        true
    }

    fn candidates(&self, target: Mask) -> Vec<(Mask, Mask)> {
        let mut c: Vec<(usize, bool, usize, usize, Mask, Mask)> = self.decomps[target as usize]
            .iter()
            .filter(|&&(a, b)| a != b && !self.has_edge(a, b))
            .map(|&(a, b)| {
                let (a, b) = if self.rank[a as usize] <= self.rank[b as usize] { (a, b) } else { (b, a) };
                let new = [a, b].iter().filter(|&&m| !self.present[m as usize]).count();
                let odd = self.prefer_odd && self.closes_odd_cycle(a, b);
                (new, !odd, self.rank[a as usize], self.rank[b as usize], a, b)
            })
            .collect();
        c.sort_unstable();
        c.into_iter().map(|t| (t.4, t.5)).collect()
    }

    /// Returns true when the search should stop.
    fn descend(&mut self, pos: usize) -> bool {
        self.nodes += 1;
        if pos == self.targets.len() {
            let odd = !self.is_bipartite();
            if self.best.is_none() || odd {
                self.best = Some((self.chosen.clone(), self.created.clone()));
            }
            return !self.prefer_odd || odd;
        }
        if self.best.is_some() && self.nodes > ODD_CYCLE_BUDGET {
            return true;
        }
        let target = self.targets[pos];
        for (a, b) in self.candidates(target) {
            let fresh = self.add_edge(a, b);
            self.chosen.push((a, b));
            let stop = self.descend(pos + 1);
            self.chosen.pop();
            self.remove_edge(a, b, fresh);
            if stop {
                return true;
            }
        }
        false
    }
}

struct Solved {
    pairs: Vec<(Mask, Mask)>,
    created: Vec<Mask>,
    targets: Vec<Mask>,
    exhausted: bool,
}

fn shortlex_rank(x: &GroundSet) -> Vec<usize> {
    let full = x.full_mask();
    let mut masks: Vec<Mask> = (0..=full).collect();
    masks.sort_by_cached_key(|&m| x.set_of(m));
    let mut rank = vec![0; full as usize + 1];
    for (r, m) in masks.into_iter().enumerate() {
        rank[m as usize] = r;
    }
    rank
}

fn solve(
    x: &GroundSet,
    targets: &[Mask],
    pool: &[Mask],
    fixed: &[(Mask, Mask)],
    prefer_odd: bool,
) -> Result<Solved> {
    let decomps = decomposition_table(x, SummandMode::DistinctLabels, true)?;
    let rank = shortlex_rank(x);
    let slots = x.full_mask() as usize + 1;
    let mut present = vec![false; slots];
    let mut created = Vec::new();
    for &m in pool {
        if !present[m as usize] {
            present[m as usize] = true;
            created.push(m);
        }
    }
    let mut adj = vec![Vec::new(); slots];
    for &(a, b) in fixed {
        adj[a as usize].push(b);
        adj[b as usize].push(a);
    }
    let unassignable: Vec<IntegerSet> = targets
        .iter()
        .filter(|&&t| !decomps[t as usize].iter().any(|&(a, b)| a != b))
        .map(|&t| x.set_of(t))
        .collect();
    if !unassignable.is_empty() {
        return Err(Error::Infeasible { unassignable });
    }
    // fewest decompositions first, then shortlex
    let mut order = targets.to_vec();
    order.sort_by_key(|&t| (decomps[t as usize].iter().filter(|(a, b)| a != b).count(), rank[t as usize]));
    let mut s = Assigner {
        decomps: &decomps,
        rank: &rank,
        prefer_odd,
        targets: order,
        present,
        created,
        adj,
        chosen: Vec::new(),
        nodes: 0,
        best: None,
        exhausted: false,
    };
    let stopped = s.descend(0);
    s.exhausted = !stopped;
    let exhausted = s.exhausted;
    match s.best {
        Some((pairs, created)) => Ok(Solved { pairs, created, targets: s.targets, exhausted }),
        None => Err(Error::Infeasible { unassignable: targets.iter().map(|&t| x.set_of(t)).collect() }),
    }
}

/// Matches every target not already realised by `fixed_edges` to one pair
/// `(A, B)`, `A != B`, `A + B = target`. Pairs may use pool vertices or
/// new vertices labelled by unused subsets of `X`; new vertices are only
/// created as edge endpoints, so none is isolated.
pub fn assign_edge_labels(
    targets: &[IntegerSet],
    vertex_pool: &[IntegerSet],
    fixed_edges: &[(IntegerSet, IntegerSet)],
    x: &GroundSet,
) -> Result<EdgeAssignment> {
    if x.n() > BUILD_CAP {
        return Err(Error::GroundSetTooLarge { n: x.n(), cap: BUILD_CAP });
    }
    let masks = |sets: &[IntegerSet]| sets.iter().map(|s| x.mask_of(s)).collect::<Result<Vec<_>>>();
    let pool = masks(vertex_pool)?;
    let mut fixed = Vec::new();
    let mut covered = BTreeSet::new();
    for (a, b) in fixed_edges {
        let label = a.sumset(b)?;
        x.check_subset(&label)?;
        if !covered.insert(label.clone()) {
            return Err(Error::InvalidGraph(format!("fixed edges repeat the label {label}")));
        }
        fixed.push((x.mask_of(a)?, x.mask_of(b)?));
    }
    let mut pool_all = pool.clone();
    pool_all.extend(fixed.iter().flat_map(|&(a, b)| [a, b]));
    let open: Vec<Mask> = masks(targets)?
        .into_iter()
        .filter(|&t| !covered.contains(&x.set_of(t)))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let solved = solve(x, &open, &pool_all, &fixed, false)?;
    let pool_len = pool_all.iter().collect::<BTreeSet<_>>().len();
    Ok(EdgeAssignment {
        pairs: solved
            .targets
            .iter()
            .zip(&solved.pairs)
            .map(|(&t, &(a, b))| (x.set_of(t), (x.set_of(a), x.set_of(b))))
            .collect(),
        added: solved.created[pool_len..].iter().map(|&m| x.set_of(m)).collect(),
    })
}

/// Builds and verifies a graceful graph-realisation of `x`.
pub fn build_realisation(x: &GroundSet, prefer_nonbipartite: bool, mode: SummandMode) -> Result<RealisationResult> {
    x.require_zero()?;
    if x.n() < 2 {
        return Err(Error::GroundSetTooSmall { n: x.n(), min: 2 });
    }
    if x.n() > BUILD_CAP {
        return Err(Error::GroundSetTooLarge { n: x.n(), cap: BUILD_CAP });
    }
    let cls = x.classification(mode)?;
    let zero = x.zero_mask();
    let mut skeleton: BTreeSet<IntegerSet> = cls.non_sumsets.iter().cloned().collect();
    if !prefer_nonbipartite {
        skeleton.extend(cls.non_summands.iter().cloned());
    }
    let skeleton: Vec<Mask> = skeleton.iter().map(|s| x.mask_of(s)).collect::<Result<_>>()?;

    let mut pool = vec![zero];
    pool.extend(&skeleton);
    let fixed: Vec<(Mask, Mask)> = skeleton.iter().map(|&m| (zero, m)).collect();
    let targets: Vec<Mask> = (1..=x.full_mask())
        .filter(|&m| m != zero && !skeleton.contains(&m))
        .collect();
    let solved = solve(x, &targets, &pool, &fixed, prefer_nonbipartite)?;

    let vid: BTreeMap<Mask, String> = solved
        .created
        .iter()
        .enumerate()
        .map(|(i, &m)| (m, format!("v{i}")))
        .collect();
    let edge_ids = |a: Mask, b: Mask| [vid[&a].clone(), vid[&b].clone()];
    let mut trace: Vec<TraceEntry> = fixed
        .iter()
        .map(|&(a, b)| TraceEntry { target: x.set_of(b), edge: edge_ids(a, b) })
        .chain(
            solved
                .targets
                .iter()
                .zip(&solved.pairs)
                .map(|(&t, &(a, b))| TraceEntry { target: x.set_of(t), edge: edge_ids(a, b) }),
        )
        .collect();
    trace.sort_by(|p, q| p.target.cmp(&q.target));

    let ids: Vec<String> = solved.created.iter().map(|m| vid[m].clone()).collect();
    let graph = Graph::new(ids, trace.iter().map(|e| (e.edge[0].clone(), e.edge[1].clone())))?;
    let labeling = Labeling::new(x.clone(), solved.created.iter().map(|m| (vid[m].clone(), x.set_of(*m))).collect())?;
    let verdict = verify_iasgl(&graph, &labeling)?;
    if !verdict.ok {
        return Err(Error::InvalidLabeling(format!(
            "constructed labeling failed verification: {:?}",
            verdict.violations
        )));
    }
    let non_bipartite = !graph.is_bipartite();
    let mut notes = Vec::new();
    let bipartite_forced = prefer_nonbipartite && !non_bipartite && solved.exhausted;
    if prefer_nonbipartite && !non_bipartite {
        notes.push(if solved.exhausted {
            format!("{} has no non-bipartite realisation (assignment search exhausted)", x.base())
        } else {
            format!("no non-bipartite realisation found for {} within the assignment budget", x.base())
        });
    }
    Ok(RealisationResult { graph, labeling, non_bipartite, bipartite_forced, assignment_trace: trace, notes })
}
