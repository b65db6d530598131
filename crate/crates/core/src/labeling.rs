//! Set-labelings, their induced edge labels, and the verification ladder
//! IASL -> IASI -> IASGL, plus a search-free structural gate.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::classify::SummandMode;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::ground::GroundSet;
use crate::set::IntegerSet;

/// A map from vertex ids to non-empty subsets of a ground set.
/// Injectivity is checked by [`verify_iasl`], not assumed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLabeling")]
pub struct Labeling {
    #[serde(rename = "ground_set")]
    ground: GroundSet,
    #[serde(rename = "labels")]
    assignment: BTreeMap<String, IntegerSet>,
}

impl Labeling {
    pub fn new(ground: GroundSet, assignment: BTreeMap<String, IntegerSet>) -> Result<Labeling> {
        for (id, set) in &assignment {
            if set.is_empty() {
                return Err(Error::InvalidLabeling(format!("vertex {id:?} has an empty label")));
            }
            if !set.is_subset(ground.base()) {
                return Err(Error::InvalidLabeling(format!(
                    "label {set} of vertex {id:?} is not a subset of {}",
                    ground.base()
                )));
            }
        }
        Ok(Labeling { ground, assignment })
    }

    pub fn from_pairs<S: Into<String>>(
        ground: GroundSet,
        pairs: impl IntoIterator<Item = (S, IntegerSet)>,
    ) -> Result<Labeling> {
        Labeling::new(ground, pairs.into_iter().map(|(k, v)| (k.into(), v)).collect())
    }

    pub fn ground(&self) -> &GroundSet {
        &self.ground
    }

    pub fn assignment(&self) -> &BTreeMap<String, IntegerSet> {
        &self.assignment
    }

    pub fn label(&self, id: &str) -> Option<&IntegerSet> {
        self.assignment.get(id)
    }

    /// The vertex carrying `{0}`, if any.
    pub fn zero_vertex(&self) -> Option<&str> {
        self.assignment
            .iter()
            .find(|(_, s)| s.is_zero())
            .map(|(id, _)| id.as_str())
    }

    /// Multiplies every label and the ground set by `c > 0`.
    pub fn scale(&self, c: u64) -> Result<Labeling> {
        let assignment = self
            .assignment
            .iter()
            .map(|(k, v)| Ok((k.clone(), v.scale(c)?)))
            .collect::<Result<_>>()?;
        Labeling::new(self.ground.scale(c)?, assignment)
    }

    fn check_coverage(&self, g: &Graph) -> Result<()> {
        if let Some(id) = g.ids().iter().find(|id| !self.assignment.contains_key(*id)) {
            return Err(Error::Coverage(format!("vertex {id:?} is unlabelled")));
        }
        if let Some(id) = self.assignment.keys().find(|id| g.index_of(id).is_none()) {
            return Err(Error::Coverage(format!("label given for unknown vertex {id:?}")));
        }
        Ok(())
    }

    fn label_at(&self, g: &Graph, v: usize) -> &IntegerSet {
        &self.assignment[g.id(v)]
    }
}

#[derive(Deserialize)]
struct RawLabeling {
    ground_set: GroundSet,
    labels: BTreeMap<String, IntegerSet>,
}

impl TryFrom<RawLabeling> for Labeling {
    type Error = Error;
    fn try_from(raw: RawLabeling) -> Result<Labeling> {
        Labeling::new(raw.ground_set, raw.labels)
    }
}

/// `f(u) + f(v)`, not truncated to the ground set.
pub fn induced_edge_label(f: &Labeling, u: &str, v: &str) -> Result<IntegerSet> {
    let a = f.label(u).ok_or_else(|| Error::Unassigned(u.to_string()))?;
    let b = f.label(v).ok_or_else(|| Error::Unassigned(v.to_string()))?;
    a.sumset(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Rule {
    /// Two vertices share a label.
    Injectivity,
    /// An edge's sumset leaves the ground set.
    EdgeEscapes,
    /// Two edges induce the same label.
    EdgeCollision,
    /// `|E| != 2^n - 2`.
    EdgeCount,
    /// A subset of `X` other than `{0}` is not an edge label.
    MissingTarget,
    /// An edge label is `{0}`.
    ZeroEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule: Rule,
    pub vertices: Vec<String>,
    pub sets: Vec<IntegerSet>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Verdict {
    pub ok: bool,
    pub violations: Vec<Violation>,
}

impl Verdict {
    fn from_violations(violations: Vec<Violation>) -> Verdict {
        Verdict { ok: violations.is_empty(), violations }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Rung {
    None,
    Iasl,
    Iasi,
    Iasgl,
}

struct EdgeLabels {
    /// (u, v, label) for every edge; label is the untruncated sumset
    labels: Vec<(usize, usize, IntegerSet)>,
}

impl EdgeLabels {
    fn compute(g: &Graph, f: &Labeling) -> Result<EdgeLabels> {
        let labels = g
            .edges()
            .iter()
            .map(|&(u, v)| Ok((u, v, f.label_at(g, u).sumset(f.label_at(g, v))?)))
            .collect::<Result<_>>()?;
        Ok(EdgeLabels { labels })
    }
}

fn iasl_violations(g: &Graph, f: &Labeling, edges: &EdgeLabels) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut by_label: BTreeMap<&IntegerSet, Vec<String>> = BTreeMap::new();
    for id in g.ids() {
        by_label.entry(&f.assignment[id]).or_default().push(id.clone());
    }
    for (set, ids) in by_label {
        if ids.len() > 1 {
            out.push(Violation {
                rule: Rule::Injectivity,
                detail: format!("{} vertices share label {set}", ids.len()),
                vertices: ids,
                sets: vec![set.clone()],
            });
        }
    }
    for (u, v, label) in &edges.labels {
        if !label.is_subset(f.ground.base()) {
            out.push(Violation {
                rule: Rule::EdgeEscapes,
                vertices: vec![g.id(*u).into(), g.id(*v).into()],
                sets: vec![f.label_at(g, *u).clone(), f.label_at(g, *v).clone(), label.clone()],
                detail: format!(
                    "edge {}-{} has label {label}, not a subset of {}",
                    g.id(*u),
                    g.id(*v),
                    f.ground.base()
                ),
            });
        }
    }
    out
}

fn iasi_violations(g: &Graph, edges: &EdgeLabels) -> Vec<Violation> {
    let mut by_label: BTreeMap<&IntegerSet, Vec<(usize, usize)>> = BTreeMap::new();
    for (u, v, label) in &edges.labels {
        by_label.entry(label).or_default().push((*u, *v));
    }
    by_label
        .into_iter()
        .filter(|(_, es)| es.len() > 1)
        .map(|(label, es)| Violation {
            rule: Rule::EdgeCollision,
            detail: format!("{} edges share label {label}", es.len()),
            vertices: es
                .iter()
                .flat_map(|&(u, v)| [g.id(u).to_string(), g.id(v).to_string()])
                .collect(),
            sets: vec![label.clone()],
        })
        .collect()
}

fn iasgl_violations(g: &Graph, f: &Labeling, edges: &EdgeLabels) -> Result<Vec<Violation>> {
    let mut out = Vec::new();
    let n = f.ground.n();
    let targets: BTreeSet<IntegerSet> = f
        .ground
        .enumerate_nonempty_subsets()?
        .into_iter()
        .filter(|s| !s.is_zero())
        .collect();
    if g.size() != targets.len() {
        out.push(Violation {
            rule: Rule::EdgeCount,
            vertices: vec![],
            sets: vec![],
            detail: format!("graph has {} edges but 2^{n} - 2 = {} are required", g.size(), targets.len()),
        });
    }
    let realised: BTreeSet<&IntegerSet> = edges.labels.iter().map(|(_, _, l)| l).collect();
    for (u, v, label) in &edges.labels {
        if label.is_zero() {
            out.push(Violation {
                rule: Rule::ZeroEdge,
                vertices: vec![g.id(*u).into(), g.id(*v).into()],
                sets: vec![label.clone()],
                detail: "edge label {0} is excluded".into(),
            });
        }
    }
    let missing: Vec<IntegerSet> = targets.iter().filter(|t| !realised.contains(t)).cloned().collect();
    if !missing.is_empty() {
        out.push(Violation {
            rule: Rule::MissingTarget,
            vertices: vec![],
            detail: format!("{} subsets of X are not edge labels", missing.len()),
            sets: missing,
        });
    }
    Ok(out)
}

/// Injective labeling with every induced edge label inside `P(X)`.
pub fn verify_iasl(g: &Graph, f: &Labeling) -> Result<Verdict> {
    f.check_coverage(g)?;
    let edges = EdgeLabels::compute(g, f)?;
    Ok(Verdict::from_violations(iasl_violations(g, f, &edges)))
}

/// IASL whose induced edge labels are pairwise distinct. Violations of the
/// lower rung are reported too.
pub fn verify_iasi(g: &Graph, f: &Labeling) -> Result<Verdict> {
    f.check_coverage(g)?;
    let edges = EdgeLabels::compute(g, f)?;
    let mut v = iasl_violations(g, f, &edges);
    v.extend(iasi_violations(g, &edges));
    Ok(Verdict::from_violations(v))
}

/// IASI whose edge labels are exactly the non-empty subsets of `X` other
/// than `{0}`, each once.
pub fn verify_iasgl(g: &Graph, f: &Labeling) -> Result<Verdict> {
    f.check_coverage(g)?;
    let edges = EdgeLabels::compute(g, f)?;
    let mut v = iasl_violations(g, f, &edges);
    v.extend(iasi_violations(g, &edges));
    v.extend(iasgl_violations(g, f, &edges)?);
    Ok(Verdict::from_violations(v))
}

/// Highest rung of the ladder the labeling reaches, with the violations
/// that stop it going higher.
pub fn highest_rung(g: &Graph, f: &Labeling) -> Result<(Rung, Vec<Violation>)> {
    f.check_coverage(g)?;
    let edges = EdgeLabels::compute(g, f)?;
    let v = iasl_violations(g, f, &edges);
    if !v.is_empty() {
        return Ok((Rung::None, v));
    }
    let v = iasi_violations(g, &edges);
    if !v.is_empty() {
        return Ok((Rung::Iasl, v));
    }
    let v = iasgl_violations(g, f, &edges)?;
    if !v.is_empty() {
        return Ok((Rung::Iasi, v));
    }
    Ok((Rung::Iasgl, vec![]))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum GateRule {
    /// `|E| = 2^n - 2`.
    #[serde(rename = "R1-edge-count")]
    EdgeCount,
    /// Some vertex can carry `{0}`: degree at least the number of non-sumsets.
    #[serde(rename = "R2-zero-degree")]
    ZeroDegree,
    /// Enough pendant vertices: at least `|neither|` and at least `n - 1`.
    #[serde(rename = "R3-pendant-count")]
    PendantCount,
    /// One vertex has at least `|neither|` pendant neighbours.
    #[serde(rename = "R4-pendant-hub")]
    PendantHub,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateViolation {
    pub rule: GateRule,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GateReport {
    pub passed: bool,
    pub violations: Vec<GateViolation>,
}

/// Necessary conditions for `g` to admit an IASGL over `x`, checked
/// without search. Passing never implies existence.
pub fn structural_gate(g: &Graph, x: &GroundSet, mode: SummandMode) -> Result<GateReport> {
    x.require_zero()?;
    let n = x.n();
    let mut violations = Vec::new();
    let required = 1u128
        .checked_shl(n as u32)
        .map(|p| p - 2)
        .unwrap_or(u128::MAX);
    if g.size() as u128 != required {
        violations.push(GateViolation {
            rule: GateRule::EdgeCount,
            detail: format!("|E| = {} but 2^{n} - 2 = {required}", g.size()),
        });
    }
    // with |E| wrong the classification is irrelevant and may be too large
    if n >= 2 && violations.is_empty() {
        let cls = x.classification(mode)?;
        let non_sumsets = cls.non_sumsets.len();
        let neither = cls.neither.len();
        if g.max_degree() < non_sumsets {
            violations.push(GateViolation {
                rule: GateRule::ZeroDegree,
                detail: format!(
                    "max degree {} < {non_sumsets} non-sumsets that must sit next to {{0}}",
                    g.max_degree()
                ),
            });
        }
        let pendants = g.pendant_indices().len();
        let need = neither.max(n - 1);
        if pendants < need {
            violations.push(GateViolation {
                rule: GateRule::PendantCount,
                detail: format!("{pendants} pendant vertices < max(|neither| = {neither}, n - 1 = {})", n - 1),
            });
        }
        let hub = (0..g.order()).map(|v| g.pendant_neighbors(v)).max().unwrap_or(0);
        if hub < neither {
            violations.push(GateViolation {
                rule: GateRule::PendantHub,
                detail: format!("no vertex has {neither} pendant neighbours (best is {hub})"),
            });
        }
    }
    Ok(GateReport { passed: violations.is_empty(), violations })
}
