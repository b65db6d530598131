//! File formats and command-line literals: the graph/labeling Document,
//! DOT export, set literals, graph specs and ground-set specs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Family, Graph, GraphJson};
use crate::ground::GroundSet;
use crate::labeling::Labeling;
use crate::set::IntegerSet;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum VertexEntry {
    Bare(String),
    Labelled {
        id: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        label: Option<IntegerSet>,
    },
}

impl VertexEntry {
    pub fn id(&self) -> &str {
        match self {
            VertexEntry::Bare(id) | VertexEntry::Labelled { id, .. } => id,
        }
    }

    pub fn label(&self) -> Option<&IntegerSet> {
        match self {
            VertexEntry::Bare(_) => None,
            VertexEntry::Labelled { label, .. } => label.as_ref(),
        }
    }
}

/// A graph, optionally with a ground set and vertex labels.
///
/// `edge_labels` is derived on output (keyed `"u--v"`) and ignored on input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Document {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ground_set: Option<IntegerSet>,
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none", skip_deserializing)]
    pub edge_labels: Option<BTreeMap<String, IntegerSet>>,
}

impl Document {
    pub fn from_graph(g: &Graph) -> Document {
        Document {
            ground_set: None,
            vertices: g.ids().iter().map(|id| VertexEntry::Bare(id.clone())).collect(),
            edges: g.edge_ids().map(|(u, v)| [u.to_string(), v.to_string()]).collect(),
            edge_labels: None,
        }
    }

    /// Document for a labeled graph, with edge labels filled in.
    pub fn from_labeled(g: &Graph, f: &Labeling) -> Result<Document> {
        let vertices = g
            .ids()
            .iter()
            .map(|id| VertexEntry::Labelled { id: id.clone(), label: f.label(id).cloned() })
            .collect();
        let mut edge_labels = BTreeMap::new();
        for (u, v) in g.edge_ids() {
            if let (Some(a), Some(b)) = (f.label(u), f.label(v)) {
                edge_labels.insert(format!("{u}--{v}"), a.sumset(b)?);
            }
        }
        Ok(Document {
            ground_set: Some(f.ground().base().clone()),
            vertices,
            edges: g.edge_ids().map(|(u, v)| [u.to_string(), v.to_string()]).collect(),
            edge_labels: Some(edge_labels),
        })
    }

    pub fn graph(&self) -> Result<Graph> {
        Graph::try_from(GraphJson {
            vertices: self.vertices.iter().map(|v| v.id().to_string()).collect(),
            edges: self.edges.clone(),
        })
    }

    pub fn has_labels(&self) -> bool {
        self.vertices.iter().any(|v| v.label().is_some())
    }

    /// The labeling carried by the document. Vertices without a label are
    /// left out, so coverage is checked by the verifier.
    pub fn labeling(&self) -> Result<Labeling> {
        let ground = self
            .ground_set
            .clone()
            .ok_or_else(|| Error::Parse("document has no ground_set".into()))?;
        Labeling::new(
            GroundSet::new(ground)?,
            self.vertices
                .iter()
                .filter_map(|v| v.label().map(|l| (v.id().to_string(), l.clone())))
                .collect(),
        )
    }

    /// Ids of vertices with no label.
    pub fn unlabelled(&self) -> Vec<&str> {
        self.vertices.iter().filter(|v| v.label().is_none()).map(VertexEntry::id).collect()
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<Document> {
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// DOT text: vertices carry their label sets, edges their induced labels.
pub fn to_dot(g: &Graph, f: Option<&Labeling>) -> Result<String> {
    let mut out = String::from("graph iasgl {\n");
    for id in g.ids() {
        match f.and_then(|f| f.label(id)) {
            Some(l) => writeln!(out, "  \"{}\" [label=\"{}\"];", dot_escape(id), l),
            None => writeln!(out, "  \"{}\";", dot_escape(id)),
        }
        .expect("write to String");
    }
    for (u, v) in g.edge_ids() {
        let label = match f {
            Some(f) => match (f.label(u), f.label(v)) {
                (Some(a), Some(b)) => Some(a.sumset(b)?),
                _ => None,
            },
            None => None,
        };
        match label {
            Some(l) => writeln!(out, "  \"{}\" -- \"{}\" [label=\"{}\"];", dot_escape(u), dot_escape(v), l),
            None => writeln!(out, "  \"{}\" -- \"{}\";", dot_escape(u), dot_escape(v)),
        }
        .expect("write to String");
    }
    out.push_str("}\n");
    Ok(out)
}

/// A parsed set literal and the values that appeared more than once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetLiteral {
    pub set: IntegerSet,
    pub duplicates: Vec<u64>,
}

/// Parses `0,1,2`, `{0, 1, 2}` or `[0,1,2]`, in any order.
pub fn parse_set_literal(s: &str) -> Result<SetLiteral> {
    let t = s.trim();
    let inner = t
        .strip_prefix('{')
        .and_then(|r| r.strip_suffix('}'))
        .or_else(|| t.strip_prefix('[').and_then(|r| r.strip_suffix(']')))
        .unwrap_or(t);
    let mut seen = BTreeSet::new();
    let mut duplicates = BTreeSet::new();
    for part in inner.split(',') {
        let part = part.trim();
        if part.is_empty() {
            return Err(Error::Parse(format!("empty element in set literal {s:?}")));
        }
        let v: u64 = part
            .parse()
            .map_err(|_| Error::Parse(format!("{part:?} is not a non-negative integer")))?;
        if !seen.insert(v) {
            duplicates.insert(v);
        }
    }
    Ok(SetLiteral { set: IntegerSet::new(seen), duplicates: duplicates.into_iter().collect() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphSpec {
    Family(Family, usize),
    File(PathBuf),
}

impl FromStr for GraphSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<GraphSpec> {
        let (kind, arg) = s
            .split_once(':')
            .ok_or_else(|| Error::Parse(format!("graph spec {s:?} is not KIND:ARG")))?;
        if kind == "file" {
            return Ok(GraphSpec::File(PathBuf::from(arg)));
        }
        let family: Family = kind.parse()?;
        let size = arg
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("graph size {arg:?} is not a positive integer")))?;
        Ok(GraphSpec::Family(family, size))
    }
}

impl GraphSpec {
    pub fn load(&self) -> Result<Graph> {
        match self {
            GraphSpec::Family(f, m) => Graph::generate(*f, *m),
            GraphSpec::File(p) => read_graph_file(p),
        }
    }
}

/// Reads a graph from a Document or plain graph JSON file.
pub fn read_graph_file(path: &Path) -> Result<Graph> {
    read_document(path)?.graph()
}

pub fn read_document(path: &Path) -> Result<Document> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Document::from_json(&text)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroundSpec {
    Explicit(SetLiteral),
    Sweep { n: usize, max_element: u64 },
}

impl FromStr for GroundSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<GroundSpec> {
        let Some(rest) = s.trim().strip_prefix("sweep:") else {
            return parse_set_literal(s).map(GroundSpec::Explicit);
        };
        let mut n = None;
        let mut max = None;
        for kv in rest.split(',') {
            let (k, v) = kv
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("sweep field {kv:?} is not KEY=VALUE")))?;
            let v = v.trim();
            let bad = || Error::Parse(format!("sweep value {v:?} is not a non-negative integer"));
            match k.trim() {
                "n" => n = Some(v.parse().map_err(|_| bad())?),
                "max" => max = Some(v.parse().map_err(|_| bad())?),
                other => return Err(Error::Parse(format!("unknown sweep field {other:?}"))),
            }
        }
        match (n, max) {
            (Some(n), Some(max_element)) => Ok(GroundSpec::Sweep { n, max_element }),
            _ => Err(Error::Parse("sweep spec needs n=N,max=M".into())),
        }
    }
}
