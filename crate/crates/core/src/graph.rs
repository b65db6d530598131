//! Simple undirected graphs without isolated vertices.

use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A simple finite undirected graph with no isolated vertices.
///
/// Vertex ids are opaque strings; "id order" everywhere means the order of
/// the vertex list the graph was built from.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphJson", into = "GraphJson")]
pub struct Graph {
    ids: Vec<String>,
    index: HashMap<String, usize>,
    adj: Vec<Vec<usize>>,
    edges: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Star,
    Path,
    Cycle,
    Complete,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Star => "star",
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
        }
    }

    fn min_size(self) -> usize {
        match self {
            Family::Star => 1,
            Family::Path | Family::Complete => 2,
            Family::Cycle => 3,
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "star" => Ok(Family::Star),
            "path" => Ok(Family::Path),
            "cycle" => Ok(Family::Cycle),
            "complete" => Ok(Family::Complete),
            other => Err(Error::Parse(format!("unknown graph family {other:?}"))),
        }
    }
}

impl Graph {
    /// Validates and builds a graph from ids and id pairs.
    pub fn new<S: Into<String>>(
        ids: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = (S, S)>,
    ) -> Result<Graph> {
        let ids: Vec<String> = ids.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(ids.len());
        for (i, id) in ids.iter().enumerate() {
            if index.insert(id.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id {id:?}")));
            }
        }
        let mut pairs = Vec::new();
        for (u, v) in edges {
            let (u, v): (String, String) = (u.into(), v.into());
            let lookup = |id: &String| {
                index
                    .get(id)
                    .copied()
                    .ok_or_else(|| Error::InvalidGraph(format!("edge endpoint {id:?} is not a vertex")))
            };
            pairs.push((lookup(&u)?, lookup(&v)?));
        }
        Graph::from_indices(ids, index, pairs)
    }

    /// Builds a graph on vertices `v0 .. v{order-1}` from index pairs.
    pub fn from_edge_indices(order: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Graph> {
        let ids: Vec<String> = (0..order).map(|i| format!("v{i}")).collect();
        let index = ids.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let edges: Vec<_> = edges.into_iter().collect();
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= order || v >= order) {
            return Err(Error::InvalidGraph(format!("edge ({u}, {v}) out of range")));
        }
        Graph::from_indices(ids, index, edges)
    }

    fn from_indices(ids: Vec<String>, index: HashMap<String, usize>, pairs: Vec<(usize, usize)>) -> Result<Graph> {
        if ids.is_empty() {
            return Err(Error::InvalidGraph("graph has no vertices".into()));
        }
        let mut adj = vec![Vec::new(); ids.len()];
        let mut edges = Vec::with_capacity(pairs.len());
        for (u, v) in pairs {
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {:?}", ids[u])));
            }
            let e = (u.min(v), u.max(v));
            if adj[e.0].contains(&e.1) {
                return Err(Error::InvalidGraph(format!(
                    "parallel edge {:?}-{:?}",
                    ids[e.0], ids[e.1]
                )));
            }
            adj[e.0].push(e.1);
            adj[e.1].push(e.0);
            edges.push(e);
        }
        if let Some(i) = adj.iter().position(Vec::is_empty) {
            return Err(Error::InvalidGraph(format!("isolated vertex {:?}", ids[i])));
        }
        for a in &mut adj {
            a.sort_unstable();
        }
        edges.sort_unstable();
        Ok(Graph { ids, index, adj, edges })
    }

    /// A standard family member with deterministic ids `v0, v1, ...`.
    ///
    /// `star` of size `m` is `K_{1,m}` with centre `v0`; `path` and `cycle`
    /// of size `m` have `m` vertices; `complete` of size `m` is `K_m`.
    pub fn generate(kind: Family, size: usize) -> Result<Graph> {
        if size < kind.min_size() {
            return Err(Error::GraphSize { kind: kind.name(), size, min: kind.min_size() });
        }
        let (order, edges): (usize, Vec<(usize, usize)>) = match kind {
            Family::Star => (size + 1, (1..=size).map(|i| (0, i)).collect()),
            Family::Path => (size, (1..size).map(|i| (i - 1, i)).collect()),
            Family::Cycle => (size, (0..size).map(|i| (i, (i + 1) % size)).collect()),
            Family::Complete => (
                size,
                (0..size).flat_map(|i| (i + 1..size).map(move |j| (i, j))).collect(),
            ),
        };
        Graph::from_edge_indices(order, edges)
    }

    pub fn order(&self) -> usize {
        self.ids.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn ids(&self) -> &[String] {
        &self.ids
    }

    pub fn id(&self, v: usize) -> &str {
        &self.ids[v]
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_ids(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges.iter().map(|&(u, v)| (self.id(u), self.id(v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Indices of degree-1 vertices, in id order.
    pub fn pendant_indices(&self) -> Vec<usize> {
        (0..self.order()).filter(|&v| self.degree(v) == 1).collect()
    }

    pub fn pendant_vertices(&self) -> Vec<&str> {
        self.pendant_indices().into_iter().map(|v| self.id(v)).collect()
    }

    /// Number of pendant neighbours of `v`.
    pub fn pendant_neighbors(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&u| self.degree(u) == 1).count()
    }

    /// Two-colourability by breadth-first traversal.
    pub fn is_bipartite(&self) -> bool {
        let mut colour = vec![u8::MAX; self.order()];
        let mut queue = VecDeque::new();
        for s in 0..self.order() {
            if colour[s] != u8::MAX {
                continue;
            }
            colour[s] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if colour[w] == u8::MAX {
                        colour[w] = 1 - colour[u];
                        queue.push_back(w);
                    } else if colour[w] == colour[u] {
                        return false;
                    }
                }
            }
        }
        true
    }

    pub fn is_tree(&self) -> bool {
        self.size() + 1 == self.order() && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.order()];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.order()
    }

    /// Sorted degree sequence, largest first.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.ids.clone(),
            edges: self
                .edge_ids()
                .map(|(u, v)| [u.to_string(), v.to_string()])
                .collect(),
        }
    }
}

/// Brute-force isomorphism test with degree pruning; meant for small graphs.
pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.order() != h.order() || g.size() != h.size() || g.degree_sequence() != h.degree_sequence() {
        return false;
    }
    let n = g.order();
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn extend(g: &Graph, h: &Graph, v: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if v == g.order() {
            return true;
        }
        for w in 0..h.order() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            let consistent = (0..v).all(|u| g.has_edge(u, v) == h.has_edge(map[u], w));
            if consistent {
                map[v] = w;
                used[w] = true;
                if extend(g, h, v + 1, map, used) {
                    return true;
                }
                used[w] = false;
            }
        }
        false
    }
    extend(g, h, 0, &mut map, &mut used)
}

/// The shared graph JSON schema: `{"vertices": [...], "edges": [[u, v], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[String; 2]>,
}

impl From<Graph> for GraphJson {
    fn from(g: Graph) -> GraphJson {
        g.to_json()
    }
}

impl TryFrom<GraphJson> for Graph {
    type Error = Error;
    fn try_from(j: GraphJson) -> Result<Graph> {
        Graph::new(j.vertices, j.edges.into_iter().map(|[u, v]| (u, v)))
    }
}
