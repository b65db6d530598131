//! Free (unrooted, unlabelled) trees by order.
//!
//! Trees of order `m` are grown from trees of order `m - 1` by attaching a
//! leaf at every vertex, and deduplicated by a canonical encoding: the
//! parenthesis string of the tree rooted at its centre (the smaller of the
//! two strings for a bicentral tree).

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const TREE_ORDER_CAP: usize = 10;

type Adjacency = Vec<Vec<usize>>;

/// One representative per isomorphism class of trees on `m` vertices.
pub fn enumerate_free_trees(m: usize) -> Result<Vec<Graph>> {
    enumerate_free_trees_capped(m, TREE_ORDER_CAP)
}

/// Like [`enumerate_free_trees`] with an explicit order cap.
pub fn enumerate_free_trees_capped(m: usize, cap: usize) -> Result<Vec<Graph>> {
    if m < 2 || m > cap {
        return Err(Error::TreeOrder { m, cap });
    }
    let mut level: BTreeMap<String, Adjacency> = BTreeMap::new();
    let edge: Adjacency = vec![vec![1], vec![0]];
    level.insert(canonical_code(&edge), edge);
    for _ in 2..m {
        let mut next = BTreeMap::new();
        for tree in level.values() {
            for v in 0..tree.len() {
                let mut grown = tree.clone();
                let leaf = grown.len();
                grown.push(vec![v]);
                grown[v].push(leaf);
                next.entry(canonical_code(&grown)).or_insert(grown);
            }
        }
        level = next;
    }
    level.into_iter().map(|(code, _)| tree_from_code(&code)).collect()
}

fn centres(adj: &Adjacency) -> Vec<usize> {
    let n = adj.len();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in &adj[leaf] {
                if degree[w] == 0 {
                    continue;
                }
                degree[w] -= 1;
                if degree[w] == 1 {
                    next.push(w);
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

fn rooted_code(adj: &Adjacency, v: usize, parent: usize) -> String {
    let mut children: Vec<String> = adj[v]
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_code(adj, w, v))
        .collect();
    children.sort_unstable();
    let mut s = String::with_capacity(2 + children.iter().map(String::len).sum::<usize>());
    s.push('(');
    children.iter().for_each(|c| s.push_str(c));
    s.push(')');
    s
}

fn canonical_code(adj: &Adjacency) -> String {
    centres(adj)
        .into_iter()
        .map(|c| rooted_code(adj, c, usize::MAX))
        .min()
        .expect("a tree has a centre")
}

/// Decodes a parenthesis string into a graph, numbering vertices in
/// preorder so the root (a centre) is `v0`.
fn tree_from_code(code: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    let mut stack: Vec<usize> = Vec::new();
    let mut next = 0;
    for ch in code.chars() {
        match ch {
            '(' => {
                if let Some(&parent) = stack.last() {
                    edges.push((parent, next));
                }
                stack.push(next);
                next += 1;
            }
            _ => {
                stack.pop();
            }
        }
    }
    Graph::from_edge_indices(next, edges)
}
