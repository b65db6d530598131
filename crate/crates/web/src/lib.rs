//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes plain strings and returns a JSON string; failures come
//! back as `{"error": "..."}` so the page needs no exception handling.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use iasgl::io::{parse_set_literal, GraphSpec};
use iasgl::search::{search_iasgl, SearchConfig, SearchStatus};
use iasgl::{build_realisation, Graph, GroundSet, Labeling, SummandMode};

/// Searches in the browser stop here; there is no wall clock on wasm32.
const WEB_NODE_BUDGET: u64 = 2_000_000;

#[derive(Serialize)]
struct Drawn {
    vertices: Vec<DrawnVertex>,
    edges: Vec<DrawnEdge>,
}

#[derive(Serialize)]
struct DrawnVertex {
    id: String,
    label: Option<String>,
    x: f64,
    y: f64,
}

#[derive(Serialize)]
struct DrawnEdge {
    u: String,
    v: String,
    label: Option<String>,
}

/// Unit-square coordinates: the `{0}` vertex (or the highest-degree one) at
/// the centre, its neighbours on an inner ring, everything else outside.
fn layout(g: &Graph, f: Option<&Labeling>) -> BTreeMap<String, (f64, f64)> {
    let hub = f
        .and_then(|f| f.zero_vertex())
        .and_then(|id| g.index_of(id))
        .unwrap_or_else(|| (0..g.order()).max_by_key(|&v| (g.degree(v), usize::MAX - v)).unwrap_or(0));
    let inner: Vec<usize> = g.neighbors(hub).to_vec();
    let outer: Vec<usize> = (0..g.order()).filter(|&v| v != hub && !inner.contains(&v)).collect();
    let mut pos = BTreeMap::new();
    pos.insert(g.id(hub).to_string(), (0.5, 0.5));
    let ring = |vs: &[usize], r: f64, phase: f64, pos: &mut BTreeMap<String, (f64, f64)>| {
        for (i, &v) in vs.iter().enumerate() {
            let t = phase + std::f64::consts::TAU * i as f64 / vs.len() as f64;
            pos.insert(g.id(v).to_string(), (0.5 + r * t.cos(), 0.5 + r * t.sin()));
        }
    };
    let (r_in, r_out) = if outer.is_empty() { (0.42, 0.0) } else { (0.26, 0.44) };
    ring(&inner, r_in, -std::f64::consts::FRAC_PI_2, &mut pos);
    ring(&outer, r_out, -std::f64::consts::FRAC_PI_2 + 0.3, &mut pos);
    pos
}

fn draw(g: &Graph, f: Option<&Labeling>) -> Drawn {
    let pos = layout(g, f);
    let label_of = |id: &str| f.and_then(|f| f.label(id)).map(|l| l.to_string());
    Drawn {
        vertices: g
            .ids()
            .iter()
            .map(|id| DrawnVertex { id: id.clone(), label: label_of(id), x: pos[id].0, y: pos[id].1 })
            .collect(),
        edges: g
            .edge_ids()
            .map(|(u, v)| DrawnEdge {
                u: u.into(),
                v: v.into(),
                label: f
                    .and_then(|f| Some((f.label(u)?, f.label(v)?)))
                    .and_then(|(a, b)| a.sumset(b).ok())
                    .map(|s| s.to_string()),
            })
            .collect(),
    }
}

fn ground(text: &str) -> Result<GroundSet, String> {
    let lit = parse_set_literal(text).map_err(|e| e.to_string())?;
    let x = GroundSet::new(lit.set).map_err(|e| e.to_string())?;
    x.require_zero().map_err(|e| e.to_string())?;
    Ok(x)
}

fn mode(allow_equal: bool) -> SummandMode {
    if allow_equal {
        SummandMode::AllowEqual
    } else {
        SummandMode::DistinctLabels
    }
}

fn respond(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

pub fn classify_json(ground_set: &str, allow_equal: bool) -> Result<Value, String> {
    let x = ground(ground_set)?;
    let c = x.classification(mode(allow_equal)).map_err(|e| e.to_string())?;
    let show = |v: &[iasgl::IntegerSet]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    Ok(json!({
        "ground_set": x.base().to_string(),
        "non_sumsets": show(&c.non_sumsets),
        "non_summands": show(&c.non_summands),
        "neither": show(&c.neither),
    }))
}

pub fn construct_json(ground_set: &str, prefer_nonbipartite: bool) -> Result<Value, String> {
    let x = ground(ground_set)?;
    if x.n() > 6 {
        return Err("the demo builds realisations for |X| <= 6".into());
    }
    let r = build_realisation(&x, prefer_nonbipartite, SummandMode::DistinctLabels).map_err(|e| e.to_string())?;
    Ok(json!({
        "ground_set": x.base().to_string(),
        "vertices": r.graph.order(),
        "edges": r.graph.size(),
        "pendants": r.graph.pendant_indices().len(),
        "non_bipartite": r.non_bipartite,
        "notes": r.notes,
        "drawing": draw(&r.graph, Some(&r.labeling)),
    }))
}

pub fn search_json(graph_spec: &str, ground_set: &str) -> Result<Value, String> {
    let spec: GraphSpec = graph_spec.parse().map_err(|e: iasgl::Error| e.to_string())?;
    if matches!(spec, GraphSpec::File(_)) {
        return Err("file graphs are not available in the browser".into());
    }
    let g = spec.load().map_err(|e| e.to_string())?;
    if g.order() > 64 {
        return Err("the demo searches graphs with at most 64 vertices".into());
    }
    let x = ground(ground_set)?;
    let cfg = SearchConfig {
        node_budget: WEB_NODE_BUDGET,
        time_budget_ms: None,
        parallel: false,
        ..SearchConfig::default()
    };
    let o = search_iasgl(&g, &x, &cfg).map_err(|e| e.to_string())?;
    let witness = o.witnesses.first();
    Ok(json!({
        "status": o.status,
        "found": o.status == SearchStatus::Found,
        "nodes": o.stats.nodes,
        "gate": o.gate,
        "drawing": draw(&g, witness),
    }))
}

/// Classification of the subsets of `ground_set`.
#[wasm_bindgen]
pub fn classify(ground_set: &str, allow_equal: bool) -> String {
    respond(classify_json(ground_set, allow_equal))
}

/// A verified graceful graph-realisation with drawing coordinates.
#[wasm_bindgen]
pub fn construct(ground_set: &str, prefer_nonbipartite: bool) -> String {
    respond(construct_json(ground_set, prefer_nonbipartite))
}

/// Existence search on a generated graph (`star:6`, `cycle:5`, ...).
#[wasm_bindgen]
pub fn search(graph_spec: &str, ground_set: &str) -> String {
    respond(search_json(graph_spec, ground_set))
}
