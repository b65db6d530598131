//! Integer additive set-graceful labelings (IASGL) of graphs.
//!
//! A labeling assigns each vertex a distinct non-empty subset of a finite
//! ground set `X ⊂ ℕ₀` with `0 ∈ X`; an edge `uv` receives the sumset
//! `f(u) + f(v)`. The labeling is graceful when the edge labels are exactly
//! the non-empty subsets of `X` other than `{0}`.

pub mod classify;
pub mod error;
pub mod graph;
pub mod harness;
pub mod ground;
pub mod io;
pub mod labeling;
pub mod realise;
pub mod search;
pub mod set;
pub mod trees;

pub use classify::{
    classify_ground_set, is_nontrivial_sumset, is_nontrivial_summand, nontrivial_sumset_decompositions,
    Classification, SummandMode,
};
pub use error::{Error, Result};
pub use graph::{is_isomorphic, Family, Graph, GraphJson};
pub use ground::{canonical_ground_sets, GroundSet, Mask};
pub use harness::{run_all, CheckStatus, HarnessConfig, TheoremReport};
pub use labeling::{
    highest_rung, induced_edge_label, structural_gate, verify_iasgl, verify_iasi, verify_iasl, GateReport,
    GateRule, Labeling, Rule, Rung, Verdict, Violation,
};
pub use realise::{assign_edge_labels, build_realisation, RealisationResult};
pub use search::{search_iasgl, sweep_ground_sets, PruneRules, SearchConfig, SearchOutcome, SearchStatus};
pub use set::{sumset, IntegerSet};
pub use trees::enumerate_free_trees;
