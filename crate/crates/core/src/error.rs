use thiserror::Error;

use crate::set::IntegerSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty set-label")]
    EmptySet,
    #[error("sumset overflows u64")]
    Overflow,
    #[error("ground set too large: {n} elements exceeds the cap of {cap}")]
    GroundSetTooLarge { n: usize, cap: usize },
    #[error("ground set must contain at least {min} elements, got {n}")]
    GroundSetTooSmall { n: usize, min: usize },
    #[error("graceful ground set must contain 0")]
    MissingZero,
    #[error("{set} is not a subset of ground set {ground}")]
    NotSubset { set: IntegerSet, ground: IntegerSet },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("{kind} requires size >= {min}, got {size}")]
    GraphSize { kind: &'static str, size: usize, min: usize },
    #[error("free-tree enumeration supports 2 <= m <= {cap}, got {m}")]
    TreeOrder { m: usize, cap: usize },
    #[error("invalid labeling: {0}")]
    InvalidLabeling(String),
    #[error("vertex {0} has no label")]
    Unassigned(String),
    #[error("labeling does not cover the graph: {0}")]
    Coverage(String),
    #[error("no canonical ground sets with n = {n} and max element <= {max_element}")]
    EmptySweep { n: usize, max_element: u64 },
    #[error("realisation infeasible under mode: unassignable targets {}", fmt_sets(.unassignable))]
    Infeasible { unassignable: Vec<IntegerSet> },
    #[error("parse error: {0}")]
    Parse(String),
}

fn fmt_sets(sets: &[IntegerSet]) -> String {
    let parts: Vec<String> = sets.iter().map(|s| s.to_string()).collect();
    format!("[{}]", parts.join(", "))
}

pub type Result<T> = std::result::Result<T, Error>;
