//! Transition digraphs of word classes, the Eulerian audit and circuit
//! extraction.

mod audit;
mod circuit;
mod digraph;
mod dot;

pub use audit::{
    degree_audit, eulerian_check, weak_components, ComponentCensus, Components, DegreeViolation,
    ExistenceReport, Reason, CENSUS_EDGE_LIMIT,
};
pub use circuit::{
    emit_cycle, generate, hierholzer, least_rotation, Circuit, Generation, UCycle, EDGE_RULE,
};
pub use digraph::{build_digraph, Edge, TransitionDigraph};
pub use dot::to_dot;
