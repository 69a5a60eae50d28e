//! Identifying codes in graphs.
//!
//! An identifying code of a graph is a vertex subset that is dominating
//! and gives every vertex a distinct, nonempty trace inside the set.
//! This crate provides:
//!
//! - graph and multigraph types with closed-neighbourhood algebra,
//!   girth and short-cycle counting, twin detection ([`graph`]);
//! - verifiers, forced-vertex computation, the closed-neighbourhood
//!   inclusion digraph, and greedy repair ([`identify`]);
//! - closed-form lower/upper bound calculators ([`bounds`]);
//! - randomized constructors: a local-lemma resampler, a girth-5
//!   alteration construction, and a short-cycle repair pipeline for
//!   random regular graphs ([`randomized`]);
//! - generators for extremal families with known optimal codes
//!   ([`extremal`]);
//! - configuration-model sampling of random regular graphs and their
//!   short-cycle statistics ([`config_model`]);
//! - exact and heuristic minimum-code solvers via a hitting-set
//!   reformulation ([`solver`]);
//! - exhaustive small-graph enumeration up to isomorphism ([`corpus`]).

pub mod bounds;
pub mod config_model;
pub mod corpus;
pub mod error;
pub mod extremal;
pub mod generators;
pub mod graph;
pub mod identify;
pub mod randomized;
pub mod solver;
pub mod vertex_set;

pub use error::{Error, Result};
pub use graph::{Graph, MultiGraph};
pub use vertex_set::VertexSet;
