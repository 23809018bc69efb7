//! Exact solvers and constructive upper bounds for global defensive
//! k-alliances on graph products.
//!
//! A set of vertices is a defensive k-alliance when every member has at
//! least `k` more neighbors inside the set than outside; it is global
//! when it also dominates the graph. This crate builds five graph
//! products (generalized hierarchical, cartesian, lexicographic, corona,
//! edge corona), computes the associated alliance numbers exactly at desk
//! scale, and evaluates product upper bounds together with explicit,
//! validated witness sets.

#![forbid(unsafe_code)]

pub mod alliance;
pub mod bounds;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod products;

pub use alliance::{
    dka_number, dka_number_par, domination_number, domination_number_par, find_1_perfect_code,
    gdka_number, gdka_number_par, is_defensive_k_alliance, is_dominating, is_gdka,
    visit_minimum_gdkas, AllianceError, SolveResult, SOLVER_LIMIT,
};
pub use bounds::{
    cartesian_min_bound, corona_bound, corona_equality, edge_corona_bound, hierarchical_bound,
    lex_pcode_bound, lex_shift_bound, verify_bound, BoundError, BoundOutcome, BoundReport,
    BoundTerm, TheoremId, Verdict, DEFAULT_EXACT_CAP,
};
pub use generators::{generate, Family, Generated, GenerateError};
pub use graph::{AllianceValue, Graph, GraphError, GraphJson, VertexSet};
pub use graph6::{emit_graph6, parse_graph6, Graph6Error};
pub use iso::are_isomorphic;
pub use products::{
    cartesian, corona, edge_corona, hierarchical, lexicographic, lift, Label, LiftError, LiftSpec,
    ProductError, ProductGraph, ProductKind,
};
