//! Unimodularity of graph incidence matrices, decided structurally.
//!
//! The incidence matrix of a graph is unimodular exactly when any two odd
//! cycles of the graph intersect. This crate decides that property in
//! polynomial time with machine-checkable certificates, enumerates the
//! circuits and Graver basis of the graph's toric ideal combinatorially,
//! cross-checks everything against exact brute-force linear algebra, and
//! constructs certified-unimodular graphs by ear addition.
//!
//! Start with [`soc::decide_unimodular`] for the decision,
//! [`toric::enumerate_circuits`] / [`toric::enumerate_graver`] for the
//! bases, and [`construct::random_unimodular`] for generation. The
//! `examples/` directory walks through each capability.

pub mod binomial;
pub mod cli;
pub mod construct;
pub mod decompose;
pub mod graph;
pub mod io;
pub mod linalg;
pub mod smallgraphs;
pub mod soc;
pub mod toric;

pub use binomial::{walk_binomial, Binomial};
pub use graph::{Graph, GraphError, IncidenceMatrix, Walk, WalkError};
pub use soc::{decide_unimodular, Certificate, Verdict};
