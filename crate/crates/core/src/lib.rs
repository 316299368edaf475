//! MinHOM for locally semicomplete and quasi-transitive targets: class
//! recognition, polynomial / NP-hard classification with certificates,
//! Min-Max orderings, exact solvers and hardness reductions.

// adjacency-matrix style loops read better with explicit indices
#![allow(clippy::needless_range_loop)]

pub mod classify;
pub mod digraph;
pub mod enumerate;
pub mod error;
pub mod flow;
pub mod io;
pub mod iso;
pub mod minmax;
pub mod pib;
pub mod recognize;
pub mod reductions;
pub mod solver;
pub mod suites;
pub mod ugraph;
