//! Minimum-depth decision trees over finite binary information systems.
//!
//! A problem `z = (f_1, ..., f_n)` asks for the values of `n` attributes on an
//! unknown element. Trees may query single attributes, arbitrary hypotheses
//! (full assignments answered by confirmation or a one-coordinate
//! counterexample), or proper hypotheses (assignments realized by some
//! element). [`QueryModel`] fixes which of these are allowed.

pub mod classify;
pub mod cli;
pub mod error;
pub mod solver;
pub mod strategies;
pub mod table;
pub mod trees;

pub use error::{Error, Result};
pub use solver::{min_depth, oracle_min_depth, DepthResult};
pub use table::{EquationSystem, InformationSystem, Problem, Tuple, TupleSet};
pub use trees::{verify_solves, DecisionTree, QueryModel};
