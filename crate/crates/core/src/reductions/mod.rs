//! Constructive reductions into QUBO.
//!
//! - [`ilp`]: 0-1 integer programs via binary slack variables and a penalty.
//! - [`clique`]: maximum clique into a `{-1, 0, 1}` instance, plus the repair
//!   pass that turns any minimizer into a clique.
//! - [`knapsack`]: knapsack into a single-row 0-1 integer program.
//! - [`rational`]: rational coefficients scaled to integers.

pub mod clique;
pub mod ilp;
pub mod knapsack;
pub mod rational;

pub use clique::{reduce_clique_to_squbo, repair_to_clique, Graph};
pub use ilp::{interpret_ilp_result, reduce_ilp_to_qubo, IlpInstance, IlpQuboMapping};
pub use knapsack::{reduce_knapsack_to_ilp, KnapsackInstance};
pub use rational::{normalize_rational, RationalQubo};
