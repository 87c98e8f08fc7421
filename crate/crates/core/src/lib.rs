//! Exact QUBO toolkit: reductions into QUBO, an exhaustive decision oracle,
//! and oracle-driven solvers that count every query they make.
//!
//! ```
//! use num_bigint::BigInt;
//! use qubo_core::{solve_qubo, OracleHandle, QuboInstance};
//!
//! let q = QuboInstance::from_entries(3, [(1, 1, -1), (2, 2, -1), (3, 3, -1), (1, 3, 1)]).unwrap();
//! let mut oracle = OracleHandle::new(q.clone());
//! let report = solve_qubo(&q, &mut oracle).unwrap();
//! assert_eq!(report.min_value, BigInt::from(-2));
//! assert!(report.queries <= 3);
//! ```

pub mod error;
pub mod io;
pub mod oracle;
pub mod qubo;
pub mod reductions;
pub mod solvers;
pub mod workload;

pub use error::{Error, ParseDiagnostic, Result};
pub use oracle::{Engine, OracleHandle, OracleStats, MAX_FREE_VARIABLES};
pub use qubo::{Assignment, QuboBuilder, QuboInstance, Restriction, SubclassFlags};
pub use reductions::{
    interpret_ilp_result, normalize_rational, reduce_clique_to_squbo, reduce_ilp_to_qubo, reduce_knapsack_to_ilp,
    repair_to_clique, Graph, IlpInstance, IlpQuboMapping, KnapsackInstance, RationalQubo,
};
pub use solvers::{
    attach_argmin, decide_dqubo, extract_argmin, lqubo_query_budget, query_budget, solve_lqubo, solve_qubo,
    solve_uqubo, uqubo_query_budget, uqubo_split, uqubo_threshold, SolveReport, UquboSplit,
};
