use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::ParseDiagnostic;
use crate::reductions::IlpQuboMapping;

/// What a reduced instance needs to be read back, written next to it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "snake_case", deny_unknown_fields)]
pub enum ReductionSidecar {
    Ilp {
        x_vars: Vec<usize>,
        slack_layout: Vec<Vec<usize>>,
        h: String,
        k: usize,
        /// Folded constant; the ILP optimum is `-(qubo minimum + constant)`.
        constant: String,
    },
    Graph {
        n_vertices: usize,
    },
    Knapsack {
        /// Row bound `K - 1` of the produced integer program.
        bound: String,
    },
    Rqubo {
        /// The rational minimum is the integer minimum divided by this.
        scale: String,
    },
}

impl ReductionSidecar {
    pub fn for_ilp(mapping: &IlpQuboMapping) -> Self {
        ReductionSidecar::Ilp {
            x_vars: mapping.x_vars.clone(),
            slack_layout: mapping.slack_layout.clone(),
            h: mapping.h.to_string(),
            k: mapping.k,
            constant: mapping.constant.to_string(),
        }
    }

    pub fn for_rational(scale: &BigInt) -> Self {
        ReductionSidecar::Rqubo {
            scale: scale.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string(self).expect("sidecar serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Self, ParseDiagnostic> {
        serde_json::from_str(text).map_err(|e| ParseDiagnostic::new(e.line().max(1), e.column().max(1), e.to_string()))
    }
}
