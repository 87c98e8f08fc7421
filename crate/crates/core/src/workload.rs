//! Seeded instance families for measuring oracle query growth.
//!
//! `squbo-random` draws Erdős–Rényi graphs at a fixed edge density and solves
//! their clique QUBO; its search interval has width `n`, so the query count
//! grows like `log n`. `single-bigcoeff` solves the one-variable instance
//! `q_11 = -2^b`, whose interval has width `2^b`, so queries grow like `b`.

use std::fmt::{self, Write as _};
use std::ops::RangeInclusive;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::oracle::{OracleHandle, MAX_FREE_VARIABLES};
use crate::qubo::QuboInstance;
use crate::reductions::{reduce_clique_to_squbo, Graph};
use crate::solvers::solve_qubo;

/// Recorded in CSV headers so runs can be replicated elsewhere.
pub const GENERATOR_ID: &str = "chacha8";

pub const EDGE_DENSITY: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    SquboRandom,
    SingleBigcoeff,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::SquboRandom => "squbo-random",
            Family::SingleBigcoeff => "single-bigcoeff",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "squbo-random" => Ok(Family::SquboRandom),
            "single-bigcoeff" => Ok(Family::SingleBigcoeff),
            other => Err(Error::Parameter(format!("unknown bench family `{other}`"))),
        }
    }
}

/// Parses `A..B` (inclusive on both ends).
pub fn parse_size_range(text: &str) -> Result<RangeInclusive<usize>> {
    let bad = || Error::Parameter(format!("size range must look like A..B, got `{text}`"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    Ok(a..=b)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    pub family: Family,
    /// Vertex counts for `squbo-random`, exponents `b` for `single-bigcoeff`.
    pub sizes: RangeInclusive<usize>,
    pub trials: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub family: Family,
    pub size: usize,
    pub trial: usize,
    pub queries: u64,
    pub min_value: BigInt,
}

pub fn random_graph(n: usize, density: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 1..=n {
        for v in u + 1..=n {
            if rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).expect("generated edges are simple")
}

pub fn single_bigcoeff(bits: usize) -> QuboInstance {
    QuboInstance::from_entries(1, [(1, 1, -(BigInt::one() << bits))]).expect("one diagonal entry")
}

pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>> {
    if config.family == Family::SquboRandom && *config.sizes.end() > MAX_FREE_VARIABLES {
        return Err(Error::Capacity {
            free: *config.sizes.end(),
            limit: MAX_FREE_VARIABLES,
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut rows = Vec::new();
    for size in config.sizes.clone() {
        for trial in 0..config.trials {
            let instance = match config.family {
                Family::SquboRandom => reduce_clique_to_squbo(&random_graph(size, EDGE_DENSITY, &mut rng)),
                Family::SingleBigcoeff => single_bigcoeff(size),
            };
            let mut handle = OracleHandle::new(instance.clone());
            let report = solve_qubo(&instance, &mut handle)?;
            rows.push(BenchRow {
                family: config.family,
                size,
                trial,
                queries: report.queries,
                min_value: report.min_value,
            });
        }
    }
    Ok(rows)
}

pub fn write_csv(config: &BenchConfig, rows: &[BenchRow]) -> String {
    let mut out = format!(
        "# generator={GENERATOR_ID} seed={} family={} density={EDGE_DENSITY}\n",
        config.seed, config.family
    );
    out.push_str("family,n_or_bits,trial,queries,min_value\n");
    for r in rows {
        writeln!(out, "{},{},{},{},{}", r.family, r.size, r.trial, r.queries, r.min_value).unwrap();
    }
    out
}
