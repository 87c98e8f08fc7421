//! Maximum clique to a `{-1, 0, 1}` QUBO.
//!
//! `SQ(x) = -sum_i x_i + sum_{(i, j) not an edge, i < j} x_i x_j`. Its minimum
//! is minus the size of the largest clique. A minimizer need not select a
//! clique itself, so [`repair_to_clique`] rewrites it into one of equal value.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::qubo::{Assignment, QuboBuilder, QuboInstance};

/// Undirected simple graph on vertices `1..=n_vertices`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n_vertices: usize,
    edges: BTreeSet<(usize, usize)>,
}

impl Graph {
    /// Builds a graph; edges are stored with the smaller endpoint first.
    pub fn new(n_vertices: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::EmptyInstance);
        }
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::Malformed(format!("self-loop on vertex {u}")));
            }
            if u == 0 || v == 0 || u > n_vertices || v > n_vertices {
                return Err(Error::IndexOutOfRange { i: u, j: v, n: n_vertices });
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::Malformed(format!("duplicate edge {u}-{v}")));
            }
        }
        Ok(Self {
            n_vertices,
            edges: set,
        })
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn edges(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    /// Whether the given vertices are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(p, &u)| vertices[p + 1..].iter().all(|&v| self.has_edge(u, v)))
    }
}

pub fn reduce_clique_to_squbo(graph: &Graph) -> QuboInstance {
    let n = graph.n_vertices();
    let mut b = QuboBuilder::new(n).expect("graph has at least one vertex");
    for i in 1..=n {
        b.insert(i, i, -1).expect("diagonal in range");
        for j in i + 1..=n {
            if !graph.has_edge(i, j) {
                b.insert(i, j, 1).expect("upper pair in range");
            }
        }
    }
    b.build()
}

/// Rewrites a minimizer of a clique QUBO into one whose 1-variables form a
/// clique.
///
/// One pass over `a = 1..n`: `z_a = 0` when
/// `sum_{i<a} q_ia z_i + sum_{j>a} q_aj x_j >= 1`, otherwise `z_a = x_a`.
/// When `optimal` really is a minimizer the value is unchanged; anything else
/// is reported as an inconsistency.
pub fn repair_to_clique(squbo: &QuboInstance, optimal: &Assignment) -> Result<Assignment> {
    let n = squbo.n();
    if optimal.len() != n {
        return Err(Error::Dimension {
            expected: n,
            actual: optimal.len(),
        });
    }
    let mut z = optimal.clone();
    for a in 1..=n {
        let before: BigInt = (1..a)
            .filter(|&i| z.get(i))
            .map(|i| squbo.coefficient(i, a))
            .sum();
        let after: BigInt = (a + 1..=n)
            .filter(|&j| optimal.get(j))
            .map(|j| squbo.coefficient(a, j))
            .sum();
        if before + after >= BigInt::one() {
            z.set(a, false);
        }
    }

    let penalty: BigInt = squbo
        .entries()
        .filter(|((i, j), _)| i != j && z.get(*i) && z.get(*j))
        .map(|(_, q)| q)
        .sum();
    if !penalty.is_zero() {
        return Err(Error::Inconsistency("repaired assignment is not a clique".into()));
    }
    let (was, now) = (squbo.evaluate(optimal)?, squbo.evaluate(&z)?);
    if was != now {
        return Err(Error::Inconsistency(format!(
            "assignment is not a minimizer: repair changed the value from {was} to {now}"
        )));
    }
    Ok(z)
}
