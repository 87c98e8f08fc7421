//! 0-1 integer programming to QUBO.
//!
//! `max c^T x  s.t.  A x <= b,  x in {0,1}^n` becomes the minimization of
//!
//! ```text
//! QB(x, y) = -sum_j c_j x_j + h * sum_i (sum_j a_ij x_j + y_i - b_i)^2
//! ```
//!
//! where each slack `y_i = sum_l 2^(l-1) y_il` is a `k`-bit binary number.
//! The penalty `h` exceeds the whole objective range, so every minimizer
//! satisfies all rows with equality and `max c^T x = -min QB`.
//!
//! A QUBO carries no constant term, so the `h * sum_i b_i^2` produced by the
//! expansion is kept on the mapping and added back by
//! [`interpret_ilp_result`].

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qubo::{Assignment, QuboBuilder, QuboInstance};
use crate::solvers::SolveReport;

/// `max c^T x` subject to `A x <= b` over binary `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpInstance {
    a: Vec<Vec<BigInt>>,
    b: Vec<BigInt>,
    c: Vec<BigInt>,
}

impl IlpInstance {
    pub fn new(a: Vec<Vec<BigInt>>, b: Vec<BigInt>, c: Vec<BigInt>) -> Result<Self> {
        let m = a.len();
        let n = c.len();
        if m == 0 || n == 0 {
            return Err(Error::Malformed("ILP needs at least one row and one column".into()));
        }
        if b.len() != m {
            return Err(Error::Dimension {
                expected: m,
                actual: b.len(),
            });
        }
        if let Some(row) = a.iter().find(|row| row.len() != n) {
            return Err(Error::Dimension {
                expected: n,
                actual: row.len(),
            });
        }
        Ok(Self { a, b, c })
    }

    /// Convenience constructor from machine integers.
    pub fn from_i64(a: &[&[i64]], b: &[i64], c: &[i64]) -> Result<Self> {
        let big = |v: &[i64]| v.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        Self::new(a.iter().map(|row| big(row)).collect(), big(b), big(c))
    }

    /// Row count.
    pub fn m(&self) -> usize {
        self.a.len()
    }

    /// Column count.
    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn a(&self) -> &[Vec<BigInt>] {
        &self.a
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    pub fn c(&self) -> &[BigInt] {
        &self.c
    }

    /// `sum_j a_ij x_j` for every row.
    pub fn row_activity(&self, x: &[bool]) -> Vec<BigInt> {
        self.a
            .iter()
            .map(|row| row.iter().zip(x).filter(|(_, &on)| on).map(|(a, _)| a).sum())
            .collect()
    }

    pub fn is_feasible(&self, x: &[bool]) -> bool {
        self.row_activity(x).iter().zip(&self.b).all(|(lhs, b)| lhs <= b)
    }

    pub fn objective(&self, x: &[bool]) -> BigInt {
        self.c.iter().zip(x).filter(|(_, &on)| on).map(|(c, _)| c).sum()
    }
}

/// The constructed QUBO together with what is needed to read results back.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IlpQuboMapping {
    pub qubo: QuboInstance,
    /// QUBO indices of the ILP variables, `1..=n`.
    pub x_vars: Vec<usize>,
    /// QUBO indices of `y_i1 .. y_ik` for each row, least significant first.
    pub slack_layout: Vec<Vec<usize>>,
    pub h: BigInt,
    pub k: usize,
    /// `h * sum_i b_i^2`, the constant dropped from the quadratic form.
    pub constant: BigInt,
    /// Always set: the ILP optimum is the negated QUBO minimum.
    pub negate_output: bool,
    source: IlpInstance,
}

impl IlpQuboMapping {
    pub fn source(&self) -> &IlpInstance {
        &self.source
    }

    /// The ILP part of a QUBO assignment.
    pub fn decode_x(&self, assignment: &Assignment) -> Vec<bool> {
        self.x_vars.iter().map(|&v| assignment.get(v)).collect()
    }

    /// Integer value of the slack for each row.
    pub fn slack_values(&self, assignment: &Assignment) -> Vec<BigInt> {
        self.slack_layout
            .iter()
            .map(|bits| {
                bits.iter()
                    .enumerate()
                    .filter(|(_, &v)| assignment.get(v))
                    .map(|(l, _)| BigInt::one() << l)
                    .sum()
            })
            .collect()
    }

    /// `sum_i (sum_j a_ij x_j + y_i - b_i)^2`, zero iff every row holds with
    /// equality under the encoded slack.
    pub fn constraint_penalty(&self, assignment: &Assignment) -> BigInt {
        let x = self.decode_x(assignment);
        let activity = self.source.row_activity(&x);
        let slack = self.slack_values(assignment);
        activity
            .iter()
            .zip(&slack)
            .zip(&self.source.b)
            .map(|((lhs, y), b)| {
                let r = lhs + y - b;
                &r * &r
            })
            .sum()
    }

    /// `QB(x, y)` including the folded constant.
    pub fn penalized_value(&self, assignment: &Assignment) -> Result<BigInt> {
        Ok(self.qubo.evaluate(assignment)? + &self.constant)
    }
}

/// `floor(log2(max(1, max_i b_i - n * min(0, min_ij a_ij)))) + 1`.
fn slack_width(ilp: &IlpInstance) -> usize {
    let n = BigInt::from(ilp.n());
    let max_b = ilp.b.iter().max().cloned().unwrap_or_default();
    let min_a = ilp
        .a
        .iter()
        .flatten()
        .min()
        .cloned()
        .unwrap_or_default()
        .min(BigInt::zero());
    let span = (max_b - n * min_a).max(BigInt::one());
    span.bits() as usize
}

pub fn reduce_ilp_to_qubo(ilp: &IlpInstance) -> Result<IlpQuboMapping> {
    if let Some((i, b)) = ilp.b.iter().enumerate().find(|(_, b)| b.is_negative()) {
        return Err(Error::Unsupported(format!(
            "row {} has negative bound {b}; x = 0 must be feasible",
            i + 1
        )));
    }
    let (m, n) = (ilp.m(), ilp.n());
    let k = slack_width(ilp);
    let max_c = ilp.c.iter().max().cloned().unwrap_or_default().max(BigInt::zero());
    let h = BigInt::from(n) * max_c + 1;

    let x_vars: Vec<usize> = (1..=n).collect();
    let slack_layout: Vec<Vec<usize>> = (0..m)
        .map(|i| (1..=k).map(|l| n + i * k + l).collect())
        .collect();

    let mut qb = QuboBuilder::new(n + m * k)?;
    for (j, c) in ilp.c.iter().enumerate() {
        qb.add(j + 1, j + 1, -c)?;
    }

    let mut constant = BigInt::zero();
    for (i, (row, b)) in ilp.a.iter().zip(&ilp.b).enumerate() {
        // Linear form of row i: (variable, weight) pairs, then the constant -b.
        let terms: Vec<(usize, BigInt)> = row
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(j, a)| (j + 1, a.clone()))
            .chain(
                slack_layout[i]
                    .iter()
                    .enumerate()
                    .map(|(l, &v)| (v, BigInt::one() << l)),
            )
            .collect();
        for (p, (vp, wp)) in terms.iter().enumerate() {
            // x^2 = x for binary x, so squares land on the diagonal.
            qb.add(*vp, *vp, &h * (wp * wp - BigInt::from(2) * b * wp))?;
            for (vq, wq) in &terms[p + 1..] {
                qb.add_symmetric(*vp, *vq, BigInt::from(2) * &h * wp * wq)?;
            }
        }
        constant += &h * b * b;
    }

    Ok(IlpQuboMapping {
        qubo: qb.build(),
        x_vars,
        slack_layout,
        h,
        k,
        constant,
        negate_output: true,
        source: ilp.clone(),
    })
}

/// Reads the ILP optimum from a solve report on `mapping.qubo`.
pub fn interpret_ilp_result(mapping: &IlpQuboMapping, report: &SolveReport) -> BigInt {
    -(&report.min_value + &mapping.constant)
}
