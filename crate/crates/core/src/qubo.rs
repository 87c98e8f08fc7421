//! QUBO instances, assignments and restrictions.
//!
//! An instance is an upper-triangular integer matrix `Q` over `n` binary
//! variables; its value on an assignment `x` is `sum_{i <= j} q_ij x_i x_j`.
//! Indices are 1-based at every public boundary. Coefficients are
//! arbitrary-precision integers, so no evaluation can overflow.

use std::collections::btree_map::{self, BTreeMap};
use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Sparse upper-triangular QUBO coefficient matrix.
///
/// Zero coefficients are never stored; an absent pair means `q_ij = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuboInstance {
    n: usize,
    entries: BTreeMap<(usize, usize), BigInt>,
}

impl QuboInstance {
    /// The all-zero instance on `n` variables.
    pub fn zero(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::EmptyInstance);
        }
        Ok(Self {
            n,
            entries: BTreeMap::new(),
        })
    }

    /// Builds an instance from `(i, j, q_ij)` triples, rejecting duplicates.
    pub fn from_entries<I, V>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, V)>,
        V: Into<BigInt>,
    {
        let mut builder = QuboBuilder::new(n)?;
        for (i, j, q) in entries {
            builder.insert(i, j, q)?;
        }
        Ok(builder.build())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Coefficient `q_ij`, zero when absent or when `(i, j)` is not a stored pair.
    pub fn coefficient(&self, i: usize, j: usize) -> BigInt {
        self.entries.get(&(i, j)).cloned().unwrap_or_default()
    }

    /// Non-zero entries in row-major order.
    pub fn entries(&self) -> btree_map::Iter<'_, (usize, usize), BigInt> {
        self.entries.iter()
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn evaluate(&self, assignment: &Assignment) -> Result<BigInt> {
        if assignment.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: assignment.len(),
            });
        }
        Ok(self
            .entries
            .iter()
            .filter(|((i, j), _)| assignment.get(*i) && assignment.get(*j))
            .map(|(_, q)| q)
            .sum())
    }

    /// Sum of all non-positive coefficients. The minimum lies in `[lower_bound, 0]`.
    pub fn lower_bound(&self) -> BigInt {
        self.entries.values().filter(|q| !q.is_positive()).sum()
    }

    /// Sum of all non-negative coefficients; no assignment evaluates above it.
    pub fn upper_bound(&self) -> BigInt {
        self.entries.values().filter(|q| !q.is_negative()).sum()
    }

    /// Largest coefficient magnitude, zero for the empty matrix.
    pub fn max_abs(&self) -> BigInt {
        self.entries
            .values()
            .map(|q| q.abs())
            .max()
            .unwrap_or_default()
    }

    /// Reports LQUBO / UQUBO / SQUBO eligibility.
    ///
    /// `ell` must be negative and `u` positive when given.
    pub fn classify(&self, ell: Option<&BigInt>, u: Option<&BigInt>) -> Result<SubclassFlags> {
        if let Some(ell) = ell {
            if !ell.is_negative() {
                return Err(Error::Parameter(format!("lower bound must be < 0, got {ell}")));
            }
        }
        if let Some(u) = u {
            if !u.is_positive() {
                return Err(Error::Parameter(format!("upper bound must be > 0, got {u}")));
            }
        }
        let one = BigInt::from(1);
        Ok(SubclassFlags {
            lqubo: ell.map(|ell| self.entries.values().all(|q| q > ell)),
            uqubo: u.map(|u| self.entries.values().all(|q| q < u)),
            squbo: self.entries.values().all(|q| q.abs() <= one),
        })
    }

    /// Entrywise sum of two instances on the same variable count.
    pub fn checked_add(&self, other: &QuboInstance) -> Result<QuboInstance> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                actual: other.n,
            });
        }
        let mut builder = QuboBuilder::from(self.clone());
        for (&(i, j), q) in other.entries() {
            builder.add(i, j, q.clone())?;
        }
        Ok(builder.build())
    }
}

impl fmt::Display for QuboInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QUBO(n={}, nnz={})", self.n, self.entries.len())
    }
}

/// Incremental constructor for [`QuboInstance`].
#[derive(Debug, Clone)]
pub struct QuboBuilder {
    inner: QuboInstance,
}

impl QuboBuilder {
    pub fn new(n: usize) -> Result<Self> {
        Ok(Self {
            inner: QuboInstance::zero(n)?,
        })
    }

    fn check(&self, i: usize, j: usize) -> Result<()> {
        let n = self.inner.n;
        if i == 0 || j == 0 || i > n || j > n {
            return Err(Error::IndexOutOfRange { i, j, n });
        }
        if i > j {
            return Err(Error::LowerTriangle { i, j });
        }
        Ok(())
    }

    /// Sets `q_ij`; fails if the pair was already inserted.
    pub fn insert(&mut self, i: usize, j: usize, q: impl Into<BigInt>) -> Result<&mut Self> {
        self.check(i, j)?;
        if self.inner.entries.contains_key(&(i, j)) {
            return Err(Error::DuplicateEntry { i, j });
        }
        let q = q.into();
        if !q.is_zero() {
            self.inner.entries.insert((i, j), q);
        }
        Ok(self)
    }

    /// Adds `delta` to `q_ij`.
    pub fn add(&mut self, i: usize, j: usize, delta: impl Into<BigInt>) -> Result<&mut Self> {
        self.check(i, j)?;
        let delta = delta.into();
        if delta.is_zero() {
            return Ok(self);
        }
        match self.inner.entries.entry((i, j)) {
            btree_map::Entry::Vacant(slot) => {
                slot.insert(delta);
            }
            btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += delta;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
        Ok(self)
    }

    /// Adds `delta` to the coefficient of `x_a x_b` for any order of `a`, `b`.
    pub fn add_symmetric(&mut self, a: usize, b: usize, delta: impl Into<BigInt>) -> Result<&mut Self> {
        let (i, j) = if a <= b { (a, b) } else { (b, a) };
        self.add(i, j, delta)
    }

    pub fn build(self) -> QuboInstance {
        self.inner
    }
}

impl From<QuboInstance> for QuboBuilder {
    fn from(inner: QuboInstance) -> Self {
        Self { inner }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubclassFlags {
    /// Every coefficient is `> ell`; `None` when no `ell` was supplied.
    pub lqubo: Option<bool>,
    /// Every coefficient is `< u`; `None` when no `u` was supplied.
    pub uqubo: Option<bool>,
    /// Every coefficient lies in `{-1, 0, 1}`.
    pub squbo: bool,
}

/// A full 0/1 assignment to the variables of an instance.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Assignment {
    bits: Vec<bool>,
}

impl Assignment {
    pub fn zeros(n: usize) -> Self {
        Self {
            bits: vec![false; n],
        }
    }

    pub fn from_bools(bits: Vec<bool>) -> Self {
        Self { bits }
    }

    /// Parses a `0`/`1` slice; any other value is rejected.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        bits.iter()
            .map(|&b| match b {
                0 => Ok(false),
                1 => Ok(true),
                other => Err(Error::Malformed(format!("assignment value {other} is not 0 or 1"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(Self::from_bools)
    }

    /// Low `n` bits of `mask`, bit 0 mapped to variable 1.
    pub fn from_mask(mask: u64, n: usize) -> Self {
        Self {
            bits: (0..n).map(|k| mask >> k & 1 == 1).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Value of variable `i` (1-based).
    pub fn get(&self, i: usize) -> bool {
        self.bits[i - 1]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i - 1] = value;
    }

    pub fn as_bools(&self) -> &[bool] {
        &self.bits
    }

    pub fn to_bits(&self) -> Vec<u8> {
        self.bits.iter().map(|&b| u8::from(b)).collect()
    }

    /// 1-based indices of the variables set to 1.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(k, _)| k + 1)
    }
}

impl fmt::Display for Assignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Partial assignment forcing some variables to 1 and some to 0.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Restriction {
    forced_one: BTreeSet<usize>,
    forced_zero: BTreeSet<usize>,
}

impl Restriction {
    pub fn none() -> Self {
        Self::default()
    }

    pub fn new(
        forced_one: impl IntoIterator<Item = usize>,
        forced_zero: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let forced_one: BTreeSet<usize> = forced_one.into_iter().collect();
        let forced_zero: BTreeSet<usize> = forced_zero.into_iter().collect();
        if let Some(i) = forced_one.intersection(&forced_zero).next() {
            return Err(Error::Restriction(format!(
                "variable {i} is forced to both 0 and 1"
            )));
        }
        if forced_one.contains(&0) || forced_zero.contains(&0) {
            return Err(Error::Restriction("indices are 1-based".into()));
        }
        Ok(Self {
            forced_one,
            forced_zero,
        })
    }

    pub fn forced_one(&self) -> &BTreeSet<usize> {
        &self.forced_one
    }

    pub fn forced_zero(&self) -> &BTreeSet<usize> {
        &self.forced_zero
    }

    pub fn is_empty(&self) -> bool {
        self.forced_one.is_empty() && self.forced_zero.is_empty()
    }

    /// Returns a copy with `i` additionally forced to `value`.
    pub fn with(&self, i: usize, value: bool) -> Result<Self> {
        let mut next = self.clone();
        let (target, other) = if value {
            (&mut next.forced_one, &next.forced_zero)
        } else {
            (&mut next.forced_zero, &next.forced_one)
        };
        if i == 0 || other.contains(&i) {
            return Err(Error::Restriction(format!("cannot force variable {i} to {}", u8::from(value))));
        }
        target.insert(i);
        Ok(next)
    }

    /// Whether `assignment` agrees with every forced variable.
    pub fn admits(&self, assignment: &Assignment) -> bool {
        self.forced_one.iter().all(|&i| assignment.get(i))
            && self.forced_zero.iter().all(|&i| !assignment.get(i))
    }

    /// Checks that every index fits an instance with `n` variables.
    pub fn validate(&self, n: usize) -> Result<()> {
        match self.forced_one.iter().chain(&self.forced_zero).find(|&&i| i > n) {
            Some(i) => Err(Error::Restriction(format!("index {i} out of range for n = {n}"))),
            None => Ok(()),
        }
    }

    /// 1-based indices left free by this restriction, ascending.
    pub fn free_variables(&self, n: usize) -> Vec<usize> {
        (1..=n)
            .filter(|i| !self.forced_one.contains(i) && !self.forced_zero.contains(i))
            .collect()
    }
}
