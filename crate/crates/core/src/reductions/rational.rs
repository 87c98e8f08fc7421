//! Rational coefficients scaled to integers.
//!
//! Multiplying every coefficient by a common multiple of the denominators
//! scales the objective uniformly, so minimizers are unchanged and the
//! rational minimum is the integer minimum divided by the scale. The least
//! common multiple is used; it divides the product of the denominators.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qubo::{QuboBuilder, QuboInstance};

/// Upper-triangular matrix of `numerator / denominator` pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalQubo {
    n: usize,
    entries: BTreeMap<(usize, usize), (BigInt, BigInt)>,
}

impl RationalQubo {
    pub fn new<I>(n: usize, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, BigInt, BigInt)>,
    {
        if n == 0 {
            return Err(Error::EmptyInstance);
        }
        let mut map = BTreeMap::new();
        for (i, j, num, den) in entries {
            if i == 0 || j == 0 || i > n || j > n {
                return Err(Error::IndexOutOfRange { i, j, n });
            }
            if i > j {
                return Err(Error::LowerTriangle { i, j });
            }
            if !den.is_positive() {
                return Err(Error::Malformed(format!("denominator {den} of ({i}, {j}) must be >= 1")));
            }
            if map.insert((i, j), (num, den)).is_some() {
                return Err(Error::DuplicateEntry { i, j });
            }
        }
        Ok(Self { n, entries: map })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &(BigInt, BigInt))> {
        self.entries.iter()
    }
}

/// Returns the integer instance and the scale it was multiplied by.
pub fn normalize_rational(rq: &RationalQubo) -> Result<(QuboInstance, BigInt)> {
    let mut scale = BigInt::one();
    for (_, (_, den)) in rq.entries() {
        if den.is_zero() {
            return Err(Error::Malformed("zero denominator".into()));
        }
        scale = scale.lcm(den);
    }
    let mut b = QuboBuilder::new(rq.n())?;
    for (&(i, j), (num, den)) in rq.entries() {
        b.insert(i, j, num * (&scale / den))?;
    }
    Ok((b.build(), scale))
}
