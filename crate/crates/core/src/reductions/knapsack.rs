//! Knapsack to a single-row 0-1 integer program.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::reductions::ilp::IlpInstance;

/// Pick a subset of `items` with the largest total strictly below `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnapsackInstance {
    items: Vec<BigInt>,
    cap: BigInt,
}

impl KnapsackInstance {
    pub fn new(items: Vec<BigInt>, cap: BigInt) -> Result<Self> {
        if items.is_empty() {
            return Err(Error::EmptyInstance);
        }
        if let Some(bad) = items.iter().find(|m| !m.is_positive()) {
            return Err(Error::Malformed(format!("item weight {bad} must be >= 1")));
        }
        if !cap.is_positive() {
            return Err(Error::Malformed(format!("capacity {cap} must be >= 1")));
        }
        Ok(Self { items, cap })
    }

    pub fn items(&self) -> &[BigInt] {
        &self.items
    }

    pub fn cap(&self) -> &BigInt {
        &self.cap
    }
}

/// `max sum m_i x_i  s.t.  sum m_i x_i <= K - 1`; the strict `< K` is exact
/// over the integers.
pub fn reduce_knapsack_to_ilp(kp: &KnapsackInstance) -> IlpInstance {
    IlpInstance::new(
        vec![kp.items.clone()],
        vec![&kp.cap - BigInt::one()],
        kp.items.clone(),
    )
    .expect("one row with matching widths")
}
