//! Independent brute-force references. These evaluate every assignment
//! directly from the coefficient list and share no code with the oracle.
#![allow(dead_code)]

use num_bigint::BigInt;
use proptest::prelude::*;
use qubo_core::QuboInstance;

pub fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

/// Value of `mask` (bit k is variable k + 1) computed from scratch.
pub fn value_of(q: &QuboInstance, mask: u64) -> BigInt {
    let mut total = BigInt::from(0);
    for (&(i, j), c) in q.entries() {
        if mask >> (i - 1) & 1 == 1 && mask >> (j - 1) & 1 == 1 {
            total += c;
        }
    }
    total
}

pub fn brute_min(q: &QuboInstance) -> BigInt {
    (0..1u64 << q.n()).map(|m| value_of(q, m)).min().unwrap()
}

pub fn brute_minimizers(q: &QuboInstance) -> (BigInt, Vec<u64>) {
    let values: Vec<BigInt> = (0..1u64 << q.n()).map(|m| value_of(q, m)).collect();
    let min = values.iter().min().unwrap().clone();
    let masks = (0..1u64 << q.n()).filter(|&m| values[m as usize] == min).collect();
    (min, masks)
}

/// Random instance on exactly `n` variables with coefficients in `[-c, c]`.
pub fn arb_qubo_n(n: usize, c: i64, density: f64) -> impl Strategy<Value = QuboInstance> {
    let pairs: Vec<(usize, usize)> = (1..=n).flat_map(|i| (i..=n).map(move |j| (i, j))).collect();
    let len = pairs.len();
    proptest::collection::vec((proptest::bool::weighted(density), -c..=c), len).prop_map(move |picks| {
        let entries = pairs
            .iter()
            .zip(picks)
            .filter(|(_, (keep, _))| *keep)
            .map(|(&(i, j), (_, v))| (i, j, v));
        QuboInstance::from_entries(n, entries).unwrap()
    })
}

/// Random instance on `1..=max_n` variables.
pub fn arb_qubo(max_n: usize, c: i64, density: f64) -> impl Strategy<Value = QuboInstance> {
    (1..=max_n).prop_flat_map(move |n| arb_qubo_n(n, c, density))
}
