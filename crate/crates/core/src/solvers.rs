//! Oracle-driven minimization.
//!
//! Every solver locates the least `q` for which the oracle answers yes by
//! binary search over an interval known to contain the minimum. The width of
//! that interval is what separates the general solver (width bounded only by
//! the coefficient magnitudes) from the bounded-coefficient solvers (width
//! polynomial in `n`).

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::oracle::OracleHandle;
use crate::qubo::{Assignment, QuboBuilder, QuboInstance, Restriction};

/// Outcome of one solver run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    /// Variable count of the solved instance.
    pub n: usize,
    pub min_value: BigInt,
    pub argmin: Option<Assignment>,
    /// Oracle queries spent by this run.
    pub queries: u64,
    /// Lower end of the searched interval.
    pub search_lo: BigInt,
    /// Constant added to the searched value to obtain `min_value`.
    pub offset_applied: BigInt,
}

/// Result of splitting a UQUBO instance at the `-2(n-1)u` threshold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UquboSplit {
    /// Entries at or above the threshold.
    pub a_matrix: QuboInstance,
    /// Pairs strictly below the threshold.
    pub i_b: BTreeSet<(usize, usize)>,
    /// Sum of the coefficients in `i_b`.
    pub offset: BigInt,
    /// Every index touched by a pair of `i_b`, forced to 1.
    pub forced: Restriction,
}

fn ensure_bound_to(instance: &QuboInstance, handle: &OracleHandle) -> Result<()> {
    if handle.instance() != instance {
        return Err(Error::Parameter("oracle handle is bound to a different instance".into()));
    }
    Ok(())
}

/// Least `q` in `[lo, hi]` with an affirmative oracle, given that `hi` is
/// attained under `restriction`.
fn least_affirmative(
    handle: &mut OracleHandle,
    mut lo: BigInt,
    mut hi: BigInt,
    restriction: &Restriction,
) -> Result<BigInt> {
    while lo < hi {
        let mid = (&lo + &hi).div_floor(&BigInt::from(2));
        if handle.dle_query(&mid, restriction)? {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    Ok(lo)
}

/// `ceil(log2(width + 1)) + 1`, the query budget for an interval of the
/// given width.
pub fn query_budget(width: &BigInt) -> u64 {
    let span: BigInt = width + 1;
    let floor_log = span.bits().saturating_sub(1);
    let is_power = (&span & (&span - 1u32)).is_zero();
    let ceil_log = if is_power { floor_log } else { floor_log + 1 };
    ceil_log + 1
}

/// Minimizes an arbitrary QUBO by binary search over `[lower_bound, 0]`.
pub fn solve_qubo(instance: &QuboInstance, handle: &mut OracleHandle) -> Result<SolveReport> {
    ensure_bound_to(instance, handle)?;
    let start = handle.stats().queries;
    let lo = instance.lower_bound();
    let min_value = least_affirmative(handle, lo.clone(), BigInt::zero(), &Restriction::none())?;
    Ok(SolveReport {
        n: instance.n(),
        min_value,
        argmin: None,
        queries: handle.stats().queries - start,
        search_lo: lo,
        offset_applied: BigInt::zero(),
    })
}

/// Minimizes an instance whose coefficients all exceed `ell < 0`.
///
/// The search runs over `[lower_bound, 0]`, which sits inside `[ell*n^2, 0]`.
pub fn solve_lqubo(instance: &QuboInstance, ell: &BigInt, handle: &mut OracleHandle) -> Result<SolveReport> {
    let flags = instance.classify(Some(ell), None)?;
    if flags.lqubo != Some(true) {
        return Err(Error::SubclassViolation(format!(
            "some coefficient is <= {ell}, not an LQUBO instance"
        )));
    }
    solve_qubo(instance, handle)
}

/// Query budget for an LQUBO instance: `ceil(log2(-ell*n^2 + 1)) + 1`.
pub fn lqubo_query_budget(n: usize, ell: &BigInt) -> u64 {
    let n = BigInt::from(n);
    query_budget(&(-ell * &n * &n))
}

/// `-2(n-1)u`.
pub fn uqubo_threshold(n: usize, u: &BigInt) -> BigInt {
    BigInt::from(-2) * BigInt::from(n - 1) * u
}

/// Query budget for a UQUBO instance: `ceil(log2(2(n-1)u*n^2 + 1)) + 1`.
pub fn uqubo_query_budget(n: usize, u: &BigInt) -> u64 {
    let nn = BigInt::from(n);
    query_budget(&(-uqubo_threshold(n, u) * &nn * &nn))
}

pub fn uqubo_split(instance: &QuboInstance, u: &BigInt) -> Result<UquboSplit> {
    let flags = instance.classify(None, Some(u))?;
    if flags.uqubo != Some(true) {
        return Err(Error::SubclassViolation(format!(
            "some coefficient is >= {u}, not a UQUBO instance"
        )));
    }
    let threshold = uqubo_threshold(instance.n(), u);
    let mut a = QuboBuilder::new(instance.n())?;
    let mut i_b = BTreeSet::new();
    let mut offset = BigInt::zero();
    let mut forced = BTreeSet::new();
    for (&(i, j), q) in instance.entries() {
        if *q < threshold {
            i_b.insert((i, j));
            offset += q;
            forced.insert(i);
            forced.insert(j);
        } else {
            a.insert(i, j, q.clone())?;
        }
    }
    Ok(UquboSplit {
        a_matrix: a.build(),
        i_b,
        offset,
        forced: Restriction::new(forced, [])?,
    })
}

/// Minimizes an instance whose coefficients are all `< u`.
///
/// Pairs below `-2(n-1)u` are pinned to 1 and their coefficients moved into a
/// constant; the remaining matrix is bounded below, so the restricted search
/// interval has width at most `2(n-1)u*n^2`. The handle must be bound to the
/// original instance; it is charged for every query made on the split matrix.
pub fn solve_uqubo(instance: &QuboInstance, u: &BigInt, handle: &mut OracleHandle) -> Result<SolveReport> {
    ensure_bound_to(instance, handle)?;
    let split = uqubo_split(instance, u)?;

    // The assignment with exactly the forced variables set is attainable, so
    // its value bounds the restricted minimum from above. It can be positive
    // when two forced variables share a positive coefficient.
    let mut pinned = Assignment::zeros(instance.n());
    for &i in split.forced.forced_one() {
        pinned.set(i, true);
    }
    let hi = split.a_matrix.evaluate(&pinned)?;
    let lo = split.a_matrix.lower_bound();

    let mut inner = OracleHandle::with_engine(split.a_matrix.clone(), handle.engine());
    let restricted = least_affirmative(&mut inner, lo.clone(), hi, &split.forced)?;
    handle.absorb(inner.stats());

    Ok(SolveReport {
        n: instance.n(),
        min_value: restricted + &split.offset,
        argmin: None,
        queries: inner.stats().queries,
        search_lo: lo,
        offset_applied: split.offset,
    })
}

/// Decides whether the minimum is exactly `q`: yes at `q`, no at `q - 1`.
pub fn decide_dqubo(instance: &QuboInstance, q: &BigInt, handle: &mut OracleHandle) -> Result<bool> {
    ensure_bound_to(instance, handle)?;
    let none = Restriction::none();
    if !handle.dle_query(q, &none)? {
        return Ok(false);
    }
    Ok(!handle.dle_query(&(q - BigInt::one()), &none)?)
}

/// Recovers a minimizing assignment with exactly `n` oracle queries.
///
/// Variables are fixed in ascending order; each is tentatively set to 0 and
/// kept there if the optimum stays reachable, otherwise set to 1.
pub fn extract_argmin(instance: &QuboInstance, min_value: &BigInt, handle: &mut OracleHandle) -> Result<Assignment> {
    ensure_bound_to(instance, handle)?;
    let n = instance.n();
    let mut fixed = Restriction::none();
    let mut assignment = Assignment::zeros(n);
    for i in 1..=n {
        let try_zero = fixed.with(i, false)?;
        if handle.dle_query(min_value, &try_zero)? {
            fixed = try_zero;
        } else {
            fixed = fixed.with(i, true)?;
            assignment.set(i, true);
        }
    }
    let value = instance.evaluate(&assignment)?;
    if &value != min_value {
        return Err(Error::Inconsistency(format!(
            "value {min_value} is not attained (recovered assignment evaluates to {value})"
        )));
    }
    Ok(assignment)
}

/// Fills `report.argmin` and charges the extraction queries to the report.
pub fn attach_argmin(instance: &QuboInstance, report: &mut SolveReport, handle: &mut OracleHandle) -> Result<()> {
    let before = handle.stats().queries;
    let argmin = extract_argmin(instance, &report.min_value, handle)?;
    report.queries += handle.stats().queries - before;
    report.argmin = Some(argmin);
    Ok(())
}
