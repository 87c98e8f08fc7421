//! Exact decision oracle for "is the minimum at most `q`?".
//!
//! The oracle enumerates every assignment consistent with a restriction and
//! stops at the first witness whose value is `<= q`. Enumeration walks the
//! free variables in ascending binary order (lowest free index is the least
//! significant bit) and updates the objective incrementally, so each flip
//! costs time proportional to the number of free variables.
//!
//! Every successful call to [`OracleHandle::dle_query`] counts as exactly one
//! query, whatever engine runs it.

use std::fmt;
use std::ops::{AddAssign, SubAssign};
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, Ordering};

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::qubo::{QuboInstance, Restriction};

/// Largest number of free variables a single query may enumerate.
pub const MAX_FREE_VARIABLES: usize = 30;

/// Free-variable count from which [`Engine::Auto`] switches to parallel blocks.
const AUTO_PARALLEL_FROM: usize = 18;

/// High-order free bits fixed per parallel block.
const SPLIT_BITS: usize = 8;

const STOP_POLL_MASK: u64 = 0xfff;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct OracleStats {
    pub queries: u64,
    /// Diagnostic only; depends on enumeration order and worker scheduling.
    pub assignments_examined: u64,
}

impl OracleStats {
    fn absorb(&mut self, other: OracleStats) {
        self.queries += other.queries;
        self.assignments_examined += other.assignments_examined;
    }
}

/// Enumeration strategy.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Engine {
    /// Sequential for small queries, parallel above 18 free variables.
    #[default]
    Auto,
    Sequential,
    Parallel,
}

impl Engine {
    pub fn tag(self) -> &'static str {
        match self {
            Engine::Auto => "auto",
            Engine::Sequential => "sequential",
            Engine::Parallel => "parallel",
        }
    }

    fn parallel_for(self, free: usize) -> bool {
        match self {
            Engine::Auto => free >= AUTO_PARALLEL_FROM,
            Engine::Sequential => false,
            Engine::Parallel => true,
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(Engine::Auto),
            "sequential" => Ok(Engine::Sequential),
            "parallel" => Ok(Engine::Parallel),
            other => Err(Error::Parameter(format!("unknown engine `{other}`"))),
        }
    }
}

/// A decision oracle bound to one instance, with query accounting.
#[derive(Debug, Clone)]
pub struct OracleHandle {
    instance: QuboInstance,
    stats: OracleStats,
    engine: Engine,
    kernel: Kernel,
}

impl OracleHandle {
    pub fn new(instance: QuboInstance) -> Self {
        Self::with_engine(instance, Engine::default())
    }

    pub fn with_engine(instance: QuboInstance, engine: Engine) -> Self {
        let kernel = Kernel::compile(&instance);
        Self {
            instance,
            stats: OracleStats::default(),
            engine,
            kernel,
        }
    }

    pub fn instance(&self) -> &QuboInstance {
        &self.instance
    }

    pub fn stats(&self) -> OracleStats {
        self.stats
    }

    pub fn engine(&self) -> Engine {
        self.engine
    }

    pub fn reset_stats(&mut self) {
        self.stats = OracleStats::default();
    }

    /// Folds the counters of a derived oracle into this one.
    pub(crate) fn absorb(&mut self, other: OracleStats) {
        self.stats.absorb(other);
    }

    /// Decides whether some assignment consistent with `restriction` has
    /// value `<= q`.
    pub fn dle_query(&mut self, q: &BigInt, restriction: &Restriction) -> Result<bool> {
        let n = self.instance.n();
        restriction.validate(n)?;
        let free = restriction.free_variables(n);
        if free.len() > MAX_FREE_VARIABLES {
            return Err(Error::Capacity {
                free: free.len(),
                limit: MAX_FREE_VARIABLES,
            });
        }

        let mut base = vec![false; n];
        for &i in restriction.forced_one() {
            base[i - 1] = true;
        }
        let free: Vec<usize> = free.into_iter().map(|i| i - 1).collect();
        let parallel = self.engine.parallel_for(free.len());

        let (found, examined) = match &self.kernel {
            Kernel::Narrow(k) => {
                let threshold = k.clamp_threshold(q);
                k.search(&base, &free, &threshold, parallel)
            }
            Kernel::Wide(k) => k.search(&base, &free, q, parallel),
        };
        self.stats.queries += 1;
        self.stats.assignments_examined += examined;
        Ok(found)
    }
}

trait Weight:
    Clone + Ord + Zero + Send + Sync + for<'a> AddAssign<&'a Self> + for<'a> SubAssign<&'a Self>
{
}

impl<T> Weight for T where
    T: Clone + Ord + Zero + Send + Sync + for<'a> AddAssign<&'a T> + for<'a> SubAssign<&'a T>
{
}

#[derive(Debug, Clone)]
enum Kernel {
    /// Every partial sum fits in an `i64`.
    Narrow(Dense<i64>),
    Wide(Dense<BigInt>),
}

impl Kernel {
    fn compile(instance: &QuboInstance) -> Self {
        let total: BigInt = instance.entries().map(|(_, q)| q.abs()).sum();
        if total <= BigInt::from(i64::MAX / 4) {
            Kernel::Narrow(Dense::build(instance, |q| {
                q.to_i64().expect("bounded by the total magnitude")
            }))
        } else {
            Kernel::Wide(Dense::build(instance, Clone::clone))
        }
    }
}

/// 0-based diagonal plus symmetric neighbour lists.
#[derive(Debug, Clone)]
struct Dense<T> {
    diag: Vec<T>,
    adj: Vec<Vec<(usize, T)>>,
    magnitude: T,
}

impl Dense<i64> {
    /// Any threshold outside `[-magnitude, magnitude]` compares like its clamp.
    fn clamp_threshold(&self, q: &BigInt) -> i64 {
        let m = self.magnitude;
        if *q >= BigInt::from(m) {
            m
        } else if *q < BigInt::from(-m) {
            -m - 1
        } else {
            q.to_i64().expect("within magnitude")
        }
    }
}

impl<T: Weight> Dense<T> {
    fn build(instance: &QuboInstance, convert: impl Fn(&BigInt) -> T) -> Self {
        let n = instance.n();
        let mut diag = vec![T::zero(); n];
        let mut adj: Vec<Vec<(usize, T)>> = vec![Vec::new(); n];
        let mut magnitude = T::zero();
        for (&(i, j), q) in instance.entries() {
            let w = convert(q);
            let abs = convert(&q.abs());
            magnitude += &abs;
            if i == j {
                diag[i - 1] = w;
            } else {
                adj[i - 1].push((j - 1, w.clone()));
                adj[j - 1].push((i - 1, w));
            }
        }
        Self {
            diag,
            adj,
            magnitude,
        }
    }

    fn search(&self, base: &[bool], free: &[usize], threshold: &T, parallel: bool) -> (bool, u64) {
        let stop = AtomicBool::new(false);
        if !parallel || free.len() <= SPLIT_BITS {
            return self.scan_block(base.to_vec(), free, threshold, &stop);
        }
        let (low, high) = free.split_at(free.len() - SPLIT_BITS);
        let results: Vec<(bool, u64)> = (0u64..1 << SPLIT_BITS)
            .into_par_iter()
            .map(|block| {
                if stop.load(Ordering::Relaxed) {
                    return (false, 0);
                }
                let mut x = base.to_vec();
                for (bit, &v) in high.iter().enumerate() {
                    x[v] = block >> bit & 1 == 1;
                }
                self.scan_block(x, low, threshold, &stop)
            })
            .collect();
        results
            .into_iter()
            .fold((false, 0), |(f, e), (bf, be)| (f || bf, e + be))
    }

    /// Enumerates every setting of `low` starting from `x` (where all of
    /// `low` is 0). Returns whether a witness was found and how many
    /// assignments were examined.
    ///
    /// Contributions of the fixed variables are folded into a gain per free
    /// variable up front, so each flip touches one contiguous row of a dense
    /// `low.len()`-square weight block.
    fn scan_block(&self, x: Vec<bool>, low: &[usize], threshold: &T, stop: &AtomicBool) -> (bool, u64) {
        let n = x.len();
        let mut field = vec![T::zero(); n];
        let mut value = T::zero();
        for v in 0..n {
            if !x[v] {
                continue;
            }
            value += &self.diag[v];
            for (u, w) in &self.adj[v] {
                field[*u] += w;
                if *u > v && x[*u] {
                    value += w;
                }
            }
        }

        if value <= *threshold {
            stop.store(true, Ordering::Relaxed);
            return (true, 1);
        }

        let m = low.len();
        let mut pos = vec![usize::MAX; n];
        for (a, &v) in low.iter().enumerate() {
            pos[v] = a;
        }
        let mut gain: Vec<T> = low
            .iter()
            .map(|&v| {
                let mut g = self.diag[v].clone();
                g += &field[v];
                g
            })
            .collect();
        let mut block = vec![T::zero(); m * m];
        for (a, &v) in low.iter().enumerate() {
            for (u, w) in &self.adj[v] {
                if pos[*u] != usize::MAX {
                    block[a * m + pos[*u]] = w.clone();
                }
            }
        }

        // Counting up by one clears bits 0..carry and sets bit `carry`.
        let total: u64 = 1 << m;
        for step in 1..total {
            if step & STOP_POLL_MASK == 0 && stop.load(Ordering::Relaxed) {
                return (false, step);
            }
            let carry = step.trailing_zeros() as usize;
            for a in 0..carry {
                value -= &gain[a];
                for (g, w) in gain.iter_mut().zip(&block[a * m..(a + 1) * m]) {
                    *g -= w;
                }
            }
            value += &gain[carry];
            for (g, w) in gain.iter_mut().zip(&block[carry * m..(carry + 1) * m]) {
                *g += w;
            }
            if value <= *threshold {
                stop.store(true, Ordering::Relaxed);
                return (true, step + 1);
            }
        }
        (false, total)
    }
}
