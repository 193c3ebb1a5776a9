//! Exact solvers for the disjunctive domination number.
//!
//! Three independent strategies are provided so they can check one another:
//!
//! * [`solve_bruteforce`] enumerates sets through `(0, 0)` by increasing size.
//! * [`solve_column_dp`] runs a cyclic dynamic program over column patterns
//!   for `m <= 4`; the coverage of a column depends only on the five
//!   columns centred on it, so the state is the last four patterns.
//! * [`solve_bnb`] branches on the first undominated vertex and prunes with
//!   the per-vertex coverage capacity.
//!
//! Every report is checked with [`is_2dd_set`] before it is returned.
//! Parallel sections run on the ambient rayon pool; results do not depend on
//! the number of threads.

mod bnb;
mod brute;
mod dp;
mod masks;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use crate::domination::is_2dd_set;
use crate::error::{Error, Result};
use crate::torus::{TorusDims, VertexSet};

pub use bnb::solve_bnb;
pub use brute::solve_bruteforce;
pub use dp::{solve_column_dp, CoverTable};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Auto,
    Brute,
    Dp,
    Bnb,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Auto => "auto",
            Method::Brute => "brute",
            Method::Dp => "dp",
            Method::Bnb => "bnb",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [Method::Auto, Method::Brute, Method::Dp, Method::Bnb]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown method '{s}' (expected auto, brute, dp or bnb)"))
    }
}

/// Limits on a single solve. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Budget {
    pub time_limit: Option<Duration>,
    pub node_limit: Option<u64>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Self::default()
    }

    pub fn with_time_limit(time_limit: Duration) -> Self {
        Self { time_limit: Some(time_limit), node_limit: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveReport {
    pub dims: TorusDims,
    /// The optimum when `proven_optimal`, otherwise an upper bound.
    pub gamma: usize,
    pub optimal_set: VertexSet,
    pub method: Method,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub proven_optimal: bool,
}

/// Shared node counter, deadline and cancellation flag.
pub(crate) struct Meter {
    start: Instant,
    deadline: Option<Instant>,
    node_limit: Option<u64>,
    nodes: AtomicU64,
    stopped: AtomicBool,
}

impl Meter {
    pub(crate) fn new(budget: &Budget) -> Self {
        let start = Instant::now();
        Self {
            start,
            deadline: budget.time_limit.map(|t| start + t),
            node_limit: budget.node_limit,
            nodes: AtomicU64::new(0),
            stopped: AtomicBool::new(false),
        }
    }

    /// Records `k` nodes; returns false once the budget is spent.
    pub(crate) fn tick(&self, k: u64) -> bool {
        if self.stopped.load(Ordering::Relaxed) {
            return false;
        }
        let before = self.nodes.fetch_add(k, Ordering::Relaxed);
        let total = before + k;
        if self.node_limit.is_some_and(|limit| total > limit) {
            self.stopped.store(true, Ordering::Relaxed);
            return false;
        }
        // Reading the clock on every node is measurable; every 4096 is enough.
        if before / 4096 != total / 4096 && self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.stopped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn stopped(&self) -> bool {
        self.stopped.load(Ordering::Relaxed)
    }

    pub(crate) fn report(&self, set: VertexSet, method: Method, proven: bool) -> Result<SolveReport> {
        let dims = set.dims();
        if !is_2dd_set(dims, &set)?.is_valid() {
            return Err(Error::Unverified);
        }
        Ok(SolveReport {
            dims,
            gamma: set.len(),
            optimal_set: set,
            method,
            nodes_explored: self.nodes.load(Ordering::Relaxed),
            elapsed: self.start.elapsed(),
            proven_optimal: proven && !self.stopped(),
        })
    }
}

/// The method `auto` resolves to on canonical dims `m <= n`.
pub fn auto_method(canonical: TorusDims) -> Method {
    let (m, n) = (canonical.m(), canonical.n());
    if m <= 3 && n >= 5 {
        Method::Dp
    } else if m * n <= 36 {
        Method::Brute
    } else {
        Method::Bnb
    }
}

/// Solves on the orientation with `m <= n` and maps the set back.
pub fn solve(dims: TorusDims, method: Method, budget: &Budget) -> Result<SolveReport> {
    let (canon, swapped) = dims.canonical();
    let method = match method {
        Method::Auto => auto_method(canon),
        other => other,
    };
    let mut report = match method {
        Method::Brute => solve_bruteforce(canon, budget)?,
        Method::Dp => solve_column_dp(canon, budget)?,
        Method::Bnb | Method::Auto => solve_bnb(canon, budget)?,
    };
    if swapped {
        report.optimal_set = report.optimal_set.transposed();
        report.dims = dims;
    }
    if !is_2dd_set(dims, &report.optimal_set)?.is_valid() {
        return Err(Error::Unverified);
    }
    Ok(report)
}
