//! Exact minimum-partition solvers by complete branch-and-bound search.
//!
//! All three solvers share one skeleton: pick the lexicographically least
//! uncovered element, enumerate every admissible block that contains it
//! (grown canonically so no block is generated twice), and recurse on the
//! remaining elements, pruning a node as soon as the parts already used
//! cannot beat the incumbent. The search is exhaustive, so a run that
//! finishes within its budget proves optimality.

mod biclique;
mod multipartite;
mod product;

pub use biclique::min_biclique_partition;
pub use multipartite::{complete_uniform_edges, min_multipartite_partition};
pub use product::{
    min_product_block_partition, min_product_block_partition_with, product_lower_bound,
};

use std::sync::atomic::{AtomicU64, AtomicU8, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

/// Node and wall-clock limits for a solver run, plus the number of worker
/// threads for the optional parallel mode.
#[derive(Clone, Debug)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    pub threads: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: None,
            max_time: None,
            threads: 1,
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            ..Budget::default()
        }
    }

    pub fn unlimited() -> Self {
        Budget::default()
    }
}

/// Outcome of a solver run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Optimum {
    /// The search space was exhausted (or a matching lower bound reached);
    /// no partition with fewer blocks exists.
    Resolved(u64),
    /// The budget ran out first. `best_upper` is the best witnessed count.
    Unresolved { best_upper: Option<u64> },
}

impl Optimum {
    pub fn resolved_value(&self) -> Option<u64> {
        match self {
            Optimum::Resolved(v) => Some(*v),
            Optimum::Unresolved { .. } => None,
        }
    }
}

/// Result of a solver run; `certificate` witnesses the resolved optimum or
/// the best upper bound found.
#[derive(Clone, Debug)]
pub struct SolveResult<B> {
    pub optimum: Optimum,
    pub certificate: Option<Vec<B>>,
    pub nodes_explored: u64,
    pub budget_exhausted: bool,
}

impl<B> SolveResult<B> {
    /// The best block count this run can vouch for, resolved or not.
    pub fn best_count(&self) -> Option<u64> {
        match &self.optimum {
            Optimum::Resolved(v) => Some(*v),
            Optimum::Unresolved { best_upper } => *best_upper,
        }
    }
}

const STOP_RUNNING: u8 = 0;
const STOP_BUDGET: u8 = 1;
const STOP_BOUND: u8 = 2;
const TIME_CHECK_MASK: u64 = 0xFFF;

/// Incumbent, node counter, and stop conditions shared by all subtrees.
pub(crate) struct SearchShared<W> {
    best: AtomicU64,
    nodes: AtomicU64,
    stop: AtomicU8,
    witness: Mutex<Option<(u64, W)>>,
    max_nodes: u64,
    deadline: Option<Instant>,
    /// resolved early when the incumbent meets this proven lower bound
    lower_target: Option<u64>,
}

impl<W: Clone> SearchShared<W> {
    pub(crate) fn new(
        budget: &Budget,
        seed_count: u64,
        seed: W,
        lower_target: Option<u64>,
    ) -> Self {
        let shared = SearchShared {
            best: AtomicU64::new(seed_count),
            nodes: AtomicU64::new(0),
            stop: AtomicU8::new(STOP_RUNNING),
            witness: Mutex::new(Some((seed_count, seed))),
            max_nodes: budget.max_nodes.unwrap_or(u64::MAX),
            deadline: budget.max_time.map(|d| Instant::now() + d),
            lower_target,
        };
        shared.check_bound_reached(seed_count);
        shared
    }

    pub(crate) fn best(&self) -> u64 {
        self.best.load(Ordering::Relaxed)
    }

    pub(crate) fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed) != STOP_RUNNING
    }

    /// Counts one search node; flags budget exhaustion when limits pass.
    pub(crate) fn tick(&self) -> bool {
        let n = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if n > self.max_nodes {
            self.stop_for_budget();
            return false;
        }
        if n & TIME_CHECK_MASK == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.stop_for_budget();
                    return false;
                }
            }
        }
        !self.stopped()
    }

    /// Budget exhaustion never overrides a bound-match proof.
    fn stop_for_budget(&self) {
        let _ = self.stop.compare_exchange(
            STOP_RUNNING,
            STOP_BUDGET,
            Ordering::Relaxed,
            Ordering::Relaxed,
        );
    }

    /// A witness matching a proven lower bound resolves the search even if
    /// the budget ran out in the meantime.
    fn check_bound_reached(&self, count: u64) {
        if let Some(target) = self.lower_target {
            if count <= target {
                self.stop.store(STOP_BOUND, Ordering::Relaxed);
            }
        }
    }

    pub(crate) fn record(&self, count: u64, witness: &W) {
        let prev = self.best.fetch_min(count, Ordering::SeqCst);
        if count < prev {
            let mut slot = self.witness.lock().expect("witness lock");
            let improves = slot.as_ref().is_none_or(|(c, _)| count < *c);
            if improves {
                *slot = Some((count, witness.clone()));
            }
            self.check_bound_reached(count);
        }
    }

    /// (optimum, witness, nodes, budget_exhausted)
    pub(crate) fn finish(self) -> (Optimum, Option<W>, u64, bool) {
        let nodes = self.nodes.load(Ordering::Relaxed);
        let best = self.best.load(Ordering::Relaxed);
        let witness = self
            .witness
            .into_inner()
            .expect("witness lock")
            .map(|(_, w)| w);
        match self.stop.into_inner() {
            STOP_BUDGET => (
                Optimum::Unresolved {
                    best_upper: Some(best),
                },
                witness,
                nodes,
                true,
            ),
            _ => (Optimum::Resolved(best), witness, nodes, false),
        }
    }
}

/// Bitset over element indices of the host (edges or pairs).
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct EdgeBits {
    words: Vec<u64>,
}

impl EdgeBits {
    pub(crate) fn full(len: usize) -> Self {
        let mut words = vec![u64::MAX; len.div_ceil(64)];
        if !len.is_multiple_of(64) {
            if let Some(last) = words.last_mut() {
                *last = (1u64 << (len % 64)) - 1;
            }
        }
        if len == 0 {
            words.clear();
        }
        EdgeBits { words }
    }

    pub(crate) fn get(&self, i: usize) -> bool {
        self.words[i / 64] & (1u64 << (i % 64)) != 0
    }

    pub(crate) fn clear(&mut self, i: usize) {
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub(crate) fn first_set(&self) -> Option<usize> {
        for (w, word) in self.words.iter().enumerate() {
            if *word != 0 {
                return Some(w * 64 + word.trailing_zeros() as usize);
            }
        }
        None
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.words.iter().all(|w| *w == 0)
    }
}

/// Iterates the set bit positions of a u64 mask.
pub(crate) fn mask_bits(mask: u64) -> impl Iterator<Item = usize> {
    std::iter::successors(if mask == 0 { None } else { Some(mask) }, |m| {
        let next = m & (m - 1);
        if next == 0 {
            None
        } else {
            Some(next)
        }
    })
    .map(|m| m.trailing_zeros() as usize)
}

/// All bicliques (X, Y) with u in X, v in Y, X and Y disjoint, and every
/// cross pair present in `rows` (a symmetric adjacency mask table).
/// Each biclique is produced exactly once since u is pinned to X.
pub(crate) fn enumerate_bicliques_at(u: usize, v: usize, rows: &[u64]) -> Vec<(u64, u64)> {
    debug_assert!(rows[u] & (1u64 << v) != 0, "pivot edge must be present");
    let mut out = Vec::new();
    let xcand: Vec<usize> = mask_bits(rows[v] & !(1u64 << u)).collect();
    let ubit = 1u64 << u;
    let vbit = 1u64 << v;
    grow_x(ubit, rows[u], &xcand, 0, vbit, rows, &mut out);
    out
}

fn grow_x(
    xmask: u64,
    ymask: u64,
    xcand: &[usize],
    from: usize,
    vbit: u64,
    rows: &[u64],
    out: &mut Vec<(u64, u64)>,
) {
    // emit all Y choices for the current X
    let base = ymask & !xmask & !vbit;
    let mut sub = base;
    loop {
        out.push((xmask, sub | vbit));
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & base;
    }
    for i in from..xcand.len() {
        let w = xcand[i];
        let wbit = 1u64 << w;
        if xmask & wbit != 0 {
            continue;
        }
        let ynew = ymask & rows[w];
        if ynew & vbit == 0 {
            continue;
        }
        grow_x(xmask | wbit, ynew, xcand, i + 1, vbit, rows, out);
    }
}
