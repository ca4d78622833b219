//! Cover-multiplicity reports.
//!
//! A verification run counts, for every edge of a host, how many supplied
//! blocks contain it. Hosts up to [`DENSE_HOST_LIMIT`] edges keep a dense
//! count vector (a full per-edge map); larger hosts are checked by a
//! sort-merge pass over the streamed block edges and the report keeps only
//! the anomalies. The summary flags are pure functions of the per-edge
//! counts in both modes.

use std::fmt::Debug;

use crate::graph::Edge;
use crate::num_util::binomial_u64;

/// Hosts above this many edges/pairs are verified in streaming mode.
pub const DENSE_HOST_LIMIT: u64 = 1_000_000;

const SAMPLE_CAP: usize = 100;

/// Translates between host edges and contiguous ranks `0..size`.
pub trait HostIndex {
    type Key: Ord + Clone + Debug;

    fn size(&self) -> u64;
    fn rank(&self, key: &Self::Key) -> Option<u64>;
    fn unrank(&self, rank: u64) -> Self::Key;
}

/// All r-subsets of `1..=n`, ranked colexicographically.
pub struct CompleteUniformIndex {
    n: u32,
    r: u32,
    size: u64,
}

impl CompleteUniformIndex {
    pub fn new(n: u32, r: u32) -> Self {
        let size = binomial_u64(n as u64, r as u64);
        CompleteUniformIndex { n, r, size }
    }
}

impl HostIndex for CompleteUniformIndex {
    type Key = Vec<u32>;

    fn size(&self) -> u64 {
        self.size
    }

    fn rank(&self, key: &Vec<u32>) -> Option<u64> {
        if key.len() != self.r as usize {
            return None;
        }
        let mut rank = 0u64;
        for (i, &v) in key.iter().enumerate() {
            if v == 0 || v > self.n {
                return None;
            }
            if i > 0 && key[i - 1] >= v {
                return None;
            }
            rank += binomial_u64((v - 1) as u64, (i + 1) as u64);
        }
        Some(rank)
    }

    fn unrank(&self, mut rank: u64) -> Vec<u32> {
        let r = self.r as usize;
        let mut out = vec![0u32; r];
        for i in (1..=r).rev() {
            // largest c with C(c, i) <= rank
            let mut c = (i - 1) as u64;
            while binomial_u64(c + 1, i as u64) <= rank {
                c += 1;
            }
            rank -= binomial_u64(c, i as u64);
            out[i - 1] = (c + 1) as u32;
        }
        out
    }
}

/// An explicit list of r-sets, ranked by position in the sorted list.
pub struct ExplicitUniformIndex {
    edges: Vec<Vec<u32>>,
}

impl ExplicitUniformIndex {
    /// `edges` must be sorted and deduplicated, each inner vector sorted.
    pub fn new(edges: Vec<Vec<u32>>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        ExplicitUniformIndex { edges }
    }
}

impl HostIndex for ExplicitUniformIndex {
    type Key = Vec<u32>;

    fn size(&self) -> u64 {
        self.edges.len() as u64
    }

    fn rank(&self, key: &Vec<u32>) -> Option<u64> {
        self.edges.binary_search(key).ok().map(|i| i as u64)
    }

    fn unrank(&self, rank: u64) -> Vec<u32> {
        self.edges[rank as usize].clone()
    }
}

/// Pairs (e, f) with e from the left edge list and f from the right one.
pub struct PairIndex {
    left: Vec<Edge>,
    right: Vec<Edge>,
}

impl PairIndex {
    /// Both lists must be sorted and deduplicated.
    pub fn new(left: Vec<Edge>, right: Vec<Edge>) -> Self {
        PairIndex { left, right }
    }
}

impl HostIndex for PairIndex {
    type Key = (Edge, Edge);

    fn size(&self) -> u64 {
        self.left.len() as u64 * self.right.len() as u64
    }

    fn rank(&self, key: &(Edge, Edge)) -> Option<u64> {
        let li = self.left.binary_search(&key.0).ok()? as u64;
        let ri = self.right.binary_search(&key.1).ok()? as u64;
        Some(li * self.right.len() as u64 + ri)
    }

    fn unrank(&self, rank: u64) -> (Edge, Edge) {
        let m = self.right.len() as u64;
        (
            self.left[(rank / m) as usize],
            self.right[(rank % m) as usize],
        )
    }
}

/// Edges of a single graph, ranked by position in the sorted edge list.
pub struct GraphEdgeIndex {
    edges: Vec<Edge>,
}

impl GraphEdgeIndex {
    pub fn new(edges: Vec<Edge>) -> Self {
        GraphEdgeIndex { edges }
    }
}

impl HostIndex for GraphEdgeIndex {
    type Key = Edge;

    fn size(&self) -> u64 {
        self.edges.len() as u64
    }

    fn rank(&self, key: &Edge) -> Option<u64> {
        self.edges.binary_search(key).ok().map(|i| i as u64)
    }

    fn unrank(&self, rank: u64) -> Edge {
        self.edges[rank as usize]
    }
}

pub(crate) enum Counts {
    /// counts[rank] for every host edge.
    Dense(Vec<u32>),
    /// Only what the sort-merge pass retained.
    Streamed {
        /// covered edges whose count differs from 1 (first few)
        anomalies: Vec<(u64, u64)>,
        /// uncovered host ranks (first few)
        uncovered: Vec<u64>,
    },
}

/// Per-edge cover counts over a host plus the summary flags.
pub struct MultiplicityReport<H: HostIndex> {
    host: H,
    counts: Counts,
    covered_total: u64,
    foreign_total: u64,
    foreign_samples: Vec<(usize, H::Key)>,
    exact: bool,
    odd: bool,
    uniform: bool,
    uniform_value: Option<u64>,
}

impl<H: HostIndex> Debug for MultiplicityReport<H> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("MultiplicityReport")
            .field("host_size", &self.host_size())
            .field("covered_total", &self.covered_total)
            .field("foreign_total", &self.foreign_total)
            .field("is_exact_partition", &self.exact)
            .field("is_odd_cover", &self.odd)
            .field("uniform_cover_value", &self.uniform_value)
            .field("streamed", &self.was_streamed())
            .finish()
    }
}

impl<H: HostIndex> MultiplicityReport<H> {
    pub(crate) fn from_dense(
        host: H,
        counts: Vec<u32>,
        covered_total: u64,
        foreign_total: u64,
        foreign_samples: Vec<(usize, H::Key)>,
    ) -> Self {
        let size = host.size();
        debug_assert_eq!(counts.len() as u64, size);
        let max = counts.iter().copied().max().unwrap_or(0) as u64;
        let min = counts.iter().copied().min().unwrap_or(0) as u64;
        let exact = foreign_total == 0 && size > 0 && max == 1 && min == 1
            || (size == 0 && foreign_total == 0);
        let odd = size > 0 && counts.iter().all(|&c| c % 2 == 1) || size == 0;
        let uniform = max == min;
        let uniform_value = if size == 0 {
            None
        } else if uniform {
            Some(max)
        } else {
            None
        };
        MultiplicityReport {
            host,
            counts: Counts::Dense(counts),
            covered_total,
            foreign_total,
            foreign_samples,
            exact,
            odd,
            uniform,
            uniform_value,
        }
    }

    /// `ranks` is the multiset of all covered host ranks, consumed by a
    /// sort-merge duplicate check.
    pub(crate) fn from_streamed(
        host: H,
        mut ranks: Vec<u64>,
        foreign_total: u64,
        foreign_samples: Vec<(usize, H::Key)>,
    ) -> Self {
        ranks.sort_unstable();
        let size = host.size();
        let covered_total = ranks.len() as u64;

        let mut anomalies = Vec::new();
        let mut uncovered = Vec::new();
        let mut distinct = 0u64;
        let mut all_odd = true;
        let mut all_equal: Option<u64> = None;
        let mut equal_ok = true;
        let mut max_count = 0u64;
        let mut expected_next = 0u64;

        let mut i = 0usize;
        while i < ranks.len() {
            let r = ranks[i];
            let mut j = i + 1;
            while j < ranks.len() && ranks[j] == r {
                j += 1;
            }
            let count = (j - i) as u64;
            distinct += 1;
            max_count = max_count.max(count);
            if count.is_multiple_of(2) {
                all_odd = false;
            }
            match all_equal {
                None => all_equal = Some(count),
                Some(c) if c != count => equal_ok = false,
                _ => {}
            }
            if count != 1 && anomalies.len() < SAMPLE_CAP {
                anomalies.push((r, count));
            }
            if uncovered.len() < SAMPLE_CAP {
                let mut g = expected_next;
                while g < r && uncovered.len() < SAMPLE_CAP {
                    uncovered.push(g);
                    g += 1;
                }
            }
            expected_next = r + 1;
            i = j;
        }
        if uncovered.len() < SAMPLE_CAP {
            let mut g = expected_next;
            while g < size && uncovered.len() < SAMPLE_CAP {
                uncovered.push(g);
                g += 1;
            }
        }

        let covers_all = distinct == size;
        let exact = foreign_total == 0 && covers_all && max_count <= 1 && covered_total == size;
        let odd = size == 0 || (covers_all && all_odd);
        // Counts of uncovered edges are zero, so uniformity across the host
        // holds only when everything is covered equally or nothing is.
        let (uniform, uniform_value) = if size == 0 {
            (true, None)
        } else if covered_total == 0 {
            (true, Some(0))
        } else if covers_all && equal_ok {
            (true, all_equal)
        } else {
            (false, None)
        };
        MultiplicityReport {
            host,
            counts: Counts::Streamed {
                anomalies,
                uncovered,
            },
            covered_total,
            foreign_total,
            foreign_samples,
            exact,
            odd,
            uniform,
            uniform_value,
        }
    }

    /// Every multiplicity equals 1 and every block edge lies in the host.
    pub fn is_exact_partition(&self) -> bool {
        self.exact
    }

    /// Every host edge is covered an odd number of times.
    pub fn is_odd_cover(&self) -> bool {
        self.odd
    }

    /// All host edges share one cover count.
    pub fn is_uniform_cover(&self) -> bool {
        self.uniform
    }

    /// The shared count when the cover is uniform and the host is nonempty.
    pub fn uniform_cover_value(&self) -> Option<u64> {
        self.uniform_value
    }

    pub fn host_size(&self) -> u64 {
        self.host.size()
    }

    /// Total block-edge incidences that landed inside the host.
    pub fn covered_total(&self) -> u64 {
        self.covered_total
    }

    /// Block edges that are not host edges at all.
    pub fn foreign_total(&self) -> u64 {
        self.foreign_total
    }

    pub fn foreign_samples(&self) -> &[(usize, H::Key)] {
        &self.foreign_samples
    }

    pub fn was_streamed(&self) -> bool {
        matches!(self.counts, Counts::Streamed { .. })
    }

    /// Cover count of one host edge. `None` for non-host keys, and for
    /// unexceptional edges when the report was streamed.
    pub fn count_of(&self, key: &H::Key) -> Option<u64> {
        let rank = self.host.rank(key)?;
        match &self.counts {
            Counts::Dense(v) => Some(v[rank as usize] as u64),
            Counts::Streamed { anomalies, .. } => {
                anomalies.iter().find(|(r, _)| *r == rank).map(|(_, c)| *c)
            }
        }
    }

    /// Host edges whose count differs from 1, up to `limit` of them.
    /// Streamed reports list the retained samples only.
    pub fn violations(&self, limit: usize) -> Vec<(H::Key, u64)> {
        let mut out = Vec::new();
        match &self.counts {
            Counts::Dense(v) => {
                for (rank, &c) in v.iter().enumerate() {
                    if c != 1 {
                        out.push((self.host.unrank(rank as u64), c as u64));
                        if out.len() >= limit {
                            break;
                        }
                    }
                }
            }
            Counts::Streamed {
                anomalies,
                uncovered,
                ..
            } => {
                for &(r, c) in anomalies {
                    if out.len() >= limit {
                        break;
                    }
                    out.push((self.host.unrank(r), c));
                }
                for &r in uncovered {
                    if out.len() >= limit {
                        break;
                    }
                    out.push((self.host.unrank(r), 0));
                }
                out.sort();
                out.truncate(limit);
            }
        }
        out
    }

    /// Iterates the full per-edge map. Dense reports only.
    pub fn dense_counts(&self) -> Option<impl Iterator<Item = (H::Key, u64)> + '_> {
        match &self.counts {
            Counts::Dense(v) => Some(
                v.iter()
                    .enumerate()
                    .map(|(r, &c)| (self.host.unrank(r as u64), c as u64)),
            ),
            Counts::Streamed { .. } => None,
        }
    }
}
