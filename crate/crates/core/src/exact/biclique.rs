//! Minimum biclique partition of a graph's edge set.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::blocks::Biclique;
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{enumerate_bicliques_at, mask_bits, Budget, EdgeBits, SearchShared, SolveResult};

struct Instance {
    labels: Vec<u32>,
    nv: usize,
    /// edge ids in lexicographic (lo, hi) order of vertex indices
    edge_of: Vec<Vec<usize>>,
    edge_ends: Vec<(usize, usize)>,
}

impl Instance {
    fn new(g: &Graph) -> Result<Self> {
        let labels: Vec<u32> = g.vertices().collect();
        let nv = labels.len();
        if nv > 64 {
            return Err(Error::InvalidArguments(
                "exact solvers handle at most 64 vertices".into(),
            ));
        }
        let index_of = |v: u32| labels.binary_search(&v).expect("vertex present");
        let mut edge_of = vec![vec![usize::MAX; nv]; nv];
        let mut edge_ends = Vec::with_capacity(g.edge_count());
        for e in g.edges() {
            let (a, b) = (index_of(e.lo()), index_of(e.hi()));
            let id = edge_ends.len();
            edge_of[a][b] = id;
            edge_of[b][a] = id;
            edge_ends.push((a, b));
        }
        Ok(Instance {
            labels,
            nv,
            edge_of,
            edge_ends,
        })
    }

    fn rows(&self, remaining: &EdgeBits) -> Vec<u64> {
        let mut rows = vec![0u64; self.nv];
        for (id, &(a, b)) in self.edge_ends.iter().enumerate() {
            if remaining.get(id) {
                rows[a] |= 1u64 << b;
                rows[b] |= 1u64 << a;
            }
        }
        rows
    }

    fn remove_biclique(&self, remaining: &mut EdgeBits, x: u64, y: u64) {
        for a in mask_bits(x) {
            for b in mask_bits(y) {
                remaining.clear(self.edge_of[a][b]);
            }
        }
    }

    /// Lower-endpoint star partition: a valid seed for any graph.
    fn star_seed(&self, remaining: &EdgeBits) -> Vec<(u64, u64)> {
        let rows = self.rows(remaining);
        let mut out = Vec::new();
        for (a, row) in rows.iter().enumerate() {
            let higher = row & !((1u64 << a) | ((1u64 << a) - 1));
            if higher != 0 {
                out.push((1u64 << a, higher));
            }
        }
        out
    }

    fn to_bicliques(&self, parts: &[(u64, u64)]) -> Vec<Biclique> {
        parts
            .iter()
            .map(|&(x, y)| {
                Biclique::new(
                    mask_bits(x).map(|i| self.labels[i]),
                    mask_bits(y).map(|i| self.labels[i]),
                )
                .expect("solver masks are disjoint and nonempty")
            })
            .collect()
    }
}

fn children(inst: &Instance, remaining: &EdgeBits) -> Vec<(u64, u64)> {
    let pivot = remaining.first_set().expect("nonempty remaining");
    let (u, v) = inst.edge_ends[pivot];
    let rows = inst.rows(remaining);
    let mut found = enumerate_bicliques_at(u, v, &rows);
    found.sort_by(|a, b| {
        let ca = (a.0.count_ones() * a.1.count_ones(), a.0, a.1);
        let cb = (b.0.count_ones() * b.1.count_ones(), b.0, b.1);
        cb.0.cmp(&ca.0).then(ca.1.cmp(&cb.1)).then(ca.2.cmp(&cb.2))
    });
    found
}

fn recurse(
    inst: &Instance,
    shared: &SearchShared<Vec<(u64, u64)>>,
    remaining: &EdgeBits,
    parts: &mut Vec<(u64, u64)>,
) {
    if !shared.tick() {
        return;
    }
    if remaining.is_empty() {
        shared.record(parts.len() as u64, parts);
        return;
    }
    if parts.len() as u64 + 1 >= shared.best() {
        return;
    }
    for (x, y) in children(inst, remaining) {
        if shared.stopped() {
            return;
        }
        let mut next = remaining.clone();
        inst.remove_biclique(&mut next, x, y);
        parts.push((x, y));
        recurse(inst, shared, &next, parts);
        parts.pop();
    }
}

/// Exact minimum number of bicliques partitioning the edge set of `g`.
///
/// Complete search; a resolved result is a proven optimum with a verifying
/// witness. Runs sequentially unless `budget.threads > 1`, in which case
/// the root branches are searched in parallel (the resolved value is
/// schedule-independent, the witness certificate may differ).
pub fn min_biclique_partition(g: &Graph, budget: &Budget) -> Result<SolveResult<Biclique>> {
    let inst = Instance::new(g)?;
    let all = EdgeBits::full(inst.edge_ends.len());

    if all.is_empty() {
        return Ok(SolveResult {
            optimum: super::Optimum::Resolved(0),
            certificate: Some(Vec::new()),
            nodes_explored: 0,
            budget_exhausted: false,
        });
    }

    let seed = inst.star_seed(&all);
    let shared = SearchShared::new(budget, seed.len() as u64, seed, None);

    if budget.threads <= 1 {
        recurse(&inst, &shared, &all, &mut Vec::new());
    } else {
        let roots = children(&inst, &all);
        shared.tick(); // the root node itself
        let cursor = AtomicUsize::new(0);
        std::thread::scope(|scope| {
            for _ in 0..budget.threads.min(roots.len()) {
                scope.spawn(|| loop {
                    let i = cursor.fetch_add(1, Ordering::Relaxed);
                    if i >= roots.len() || shared.stopped() {
                        break;
                    }
                    let (x, y) = roots[i];
                    let mut next = all.clone();
                    inst.remove_biclique(&mut next, x, y);
                    recurse(&inst, &shared, &next, &mut vec![(x, y)]);
                });
            }
        });
    }

    let (optimum, witness, nodes_explored, budget_exhausted) = shared.finish();
    Ok(SolveResult {
        optimum,
        certificate: witness.map(|w| inst.to_bicliques(&w)),
        nodes_explored,
        budget_exhausted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Optimum;
    use crate::verify::cover_multiplicities;

    #[test]
    fn empty_graph_is_zero() {
        let g = Graph::empty(1..=5);
        let r = min_biclique_partition(&g, &Budget::unlimited()).unwrap();
        assert_eq!(r.optimum, Optimum::Resolved(0));
        assert_eq!(r.certificate.unwrap().len(), 0);
    }

    #[test]
    fn complete_graphs_need_n_minus_one() {
        for n in 2..=6u32 {
            let g = Graph::complete(n).unwrap();
            let r = min_biclique_partition(&g, &Budget::unlimited()).unwrap();
            assert_eq!(r.optimum, Optimum::Resolved(n as u64 - 1), "n={n}");
            let cert = r.certificate.unwrap();
            let report = cover_multiplicities(&g, &cert).unwrap();
            assert!(report.is_exact_partition());
        }
    }

    #[test]
    fn g3_of_the_base_scheme_needs_two() {
        let g = Graph::from_edges(1..=6, [(3, 5), (4, 6), (5, 6), (1, 5), (1, 6)]).unwrap();
        let r = min_biclique_partition(&g, &Budget::unlimited()).unwrap();
        assert_eq!(r.optimum, Optimum::Resolved(2));
    }

    #[test]
    fn budget_exhaustion_reports_unresolved_with_witness() {
        let g = Graph::complete(6).unwrap();
        let r = min_biclique_partition(&g, &Budget::nodes(3)).unwrap();
        assert!(r.budget_exhausted);
        match r.optimum {
            Optimum::Unresolved {
                best_upper: Some(u),
            } => assert!(u <= 5),
            other => panic!("expected unresolved, got {other:?}"),
        }
        // the witness is still a valid partition
        let cert = r.certificate.unwrap();
        assert!(cover_multiplicities(&g, &cert)
            .unwrap()
            .is_exact_partition());
    }

    #[test]
    fn sequential_runs_are_deterministic() {
        let g = Graph::complete(5).unwrap();
        let a = min_biclique_partition(&g, &Budget::unlimited()).unwrap();
        let b = min_biclique_partition(&g, &Budget::unlimited()).unwrap();
        assert_eq!(a.optimum, b.optimum);
        assert_eq!(a.nodes_explored, b.nodes_explored);
        assert_eq!(a.certificate.unwrap(), b.certificate.unwrap());
    }

    #[test]
    fn parallel_mode_matches_the_sequential_value() {
        let g = Graph::complete(6).unwrap();
        let seq = min_biclique_partition(&g, &Budget::unlimited()).unwrap();
        let par = min_biclique_partition(
            &g,
            &Budget {
                threads: 4,
                ..Budget::default()
            },
        )
        .unwrap();
        assert_eq!(seq.optimum, par.optimum);
    }
}
