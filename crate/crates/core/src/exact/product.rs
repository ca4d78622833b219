//! Minimum partition of E(G) x E(H) into products of bicliques.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::blocks::{Biclique, ProductBlock};
use crate::bounds::{g_k3_bounds, g_k4_bounds, g_weakproduct_lower};
use crate::error::{Error, Result};
use crate::graph::Graph;

use super::{enumerate_bicliques_at, mask_bits, Budget, EdgeBits, SearchShared, SolveResult};

/// A sub-biclique of one factor together with its edge ids in that factor.
struct Cand {
    x: u64,
    y: u64,
    edge_ids: Vec<u32>,
}

struct Factor {
    labels: Vec<u32>,
    /// edge endpoints as vertex ids, in sorted edge order
    edge_ends: Vec<(usize, usize)>,
    rows: Vec<u64>,
    /// per edge: every sub-biclique of the factor containing it
    cands: Vec<Vec<Cand>>,
}

impl Factor {
    fn new(g: &Graph) -> Result<Self> {
        let labels: Vec<u32> = g.vertices().collect();
        let nv = labels.len();
        if nv > 64 {
            return Err(Error::InvalidArguments(
                "exact solvers handle at most 64 vertices".into(),
            ));
        }
        let id_of = |v: u32| labels.binary_search(&v).expect("vertex present");
        let mut rows = vec![0u64; nv];
        let mut edge_of = vec![vec![usize::MAX; nv]; nv];
        let mut edge_ends = Vec::with_capacity(g.edge_count());
        for e in g.edges() {
            let (a, b) = (id_of(e.lo()), id_of(e.hi()));
            rows[a] |= 1u64 << b;
            rows[b] |= 1u64 << a;
            edge_of[a][b] = edge_ends.len();
            edge_of[b][a] = edge_ends.len();
            edge_ends.push((a, b));
        }
        let mut cands = Vec::with_capacity(edge_ends.len());
        for &(u, v) in &edge_ends {
            let mut list: Vec<Cand> = enumerate_bicliques_at(u, v, &rows)
                .into_iter()
                .map(|(x, y)| {
                    let mut edge_ids = Vec::new();
                    for a in mask_bits(x) {
                        for b in mask_bits(y) {
                            edge_ids.push(edge_of[a][b] as u32);
                        }
                    }
                    Cand { x, y, edge_ids }
                })
                .collect();
            list.sort_by(|a, b| {
                b.edge_ids
                    .len()
                    .cmp(&a.edge_ids.len())
                    .then(a.x.cmp(&b.x))
                    .then(a.y.cmp(&b.y))
            });
            cands.push(list);
        }
        Ok(Factor {
            labels,
            edge_ends,
            rows,
            cands,
        })
    }

    fn biclique(&self, x: u64, y: u64) -> Biclique {
        Biclique::new(
            mask_bits(x).map(|i| self.labels[i]),
            mask_bits(y).map(|i| self.labels[i]),
        )
        .expect("solver masks are disjoint and nonempty")
    }

    /// Lower-endpoint star partition of the factor's edges.
    fn star_parts(&self) -> Vec<(u64, u64)> {
        let nv = self.rows.len();
        let mut out = Vec::new();
        for a in 0..nv {
            let higher = self.rows[a] & !((1u64 << a) | ((1u64 << a) - 1));
            if higher != 0 {
                out.push((1u64 << a, higher));
            }
        }
        out
    }
}

/// (left x, left y, right x, right y) masks.
type PartMasks = (u64, u64, u64, u64);

struct Instance {
    left: Factor,
    right: Factor,
}

impl Instance {
    fn pair_id(&self, le: usize, re: usize) -> usize {
        le * self.right.edge_ends.len() + re
    }

    fn remove(&self, remaining: &mut EdgeBits, l: &Cand, r: &Cand) {
        for &li in &l.edge_ids {
            for &ri in &r.edge_ids {
                remaining.clear(self.pair_id(li as usize, ri as usize));
            }
        }
    }

    fn star_product_seed(&self) -> Vec<PartMasks> {
        let mut out = Vec::new();
        for &(lx, ly) in &self.left.star_parts() {
            for &(rx, ry) in &self.right.star_parts() {
                out.push((lx, ly, rx, ry));
            }
        }
        out
    }

    fn to_blocks(&self, parts: &[PartMasks]) -> Vec<ProductBlock> {
        parts
            .iter()
            .map(|&(lx, ly, rx, ry)| {
                ProductBlock::new(self.left.biclique(lx, ly), self.right.biclique(rx, ry))
            })
            .collect()
    }
}

fn children<'a>(inst: &'a Instance, remaining: &EdgeBits) -> Vec<(&'a Cand, &'a Cand)> {
    let pivot = remaining.first_set().expect("nonempty remaining");
    let m = inst.right.edge_ends.len();
    let (le, re) = (pivot / m, pivot % m);
    let mut out = Vec::new();
    for l in &inst.left.cands[le] {
        for r in &inst.right.cands[re] {
            let fits = l.edge_ids.iter().all(|&li| {
                r.edge_ids
                    .iter()
                    .all(|&ri| remaining.get(inst.pair_id(li as usize, ri as usize)))
            });
            if fits {
                out.push((l, r));
            }
        }
    }
    out.sort_by(|a, b| {
        let ca = a.0.edge_ids.len() * a.1.edge_ids.len();
        let cb = b.0.edge_ids.len() * b.1.edge_ids.len();
        cb.cmp(&ca)
            .then((a.0.x, a.0.y, a.1.x, a.1.y).cmp(&(b.0.x, b.0.y, b.1.x, b.1.y)))
    });
    out
}

fn recurse(
    inst: &Instance,
    shared: &SearchShared<Vec<PartMasks>>,
    remaining: &EdgeBits,
    parts: &mut Vec<PartMasks>,
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
    for (l, r) in children(inst, remaining) {
        if shared.stopped() {
            return;
        }
        let mut next = remaining.clone();
        inst.remove(&mut next, l, r);
        parts.push((l.x, l.y, r.x, r.y));
        recurse(inst, shared, &next, parts);
        parts.pop();
    }
}

/// The strongest applicable closed-form lower bound for the minimum block
/// count of E(g) x E(h), when one is known for these hosts.
pub fn product_lower_bound(g: &Graph, h: &Graph) -> Option<u64> {
    if !g.is_complete() || !h.is_complete() {
        return None;
    }
    let (a, b) = (g.vertex_count() as u64, h.vertex_count() as u64);
    let mut best: Option<u64> = None;
    let mut push = |v: u64| {
        best = Some(best.map_or(v, |b: u64| b.max(v)));
    };
    if a == 3 && b >= 1 {
        push(g_k3_bounds(b).expect("b >= 1").0);
    }
    if b == 3 && a >= 1 {
        push(g_k3_bounds(a).expect("a >= 1").0);
    }
    if a == 4 && b >= 1 {
        push(g_k4_bounds(b).expect("b >= 1").0);
    }
    if b == 4 && a >= 1 {
        push(g_k4_bounds(a).expect("a >= 1").0);
    }
    if a == b && a >= 1 {
        push(g_weakproduct_lower(a).expect("a >= 1"));
    }
    best
}

/// [`min_product_block_partition`] with the initial lower bound under the
/// caller's control. `None` disables bound-assisted early termination, so
/// the run proves its optimum by exhaustion alone.
pub fn min_product_block_partition_with(
    g: &Graph,
    h: &Graph,
    budget: &Budget,
    lower: Option<u64>,
) -> Result<SolveResult<ProductBlock>> {
    let inst = Instance {
        left: Factor::new(g)?,
        right: Factor::new(h)?,
    };
    let all = EdgeBits::full(inst.left.edge_ends.len() * inst.right.edge_ends.len());

    if all.is_empty() {
        return Ok(SolveResult {
            optimum: super::Optimum::Resolved(0),
            certificate: Some(Vec::new()),
            nodes_explored: 0,
            budget_exhausted: false,
        });
    }

    let seed = inst.star_product_seed();
    let shared = SearchShared::new(budget, seed.len() as u64, seed, lower);

    if !shared.stopped() {
        if budget.threads <= 1 {
            recurse(&inst, &shared, &all, &mut Vec::new());
        } else {
            let roots = children(&inst, &all);
            shared.tick();
            let cursor = AtomicUsize::new(0);
            std::thread::scope(|scope| {
                for _ in 0..budget.threads.min(roots.len()) {
                    scope.spawn(|| loop {
                        let i = cursor.fetch_add(1, Ordering::Relaxed);
                        if i >= roots.len() || shared.stopped() {
                            break;
                        }
                        let (l, r) = roots[i];
                        let mut next = all.clone();
                        inst.remove(&mut next, l, r);
                        recurse(&inst, &shared, &next, &mut vec![(l.x, l.y, r.x, r.y)]);
                    });
                }
            });
        }
    }

    let (optimum, witness, nodes_explored, budget_exhausted) = shared.finish();
    Ok(SolveResult {
        optimum,
        certificate: witness.map(|w| inst.to_blocks(&w)),
        nodes_explored,
        budget_exhausted,
    })
}

/// Exact minimum number of product blocks partitioning E(g) x E(h), seeded
/// with the known closed-form lower bound when the hosts admit one (a
/// matching witness then resolves the search early).
pub fn min_product_block_partition(
    g: &Graph,
    h: &Graph,
    budget: &Budget,
) -> Result<SolveResult<ProductBlock>> {
    min_product_block_partition_with(g, h, budget, product_lower_bound(g, h))
}
