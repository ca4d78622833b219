//! Minimum partition of an explicit r-graph into complete r-partite blocks.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::blocks::MultipartiteBlock;
use crate::construct::trivial_decomposition;
use crate::error::{Error, Result};
use crate::num_util::binomial;

use super::{Budget, EdgeBits, SearchShared, SolveResult};

/// Classes as sorted vertex-id lists; class i contains the i-th pivot vertex.
type IdBlock = Vec<Vec<u8>>;

struct Instance {
    labels: Vec<u32>,
    r: usize,
    /// sorted id-vectors, one per host edge
    edges: Vec<Vec<u8>>,
}

impl Instance {
    fn new(raw_edges: &[Vec<u32>], r: u32) -> Result<Self> {
        let r = r as usize;
        if r == 0 {
            return Err(Error::InvalidArguments("r must be positive".into()));
        }
        let mut labels: Vec<u32> = raw_edges.iter().flatten().copied().collect();
        labels.sort_unstable();
        labels.dedup();
        if labels.len() > 64 {
            return Err(Error::InvalidArguments(
                "exact solvers handle at most 64 vertices".into(),
            ));
        }
        let id_of = |v: u32| labels.binary_search(&v).expect("vertex present") as u8;
        let mut edges: Vec<Vec<u8>> = Vec::with_capacity(raw_edges.len());
        for e in raw_edges {
            let mut ids: Vec<u8> = e.iter().map(|&v| id_of(v)).collect();
            ids.sort_unstable();
            ids.dedup();
            if ids.len() != r {
                return Err(Error::InvalidArguments(format!(
                    "edge {e:?} is not an {r}-set"
                )));
            }
            edges.push(ids);
        }
        edges.sort();
        edges.dedup();
        Ok(Instance { labels, r, edges })
    }

    fn edge_index(&self, sorted_ids: &[u8]) -> Option<usize> {
        self.edges
            .binary_search_by(|e| e.as_slice().cmp(sorted_ids))
            .ok()
    }

    /// Walks every transversal of the classes; aborts early when `f` does.
    fn for_each_transversal<F: FnMut(&[u8]) -> bool>(classes: &[Vec<u8>], mut f: F) -> bool {
        let mut idx = vec![0usize; classes.len()];
        let mut scratch = vec![0u8; classes.len()];
        loop {
            for (slot, (&i, class)) in scratch.iter_mut().zip(idx.iter().zip(classes)) {
                *slot = class[i];
            }
            let mut sorted = scratch.clone();
            sorted.sort_unstable();
            if !f(&sorted) {
                return false;
            }
            let mut pos = classes.len();
            loop {
                if pos == 0 {
                    return true;
                }
                pos -= 1;
                idx[pos] += 1;
                if idx[pos] < classes[pos].len() {
                    break;
                }
                idx[pos] = 0;
            }
        }
    }

    fn remove_block(&self, remaining: &mut EdgeBits, block: &IdBlock) {
        Self::for_each_transversal(block, |edge| {
            let id = self.edge_index(edge).expect("block edges are host edges");
            remaining.clear(id);
            true
        });
    }

    fn block_size(block: &IdBlock) -> u64 {
        block.iter().map(|c| c.len() as u64).product()
    }

    fn to_blocks(&self, blocks: &[IdBlock]) -> Vec<MultipartiteBlock> {
        blocks
            .iter()
            .map(|b| {
                MultipartiteBlock::new(b.iter().map(|c| {
                    c.iter()
                        .map(|&i| self.labels[i as usize])
                        .collect::<Vec<_>>()
                }))
                .expect("solver classes are disjoint and nonempty")
            })
            .collect()
    }

    /// Trivial interval partition when the host is complete, one block per
    /// edge otherwise.
    fn seed(&self) -> Result<Vec<IdBlock>> {
        let nv = self.labels.len() as u64;
        let complete = binomial(nv, self.r as u64)? == self.edges.len() as u128;
        if complete && !self.edges.is_empty() {
            let cert = trivial_decomposition(nv as u32, self.r as u32)?;
            Ok(cert
                .blocks()
                .iter()
                .map(|b| {
                    b.classes()
                        .iter()
                        .map(|c| c.iter().map(|&v| (v - 1) as u8).collect())
                        .collect()
                })
                .collect())
        } else {
            Ok(self
                .edges
                .iter()
                .map(|e| e.iter().map(|&v| vec![v]).collect())
                .collect())
        }
    }
}

/// All complete r-partite blocks inside `remaining` that contain the pivot
/// edge. Classes are identified by the pivot vertex they contain, so each
/// block arises from exactly one assignment of the other vertices.
fn children(inst: &Instance, remaining: &EdgeBits) -> Vec<IdBlock> {
    let pivot = remaining.first_set().expect("nonempty remaining");
    let base: IdBlock = inst.edges[pivot].iter().map(|&v| vec![v]).collect();
    let others: Vec<u8> = (0..inst.labels.len() as u8)
        .filter(|v| !inst.edges[pivot].contains(v))
        .collect();

    let mut out = Vec::new();
    let mut current = base;
    assign(inst, remaining, &others, 0, &mut current, &mut out);
    out.sort_by(|a, b| {
        Instance::block_size(b)
            .cmp(&Instance::block_size(a))
            .then_with(|| a.cmp(b))
    });
    out
}

fn assign(
    inst: &Instance,
    remaining: &EdgeBits,
    others: &[u8],
    at: usize,
    current: &mut IdBlock,
    out: &mut Vec<IdBlock>,
) {
    if at == others.len() {
        out.push(current.clone());
        return;
    }
    let w = others[at];
    // leave w out
    assign(inst, remaining, others, at + 1, current, out);
    // or try each class; growth is monotone, so a failed check prunes
    for c in 0..inst.r {
        if extension_fits(inst, remaining, current, c, w) {
            current[c].push(w);
            assign(inst, remaining, others, at + 1, current, out);
            current[c].pop();
        }
    }
}

/// Every new transversal created by adding `w` to class `c` must still be
/// an uncovered host edge.
fn extension_fits(
    inst: &Instance,
    remaining: &EdgeBits,
    current: &IdBlock,
    c: usize,
    w: u8,
) -> bool {
    let others: Vec<Vec<u8>> = current
        .iter()
        .enumerate()
        .filter(|(i, _)| *i != c)
        .map(|(_, cl)| cl.clone())
        .collect();
    Instance::for_each_transversal(&others, |partial| {
        let mut edge = partial.to_vec();
        let pos = edge.partition_point(|&v| v < w);
        edge.insert(pos, w);
        match inst.edge_index(&edge) {
            Some(id) => remaining.get(id),
            None => false,
        }
    })
}

fn recurse(
    inst: &Instance,
    shared: &SearchShared<Vec<IdBlock>>,
    remaining: &EdgeBits,
    parts: &mut Vec<IdBlock>,
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
    for block in children(inst, remaining) {
        if shared.stopped() {
            return;
        }
        let mut next = remaining.clone();
        inst.remove_block(&mut next, &block);
        parts.push(block);
        recurse(inst, shared, &next, parts);
        parts.pop();
    }
}

/// Exact minimum number of complete r-partite r-graphs partitioning the
/// given r-graph's edge set. Complete search with the same contract as
/// [`super::min_biclique_partition`].
pub fn min_multipartite_partition(
    edges: &[Vec<u32>],
    r: u32,
    budget: &Budget,
) -> Result<SolveResult<MultipartiteBlock>> {
    let inst = Instance::new(edges, r)?;
    let all = EdgeBits::full(inst.edges.len());

    if all.is_empty() {
        return Ok(SolveResult {
            optimum: super::Optimum::Resolved(0),
            certificate: Some(Vec::new()),
            nodes_explored: 0,
            budget_exhausted: false,
        });
    }

    let seed = inst.seed()?;
    let shared = SearchShared::new(budget, seed.len() as u64, seed, None);

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
                    let mut next = all.clone();
                    inst.remove_block(&mut next, &roots[i]);
                    recurse(&inst, &shared, &next, &mut vec![roots[i].clone()]);
                });
            }
        });
    }

    let (optimum, witness, nodes_explored, budget_exhausted) = shared.finish();
    Ok(SolveResult {
        optimum,
        certificate: witness.map(|w| inst.to_blocks(&w)),
        nodes_explored,
        budget_exhausted,
    })
}

/// The edge list of K_n^(r): all r-subsets of 1..=n.
pub fn complete_uniform_edges(n: u32, r: u32) -> Result<Vec<Vec<u32>>> {
    if r == 0 || n < r {
        return Err(Error::InvalidArguments(format!(
            "complete uniform edges need n >= r >= 1, got n={n}, r={r}"
        )));
    }
    let mut out = Vec::new();
    let mut current: Vec<u32> = (1..=r).collect();
    loop {
        out.push(current.clone());
        // next combination in lexicographic order
        let mut i = r as usize;
        loop {
            if i == 0 {
                return Ok(out);
            }
            i -= 1;
            if current[i] < n - (r - 1 - i as u32) {
                current[i] += 1;
                for j in (i + 1)..r as usize {
                    current[j] = current[j - 1] + 1;
                }
                break;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificate::{UniformCertificate, UniformHost};
    use crate::exact::Optimum;
    use crate::verify::verify_partition;

    #[test]
    fn complete_edge_lists() {
        assert_eq!(complete_uniform_edges(4, 4).unwrap().len(), 1);
        assert_eq!(complete_uniform_edges(5, 3).unwrap().len(), 10);
        assert_eq!(complete_uniform_edges(6, 2).unwrap().len(), 15);
    }

    #[test]
    fn single_edge_host_needs_one_block() {
        let edges = complete_uniform_edges(4, 4).unwrap();
        let r = min_multipartite_partition(&edges, 4, &Budget::unlimited()).unwrap();
        assert_eq!(r.optimum, Optimum::Resolved(1));
    }

    #[test]
    fn k5_3_needs_three() {
        let edges = complete_uniform_edges(5, 3).unwrap();
        let r = min_multipartite_partition(&edges, 3, &Budget::unlimited()).unwrap();
        assert_eq!(r.optimum, Optimum::Resolved(3));
        // witness verifies as an exact partition
        let cert =
            UniformCertificate::new(UniformHost::complete(5, 3).unwrap(), r.certificate.unwrap());
        assert!(verify_partition(&cert).unwrap().is_exact_partition());
    }

    #[test]
    fn k4_3_needs_two() {
        let edges = complete_uniform_edges(4, 3).unwrap();
        let r = min_multipartite_partition(&edges, 3, &Budget::unlimited()).unwrap();
        assert_eq!(r.optimum, Optimum::Resolved(2));
    }

    #[test]
    fn non_uniform_edge_is_rejected() {
        let edges = vec![vec![1, 2, 3], vec![1, 2]];
        assert!(min_multipartite_partition(&edges, 3, &Budget::unlimited()).is_err());
    }

    #[test]
    fn budget_never_resolves_wrongly() {
        let edges = complete_uniform_edges(6, 3).unwrap();
        let r = min_multipartite_partition(&edges, 3, &Budget::nodes(2)).unwrap();
        match r.optimum {
            Optimum::Unresolved {
                best_upper: Some(u),
            } => {
                // the trivial seed: binomial(6-2, 1) = 4
                assert_eq!(u, 4);
            }
            Optimum::Resolved(v) => assert_eq!(v, 4),
            other => panic!("unexpected {other:?}"),
        }
    }
}
