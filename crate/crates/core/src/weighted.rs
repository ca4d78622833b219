//! Weighted decompositions: graph lists with exact rational coefficients.

use num::rational::Ratio;
use num::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Exact rational weight.
pub type Weight = Ratio<i64>;

/// A list of subgraphs with rational weights over one vertex universe.
#[derive(Clone, Debug)]
pub struct WeightedGraphList {
    entries: Vec<(Graph, Weight)>,
}

impl WeightedGraphList {
    pub fn new(entries: Vec<(Graph, Weight)>) -> Result<Self> {
        if let Some(first) = entries.first() {
            let universe = first.0.vertex_set();
            for (g, _) in &entries[1..] {
                if g.vertex_set() != universe {
                    return Err(Error::InvalidArguments(
                        "weighted entries must share one vertex universe".into(),
                    ));
                }
            }
        }
        Ok(WeightedGraphList { entries })
    }

    pub fn entries(&self) -> &[(Graph, Weight)] {
        &self.entries
    }
}

/// True iff for every host edge the weights of the entries containing it
/// sum to exactly 1.
pub fn verify_weighted_decomposition(host: &Graph, w: &WeightedGraphList) -> Result<bool> {
    for (g, _) in w.entries() {
        if !g.vertex_set().is_subset(host.vertex_set()) {
            return Err(Error::InvalidArguments(
                "weighted entry uses vertices outside the host".into(),
            ));
        }
    }
    let one = Weight::new(1, 1);
    for e in host.edges() {
        let mut sum = Weight::zero();
        for (g, alpha) in w.entries() {
            if g.contains_edge(e) {
                sum += *alpha;
            }
        }
        if sum != one {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The weighted decompositions of the host induced by a partition of its
/// edge set into four parts `g0..g3`:
///
/// * the plain partition with all weights 1, and
/// * for each i, the signed combination
///   `1*(g0+gj) + 1*(g0+gk) + (-1)*(g0+gi) + 2*gi` with {i,j,k} = {1,2,3}.
///
/// Each list sums to exactly 1 on every host edge whenever the four parts
/// partition the host.
pub fn partition_weighted_combinations(
    g0: &Graph,
    g1: &Graph,
    g2: &Graph,
    g3: &Graph,
) -> Result<Vec<WeightedGraphList>> {
    let parts = [g1, g2, g3];
    let unions: Vec<Graph> = parts.iter().map(|g| g0.union(g)).collect();
    let one = Weight::new(1, 1);
    let two = Weight::new(2, 1);

    let mut out = Vec::with_capacity(4);
    out.push(WeightedGraphList::new(vec![
        (g0.clone(), one),
        (g1.clone(), one),
        (g2.clone(), one),
        (g3.clone(), one),
    ])?);
    for i in 0..3 {
        let j = (i + 1) % 3;
        let k = (i + 2) % 3;
        out.push(WeightedGraphList::new(vec![
            (unions[j].clone(), one),
            (unions[k].clone(), one),
            (unions[i].clone(), -one),
            (parts[i].clone(), two),
        ])?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_weight_one_is_a_decomposition() {
        let k5 = Graph::complete(5).unwrap();
        let w = WeightedGraphList::new(vec![(k5.clone(), Weight::new(1, 1))]).unwrap();
        assert!(verify_weighted_decomposition(&k5, &w).unwrap());
    }

    #[test]
    fn weight_two_is_not() {
        let k5 = Graph::complete(5).unwrap();
        let w = WeightedGraphList::new(vec![(k5.clone(), Weight::new(2, 1))]).unwrap();
        assert!(!verify_weighted_decomposition(&k5, &w).unwrap());
    }

    #[test]
    fn mismatched_universe_is_rejected() {
        assert!(WeightedGraphList::new(vec![
            (Graph::complete(3).unwrap(), Weight::new(1, 1)),
            (Graph::complete(4).unwrap(), Weight::new(1, 1)),
        ])
        .is_err());
    }

    #[test]
    fn fractional_weights_sum_exactly() {
        let k3 = Graph::complete(3).unwrap();
        let w = WeightedGraphList::new(vec![
            (k3.clone(), Weight::new(1, 3)),
            (k3.clone(), Weight::new(2, 3)),
        ])
        .unwrap();
        assert!(verify_weighted_decomposition(&k3, &w).unwrap());
    }
}
