//! The four-biclique odd cover of K_8 and biclique restriction.

use std::collections::BTreeSet;

use crate::blocks::Biclique;
use crate::error::Result;

/// Four K_{3,3}s covering every edge of K_8 an odd number of times.
pub fn odd_cover_k8() -> Vec<Biclique> {
    vec![
        Biclique::new([1, 3, 5], [2, 4, 6]).expect("disjoint"),
        Biclique::new([1, 4, 7], [2, 3, 8]).expect("disjoint"),
        Biclique::new([2, 5, 7], [1, 6, 8]).expect("disjoint"),
        Biclique::new([3, 6, 7], [4, 5, 8]).expect("disjoint"),
    ]
}

/// Intersects every class with `keep`, dropping bicliques that lose a class.
pub fn restrict_bicliques(bicliques: &[Biclique], keep: &BTreeSet<u32>) -> Vec<Biclique> {
    bicliques.iter().filter_map(|b| b.restrict(keep)).collect()
}

/// [`odd_cover_k8`] restricted to six vertices and relabeled back onto
/// 1..=6: an odd cover of K_6 in which two of the bicliques are
/// edge-disjoint.
pub fn odd_cover_k6() -> Result<Vec<Biclique>> {
    let keep: BTreeSet<u32> = [1, 2, 3, 4, 5, 7].into_iter().collect();
    let map: std::collections::BTreeMap<u32, u32> =
        [(1, 1), (2, 2), (3, 3), (4, 4), (5, 5), (7, 6)]
            .into_iter()
            .collect();
    restrict_bicliques(&odd_cover_k8(), &keep)
        .iter()
        .map(|b| b.relabel(&map))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, Graph};
    use crate::verify::cover_multiplicities;

    #[test]
    fn covers_k8_oddly_with_36_incidences() {
        let host = Graph::complete(8).unwrap();
        let cover = odd_cover_k8();
        let report = cover_multiplicities(&host, &cover).unwrap();
        assert!(report.is_odd_cover());
        assert_eq!(report.covered_total(), 36); // 4 * 9
        assert!(!report.is_exact_partition());
    }

    #[test]
    fn edge_12_has_multiplicity_three() {
        // independent count: membership of {1,2} in each class pair
        let cover = odd_cover_k8();
        let e = Edge::new(1, 2).unwrap();
        let by_hand = cover.iter().filter(|b| b.contains_edge(e)).count();
        assert_eq!(by_hand, 3);

        let host = Graph::complete(8).unwrap();
        let report = cover_multiplicities(&host, &cover).unwrap();
        assert_eq!(report.count_of(&e), Some(3));
    }

    #[test]
    fn multiplicities_are_one_or_three() {
        let host = Graph::complete(8).unwrap();
        let report = cover_multiplicities(&host, &odd_cover_k8()).unwrap();
        let counts: Vec<u64> = report.dense_counts().unwrap().map(|(_, c)| c).collect();
        assert_eq!(counts.len(), 28);
        assert!(counts.iter().all(|&c| c == 1 || c == 3));
        // 24 singles + 4 triples = 36 incidences
        assert_eq!(counts.iter().filter(|&&c| c == 3).count(), 4);
    }

    #[test]
    fn restriction_to_six_vertices_is_an_odd_cover_of_k6() {
        let cover = odd_cover_k6().unwrap();
        assert_eq!(cover.len(), 4);
        let host = Graph::complete(6).unwrap();
        let report = cover_multiplicities(&host, &cover).unwrap();
        assert!(report.is_odd_cover());
    }

    #[test]
    fn restrict_keep_all_is_identity() {
        let cover = odd_cover_k8();
        let keep: BTreeSet<u32> = (1..=8).collect();
        assert_eq!(restrict_bicliques(&cover, &keep), cover);
    }

    #[test]
    fn restrict_inside_one_class_drops_everything() {
        let cover = vec![Biclique::new([1, 2], [3, 4]).unwrap()];
        let keep: BTreeSet<u32> = [1, 2].into_iter().collect();
        assert!(restrict_bicliques(&cover, &keep).is_empty());
    }
}
