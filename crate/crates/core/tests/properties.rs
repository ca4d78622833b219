//! Property tests for the crate's structural invariants.

use std::collections::BTreeMap;

use proptest::prelude::*;

use bicert::certificate::Certificate;
use bicert::construct::{base_k4k6, blowup_product, trivial_decomposition};
use bicert::exact::{
    min_biclique_partition, min_multipartite_partition, min_product_block_partition_with, Budget,
    Optimum,
};
use bicert::verify::{total_block_edges, verify_partition};
use bicert::weighted::{partition_weighted_combinations, verify_weighted_decomposition};
use bicert::{Graph, MultipartiteBlock};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

// ---------------------------------------------------------------------------
// weighted decompositions hold for any four-way partition

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn weighted_combinations_hold_for_any_partition(
        n in 2u32..=9,
        assignment in proptest::collection::vec(0usize..4, 36),
    ) {
        let host = Graph::complete(n).unwrap();
        let mut parts = [
            Graph::empty(1..=n),
            Graph::empty(1..=n),
            Graph::empty(1..=n),
            Graph::empty(1..=n),
        ];
        for (idx, e) in host.edges().enumerate() {
            parts[assignment[idx]].insert_edge(e.lo(), e.hi()).unwrap();
        }
        let combos =
            partition_weighted_combinations(&parts[0], &parts[1], &parts[2], &parts[3]).unwrap();
        prop_assert_eq!(combos.len(), 4);
        for w in &combos {
            prop_assert!(verify_weighted_decomposition(&host, w).unwrap());
        }
    }
}

// ---------------------------------------------------------------------------
// block edge counts are exactly the product of class sizes

#[test]
fn block_edge_count_is_class_size_product() {
    // every class-size vector over a small value set with product <= 10^4
    let sizes = [1usize, 2, 3, 7, 10];
    for r in 1..=4usize {
        let mut vector = vec![0usize; r];
        loop {
            let shape: Vec<usize> = vector.iter().map(|&i| sizes[i]).collect();
            let product: usize = shape.iter().product();
            if product <= 10_000 {
                let mut next = 1u32;
                let classes: Vec<Vec<u32>> = shape
                    .iter()
                    .map(|&s| {
                        let c: Vec<u32> = (next..next + s as u32).collect();
                        next += s as u32;
                        c
                    })
                    .collect();
                let block = MultipartiteBlock::new(classes).unwrap();
                assert_eq!(block.edge_count(), product as u128);
                assert_eq!(block.edges().count(), product);
            }
            // odometer over the value indices
            let mut pos = 0;
            loop {
                if pos == r {
                    break;
                }
                vector[pos] += 1;
                if vector[pos] < sizes.len() {
                    break;
                }
                vector[pos] = 0;
                pos += 1;
            }
            if pos == r {
                break;
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]
    #[test]
    fn random_block_shapes_enumerate_their_product(
        shape in proptest::collection::vec(1usize..=6, 1..=5),
    ) {
        let mut next = 1u32;
        let classes: Vec<Vec<u32>> = shape
            .iter()
            .map(|&s| {
                let c: Vec<u32> = (next..next + s as u32).collect();
                next += s as u32;
                c
            })
            .collect();
        let block = MultipartiteBlock::new(classes).unwrap();
        let expected: usize = shape.iter().product();
        prop_assert_eq!(block.edges().count(), expected);
        prop_assert_eq!(block.edge_count(), expected as u128);
        // every emitted edge is sorted and contained in the block
        for edge in block.edges() {
            prop_assert!(edge.windows(2).all(|w| w[0] < w[1]));
            prop_assert!(block.contains_edge(&edge));
        }
    }
}

// ---------------------------------------------------------------------------
// exact partitions satisfy the edge-count balance independently of maps

#[test]
fn block_totals_balance_for_exact_partitions() {
    for (n, r) in [(8, 2), (8, 3), (9, 4), (10, 5)] {
        let cert = trivial_decomposition(n, r).unwrap();
        let host_size = cert.host().size();
        assert_eq!(total_block_edges(&cert), host_size);
        assert!(verify_partition(&cert).unwrap().is_exact_partition());
    }
}

// ---------------------------------------------------------------------------
// certificate files are deterministic and round-trip exactly

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]
    #[test]
    fn certificate_json_roundtrip(
        n in 4u32..=9,
        r in 2u32..=4,
        key in "[a-z]{1,8}",
        value in "[a-z0-9 ]{0,12}",
    ) {
        prop_assume!(r <= n);
        let cert = Certificate::Uniform(
            trivial_decomposition(n, r).unwrap().with_metadata(&key, &value),
        );
        let json = cert.to_json();
        let back = Certificate::from_json(&json).unwrap();
        prop_assert_eq!(back.to_json(), json);
    }
}

#[test]
fn product_certificate_roundtrip_is_byte_identical() {
    let cert = Certificate::Product(blowup_product(&base_k4k6(), 2, 1).unwrap());
    let json = cert.to_json();
    let back = Certificate::from_json(&json).unwrap();
    assert_eq!(back.to_json(), json);
}

// ---------------------------------------------------------------------------
// solver invariants

#[test]
fn resolved_optimum_is_relabel_invariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let base = {
        let mut g = Graph::empty(1..=6);
        for u in 1..=6u32 {
            for v in (u + 1)..=6 {
                if rng.gen_bool(0.6) {
                    g.insert_edge(u, v).unwrap();
                }
            }
        }
        g
    };
    let reference = min_biclique_partition(&base, &Budget::unlimited()).unwrap();
    let reference_value = reference.optimum.resolved_value().unwrap();

    for _ in 0..5 {
        let mut images: Vec<u32> = (10..=15).collect();
        images.shuffle(&mut rng);
        let map: BTreeMap<u32, u32> = (1..=6u32).zip(images).collect();
        let relabeled = base.relabel(&map).unwrap();
        let r = min_biclique_partition(&relabeled, &Budget::unlimited()).unwrap();
        assert_eq!(r.optimum.resolved_value().unwrap(), reference_value);
    }
}

#[test]
fn multipartite_optimum_is_relabel_invariant() {
    let edges: Vec<Vec<u32>> = bicert::exact::complete_uniform_edges(5, 3).unwrap();
    let reference = min_multipartite_partition(&edges, 3, &Budget::unlimited()).unwrap();
    // shift all labels by 40
    let shifted: Vec<Vec<u32>> = edges
        .iter()
        .map(|e| e.iter().map(|v| v + 40).collect())
        .collect();
    let r = min_multipartite_partition(&shifted, 3, &Budget::unlimited()).unwrap();
    assert_eq!(r.optimum, reference.optimum);
}

#[test]
fn complete_host_optima_match_the_closed_forms() {
    for n in 2..=6u32 {
        let g = Graph::complete(n).unwrap();
        let r = min_biclique_partition(&g, &Budget::unlimited()).unwrap();
        assert_eq!(r.optimum, Optimum::Resolved(n as u64 - 1), "f2(K_{n})");
    }
    for n in 3..=6u32 {
        let edges = bicert::exact::complete_uniform_edges(n, 3).unwrap();
        let r = min_multipartite_partition(&edges, 3, &Budget::unlimited()).unwrap();
        assert_eq!(r.optimum, Optimum::Resolved(n as u64 - 2), "f3(K_{n})");
    }
}

#[test]
fn weak_product_square_optima_at_tiny_orders() {
    use bicert::transform::{double_blocks, weak_product};
    // f2(K_n * K_n) = (n-1)^2 + 1 at n = 2 and 3
    for (n, expected) in [(2u32, 2u64), (3, 5)] {
        let kn = Graph::complete(n).unwrap();
        let wp = weak_product(&kn, &kn).unwrap();
        let r = min_biclique_partition(&wp, &Budget::unlimited()).unwrap();
        assert_eq!(r.optimum, Optimum::Resolved(expected), "n={n}");
    }

    // doubling the 4-block star product of (K_3, K_3) partitions the weak
    // product with 8 bicliques, which the optimum of 5 shows is not minimal
    let k3 = Graph::complete(3).unwrap();
    let star_product = bicert::construct::best_g_certificate(3, 3).unwrap();
    assert_eq!(star_product.blocks().len(), 4);
    let doubled = double_blocks(star_product.blocks(), &k3, &k3).unwrap();
    assert_eq!(doubled.len(), 8);
    let wp = weak_product(&k3, &k3).unwrap();
    let report = bicert::verify::cover_multiplicities(&wp, &doubled).unwrap();
    assert!(report.is_exact_partition());
}

#[test]
fn resolved_optimum_never_exceeds_construction_counts() {
    // f2 on complete graphs vs the star witness
    for n in 2..=6u32 {
        let g = Graph::complete(n).unwrap();
        let r = min_biclique_partition(&g, &Budget::unlimited()).unwrap();
        assert!(r.optimum.resolved_value().unwrap() <= (n - 1) as u64);
    }
    // f3 vs the interval construction
    let edges = bicert::exact::complete_uniform_edges(5, 3).unwrap();
    let r = min_multipartite_partition(&edges, 3, &Budget::unlimited()).unwrap();
    assert!(
        r.optimum.resolved_value().unwrap()
            <= trivial_decomposition(5, 3).unwrap().blocks().len() as u64
    );
    // g(K_3, K_3) vs the scheme certificate
    let k3 = Graph::complete(3).unwrap();
    let scheme_count =
        bicert::construct::k3_scheme(&bicert::construct::PartitionScheme::all_in_g1(3).unwrap())
            .unwrap()
            .blocks()
            .len() as u64;
    let r = min_product_block_partition_with(&k3, &k3, &Budget::unlimited(), None).unwrap();
    assert!(r.optimum.resolved_value().unwrap() <= scheme_count);
}

#[test]
fn solver_results_fit_bound_tables_when_resolved() {
    use bicert::bounds::{bound_table, Quantity};
    for n in 2..=12u64 {
        // cap the effort; only resolved runs are checked
        let budget = Budget::nodes(200_000);
        let g = Graph::complete(n as u32).unwrap();
        let result = min_biclique_partition(&g, &budget).unwrap();
        if let Optimum::Resolved(v) = result.optimum {
            let report = bound_table(&Quantity::Uniform { n, r: 2 }).unwrap();
            assert!(report.brackets(v as i128), "f2({n}) = {v} fits its table");
        }
    }
}
