mod common;

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use common::*;
use rand::Rng;
use unicolor_core::budget::Unlimited;
use unicolor_core::colouring::{
    chromatic_number, count_colour_partitions, count_colour_partitions_within, count_from,
    for_each_partition, is_uniquely_k_colourable, partition_frontier,
};
use unicolor_core::graph::{clique_number, vertex_connectivity_at_least};

#[test]
fn partition_counts_match_set_partition_enumeration() {
    let mut r = rng(0x5eed);
    for trial in 0..600 {
        let n = r.random_range(0..=8);
        let p = r.random_range(0.1..0.9);
        let g = random_graph(&mut r, n, p);
        let k = r.random_range(1..=5);
        let want = brute_partitions(&g, k).len() as u64;
        assert_eq!(
            count_colour_partitions(&g, k, u64::MAX),
            want,
            "trial {trial}: {g:?} k={k}"
        );
        // the cap is honoured
        let capped = count_colour_partitions_within(&g, k, 2, &mut Unlimited).unwrap();
        assert_eq!(capped.count, want.min(2));
        assert_eq!(capped.capped, want >= 2);
    }
}

#[test]
fn enumerated_partitions_are_exactly_the_brute_force_ones() {
    let mut r = rng(7);
    for _ in 0..100 {
        let n = r.random_range(1..=7);
        let g = random_graph(&mut r, n, 0.4);
        let k = r.random_range(1..=4);
        let want: BTreeSet<Vec<usize>> = brute_partitions(&g, k)
            .iter()
            .map(|c| c.labels().collect())
            .collect();
        let mut got = BTreeSet::new();
        for_each_partition(&g, k, &mut Unlimited, |c| {
            assert!(
                got.insert(c.labels().collect::<Vec<_>>()),
                "duplicate partition"
            );
            ControlFlow::Continue(())
        })
        .unwrap();
        assert_eq!(got, want);
    }
}

#[test]
fn frontier_split_sums_to_the_total() {
    let mut r = rng(11);
    for _ in 0..100 {
        let n = r.random_range(1..=8);
        let g = random_graph(&mut r, n, 0.5);
        let k = r.random_range(2..=4);
        let depth = r.random_range(0..=4);
        let total: u64 = partition_frontier(&g, k, depth)
            .iter()
            .map(|p| {
                count_from(&g, k, p, u64::MAX, &mut Unlimited)
                    .unwrap()
                    .count
            })
            .sum();
        assert_eq!(total, count_colour_partitions(&g, k, u64::MAX));
    }
}

#[test]
fn chromatic_number_and_uniqueness_match_brute_force() {
    let mut r = rng(3);
    for _ in 0..300 {
        let n = r.random_range(0..=8);
        let p = r.random_range(0.2..0.9);
        let g = random_graph(&mut r, n, p);
        let chi = brute_chromatic(&g);
        assert_eq!(chromatic_number(&g), chi);
        for k in 1..=4 {
            let parts = brute_partitions(&g, k);
            let unique = parts.len() == 1 && parts[0].class_count() == k;
            assert_eq!(is_uniquely_k_colourable(&g, k), unique, "{g:?} k={k}");
        }
    }
}

#[test]
fn clique_number_matches_subset_search() {
    let mut r = rng(5);
    for _ in 0..1000 {
        let n = r.random_range(0..=10);
        let p = r.random_range(0.1..0.95);
        let g = random_graph(&mut r, n, p);
        assert_eq!(clique_number(&g), brute_clique_number(&g), "{g:?}");
    }
}

#[test]
fn connectivity_matches_separator_search() {
    let mut r = rng(9);
    for _ in 0..200 {
        let n = r.random_range(1..=12);
        let p = r.random_range(0.3..0.95);
        let g = random_graph(&mut r, n, p);
        let kappa = brute_connectivity(&g);
        for t in 0..=n {
            let want = t == 0 || (n > t && kappa >= t);
            assert_eq!(
                vertex_connectivity_at_least(&g, t),
                want,
                "{g:?} t={t} kappa={kappa}"
            );
        }
    }
}
