mod common;

use std::collections::BTreeSet;

use common::*;
use unicolor_core::budget::Unlimited;
use unicolor_core::canon::{canonical_form, CanonicalForm};
use unicolor_core::census::{find_unique_k_witnesses, generate, CensusTask};
use unicolor_core::colouring::is_uniquely_k_colourable;
use unicolor_core::{Graph, VertexSet};

fn generated(task: CensusTask) -> Vec<Graph> {
    let mut out = Vec::new();
    let r = generate(task, &mut Unlimited, |g| out.push(*g)).unwrap();
    assert!(r.is_complete());
    out
}

fn forms(graphs: &[Graph]) -> BTreeSet<CanonicalForm> {
    graphs.iter().map(|g| canonical_form(g).unwrap()).collect()
}

/// Isomorphism classes of all graphs on `n` vertices by labeled enumeration.
fn labeled_classes(n: usize) -> BTreeSet<CanonicalForm> {
    let pairs = n * n.saturating_sub(1) / 2;
    (0u64..1 << pairs)
        .map(|mask| {
            let bits: Vec<bool> = (0..pairs).map(|i| mask >> i & 1 == 1).collect();
            canonical_form(&graph_from_bits(n, &bits)).unwrap()
        })
        .collect()
}

/// Classes on `n + 1` vertices: every class on `n` vertices plus one
/// vertex joined to every possible neighbourhood. Hereditary filters may
/// be applied level by level.
fn extend_classes(
    prev: &BTreeSet<CanonicalForm>,
    keep: impl Fn(&Graph) -> bool,
) -> BTreeSet<CanonicalForm> {
    let mut out = BTreeSet::new();
    for f in prev {
        let g = f.graph();
        for bits in 0u64..1 << g.order() {
            let child = g.with_vertex(VertexSet(bits)).unwrap();
            if keep(&child) {
                out.insert(canonical_form(&child).unwrap());
            }
        }
    }
    out
}

/// Classes per order `0..=max`, restricted by a hereditary property.
fn class_levels(max: usize, keep: impl Fn(&Graph) -> bool + Copy) -> Vec<BTreeSet<CanonicalForm>> {
    let mut levels = vec![BTreeSet::from([
        canonical_form(&Graph::new(0).unwrap()).unwrap()
    ])];
    for _ in 0..max {
        let next = extend_classes(levels.last().unwrap(), keep);
        levels.push(next);
    }
    levels
}

#[test]
fn extension_oracle_agrees_with_labeled_enumeration() {
    let levels = class_levels(5, |_| true);
    for (n, level) in levels.iter().enumerate() {
        assert_eq!(*level, labeled_classes(n), "n = {n}");
    }
    assert_eq!(levels[4].len(), 11);
}

#[test]
fn generation_is_isomorph_free_and_complete_up_to_seven() {
    let all = class_levels(7, |_| true);
    let tf = class_levels(7, |g| !g.has_triangle());
    for n in 0..=7 {
        for triangle_free in [false, true] {
            for connected in [false, true] {
                for min_degree in 0..=2 {
                    for edges in [None, Some((n, 2 * n))] {
                        let task = CensusTask {
                            triangle_free,
                            connected,
                            min_degree,
                            edges,
                            ..CensusTask::new(n, 3)
                        };
                        let got = generated(task);
                        let got_forms = forms(&got);
                        assert_eq!(got_forms.len(), got.len(), "duplicate class for {task:?}");
                        let source = if triangle_free { &tf[n] } else { &all[n] };
                        let want: BTreeSet<CanonicalForm> = source
                            .iter()
                            .filter(|f| {
                                let g = f.graph();
                                (!connected || g.is_connected())
                                    && g.min_degree().unwrap_or(0) >= min_degree
                                    && edges.is_none_or(|(lo, hi)| (lo..=hi).contains(&g.size()))
                            })
                            .copied()
                            .collect();
                        assert_eq!(got_forms, want, "{task:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn known_class_counts() {
    let all = [1, 1, 2, 4, 11, 34, 156, 1044, 12346];
    for (n, &want) in all.iter().enumerate() {
        assert_eq!(
            generated(CensusTask::new(n, 3)).len(),
            want,
            "all graphs, n = {n}"
        );
    }
    let tf = [1, 1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172];
    for (n, &want) in tf.iter().enumerate() {
        let task = CensusTask {
            triangle_free: true,
            ..CensusTask::new(n, 3)
        };
        assert_eq!(generated(task).len(), want, "triangle-free, n = {n}");
    }
}

#[test]
fn pruned_generation_matches_post_filter_at_nine() {
    let tf = CensusTask {
        triangle_free: true,
        ..CensusTask::new(9, 3)
    };
    let pruned = CensusTask {
        connected: true,
        min_degree: 2,
        ..tf
    };
    let want: Vec<Graph> = generated(tf)
        .into_iter()
        .filter(|g| g.is_connected() && g.min_degree() >= Some(2))
        .collect();
    let got = generated(pruned);
    assert_eq!(got.len(), want.len());
    assert_eq!(forms(&got), forms(&want));
}

fn witness_forms_by_filter(task: CensusTask) -> BTreeSet<CanonicalForm> {
    let plain = CensusTask {
        triangle_free: task.triangle_free,
        ..CensusTask::new(task.n, task.k)
    };
    let mut out = BTreeSet::new();
    generate(plain, &mut Unlimited, |g| {
        let in_window = task
            .edges
            .is_none_or(|(lo, hi)| (lo..=hi).contains(&g.size()));
        if in_window
            && g.min_degree().unwrap_or(0) >= task.min_degree
            && is_uniquely_k_colourable(g, task.k)
        {
            let parts = brute_partitions(g, task.k);
            if !task.balanced || parts[0].is_balanced() {
                out.insert(canonical_form(g).unwrap());
            }
        }
    })
    .unwrap();
    out
}

#[test]
fn witness_search_matches_unpruned_filtering() {
    let mut tasks = Vec::new();
    for n in 1..=8 {
        for k in 2..=4 {
            tasks.push(CensusTask::new(n, k));
            if n % k == 0 {
                tasks.push(CensusTask {
                    balanced: true,
                    ..CensusTask::new(n, k)
                });
            }
        }
    }
    for n in [3, 6, 9] {
        tasks.push(CensusTask {
            triangle_free: true,
            balanced: true,
            ..CensusTask::new(n, 3)
        });
    }
    for n in 7..=9 {
        tasks.push(CensusTask {
            triangle_free: true,
            ..CensusTask::new(n, 3)
        });
    }
    tasks.push(CensusTask {
        edges: Some((9, 11)),
        min_degree: 3,
        ..CensusTask::new(7, 3)
    });
    for task in tasks {
        let r = find_unique_k_witnesses(task, &mut Unlimited).unwrap();
        assert!(r.is_complete());
        let got: Vec<Graph> = r.witnesses.iter().map(|w| w.graph).collect();
        assert_eq!(forms(&got).len(), got.len());
        assert_eq!(forms(&got), witness_forms_by_filter(task), "{task:?}");
        assert_eq!(r.stats.witnesses as usize, got.len());
        for w in &r.witnesses {
            assert!(is_uniquely_k_colourable(&w.graph, task.k));
            assert_eq!(
                brute_partitions(&w.graph, task.k),
                vec![w.colouring.clone()]
            );
        }
    }
}

#[test]
fn no_triangle_free_witness_below_twelve() {
    for n in [3, 6, 9] {
        let task = CensusTask {
            triangle_free: true,
            balanced: true,
            ..CensusTask::new(n, 3)
        };
        let r = find_unique_k_witnesses(task, &mut Unlimited).unwrap();
        assert!(r.is_complete());
        assert!(r.witnesses.is_empty(), "n = {n}");
    }
}
