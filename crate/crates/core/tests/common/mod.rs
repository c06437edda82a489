//! Brute-force oracles and generators shared by the integration tests.
#![allow(dead_code)]

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use unicolor_core::{Colouring, Graph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Graph from the upper-triangle bit list, row by row.
pub fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::new(n).unwrap();
    let mut i = 0;
    for u in 0..n {
        for v in u + 1..n {
            if bits[i] {
                g.add_edge(u, v);
            }
            i += 1;
        }
    }
    g
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2)
            .prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

pub fn arb_nonempty_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    arb_graph(max_n).prop_filter("order 0", |g| g.order() > 0)
}

/// Every set partition of `0..n` with at most `k` blocks, as labels
/// (restricted growth strings).
pub fn set_partitions(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(
        i: usize,
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        used: usize,
        out: &mut Vec<Vec<usize>>,
    ) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..(used + 1).min(k) {
            cur.push(c);
            go(i + 1, n, k, cur, used.max(c + 1), out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), 0, &mut out);
    out
}

fn labels_proper(g: &Graph, labels: &[usize]) -> bool {
    g.edges().all(|(u, v)| labels[u] != labels[v])
}

/// Partitions of `V(g)` into at most `k` independent sets.
pub fn brute_partitions(g: &Graph, k: usize) -> Vec<Colouring> {
    set_partitions(g.order(), k)
        .into_iter()
        .filter(|l| labels_proper(g, l))
        .map(|l| Colouring::from_labels(&l))
        .collect()
}

pub fn brute_chromatic(g: &Graph) -> usize {
    (0..=g.order())
        .find(|&k| !brute_partitions(g, k).is_empty())
        .unwrap()
}

pub fn brute_clique_number(g: &Graph) -> usize {
    let n = g.order();
    (0u64..1 << n)
        .filter(|&bits| {
            let s = VertexSet(bits);
            s.iter().all(|v| (g.neighbours(v) & s).len() == s.len() - 1)
        })
        .map(|bits| bits.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Vertex connectivity: `n - 1` for complete graphs, otherwise the
/// smallest separating set found by trying every subset.
pub fn brute_connectivity(g: &Graph) -> usize {
    let n = g.order();
    if g.is_complete() {
        return n.saturating_sub(1);
    }
    (0u64..1 << n)
        .filter(|&bits| {
            let rest = g.vertices() - VertexSet(bits);
            rest.len() >= 2 && !g.is_connected_within(rest)
        })
        .map(|bits| bits.count_ones() as usize)
        .min()
        .expect("a non-complete graph has a separator")
}

/// Independent sets of size `classes + 1` meeting every class.
pub fn brute_transversals(g: &Graph, c: &Colouring) -> usize {
    let n = g.order();
    let k = c.class_count();
    (0u64..1 << n)
        .filter(|&bits| {
            let s = VertexSet(bits);
            s.len() == k + 1
                && s.iter().all(|v| (g.neighbours(v) & s).is_empty())
                && (0..k).all(|i| !(c.class(i) & s).is_empty())
        })
        .count()
}
