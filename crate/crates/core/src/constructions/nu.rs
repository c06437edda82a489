//! The `ν` operator.
//!
//! From `H` with classes `A_1..A_k` it builds `G` on `(k + 1) n` vertices:
//! `H` itself, copies `H^1..H^k` (copy `p` of vertex `v` has index
//! `n p + v`), each copy joined to `H` as in the lexicographic product with
//! `K̄_2`, and for every `v ∈ A_p` a star centred at `v^p` over the other
//! copies of `v`. The new colouring keeps `v` and its non-central copies in
//! the class of `v` and puts every centre `v^p` into one fresh class.

use alloc::vec::Vec;

use super::{ColouredGraph, ConstructionError};
use crate::colouring::{is_proper, Colouring};
use crate::graph::{Graph, MAX_ORDER};

pub fn nu(h: &ColouredGraph) -> Result<ColouredGraph, ConstructionError> {
    let n = h.order();
    let k = h.k();
    let order = (k + 1) * n;
    if order > MAX_ORDER {
        return Err(ConstructionError::Overflow { order });
    }
    let class = |v: usize| h.colouring().class_of(v);
    let copy = |v: usize, p: usize| n * p + v;

    let mut g = Graph::new(order)?;
    for (u, v) in h.graph().edges() {
        g.add_edge(u, v);
        for p in 1..=k {
            g.add_edge(copy(u, p), copy(v, p));
            g.add_edge(u, copy(v, p));
            g.add_edge(v, copy(u, p));
        }
    }
    for v in 0..n {
        let centre = class(v) + 1;
        for q in (1..=k).filter(|&q| q != centre) {
            g.add_edge(copy(v, centre), copy(v, q));
        }
    }

    let mut labels = Vec::with_capacity(order);
    labels.extend((0..n).map(class));
    for p in 1..=k {
        labels.extend((0..n).map(|v| if class(v) + 1 == p { k } else { class(v) }));
    }
    let result = ColouredGraph::new(g, Colouring::from_labels(&labels))?;
    if let Err(what) = nu_postconditions(h, &result) {
        panic!("nu post-condition violated: {what}");
    }
    Ok(result)
}

/// Checks the structural identities every `ν(H)` satisfies: order
/// `(k + 1) n`, size `(3k + 1)|E(H)| + (k - 1) n`, a proper colouring with
/// `k + 1` classes of sizes `k |A_i|` and `n`, `H` induced on `0..n`, and
/// the per-vertex degrees `(k + 1) d(v)`, `2 d(v) + k - 1` for star centres
/// and `2 d(v) + 1` for the other copies.
pub fn nu_postconditions(h: &ColouredGraph, g: &ColouredGraph) -> Result<(), &'static str> {
    let (hg, gg) = (h.graph(), g.graph());
    let n = hg.order();
    let k = h.k();
    if gg.order() != (k + 1) * n {
        return Err("order");
    }
    if gg.size() != (3 * k + 1) * hg.size() + (k - 1) * n {
        return Err("size");
    }
    if !is_proper(gg, g.colouring()) || g.k() != k + 1 && n > 0 {
        return Err("colouring");
    }
    let old = h.colouring().class_sizes();
    let new = g.colouring().class_sizes();
    if n > 0 && (old.iter().zip(&new).any(|(&a, &b)| b != k * a) || new[k] != n) {
        return Err("class sizes");
    }
    if gg.induced(hg.vertices()) != *hg {
        return Err("induced copy of H");
    }
    for v in 0..n {
        let d = hg.degree(v);
        if gg.degree(v) != (k + 1) * d {
            return Err("degree of an original vertex");
        }
        for p in 1..=k {
            let want = if h.colouring().class_of(v) + 1 == p {
                2 * d + k - 1
            } else {
                2 * d + 1
            };
            if gg.degree(n * p + v) != want {
                return Err("degree of a copy");
            }
        }
    }
    Ok(())
}

/// `ν` applied `times` times; the order is checked before anything is built.
pub fn iterate_nu(h: &ColouredGraph, times: usize) -> Result<ColouredGraph, ConstructionError> {
    let (mut order, mut k) = (h.order(), h.k());
    for _ in 0..times {
        order *= k + 1;
        k += 1;
        if order > MAX_ORDER {
            return Err(ConstructionError::Overflow { order });
        }
    }
    let mut g = h.clone();
    for _ in 0..times {
        g = nu(&g)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::builtin;
    use crate::graph::clique_number;

    #[test]
    fn nu_of_k3() {
        let k3 = builtin("K3").unwrap();
        let g = nu(&k3).unwrap();
        assert_eq!(g.order(), 12);
        assert_eq!(g.graph().size(), 36);
        assert_eq!(clique_number(g.graph()), 4);
        assert_eq!(g.colouring().class_sizes(), alloc::vec![3, 3, 3, 3]);
        assert_eq!(iterate_nu(&k3, 1).unwrap(), g);
        assert_eq!(iterate_nu(&k3, 0).unwrap(), k3);
    }

    #[test]
    fn nu_of_k1_is_two_isolated_vertices() {
        let k1 = builtin("K1").unwrap();
        let g = nu(&k1).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.graph().size(), 0);
        assert_eq!(g.k(), 2);
    }

    #[test]
    fn overflow_is_reported() {
        let f = builtin("figure1a").unwrap();
        assert_eq!(nu(&f).unwrap().order(), 48);
        assert_eq!(
            iterate_nu(&f, 2),
            Err(ConstructionError::Overflow { order: 240 })
        );
        let k8 = builtin("K8").unwrap();
        assert_eq!(nu(&k8), Err(ConstructionError::Overflow { order: 72 }));
    }

    #[test]
    fn copy_indexing() {
        let p3 = builtin("P3").unwrap();
        let g = nu(&p3).unwrap();
        // vertex 0 is in A_1, so its star centre is copy 1 (index 3)
        assert!(g.graph().has_edge(3, 6));
        assert!(!g.graph().has_edge(0, 3));
        // cross edge v - u^p for the H-edge 0-1
        assert!(g.graph().has_edge(0, 4) && g.graph().has_edge(1, 3));
    }
}
