//! One step of the iterated independent-transversal construction: with
//! classes `A_1..A_c`, every independent set of size `c + 1` meeting all
//! classes becomes a new vertex adjacent exactly to its members. The new
//! vertices are pairwise non-adjacent and form class `c + 1`.

use alloc::vec::Vec;

use super::{ColouredGraph, ConstructionError};
use crate::colouring::Colouring;
use crate::graph::{Graph, VertexSet, MAX_ORDER};

/// Independent sets of size `c + 1` meeting every class, in lexicographic
/// order of their sorted vertex lists.
pub fn independent_transversals(h: &ColouredGraph) -> Vec<VertexSet> {
    let c = h.k();
    let mut out = Vec::new();
    let mut walk = Walk {
        g: h.graph(),
        colouring: h.colouring(),
        size: c + 1,
        classes: c,
        out: &mut out,
    };
    walk.go(0, VertexSet::EMPTY, 0);
    out
}

struct Walk<'a> {
    g: &'a Graph,
    colouring: &'a Colouring,
    size: usize,
    classes: usize,
    out: &'a mut Vec<VertexSet>,
}

impl Walk<'_> {
    fn go(&mut self, from: usize, chosen: VertexSet, hit: u64) {
        let missing = self.classes - hit.count_ones() as usize;
        let room = self.size - chosen.len();
        if missing > room {
            return;
        }
        if room == 0 {
            self.out.push(chosen);
            return;
        }
        for v in from..self.g.order() {
            if !(self.g.neighbours(v) & chosen).is_empty() {
                continue;
            }
            let mut next = chosen;
            next.insert(v);
            self.go(v + 1, next, hit | 1 << self.colouring.class_of(v));
        }
    }
}

pub fn nesetril_step(h: &ColouredGraph) -> Result<ColouredGraph, ConstructionError> {
    let sets = independent_transversals(h);
    if sets.is_empty() {
        return Err(ConstructionError::NoIndependentTransversals);
    }
    let order = h.order() + sets.len();
    if order > MAX_ORDER {
        return Err(ConstructionError::Overflow { order });
    }
    let mut g = *h.graph();
    for &s in &sets {
        g = g.with_vertex(s)?;
    }
    let mut labels: Vec<usize> = h.colouring().labels().collect();
    labels.extend(core::iter::repeat_n(h.k(), sets.len()));
    ColouredGraph::new(g, Colouring::from_labels(&labels))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::builtin;

    #[test]
    fn p6_has_two_transversals() {
        let p6 = builtin("P6").unwrap();
        let sets = independent_transversals(&p6);
        // 1-indexed {1,3,6} and {1,4,6}
        assert_eq!(
            sets,
            alloc::vec![
                VertexSet::from_iter([0, 2, 5]),
                VertexSet::from_iter([0, 3, 5])
            ]
        );
        let g = nesetril_step(&p6).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.k(), 3);
        assert_eq!(g.graph().neighbours(6), VertexSet::from_iter([0, 2, 5]));
        assert!(!g.graph().has_edge(6, 7));
    }

    #[test]
    fn p4_has_none() {
        let p4 = builtin("P4").unwrap();
        assert_eq!(
            nesetril_step(&p4),
            Err(ConstructionError::NoIndependentTransversals)
        );
    }
}
