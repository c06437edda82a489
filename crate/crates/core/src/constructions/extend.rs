//! Growing a coloured graph one vertex at a time.

use alloc::vec::Vec;

use super::{ColouredGraph, ConstructionError};
use crate::colouring::Colouring;

/// Adds a vertex adjacent to everything outside class `class_index` and
/// puts it into that class. Unique `k`-colourability is preserved.
pub fn extend_uniquely(
    h: &ColouredGraph,
    class_index: usize,
) -> Result<ColouredGraph, ConstructionError> {
    let classes = h.k();
    if class_index >= classes {
        return Err(ConstructionError::NoSuchClass {
            index: class_index,
            classes,
        });
    }
    let class = h.colouring().class(class_index);
    let g = h
        .graph()
        .with_vertex(h.graph().vertices() - class)
        .map_err(|_| ConstructionError::Overflow {
            order: h.order() + 1,
        })?;
    let mut labels: Vec<usize> = h.colouring().labels().collect();
    labels.push(class_index);
    ColouredGraph::new(g, Colouring::from_labels(&labels))
}

/// Index of a smallest class (lowest index on ties).
pub fn smallest_class(h: &ColouredGraph) -> Option<usize> {
    let sizes = h.colouring().class_sizes();
    (0..sizes.len()).min_by_key(|&i| sizes[i])
}

/// Extends into a smallest class until all classes have equal size.
pub fn balance_by_extension(h: &ColouredGraph) -> Result<ColouredGraph, ConstructionError> {
    let mut g = h.clone();
    while !g.colouring().is_balanced() {
        let i = smallest_class(&g).expect("unbalanced colouring has classes");
        g = extend_uniquely(&g, i)?;
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::is_uniquely_k_colourable;
    use crate::constructions::builtin;
    use crate::graph::{clique_number, VertexSet};

    #[test]
    fn k3_becomes_a_diamond() {
        let g = extend_uniquely(&builtin("K3").unwrap(), 0).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.graph().size(), 5);
        assert_eq!(g.graph().neighbours(3), VertexSet::from_iter([1, 2]));
        assert_eq!(g.colouring().class(0), VertexSet::from_iter([0, 3]));
        assert!(is_uniquely_k_colourable(g.graph(), 3));
    }

    #[test]
    fn bad_class_index() {
        let k3 = builtin("K3").unwrap();
        assert_eq!(
            extend_uniquely(&k3, 3),
            Err(ConstructionError::NoSuchClass {
                index: 3,
                classes: 3
            })
        );
    }

    #[test]
    fn balancing_from_k3_keeps_the_triangle() {
        let mut g = builtin("K3").unwrap();
        for _ in 0..3 {
            let i = smallest_class(&g).unwrap();
            g = extend_uniquely(&g, i).unwrap();
        }
        assert_eq!(g.order(), 6);
        assert_eq!(g.colouring().class_sizes(), alloc::vec![2, 2, 2]);
        assert!(is_uniquely_k_colourable(g.graph(), 3));
        assert_eq!(clique_number(g.graph()), 3);
        // already balanced, so the helper is a no-op
        assert_eq!(balance_by_extension(&g).unwrap(), g);
    }

    #[test]
    fn overflow_at_64() {
        let mut g = builtin("K2").unwrap();
        while g.order() < 64 {
            g = extend_uniquely(&g, 0).unwrap();
        }
        assert_eq!(
            extend_uniquely(&g, 0),
            Err(ConstructionError::Overflow { order: 65 })
        );
    }
}
