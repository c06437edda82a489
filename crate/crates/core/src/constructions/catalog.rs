//! Named graphs with their intended colourings.

use alloc::vec::Vec;

use super::ColouredGraph;
use crate::colouring::{optimal_colouring, Colouring};
use crate::graph::{complete_graph, cycle_graph, path_graph, Graph, VertexSet};

pub const FIGURE1_NAMES: [&str; 3] = ["figure1a", "figure1b", "figure1c"];

pub const BUILTIN_HELP: &str =
    "K<k> (1..=64), P<n> (1..=64), C<n> (3..=64), figure1a, figure1b, figure1c";

// Vertices 0..7 are v0..v7 on the rim, 8..11 are a, b, c, d.
const FIGURE1_EDGES: [(usize, usize); 22] = [
    (0, 1),
    (1, 2),
    (2, 3),
    (3, 4),
    (4, 5),
    (5, 6),
    (6, 7),
    (0, 7),
    (0, 4),
    (1, 5),
    (2, 6),
    (3, 7),
    (1, 8),
    (7, 8),
    (0, 9),
    (6, 9),
    (5, 10),
    (3, 10),
    (2, 11),
    (8, 11),
    (9, 10),
    (10, 11),
];

const FIGURE1_CLASSES: [[usize; 4]; 3] = [[2, 5, 8, 9], [1, 4, 7, 10], [0, 3, 6, 11]];

/// The three 12-vertex triangle-free uniquely 3-colourable graphs: the base
/// graph, the base with `d v4` added, and the base with `a v4` added.
pub fn figure1_graphs() -> [ColouredGraph; 3] {
    let classes = FIGURE1_CLASSES.map(VertexSet::from_iter);
    let colouring = Colouring::from_classes(12, &classes).expect("fixed classes partition 0..12");
    let base = Graph::from_edges(12, FIGURE1_EDGES).expect("fixed edge list is valid");
    let mut b = base;
    b.add_edge(4, 11);
    let mut c = base;
    c.add_edge(4, 8);
    [base, b, c]
        .map(|g| ColouredGraph::new(g, colouring.clone()).expect("fixed colouring is proper"))
}

/// Looks up a catalog name. Complete graphs get singleton classes, paths
/// their bipartition, cycles an optimal colouring.
pub fn builtin(name: &str) -> Option<ColouredGraph> {
    if let Some(i) = FIGURE1_NAMES.iter().position(|&f| f == name) {
        return figure1_graphs().into_iter().nth(i);
    }
    let (kind, rest) = name.split_at_checked(1)?;
    if rest.starts_with('0') || rest.starts_with('+') {
        return None;
    }
    let n: usize = rest.parse().ok()?;
    let (g, labels): (Graph, Vec<usize>) = match kind {
        "K" => (complete_graph(n).ok()?, (0..n).collect()),
        "P" if n >= 1 => (path_graph(n).ok()?, (0..n).map(|v| v % 2).collect()),
        "C" if n >= 3 => {
            let g = cycle_graph(n).ok()?;
            (g, optimal_colouring(&g).labels().collect())
        }
        _ => return None,
    };
    ColouredGraph::new(g, Colouring::from_labels(&labels)).ok()
}
