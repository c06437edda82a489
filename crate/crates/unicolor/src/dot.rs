//! Graphviz output for viewing; colour classes become fill colours.

use std::fmt::Write;

use unicolor_core::{Colouring, Graph};

const PALETTE: [&str; 10] = [
    "palegreen",
    "salmon",
    "lightblue",
    "gold",
    "plum",
    "lightgray",
    "orange",
    "cyan",
    "pink",
    "khaki",
];

/// Fill colour for a class index; the palette repeats after ten classes.
pub fn class_colour(class: usize) -> &'static str {
    PALETTE[class % PALETTE.len()]
}

pub fn to_dot(name: &str, g: &Graph, colouring: Option<&Colouring>) -> String {
    let mut out = String::new();
    writeln!(out, "graph \"{}\" {{", name.replace('"', "\\\"")).unwrap();
    writeln!(out, "  node [shape=circle, style=filled, fillcolor=white];").unwrap();
    for v in 0..g.order() {
        match colouring {
            Some(c) => writeln!(
                out,
                "  {v} [fillcolor={}, class={}];",
                class_colour(c.class_of(v)),
                c.class_of(v)
            ),
            None => writeln!(out, "  {v};"),
        }
        .unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use unicolor_core::graph::path_graph;

    #[test]
    fn path_with_bipartition() {
        let g = path_graph(3).unwrap();
        let c = Colouring::from_labels(&[0, 1, 0]);
        let dot = to_dot("p3", &g, Some(&c));
        assert!(dot.starts_with("graph \"p3\" {"));
        assert!(dot.contains("  1 [fillcolor=salmon, class=1];"));
        assert!(dot.contains("  0 -- 1;\n  1 -- 2;\n"));
        assert!(dot.ends_with("}\n"));
        assert!(!to_dot("p3", &g, None).contains("class="));
    }
}
