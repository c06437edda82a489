//! The catalog manifest shipped in `data/catalog.json`.

use serde::{Deserialize, Serialize};
use unicolor_core::colouring::{chi_cr, chromatic_number, is_uniquely_k_colourable, sigma};
use unicolor_core::constructions::builtin;
use unicolor_core::graph::{clique_number, girth};

use crate::graph6;
use crate::json::ratio_string;

/// Names listed in the manifest.
pub const CATALOG_NAMES: [&str; 18] = [
    "figure1a", "figure1b", "figure1c", "K3", "K4", "K5", "K6", "K7", "K8", "P4", "P5", "P6", "P7",
    "P8", "P9", "P10", "P11", "P12",
];

pub const MANIFEST: &str = include_str!("../data/catalog.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expected {
    pub order: usize,
    pub edges: usize,
    pub clique_number: usize,
    pub chromatic_number: usize,
    /// With `k` equal to the number of classes of the listed colouring.
    pub uniquely_colourable: bool,
    pub sigma: usize,
    pub chi_cr: String,
    pub triangle_free: bool,
    pub girth: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub graph6: String,
    /// Class index of each vertex.
    pub colouring: Vec<usize>,
    pub expected: Expected,
}

/// Computes the manifest entry for a builtin name from scratch.
pub fn entry(name: &str) -> Option<CatalogEntry> {
    let h = builtin(name)?;
    let g = h.graph();
    let expected = Expected {
        order: g.order(),
        edges: g.size(),
        clique_number: clique_number(g),
        chromatic_number: chromatic_number(g),
        uniquely_colourable: is_uniquely_k_colourable(g, h.k()),
        sigma: sigma(g).ok()?,
        chi_cr: ratio_string(&chi_cr(g).ok()?),
        triangle_free: !g.has_triangle(),
        girth: girth(g),
    };
    Some(CatalogEntry {
        name: name.to_string(),
        graph6: graph6::encode(g),
        colouring: h.colouring().labels().collect(),
        expected,
    })
}

/// The manifest as shipped.
pub fn manifest() -> Vec<CatalogEntry> {
    serde_json::from_str(MANIFEST).expect("shipped manifest parses")
}
