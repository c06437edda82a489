//! Graph constructions producing coloured graphs: `ν`, single-vertex
//! extension, the independent-transversal step, random multipartite
//! sampling, and the catalog of small witnesses.

mod catalog;
mod extend;
mod nesetril;
mod nu;
mod sampler;

pub use catalog::{builtin, figure1_graphs, BUILTIN_HELP, FIGURE1_NAMES};
pub use extend::{balance_by_extension, extend_uniquely, smallest_class};
pub use nesetril::{independent_transversals, nesetril_step};
pub use nu::{iterate_nu, nu, nu_postconditions};
pub use sampler::{bollobas_sauer_sample, remove_short_cycles, SamplerConfig};

use thiserror::Error;

use crate::colouring::{is_proper, Colouring, ColouringError};
use crate::graph::{Graph, GraphError, MAX_ORDER};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Colouring(#[from] ColouringError),
    #[error("result would have {order} vertices, more than {max}", max = MAX_ORDER)]
    Overflow { order: usize },
    #[error("colouring is not proper on this graph")]
    Improper,
    #[error("class index {index} out of range ({classes} classes)")]
    NoSuchClass { index: usize, classes: usize },
    #[error("no independent transversals: the new class would be empty")]
    NoIndependentTransversals,
    #[error("{edges} edges requested but only {slots} cross-part slots exist")]
    TooManyEdges { edges: usize, slots: usize },
    #[error("invalid sampler configuration: {0}")]
    InvalidConfig(&'static str),
}

/// A graph together with a proper colouring of it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColouredGraph {
    graph: Graph,
    colouring: Colouring,
}

impl ColouredGraph {
    pub fn new(graph: Graph, colouring: Colouring) -> Result<Self, ConstructionError> {
        if colouring.order() != graph.order() {
            return Err(ColouringError::OrderMismatch {
                expected: graph.order(),
                got: colouring.order(),
            }
            .into());
        }
        if !is_proper(&graph, &colouring) {
            return Err(ConstructionError::Improper);
        }
        Ok(ColouredGraph { graph, colouring })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn colouring(&self) -> &Colouring {
        &self.colouring
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    /// Number of colour classes.
    pub fn k(&self) -> usize {
        self.colouring.class_count()
    }

    pub fn into_parts(self) -> (Graph, Colouring) {
        (self.graph, self.colouring)
    }
}
