//! Exact tools for uniquely colourable graphs.
//!
//! The crate is `no_std` (it needs `alloc`). It covers:
//!
//! * [`graph`]: bit-matrix graphs on at most 64 vertices with connectivity,
//!   girth and clique routines,
//! * [`canon`]: canonical labelling and isomorphism testing,
//! * [`colouring`]: partitions into independent classes, exact counting,
//!   `χ`, `σ`, the critical chromatic number and Kempe changes,
//! * [`constructions`]: the `ν` operator and the comparison constructions,
//!   plus the catalog of 12-vertex witnesses,
//! * [`census`]: isomorph-free generation by canonical augmentation and the
//!   witness search on top of it.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod budget;
pub mod canon;
pub mod census;
pub mod colouring;
pub mod constructions;
pub mod graph;

pub use budget::{Budget, Exhausted, NodeBudget, Unlimited};
pub use canon::{canonical_form, is_isomorphic, CanonicalForm};
pub use colouring::{Colouring, ColouringError, Verdict, VerificationReport};
pub use constructions::ColouredGraph;
pub use graph::{Graph, GraphError, VertexSet, MAX_ORDER};
pub use num_rational::Ratio;
