//! Colourings as vertex partitions, the exact partition engine and the
//! necessary-condition battery for unique colourability.

mod search;
mod verify;

pub use search::{
    chi_cr, chromatic_number, count_colour_partitions, count_colour_partitions_within, count_from,
    dsatur_colouring, for_each_partition, is_uniquely_k_colourable, optimal_colouring,
    partition_frontier, sigma, sigma_within, PartialColouring, PartitionCount, SIGMA_NODE_BUDGET,
};
pub use verify::{report_from_count, verify, Verdict, VerificationReport};

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

use crate::budget::Exhausted;
use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColouringError {
    #[error("colouring covers {got} vertices but the graph has {expected}")]
    OrderMismatch { expected: usize, got: usize },
    #[error("classes do not partition the vertex set")]
    NotAPartition,
    #[error("class index {index} out of range ({classes} classes)")]
    NoSuchClass { index: usize, classes: usize },
    #[error("a Kempe change needs two distinct classes")]
    SameClass,
    #[error("seed vertex {0} lies outside the two chosen classes")]
    SeedOutsideClasses(usize),
    #[error("colouring is not proper")]
    Improper,
    #[error("critical chromatic number is undefined for graphs with chromatic number {0}")]
    Undefined(usize),
    #[error("not computed within budget")]
    BudgetExhausted,
}

impl From<Exhausted> for ColouringError {
    fn from(_: Exhausted) -> Self {
        ColouringError::BudgetExhausted
    }
}

/// A partition of `0..n` into non-empty classes.
///
/// Class indices are canonical: classes are numbered by their smallest
/// vertex, so equal partitions compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Colouring {
    class_of: Vec<u8>,
    classes: usize,
}

impl Colouring {
    /// From an arbitrary labelling `vertex -> label`; labels need not be contiguous.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, u8)> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        for &l in labels {
            let c = match map.iter().find(|(lab, _)| *lab == l) {
                Some(&(_, c)) => c,
                None => {
                    let c = map.len() as u8;
                    map.push((l, c));
                    c
                }
            };
            class_of.push(c);
        }
        Colouring {
            class_of,
            classes: map.len(),
        }
    }

    /// From explicit classes, which must be non-empty and partition `0..n`.
    pub fn from_classes(n: usize, classes: &[VertexSet]) -> Result<Self, ColouringError> {
        let mut seen = VertexSet::EMPTY;
        let mut labels = vec![usize::MAX; n];
        for (i, &c) in classes.iter().enumerate() {
            if c.is_empty() || !(seen & c).is_empty() || !c.is_subset(VertexSet::full(n)) {
                return Err(ColouringError::NotAPartition);
            }
            seen |= c;
            for v in c {
                labels[v] = i;
            }
        }
        if seen != VertexSet::full(n) {
            return Err(ColouringError::NotAPartition);
        }
        Ok(Colouring::from_labels(&labels))
    }

    pub fn order(&self) -> usize {
        self.class_of.len()
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn class_of(&self, v: usize) -> usize {
        self.class_of[v] as usize
    }

    /// Canonical class index per vertex.
    pub fn labels(&self) -> impl Iterator<Item = usize> + '_ {
        self.class_of.iter().map(|&c| c as usize)
    }

    pub fn class(&self, index: usize) -> VertexSet {
        self.class_of
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c as usize == index)
            .map(|(v, _)| v)
            .collect()
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.classes];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c as usize].insert(v);
        }
        out
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut out = vec![0; self.classes];
        for &c in &self.class_of {
            out[c as usize] += 1;
        }
        out
    }

    /// All classes have the same size.
    pub fn is_balanced(&self) -> bool {
        let sizes = self.class_sizes();
        sizes.windows(2).all(|w| w[0] == w[1])
    }

    fn check_order(&self, g: &Graph) -> Result<(), ColouringError> {
        if self.order() != g.order() {
            Err(ColouringError::OrderMismatch {
                expected: g.order(),
                got: self.order(),
            })
        } else {
            Ok(())
        }
    }
}

/// Every class is an independent set of `g` (and the orders agree).
pub fn is_proper(g: &Graph, c: &Colouring) -> bool {
    c.order() == g.order()
        && c.classes()
            .into_iter()
            .all(|class| class.iter().all(|v| (g.neighbours(v) & class).is_empty()))
}

/// Swaps classes `a` and `b` inside the component of `g[A ∪ B]` holding `seed`.
///
/// The result is re-canonicalised, so a class that empties out disappears
/// and indices may shift.
pub fn kempe_change(
    g: &Graph,
    c: &Colouring,
    a: usize,
    b: usize,
    seed: usize,
) -> Result<Colouring, ColouringError> {
    c.check_order(g)?;
    for index in [a, b] {
        if index >= c.class_count() {
            return Err(ColouringError::NoSuchClass {
                index,
                classes: c.class_count(),
            });
        }
    }
    if a == b {
        return Err(ColouringError::SameClass);
    }
    let union = c.class(a) | c.class(b);
    if !union.contains(seed) {
        return Err(ColouringError::SeedOutsideClasses(seed));
    }
    let chain = g.component_within(seed, union);
    let labels: Vec<usize> = (0..c.order())
        .map(|v| {
            let cv = c.class_of(v);
            match (chain.contains(v), cv) {
                (true, x) if x == a => b,
                (true, x) if x == b => a,
                _ => cv,
            }
        })
        .collect();
    Ok(Colouring::from_labels(&labels))
}

/// `g[A ∪ B]` is connected for every pair of distinct classes.
pub fn two_class_connected(g: &Graph, c: &Colouring) -> bool {
    let classes = c.classes();
    (0..classes.len())
        .all(|i| (i + 1..classes.len()).all(|j| g.is_connected_within(classes[i] | classes[j])))
}

/// Every vertex has a neighbour in each class other than its own.
pub fn sees_every_other_class(g: &Graph, c: &Colouring) -> bool {
    let classes = c.classes();
    (0..c.order()).all(|v| {
        let own = c.class_of(v);
        classes
            .iter()
            .enumerate()
            .all(|(i, &class)| i == own || !(g.neighbours(v) & class).is_empty())
    })
}

/// `edges - ((k-1) n - k(k-1)/2)`: how far an `n`-vertex, `edges`-edge graph
/// sits above the minimum edge count of a uniquely `k`-colourable graph.
pub fn xu_slack_for(n: usize, edges: usize, k: usize) -> i64 {
    let (n, edges, k) = (n as i64, edges as i64, k as i64);
    edges - ((k - 1) * n - k * (k - 1) / 2)
}

pub fn xu_slack(g: &Graph, k: usize) -> i64 {
    xu_slack_for(g.order(), g.size(), k)
}

pub fn xu_bound_holds(g: &Graph, k: usize) -> bool {
    xu_slack(g, k) >= 0
}
