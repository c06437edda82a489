//! Search budgets shared by the exhaustive routines.

use thiserror::Error;

/// The search ran out of budget before finishing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("search budget exhausted")]
pub struct Exhausted;

/// Something that can be charged for search nodes; returns `false` once spent.
pub trait Budget {
    fn charge(&mut self, nodes: u64) -> bool;
}

impl<B: Budget + ?Sized> Budget for &mut B {
    fn charge(&mut self, nodes: u64) -> bool {
        (**self).charge(nodes)
    }
}

/// Never runs out.
#[derive(Debug, Clone, Copy, Default)]
pub struct Unlimited;

impl Budget for Unlimited {
    #[inline]
    fn charge(&mut self, _nodes: u64) -> bool {
        true
    }
}

/// A fixed number of search nodes.
#[derive(Debug, Clone, Copy)]
pub struct NodeBudget {
    remaining: u64,
}

impl NodeBudget {
    pub fn new(nodes: u64) -> Self {
        NodeBudget { remaining: nodes }
    }

    pub fn remaining(&self) -> u64 {
        self.remaining
    }
}

impl Budget for NodeBudget {
    #[inline]
    fn charge(&mut self, nodes: u64) -> bool {
        match self.remaining.checked_sub(nodes) {
            Some(left) => {
                self.remaining = left;
                true
            }
            None => {
                self.remaining = 0;
                false
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn node_budget_runs_out() {
        let mut b = NodeBudget::new(3);
        assert!(b.charge(2));
        assert!(b.charge(1));
        assert!(!b.charge(1));
        assert_eq!(b.remaining(), 0);
        assert!(Unlimited.charge(u64::MAX));
    }
}
