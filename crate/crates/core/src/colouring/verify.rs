//! The necessary-condition battery plus exact count for one graph.

use super::search::{count_colour_partitions_within, PartitionCount};
use super::{two_class_connected, xu_slack};
use crate::budget::{Budget, Exhausted};
use crate::graph::{vertex_connectivity_at_least, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    /// The exact count did not finish within budget.
    Unknown,
}

impl Verdict {
    pub fn as_option(self) -> Option<bool> {
        match self {
            Verdict::Yes => Some(true),
            Verdict::No => Some(false),
            Verdict::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub k: usize,
    /// `δ(g) >= k - 1`.
    pub min_degree_ok: bool,
    pub connected_ok: bool,
    /// `g` is `(k - 1)`-connected.
    pub connectivity_ok: bool,
    pub xu_slack: i64,
    /// Two-class connectivity of the first `k`-partition found, if any.
    pub two_class_connected_ok: Option<bool>,
    pub partition_count: u64,
    /// `partition_count` hit the cap; the true count may be larger.
    pub count_capped: bool,
    pub verdict: Verdict,
}

/// Runs every check regardless of earlier failures. `cap` below 2 is raised
/// to 2, the least that can separate "unique" from "not unique".
///
/// The verdict rests on the exact count alone: `Yes` iff exactly one
/// partition into at most `k` classes exists and it has `k` classes (a lone
/// partition with fewer classes only occurs for `K_j`, `j < k`).
pub fn verify<B: Budget>(g: &Graph, k: usize, cap: u64, budget: &mut B) -> VerificationReport {
    let count = count_colour_partitions_within(g, k, cap.max(2), budget);
    report_from_count(g, k, count.as_ref().map_err(|&e| e))
}

/// Builds the report around a partition count obtained elsewhere (for
/// instance by a parallel search). `count` should be capped at 2 or more.
pub fn report_from_count(
    g: &Graph,
    k: usize,
    count: Result<&PartitionCount, Exhausted>,
) -> VerificationReport {
    let n = g.order();
    let min_degree_ok = n > 0 && g.min_degree().unwrap_or(0) + 1 >= k;
    let connected_ok = g.is_connected();
    let connectivity_ok = vertex_connectivity_at_least(g, k.saturating_sub(1));
    let xu_slack = xu_slack(g, k);

    let (partition_count, count_capped, verdict, two_class) = match count {
        Ok(found) => {
            let first = found.first.as_ref().filter(|c| c.class_count() == k);
            let two_class = first.map(|c| two_class_connected(g, c));
            let verdict = if found.count == 1 && first.is_some() {
                Verdict::Yes
            } else {
                Verdict::No
            };
            (found.count, found.capped, verdict, two_class)
        }
        Err(Exhausted) => (0, false, Verdict::Unknown, None),
    };
    VerificationReport {
        k,
        min_degree_ok,
        connected_ok,
        connectivity_ok,
        xu_slack,
        two_class_connected_ok: two_class,
        partition_count,
        count_capped,
        verdict,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::budget::{NodeBudget, Unlimited};
    use crate::graph::{complete_graph, cycle_graph};

    #[test]
    fn k4_is_yes() {
        let r = verify(&complete_graph(4).unwrap(), 4, 2, &mut Unlimited);
        assert_eq!(r.verdict, Verdict::Yes);
        assert_eq!(r.partition_count, 1);
        assert!(!r.count_capped);
        assert!(r.min_degree_ok && r.connected_ok && r.connectivity_ok);
        assert_eq!(r.xu_slack, 0);
        assert_eq!(r.two_class_connected_ok, Some(true));
    }

    #[test]
    fn c5_is_no() {
        let r = verify(&cycle_graph(5).unwrap(), 3, 2, &mut Unlimited);
        assert_eq!(r.verdict, Verdict::No);
        assert_eq!(r.partition_count, 2);
        assert!(r.count_capped);
        let full = verify(&cycle_graph(5).unwrap(), 3, 100, &mut Unlimited);
        assert_eq!(full.partition_count, 5);
        assert!(!full.count_capped);
    }

    #[test]
    fn fewer_classes_than_k_is_no() {
        let r = verify(&complete_graph(3).unwrap(), 4, 2, &mut Unlimited);
        assert_eq!(r.partition_count, 1);
        assert_eq!(r.verdict, Verdict::No);
        assert_eq!(r.two_class_connected_ok, None);
    }

    #[test]
    fn exhausted_is_unknown() {
        let r = verify(&cycle_graph(9).unwrap(), 3, 2, &mut NodeBudget::new(3));
        assert_eq!(r.verdict, Verdict::Unknown);
        assert_eq!(r.verdict.as_option(), None);
    }
}
