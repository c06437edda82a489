//! Multi-threaded drivers over the core searches, with a budget shared by
//! all workers. Results never depend on the number of threads.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use unicolor_core::census::{Census, CensusError, CensusResult, CensusStats, Checkpoint, Witness};
use unicolor_core::colouring::{count_from, partition_frontier, PartitionCount};
use unicolor_core::{Budget, Exhausted, Graph, Unlimited};

/// A node and wall-clock allowance drawn on by every worker. Once spent it
/// stays spent.
#[derive(Debug)]
pub struct SharedBudget {
    nodes: Option<AtomicU64>,
    deadline: Option<Instant>,
    spent: AtomicBool,
}

impl SharedBudget {
    pub fn new(nodes: Option<u64>, time: Option<Duration>) -> Self {
        SharedBudget {
            nodes: nodes.map(AtomicU64::new),
            deadline: time.map(|t| Instant::now() + t),
            spent: AtomicBool::new(false),
        }
    }

    pub fn unlimited() -> Self {
        SharedBudget::new(None, None)
    }

    pub fn is_spent(&self) -> bool {
        self.spent.load(Ordering::Relaxed)
    }

    /// A per-worker view for the core search routines.
    pub fn handle(&self) -> BudgetHandle<'_> {
        BudgetHandle {
            shared: self,
            calls: 0,
        }
    }

    fn take(&self, n: u64) -> bool {
        if let Some(left) = &self.nodes {
            if left
                .fetch_update(Ordering::Relaxed, Ordering::Relaxed, |l| l.checked_sub(n))
                .is_err()
            {
                self.spent.store(true, Ordering::Relaxed);
                return false;
            }
        }
        true
    }

    fn check_clock(&self) -> bool {
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.spent.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

pub struct BudgetHandle<'a> {
    shared: &'a SharedBudget,
    calls: u32,
}

impl Budget for BudgetHandle<'_> {
    fn charge(&mut self, nodes: u64) -> bool {
        if self.shared.is_spent() || !self.shared.take(nodes) {
            return false;
        }
        self.calls = self.calls.wrapping_add(1);
        self.calls % 1024 != 0 || self.shared.check_clock()
    }
}

/// Counts partitions into at most `k` classes by splitting the search at a
/// shallow frontier; `first` is the partition the sequential search would
/// report first.
pub fn partition_count(
    g: &Graph,
    k: usize,
    cap: u64,
    budget: &SharedBudget,
) -> Result<PartitionCount, Exhausted> {
    let cap = cap.max(1);
    let workers = rayon::current_num_threads();
    if workers == 1 {
        return unicolor_core::colouring::count_colour_partitions_within(
            g,
            k,
            cap,
            &mut budget.handle(),
        );
    }
    let mut depth = 1;
    let mut frontier = partition_frontier(g, k, depth);
    while frontier.len() < 4 * workers && depth < g.order().min(8) {
        depth += 1;
        frontier = partition_frontier(g, k, depth);
    }
    let parts: Vec<Result<PartitionCount, Exhausted>> = frontier
        .par_iter()
        .map(|p| count_from(g, k, p, cap, &mut budget.handle()).map_err(|_| Exhausted))
        .collect();
    let mut total = PartitionCount {
        count: 0,
        capped: false,
        first: None,
    };
    for part in parts {
        let part = part?;
        total.count = (total.count + part.count).min(cap);
        if total.first.is_none() {
            total.first = part.first;
        }
    }
    total.capped = total.count >= cap;
    Ok(total)
}

/// Runs (or resumes) a witness census with subtrees spread over the
/// current rayon pool. Subtrees finished after the first exhausted one are
/// dropped so that the checkpoint stays a plain prefix.
pub fn witness_census(
    from: &Checkpoint,
    budget: &SharedBudget,
) -> Result<(CensusResult, usize), CensusError> {
    let census = Census::for_witnesses(from.task)?;
    let roots = census
        .roots(from.split_order, &mut Unlimited)
        .expect("unlimited budget");
    if from.next_root > roots.len() {
        return Err(CensusError::BadCheckpoint);
    }
    let done: Vec<Option<(CensusStats, Vec<Witness>)>> = roots[from.next_root..]
        .par_iter()
        .map(|root| {
            if budget.is_spent() {
                return None;
            }
            census.witnesses_below(root, &mut budget.handle()).ok()
        })
        .collect();
    let mut stats = from.stats;
    let mut witnesses = from.witnesses.clone();
    for (offset, part) in done.into_iter().enumerate() {
        match part {
            Some((s, w)) => {
                stats.add(&s);
                witnesses.extend(w);
            }
            None => {
                let checkpoint = Checkpoint {
                    task: from.task,
                    split_order: from.split_order,
                    next_root: from.next_root + offset,
                    stats,
                    witnesses: witnesses.clone(),
                };
                return Ok((
                    CensusResult {
                        stats,
                        witnesses,
                        checkpoint: Some(checkpoint),
                    },
                    roots.len(),
                ));
            }
        }
    }
    Ok((
        CensusResult {
            stats,
            witnesses,
            checkpoint: None,
        },
        roots.len(),
    ))
}
