//! Isomorph-free generation of small graphs by canonical augmentation, and
//! the search for uniquely colourable witnesses built on it.
//!
//! Graphs grow one vertex at a time; the new vertex is always the highest
//! index. A child is kept only if its new vertex lies in the orbit of the
//! canonical last vertex, which is chosen among the vertices with the
//! smallest `(degree, neighbour degree sum, distance-2 count)` as the one
//! whose marked canonical form is largest. Every isomorphism class is then
//! reached from exactly one parent class, and isomorphic siblings are
//! merged by their marked form.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use thiserror::Error;

use crate::budget::{Budget, Exhausted, Unlimited};
use crate::canon::{marked_form, CanonicalForm};
use crate::colouring::{
    count_colour_partitions_within, verify, xu_slack, Colouring, VerificationReport,
};
use crate::graph::{vertex_connectivity_at_least, Graph, VertexSet};

/// Largest order a census may ask for.
pub const MAX_CENSUS_ORDER: usize = 14;

/// Subtrees are split off at this order unless the caller picks another.
pub const DEFAULT_SPLIT_ORDER: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CensusError {
    #[error("census order {0} is above the limit of {max}", max = MAX_CENSUS_ORDER)]
    OrderTooLarge(usize),
    #[error("k must be at least 1")]
    ZeroK,
    #[error("balanced classes need k = {k} to divide n = {n}")]
    Unbalanceable { n: usize, k: usize },
    #[error("empty edge window {lo}..={hi}")]
    EmptyWindow { lo: usize, hi: usize },
    #[error("checkpoint does not fit this task")]
    BadCheckpoint,
}

/// Structural constraints for generation plus the colour target.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CensusTask {
    pub n: usize,
    pub k: usize,
    pub triangle_free: bool,
    pub connected: bool,
    pub min_degree: usize,
    /// Witnesses must have all classes of size `n / k`.
    pub balanced: bool,
    /// Inclusive bounds on the edge count.
    pub edges: Option<(usize, usize)>,
}

impl CensusTask {
    /// A task with no constraints beyond order and `k`.
    pub fn new(n: usize, k: usize) -> Self {
        CensusTask {
            n,
            k,
            triangle_free: false,
            connected: false,
            min_degree: 0,
            balanced: false,
            edges: None,
        }
    }

    pub fn validate(&self) -> Result<(), CensusError> {
        if self.n > MAX_CENSUS_ORDER {
            return Err(CensusError::OrderTooLarge(self.n));
        }
        if self.k == 0 {
            return Err(CensusError::ZeroK);
        }
        if self.balanced && self.n % self.k != 0 {
            return Err(CensusError::Unbalanceable {
                n: self.n,
                k: self.k,
            });
        }
        if let Some((lo, hi)) = self.edges {
            if lo > hi {
                return Err(CensusError::EmptyWindow { lo, hi });
            }
        }
        Ok(())
    }
}

/// Counters for each stage. The last four stay zero for plain generation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CensusStats {
    /// Augmentation nodes accepted below the roots.
    pub nodes: u64,
    /// Full-order graphs produced.
    pub generated: u64,
    /// Full-order graphs meeting the connectivity and degree constraints.
    pub structural: u64,
    /// Survivors of the Xu bound and `(k - 1)`-connectivity.
    pub necessary: u64,
    /// Uniquely `k`-colourable survivors.
    pub unique: u64,
    /// Unique survivors with balanced classes when required.
    pub witnesses: u64,
}

impl CensusStats {
    pub fn add(&mut self, other: &CensusStats) {
        self.nodes += other.nodes;
        self.generated += other.generated;
        self.structural += other.structural;
        self.necessary += other.necessary;
        self.unique += other.unique;
        self.witnesses += other.witnesses;
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub graph: Graph,
    /// The unique partition into `k` classes.
    pub colouring: Colouring,
    pub report: VerificationReport,
}

/// Where an interrupted run stands. Roots before `next_root` are finished
/// and their results are in `stats` and `witnesses`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Checkpoint {
    pub task: CensusTask,
    pub split_order: usize,
    pub next_root: usize,
    pub stats: CensusStats,
    pub witnesses: Vec<Witness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusResult {
    pub stats: CensusStats,
    pub witnesses: Vec<Witness>,
    /// Present iff the budget ran out before the search finished.
    pub checkpoint: Option<Checkpoint>,
}

impl Checkpoint {
    /// The state before any root has been explored.
    pub fn start(task: CensusTask, split_order: usize) -> Self {
        Checkpoint {
            task,
            split_order,
            next_root: 0,
            stats: CensusStats::default(),
            witnesses: Vec::new(),
        }
    }
}

impl CensusResult {
    pub fn is_complete(&self) -> bool {
        self.checkpoint.is_none()
    }
}

/// Generator for one task.
#[derive(Debug, Clone)]
pub struct Census {
    task: CensusTask,
    /// Degree floor actually used for pruning.
    floor: usize,
    hi: usize,
}

impl Census {
    pub fn new(task: CensusTask) -> Result<Self, CensusError> {
        task.validate()?;
        let n = task.n;
        Ok(Census {
            task,
            floor: task.min_degree,
            hi: task.edges.map_or(n * n.saturating_sub(1) / 2, |w| w.1),
        })
    }

    /// The census behind [`find_unique_k_witnesses`]: connectivity and
    /// `δ >= k - 1` are necessary for unique `k`-colourability, so they are
    /// folded into the generation constraints.
    pub fn for_witnesses(task: CensusTask) -> Result<Self, CensusError> {
        let mut c = Census::new(task)?;
        c.task.connected = true;
        c.floor = c.floor.max(task.k - 1);
        Ok(c)
    }

    pub fn task(&self) -> &CensusTask {
        &self.task
    }

    /// All accepted graphs of order `min(split_order, n)`, in generation order.
    pub fn roots<B: Budget>(
        &self,
        split_order: usize,
        budget: &mut B,
    ) -> Result<Vec<Graph>, Exhausted> {
        let target = split_order.min(self.task.n);
        let mut level = alloc::vec![Graph::new(0).expect("order 0 is valid")];
        for _ in 0..target {
            let mut next = Vec::new();
            for g in &level {
                for child in self.children(g) {
                    if !budget.charge(1) {
                        return Err(Exhausted);
                    }
                    next.push(child);
                }
            }
            level = next;
        }
        Ok(level)
    }

    /// Generates the subtree below `root`, calling `visit` on every
    /// full-order graph that meets all structural constraints.
    pub fn explore<B, F>(
        &self,
        root: &Graph,
        budget: &mut B,
        mut visit: F,
    ) -> Result<CensusStats, Exhausted>
    where
        B: Budget,
        F: FnMut(&Graph),
    {
        let mut stats = CensusStats::default();
        self.dfs(root, budget, &mut stats, &mut visit)?;
        Ok(stats)
    }

    fn dfs<B: Budget, F: FnMut(&Graph)>(
        &self,
        g: &Graph,
        budget: &mut B,
        stats: &mut CensusStats,
        visit: &mut F,
    ) -> Result<(), Exhausted> {
        if g.order() == self.task.n {
            stats.generated += 1;
            if self.finished_ok(g) {
                stats.structural += 1;
                visit(g);
            }
            return Ok(());
        }
        for child in self.children(g) {
            if !budget.charge(1) {
                return Err(Exhausted);
            }
            stats.nodes += 1;
            self.dfs(&child, budget, stats, visit)?;
        }
        Ok(())
    }

    fn finished_ok(&self, g: &Graph) -> bool {
        (!self.task.connected || g.is_connected())
            && g.min_degree().unwrap_or(0) >= self.floor
            && self
                .task
                .edges
                .is_none_or(|(lo, hi)| (lo..=hi).contains(&g.size()))
    }

    /// Fewest edges the remaining `r` vertices can bring in when each must
    /// end with degree at least the floor.
    fn edges_still_needed(&self, r: usize) -> usize {
        let f = self.floor;
        let inner = if self.task.triangle_free {
            r * r / 4
        } else {
            r * r.saturating_sub(1) / 2
        };
        if r == 0 {
            0
        } else {
            (f * r).div_ceil(2).max((f * r).saturating_sub(inner))
        }
    }

    /// Accepted children of `g`, isomorphic siblings merged, in a fixed order.
    pub fn children(&self, g: &Graph) -> Vec<Graph> {
        let m = g.order();
        let n = self.task.n;
        if m >= n {
            return Vec::new();
        }
        let r = n - m - 1; // vertices still to come after the child
        let f = self.floor;
        let edge_cap = self.hi.saturating_sub(self.edges_still_needed(r));
        if g.size() > edge_cap {
            return Vec::new();
        }
        let max_new = edge_cap - g.size();
        // the new vertex must have minimum degree in the child
        let min_deg = g.min_degree().unwrap_or(usize::MAX);
        let mut must = VertexSet::EMPTY;
        for u in g.vertices() {
            if g.degree(u) + r + 1 < f {
                return Vec::new();
            }
            if g.degree(u) + r < f {
                must.insert(u);
            }
        }
        let lo_size = f.saturating_sub(r).max(must.len());
        let hi_size = max_new.min(min_deg.saturating_add(1)).min(m);
        let mut sets = Vec::new();
        if lo_size <= hi_size {
            self.neighbour_sets(g, 0, VertexSet::EMPTY, must, lo_size, hi_size, &mut sets);
        }

        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for s in sets {
            // every old vertex keeps degree at least that of the new one
            if g.vertices()
                .iter()
                .any(|u| g.degree(u) + usize::from(s.contains(u)) < s.len())
            {
                continue;
            }
            let child = g.with_vertex(s).expect("census orders stay below 64");
            if let Some(form) = canonical_last(&child) {
                if seen.insert(form) {
                    out.push(child);
                }
            }
        }
        out
    }

    #[allow(clippy::too_many_arguments)]
    fn neighbour_sets(
        &self,
        g: &Graph,
        from: usize,
        chosen: VertexSet,
        must: VertexSet,
        lo: usize,
        hi: usize,
        out: &mut Vec<VertexSet>,
    ) {
        if chosen.len() >= lo && must.is_subset(chosen) {
            out.push(chosen);
        }
        if chosen.len() == hi {
            return;
        }
        for v in from..g.order() {
            if !(self.task.triangle_free && !(g.neighbours(v) & chosen).is_empty()) {
                let mut next = chosen;
                next.insert(v);
                self.neighbour_sets(g, v + 1, next, must, lo, hi, out);
            }
            // a later choice would skip this required vertex
            if must.contains(v) {
                break;
            }
        }
    }

    /// Runs the witness filters on one structural survivor.
    pub fn screen(&self, g: &Graph, stats: &mut CensusStats) -> Option<Witness> {
        let k = self.task.k;
        if xu_slack(g, k) < 0 || !vertex_connectivity_at_least(g, k - 1) {
            return None;
        }
        stats.necessary += 1;
        let found =
            count_colour_partitions_within(g, k, 2, &mut Unlimited).expect("unlimited budget");
        let colouring = found
            .first
            .filter(|c| found.count == 1 && c.class_count() == k)?;
        stats.unique += 1;
        if self.task.balanced && !colouring.is_balanced() {
            return None;
        }
        stats.witnesses += 1;
        let report = verify(g, k, 2, &mut Unlimited);
        Some(Witness {
            graph: *g,
            colouring,
            report,
        })
    }

    /// Explores one root for witnesses.
    pub fn witnesses_below<B: Budget>(
        &self,
        root: &Graph,
        budget: &mut B,
    ) -> Result<(CensusStats, Vec<Witness>), Exhausted> {
        let mut found = Vec::new();
        let mut screened = CensusStats::default();
        let mut stats = self.explore(root, budget, |g| {
            if let Some(w) = self.screen(g, &mut screened) {
                found.push(w);
            }
        })?;
        stats.add(&screened);
        Ok((stats, found))
    }
}

fn invariant(g: &Graph, u: usize) -> (usize, usize, usize) {
    let nbrs = g.neighbours(u);
    let mut second = VertexSet::EMPTY;
    let mut sum = 0;
    for w in nbrs {
        sum += g.degree(w);
        second |= g.neighbours(w);
    }
    second = second - nbrs;
    second.remove(u);
    (g.degree(u), sum, second.len())
}

/// The marked form of the last vertex if it is (in the orbit of) the
/// canonical last vertex, `None` otherwise.
fn canonical_last(g: &Graph) -> Option<CanonicalForm> {
    let last = g.order() - 1;
    let key = invariant(g, last);
    let mut rivals = Vec::new();
    for u in 0..last {
        let inv = invariant(g, u);
        if inv < key {
            return None;
        }
        if inv == key {
            rivals.push(u);
        }
    }
    let form = marked_form(g, last).expect("census orders are canonisable");
    for u in rivals {
        if marked_form(g, u).expect("census orders are canonisable") > form {
            return None;
        }
    }
    Some(form)
}

/// Visits one graph per isomorphism class meeting the structural
/// constraints of `task` (`k` and `balanced` are ignored).
pub fn generate<B, F>(
    task: CensusTask,
    budget: &mut B,
    mut visit: F,
) -> Result<CensusResult, CensusError>
where
    B: Budget,
    F: FnMut(&Graph),
{
    let census = Census::new(task)?;
    let mut stats = CensusStats::default();
    let split = DEFAULT_SPLIT_ORDER;
    let Ok(roots) = census.roots(split, budget) else {
        return Ok(interrupted(task, split, 0, stats, Vec::new()));
    };
    for (i, root) in roots.iter().enumerate() {
        match census.explore(root, budget, &mut visit) {
            Ok(s) => stats.add(&s),
            Err(Exhausted) => return Ok(interrupted(task, split, i, stats, Vec::new())),
        }
    }
    Ok(CensusResult {
        stats,
        witnesses: Vec::new(),
        checkpoint: None,
    })
}

fn interrupted(
    task: CensusTask,
    split_order: usize,
    next_root: usize,
    stats: CensusStats,
    witnesses: Vec<Witness>,
) -> CensusResult {
    let checkpoint = Checkpoint {
        task,
        split_order,
        next_root,
        stats,
        witnesses: witnesses.clone(),
    };
    CensusResult {
        stats,
        witnesses,
        checkpoint: Some(checkpoint),
    }
}

/// All uniquely `k`-colourable graphs meeting `task`, one per isomorphism
/// class, in generation order.
pub fn find_unique_k_witnesses<B: Budget>(
    task: CensusTask,
    budget: &mut B,
) -> Result<CensusResult, CensusError> {
    resume_witnesses(&Checkpoint::start(task, DEFAULT_SPLIT_ORDER), budget)
}

/// Continues an interrupted witness search from its checkpoint.
pub fn resume_witnesses<B: Budget>(
    from: &Checkpoint,
    budget: &mut B,
) -> Result<CensusResult, CensusError> {
    let census = Census::for_witnesses(from.task)?;
    let (task, split) = (from.task, from.split_order);
    let mut stats = from.stats;
    let mut witnesses = from.witnesses.clone();
    // the roots are cheap and deterministic, so they are rebuilt rather than stored
    let Ok(roots) = census.roots(split, &mut Unlimited) else {
        unreachable!()
    };
    if from.next_root > roots.len() {
        return Err(CensusError::BadCheckpoint);
    }
    for (i, root) in roots.iter().enumerate().skip(from.next_root) {
        match census.witnesses_below(root, budget) {
            Ok((s, w)) => {
                stats.add(&s);
                witnesses.extend(w);
            }
            Err(Exhausted) => return Ok(interrupted(task, split, i, stats, witnesses)),
        }
    }
    Ok(CensusResult {
        stats,
        witnesses,
        checkpoint: None,
    })
}
