//! Exact backtracking over vertex partitions.
//!
//! Every partition of the vertex set into at most `k` independent classes is
//! generated exactly once: a vertex may join any open class it has no
//! neighbour in, or open the next class. Vertices are taken in DSATUR order
//! (most distinct neighbouring classes first, then highest degree, then
//! lowest index), which also makes the enumeration order deterministic.

use alloc::vec::Vec;
use core::ops::ControlFlow;

use num_rational::Ratio;

use super::{sees_every_other_class, two_class_connected, Colouring, ColouringError};
use crate::budget::{Budget, Exhausted, NodeBudget, Unlimited};
use crate::graph::{clique_number, Graph, MAX_ORDER};

/// Node budget used by [`sigma`] and [`chi_cr`].
pub const SIGMA_NODE_BUDGET: u64 = 200_000_000;

const NONE: u8 = u8::MAX;

/// Result of a (possibly capped) partition count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionCount {
    /// Partitions found, never more than the cap.
    pub count: u64,
    /// The search stopped at the cap, so the true count may be larger.
    pub capped: bool,
    /// The first partition found.
    pub first: Option<Colouring>,
}

/// A prefix of assignments `(vertex, class)` identifying one subtree of the
/// partition search. Produced by [`partition_frontier`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialColouring(Vec<(u8, u8)>);

impl PartialColouring {
    pub fn assignments(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().map(|&(v, c)| (v as usize, c as usize))
    }
}

struct State<'g> {
    g: &'g Graph,
    k: usize,
    class_of: [u8; MAX_ORDER],
    members: [u64; MAX_ORDER],
    open: usize,
    uncoloured: u64,
    trail: Vec<(u8, u8)>,
}

trait Visitor {
    fn leaf(&mut self, s: &State<'_>) -> ControlFlow<()>;

    fn prune(&mut self, _s: &State<'_>) -> bool {
        false
    }
}

impl<'g> State<'g> {
    fn new(g: &'g Graph, k: usize) -> Self {
        State {
            g,
            k: k.min(g.order()),
            class_of: [NONE; MAX_ORDER],
            members: [0; MAX_ORDER],
            open: 0,
            uncoloured: g.vertices().bits(),
            trail: Vec::with_capacity(g.order()),
        }
    }

    fn colouring(&self) -> Colouring {
        let labels: Vec<usize> = self.class_of[..self.g.order()]
            .iter()
            .map(|&c| c as usize)
            .collect();
        Colouring::from_labels(&labels)
    }

    #[inline]
    fn assign(&mut self, v: usize, c: usize) {
        if c == self.open {
            self.open += 1;
        }
        self.class_of[v] = c as u8;
        self.members[c] |= 1 << v;
        self.uncoloured &= !(1 << v);
        self.trail.push((v as u8, c as u8));
    }

    #[inline]
    fn unassign(&mut self) {
        let (v, c) = self.trail.pop().expect("unassign without assign");
        let (v, c) = (v as usize, c as usize);
        self.class_of[v] = NONE;
        self.members[c] &= !(1 << v);
        self.uncoloured |= 1 << v;
        if self.members[c] == 0 {
            debug_assert_eq!(c + 1, self.open);
            self.open -= 1;
        }
    }

    /// Next vertex to branch on and the mask of open classes it cannot join,
    /// or `None` at a dead end (some vertex has no option left).
    fn select(&self) -> Option<(usize, u64)> {
        let rows = self.g.rows();
        let full = self.open == self.k;
        let mut best: Option<(usize, u64, u32, u32)> = None;
        let mut left = self.uncoloured;
        while left != 0 {
            let v = left.trailing_zeros() as usize;
            left &= left - 1;
            let row = rows[v];
            let mut blocked = 0u64;
            for c in 0..self.open {
                if self.members[c] & row != 0 {
                    blocked |= 1 << c;
                }
            }
            let sat = blocked.count_ones();
            if full && sat as usize == self.open {
                return None;
            }
            let deg = row.count_ones();
            if best.is_none_or(|(_, _, bs, bd)| sat > bs || (sat == bs && deg > bd)) {
                best = Some((v, blocked, sat, deg));
            }
        }
        best.map(|(v, blocked, _, _)| (v, blocked))
    }

    /// Classes `x` may take: unblocked open classes, then a fresh one.
    fn options(&self, blocked: u64) -> impl Iterator<Item = usize> + use<> {
        let open = self.open;
        let fresh = (open < self.k).then_some(open);
        (0..open)
            .filter(move |c| (blocked >> c) & 1 == 0)
            .chain(fresh)
    }

    fn descend<V: Visitor, B: Budget>(
        &mut self,
        vis: &mut V,
        budget: &mut B,
    ) -> Result<ControlFlow<()>, Exhausted> {
        if !budget.charge(1) {
            return Err(Exhausted);
        }
        if self.uncoloured == 0 {
            return Ok(vis.leaf(self));
        }
        if vis.prune(self) {
            return Ok(ControlFlow::Continue(()));
        }
        let Some((x, blocked)) = self.select() else {
            return Ok(ControlFlow::Continue(()));
        };
        for c in self.options(blocked) {
            self.assign(x, c);
            let flow = self.descend(vis, budget);
            self.unassign();
            if flow?.is_break() {
                return Ok(ControlFlow::Break(()));
            }
        }
        Ok(ControlFlow::Continue(()))
    }

    fn frontier(&mut self, depth: usize, out: &mut Vec<PartialColouring>) {
        if self.trail.len() == depth || self.uncoloured == 0 {
            out.push(PartialColouring(self.trail.clone()));
            return;
        }
        let Some((x, blocked)) = self.select() else {
            return;
        };
        for c in self.options(blocked) {
            self.assign(x, c);
            self.frontier(depth, out);
            self.unassign();
        }
    }

    fn replay(&mut self, prefix: &PartialColouring) -> Result<(), ColouringError> {
        for (v, c) in prefix.assignments() {
            let legal = v < self.g.order()
                && (self.uncoloured >> v) & 1 == 1
                && c <= self.open
                && c < self.k
                && self.members[c] & self.g.rows()[v] == 0;
            if !legal {
                return Err(ColouringError::Improper);
            }
            self.assign(v, c);
        }
        Ok(())
    }
}

struct Counter {
    cap: u64,
    count: u64,
    first: Option<Colouring>,
}

impl Visitor for Counter {
    fn leaf(&mut self, s: &State<'_>) -> ControlFlow<()> {
        self.count += 1;
        if self.first.is_none() {
            self.first = Some(s.colouring());
        }
        if self.count >= self.cap {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }
}

/// Number of partitions of `V(g)` into at most `k` non-empty independent
/// classes, stopping once `cap` have been found.
pub fn count_colour_partitions(g: &Graph, k: usize, cap: u64) -> u64 {
    count_colour_partitions_within(g, k, cap, &mut Unlimited)
        .expect("unlimited budget")
        .count
}

pub fn count_colour_partitions_within<B: Budget>(
    g: &Graph,
    k: usize,
    cap: u64,
    budget: &mut B,
) -> Result<PartitionCount, Exhausted> {
    let mut state = State::new(g, k);
    run_counter(&mut state, cap, budget)
}

fn run_counter<B: Budget>(
    state: &mut State<'_>,
    cap: u64,
    budget: &mut B,
) -> Result<PartitionCount, Exhausted> {
    let cap = cap.max(1);
    let mut counter = Counter {
        cap,
        count: 0,
        first: None,
    };
    let _stopped = state.descend(&mut counter, budget)?;
    Ok(PartitionCount {
        count: counter.count,
        capped: counter.count >= cap,
        first: counter.first,
    })
}

/// Splits the partition search into independent subtrees at `depth`
/// assignments. Counting every subtree with [`count_from`] and summing
/// gives the full count; the order of the list is deterministic.
pub fn partition_frontier(g: &Graph, k: usize, depth: usize) -> Vec<PartialColouring> {
    let mut state = State::new(g, k);
    let mut out = Vec::new();
    state.frontier(depth, &mut out);
    out
}

/// Counts the partitions extending `prefix` (see [`partition_frontier`]).
pub fn count_from<B: Budget>(
    g: &Graph,
    k: usize,
    prefix: &PartialColouring,
    cap: u64,
    budget: &mut B,
) -> Result<PartitionCount, ColouringError> {
    let mut state = State::new(g, k);
    state.replay(prefix)?;
    Ok(run_counter(&mut state, cap, budget)?)
}

struct ForEach<F>(F);

impl<F: FnMut(&Colouring) -> ControlFlow<()>> Visitor for ForEach<F> {
    fn leaf(&mut self, s: &State<'_>) -> ControlFlow<()> {
        (self.0)(&s.colouring())
    }
}

/// Calls `f` on every partition into at most `k` independent classes.
pub fn for_each_partition<B, F>(g: &Graph, k: usize, budget: &mut B, f: F) -> Result<(), Exhausted>
where
    B: Budget,
    F: FnMut(&Colouring) -> ControlFlow<()>,
{
    let mut state = State::new(g, k);
    state.descend(&mut ForEach(f), budget).map(|_| ())
}

/// Greedy DSATUR colouring: an upper bound for `χ`.
pub fn dsatur_colouring(g: &Graph) -> Colouring {
    let mut state = State::new(g, g.order());
    while state.uncoloured != 0 {
        let (x, blocked) = state.select().expect("k = n never dead-ends");
        let c = state
            .options(blocked)
            .next()
            .expect("a fresh class is always available");
        state.assign(x, c);
    }
    state.colouring()
}

/// A proper colouring with `χ(g)` classes.
pub fn optimal_colouring(g: &Graph) -> Colouring {
    let greedy = dsatur_colouring(g);
    let lower = clique_number(g).max(1);
    for c in lower..greedy.class_count() {
        if let Some(col) = count_colour_partitions_within(g, c, 1, &mut Unlimited)
            .expect("unlimited budget")
            .first
        {
            return col;
        }
    }
    greedy
}

/// `χ(g)`: clique lower bound, DSATUR upper bound, exact search in between.
/// The order-0 graph has chromatic number 0.
pub fn chromatic_number(g: &Graph) -> usize {
    optimal_colouring(g).class_count()
}

struct MinClass {
    best: usize,
}

impl Visitor for MinClass {
    fn leaf(&mut self, s: &State<'_>) -> ControlFlow<()> {
        let smallest = s.members[..s.open]
            .iter()
            .map(|m| m.count_ones() as usize)
            .min()
            .unwrap_or(0);
        self.best = self.best.min(smallest);
        if self.best <= 1 {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    }

    fn prune(&mut self, s: &State<'_>) -> bool {
        // classes only grow, so a full set of classes already at least as
        // large as the incumbent cannot improve it
        s.open == s.k
            && s.members[..s.open]
                .iter()
                .map(|m| m.count_ones() as usize)
                .min()
                .unwrap_or(0)
                >= self.best
    }
}

/// `σ(g)`: the smallest class size over all proper `χ(g)`-colourings.
pub fn sigma(g: &Graph) -> Result<usize, ColouringError> {
    sigma_within(g, &mut NodeBudget::new(SIGMA_NODE_BUDGET))
}

pub fn sigma_within<B: Budget>(g: &Graph, budget: &mut B) -> Result<usize, ColouringError> {
    let chi = chromatic_number(g);
    if chi == 0 {
        return Err(ColouringError::Undefined(0));
    }
    let mut state = State::new(g, chi);
    let mut vis = MinClass { best: g.order() };
    let _stopped = state.descend(&mut vis, budget)?;
    Ok(vis.best)
}

/// Critical chromatic number `(χ - 1) n / (n - σ)` as an exact fraction.
pub fn chi_cr(g: &Graph) -> Result<Ratio<u64>, ColouringError> {
    let chi = chromatic_number(g);
    if chi <= 1 {
        return Err(ColouringError::Undefined(chi));
    }
    let n = g.order() as u64;
    let s = sigma(g)? as u64;
    Ok(Ratio::new((chi as u64 - 1) * n, n - s))
}

/// `χ(g) = k` and `g` has exactly one partition into `k` independent classes.
///
/// Cheap necessary conditions run first: minimum degree `k - 1`,
/// connectivity (for `k >= 2`), and on the first colouring found, that every vertex sees
/// every other class and every two classes induce a connected graph (a
/// failure of either yields a second partition by a Kempe change).
pub fn is_uniquely_k_colourable(g: &Graph, k: usize) -> bool {
    let n = g.order();
    if k == 0 || n == 0 || k > n {
        return false;
    }
    if g.min_degree().unwrap_or(0) + 1 < k || k >= 2 && !g.is_connected() {
        return false;
    }
    let found = count_colour_partitions_within(g, k, 1, &mut Unlimited).expect("unlimited budget");
    let Some(colouring) = found.first else {
        return false;
    };
    // a single partition with fewer than k classes only happens for K_j, j < k,
    // and then χ < k anyway
    if colouring.class_count() != k {
        return false;
    }
    if !sees_every_other_class(g, &colouring) || !two_class_connected(g, &colouring) {
        return false;
    }
    count_colour_partitions(g, k, 2) == 1
}
