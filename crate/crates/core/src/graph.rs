//! Simple undirected graphs on at most 64 vertices.
//!
//! Every vertex owns one `u64` adjacency row, so neighbourhoods, colour
//! classes and separators are all plain bit operations.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Not, Sub};

use thiserror::Error;

/// Largest supported order: one machine word per adjacency row.
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[inline]
pub(crate) const fn low_bits(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex indices, stored as a 64-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All of `0..n`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_bits(n))
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn iter(self) -> Vertices {
        Vertices(self.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: Self) {
        self.0 |= rhs.0;
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> Self {
        VertexSet(!self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Vertices;
    fn into_iter(self) -> Vertices {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Vertices(u64);

impl Iterator for Vertices {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Vertices {}

/// A simple undirected graph on vertices `0..n`, `n <= 64`.
///
/// Rows past `n` are always zero, so the derived comparisons are
/// comparisons of the adjacency matrices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    adj: [u64; MAX_ORDER],
}

impl Graph {
    /// Edgeless graph of order `n`.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge {
                order: n,
                max: MAX_ORDER,
            });
        }
        Ok(Graph {
            n,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and looplessness.
    pub fn from_rows(rows: &[u64]) -> Result<Self, GraphError> {
        let mut g = Graph::new(rows.len())?;
        let mask = low_bits(g.n);
        for (u, &row) in rows.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(GraphError::VertexOutOfRange { vertex, order: g.n });
            }
            if (row >> u) & 1 == 1 {
                return Err(GraphError::SelfLoop(u));
            }
            for v in VertexSet(row) {
                g.adj[u] |= 1 << v;
                g.adj[v] |= 1 << u;
            }
        }
        Ok(g)
    }

    #[inline]
    pub const fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.n]
    }

    #[inline]
    pub const fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub const fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub const fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub const fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn try_add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    /// # Panics
    /// On out-of-range vertices or `u == v`.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        self.try_add_edge(u, v).expect("invalid edge");
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !low_bits(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Appends vertex `n` adjacent to `neighbours`.
    pub fn with_vertex(&self, neighbours: VertexSet) -> Result<Graph, GraphError> {
        let n = self.n;
        if n + 1 > MAX_ORDER {
            return Err(GraphError::OrderTooLarge {
                order: n + 1,
                max: MAX_ORDER,
            });
        }
        if let Some(v) = (neighbours - self.vertices()).first() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: n,
            });
        }
        let mut g = *self;
        g.n = n + 1;
        g.adj[n] = neighbours.0;
        for u in neighbours {
            g.adj[u] |= 1 << n;
        }
        Ok(g)
    }

    /// Subgraph induced by `set`, relabelled to `0..|set|` in ascending order.
    pub fn induced(&self, set: VertexSet) -> Graph {
        let set = set & self.vertices();
        let verts: Vec<usize> = set.iter().collect();
        let mut h = Graph {
            n: verts.len(),
            adj: [0; MAX_ORDER],
        };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                if self.has_edge(u, v) {
                    h.adj[i] |= 1 << j;
                }
            }
        }
        h
    }

    /// Relabels vertex `v` as `perm[v]`.
    ///
    /// # Panics
    /// If `perm` is not a permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let image: VertexSet = perm.iter().copied().collect();
        assert_eq!(image, self.vertices(), "not a permutation");
        let mut h = Graph {
            n: self.n,
            adj: [0; MAX_ORDER],
        };
        for (u, v) in self.edges() {
            h.adj[perm[u]] |= 1 << perm[v];
            h.adj[perm[v]] |= 1 << perm[u];
        }
        h
    }

    /// Disjoint union; `other`'s vertices are shifted up by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph, GraphError> {
        let n = self.n + other.n;
        let mut g = Graph::new(n)?;
        g.adj[..self.n].copy_from_slice(self.rows());
        for (i, &row) in other.rows().iter().enumerate() {
            g.adj[self.n + i] = row << self.n;
        }
        Ok(g)
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) + 1 == self.n)
    }

    pub fn has_triangle(&self) -> bool {
        self.edges().any(|(u, v)| self.adj[u] & self.adj[v] != 0)
    }

    /// Vertices reachable from `start` inside `within` (`start` must lie in `within`).
    pub fn component_within(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next.0 |= self.adj[v];
            }
            frontier = next & (within - seen);
            seen |= frontier;
        }
        seen
    }

    /// Whether `g[set]` is connected; the empty set counts as connected.
    pub fn is_connected_within(&self, set: VertexSet) -> bool {
        match set.first() {
            None => true,
            Some(v) => self.component_within(v, set) == set,
        }
    }

    /// Order-0 graphs are connected by convention.
    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_within(v, left);
            left = left - c;
            out.push(c);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// `K_k`.
pub fn complete_graph(k: usize) -> Result<Graph, GraphError> {
    if k == 0 || k > MAX_ORDER {
        return Err(GraphError::OrderTooLarge {
            order: k,
            max: MAX_ORDER,
        });
    }
    let mut g = Graph::new(k)?;
    for v in 0..k {
        g.adj[v] = low_bits(k) & !(1 << v);
    }
    Ok(g)
}

/// Path on `n` vertices `0 - 1 - ... - (n-1)`.
pub fn path_graph(n: usize) -> Result<Graph, GraphError> {
    Graph::from_edges(n, (1..n).map(|v| (v - 1, v)))
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Result<Graph, GraphError> {
    let mut g = path_graph(n)?;
    if n >= 3 {
        g.add_edge(0, n - 1);
    }
    Ok(g)
}

/// `g1 + g2`: disjoint union plus every edge between the two vertex ranges.
pub fn complete_join(g1: &Graph, g2: &Graph) -> Result<Graph, GraphError> {
    let mut g = g1.disjoint_union(g2)?;
    let (n1, n) = (g1.order(), g.order());
    let left = low_bits(n1);
    let right = low_bits(n) & !left;
    for v in 0..n1 {
        g.adj[v] |= right;
    }
    for v in n1..n {
        g.adj[v] |= left;
    }
    Ok(g)
}

/// A shortest cycle as a vertex sequence, or `None` for forests.
///
/// Roots are tried in index order and the first strictly shortest closing
/// edge wins, so the result is deterministic. At the global minimum the two
/// BFS branches only meet at the root, hence the walk is a simple cycle.
pub fn shortest_cycle(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let mut best: Option<(usize, usize, usize, usize)> = None; // (len, root, x, y)
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        let order = bfs(g, root, &mut dist, &mut parent);
        for &x in &order {
            for y in g.neighbours(x) {
                if dist[y] == usize::MAX || parent[x] == y || parent[y] == x {
                    continue;
                }
                let len = dist[x] + dist[y] + 1;
                if best.is_none_or(|b| len < b.0) {
                    best = Some((len, root, x, y));
                }
            }
        }
        if best.is_some_and(|b| b.0 == 3) {
            break;
        }
    }
    let (_, root, x, y) = best?;
    bfs(g, root, &mut dist, &mut parent);
    let mut left = vec![x];
    while *left.last().unwrap() != root {
        left.push(parent[*left.last().unwrap()]);
    }
    left.reverse();
    let mut v = y;
    while v != root {
        left.push(v);
        v = parent[v];
    }
    Some(left)
}

fn bfs(g: &Graph, root: usize, dist: &mut [usize], parent: &mut [usize]) -> Vec<usize> {
    dist.fill(usize::MAX);
    parent.fill(usize::MAX);
    dist[root] = 0;
    let mut order = Vec::with_capacity(g.order());
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        order.push(u);
        for w in g.neighbours(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            }
        }
    }
    order
}

/// Length of a shortest cycle; `None` means infinite girth (a forest).
pub fn girth(g: &Graph) -> Option<usize> {
    shortest_cycle(g).map(|c| c.len())
}

/// A maximum clique, by greedy-colouring bounded branch and bound.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut search = CliqueSearch {
        g,
        best: VertexSet::EMPTY,
    };
    search.expand(VertexSet::EMPTY, g.vertices());
    search.best
}

/// `ω(g)`; zero for the order-0 graph.
pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}

struct CliqueSearch<'a> {
    g: &'a Graph,
    best: VertexSet,
}

impl CliqueSearch<'_> {
    fn expand(&mut self, clique: VertexSet, mut cand: VertexSet) {
        if cand.is_empty() {
            if clique.len() > self.best.len() {
                self.best = clique;
            }
            return;
        }
        let mut order = [0u8; MAX_ORDER];
        let mut bound = [0u8; MAX_ORDER];
        let len = self.colour_sort(cand, &mut order, &mut bound);
        for i in (0..len).rev() {
            if clique.len() + bound[i] as usize <= self.best.len() {
                return;
            }
            let v = order[i] as usize;
            let mut grown = clique;
            grown.insert(v);
            self.expand(grown, cand & self.g.neighbours(v));
            cand.remove(v);
        }
    }

    /// Greedy colouring of `cand`; vertices come out sorted by colour number.
    fn colour_sort(&self, cand: VertexSet, order: &mut [u8], bound: &mut [u8]) -> usize {
        let mut left = cand;
        let mut colour = 0u8;
        let mut len = 0;
        while !left.is_empty() {
            colour += 1;
            let mut avail = left;
            while let Some(v) = avail.first() {
                avail = avail - self.g.neighbours(v);
                avail.remove(v);
                left.remove(v);
                order[len] = v as u8;
                bound[len] = colour;
                len += 1;
            }
        }
        len
    }
}

/// Whether `g` is `t`-connected: more than `t` vertices and no separator of
/// fewer than `t` vertices. `t = 0` is always satisfied.
///
/// Non-adjacent pairs are checked with unit-capacity augmenting paths on the
/// vertex-split network (Menger), stopping at `t` paths.
pub fn vertex_connectivity_at_least(g: &Graph, t: usize) -> bool {
    if t == 0 {
        return true;
    }
    let n = g.order();
    if n < t + 1 {
        return false;
    }
    if g.is_complete() {
        return true;
    }
    if t == 1 {
        return g.is_connected();
    }
    let mut net = SplitNetwork::new(g);
    for s in 0..n {
        let far = g.vertices() - g.neighbours(s) - VertexSet(low_bits(s + 1));
        for u in far {
            if net.disjoint_paths(s, u, t) < t {
                return false;
            }
        }
    }
    true
}

/// Unit-capacity flow network: vertex `v` becomes `in = 2v -> out = 2v+1`.
struct SplitNetwork {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<i32>,
    base: Vec<i32>,
}

impl SplitNetwork {
    fn new(g: &Graph) -> Self {
        let mut net = SplitNetwork {
            head: vec![Vec::new(); 2 * g.order()],
            to: Vec::new(),
            cap: Vec::new(),
            base: Vec::new(),
        };
        for v in 0..g.order() {
            net.arc(2 * v, 2 * v + 1);
        }
        for (a, b) in g.edges() {
            net.arc(2 * a + 1, 2 * b);
            net.arc(2 * b + 1, 2 * a);
        }
        net.base = net.cap.clone();
        net
    }

    fn arc(&mut self, from: usize, to: usize) {
        self.head[from].push(self.to.len());
        self.to.push(to);
        self.cap.push(1);
        self.head[to].push(self.to.len());
        self.to.push(from);
        self.cap.push(0);
    }

    /// Internally disjoint `s`-`t` paths for non-adjacent `s, t`, capped at `limit`.
    fn disjoint_paths(&mut self, s: usize, t: usize, limit: usize) -> usize {
        self.cap.copy_from_slice(&self.base);
        let (source, sink) = (2 * s + 1, 2 * t);
        let nodes = self.head.len();
        let mut via = vec![usize::MAX; nodes];
        let mut found = 0;
        while found < limit {
            via.fill(usize::MAX);
            via[source] = usize::MAX - 1;
            let mut queue = VecDeque::from([source]);
            'bfs: while let Some(x) = queue.pop_front() {
                for &e in &self.head[x] {
                    let y = self.to[e];
                    if self.cap[e] > 0 && via[y] == usize::MAX {
                        via[y] = e;
                        if y == sink {
                            break 'bfs;
                        }
                        queue.push_back(y);
                    }
                }
            }
            if via[sink] == usize::MAX {
                break;
            }
            let mut y = sink;
            while y != source {
                let e = via[y];
                self.cap[e] -= 1;
                self.cap[e ^ 1] += 1;
                y = self.to[e ^ 1];
            }
            found += 1;
        }
        found
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_graph_sizes() {
        assert_eq!(complete_graph(3).unwrap().size(), 3);
        assert_eq!(complete_graph(1).unwrap().size(), 0);
        assert_eq!(complete_graph(5).unwrap().size(), 10);
        assert!(complete_graph(0).is_err());
        assert!(complete_graph(65).is_err());
        assert_eq!(complete_graph(64).unwrap().size(), 64 * 63 / 2);
    }

    #[test]
    fn join_examples() {
        let k1 = complete_graph(1).unwrap();
        assert_eq!(complete_join(&k1, &k1).unwrap(), complete_graph(2).unwrap());
        let w4 = complete_join(&cycle_graph(4).unwrap(), &k1).unwrap();
        assert_eq!(w4.size(), 8);
        assert_eq!(w4.degree(4), 4);
        let big = Graph::new(40).unwrap();
        assert!(complete_join(&big, &big).is_err());
    }

    #[test]
    fn girth_examples() {
        assert_eq!(girth(&cycle_graph(5).unwrap()), Some(5));
        assert_eq!(girth(&path_graph(7).unwrap()), None);
        assert_eq!(girth(&Graph::new(0).unwrap()), None);
        assert_eq!(girth(&complete_graph(4).unwrap()), Some(3));
        let cyc = shortest_cycle(&cycle_graph(6).unwrap()).unwrap();
        assert_eq!(cyc.len(), 6);
    }

    #[test]
    fn shortest_cycle_is_a_cycle() {
        let g = Graph::from_edges(
            7,
            [
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 0),
                (3, 4),
                (4, 5),
                (5, 6),
                (6, 4),
            ],
        )
        .unwrap();
        let c = shortest_cycle(&g).unwrap();
        assert_eq!(c.len(), 3);
        for i in 0..c.len() {
            assert!(g.has_edge(c[i], c[(i + 1) % c.len()]));
        }
    }

    #[test]
    fn clique_examples() {
        assert_eq!(clique_number(&complete_graph(5).unwrap()), 5);
        assert_eq!(clique_number(&cycle_graph(5).unwrap()), 2);
        assert_eq!(clique_number(&Graph::new(3).unwrap()), 1);
        assert_eq!(clique_number(&Graph::new(0).unwrap()), 0);
    }

    #[test]
    fn connectivity_examples() {
        assert!(cycle_graph(6).unwrap().is_connected());
        let two_triangles = cycle_graph(3)
            .unwrap()
            .disjoint_union(&cycle_graph(3).unwrap())
            .unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.components().len(), 2);
        assert!(complete_graph(1).unwrap().is_connected());
        assert!(Graph::new(0).unwrap().is_connected());

        assert!(vertex_connectivity_at_least(&complete_graph(4).unwrap(), 3));
        assert!(!vertex_connectivity_at_least(
            &complete_graph(4).unwrap(),
            4
        ));
        assert!(!vertex_connectivity_at_least(&path_graph(5).unwrap(), 2));
        assert!(vertex_connectivity_at_least(&cycle_graph(5).unwrap(), 2));
        assert!(!vertex_connectivity_at_least(&cycle_graph(5).unwrap(), 3));
        assert!(vertex_connectivity_at_least(&Graph::new(0).unwrap(), 0));
    }

    #[test]
    fn rows_are_validated() {
        assert!(Graph::from_rows(&[0b10, 0b01]).is_ok());
        assert_eq!(Graph::from_rows(&[0b01]), Err(GraphError::SelfLoop(0)));
        assert!(matches!(
            Graph::from_rows(&[0b100, 0]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        // one-sided rows are symmetrised
        let g = Graph::from_rows(&[0b10, 0]).unwrap();
        assert!(g.has_edge(1, 0));
    }

    #[test]
    fn induced_and_permuted() {
        let c5 = cycle_graph(5).unwrap();
        let p = c5.induced(VertexSet::from_iter([0, 1, 2, 3]));
        assert_eq!(p, path_graph(4).unwrap());
        let q = c5.permuted(&[4, 3, 2, 1, 0]);
        assert_eq!(q.size(), 5);
        assert!(q.has_edge(4, 3) && q.has_edge(0, 4));
    }
}
