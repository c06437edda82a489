//! Canonical labelling for small graphs.
//!
//! Equitable partition refinement plus individualisation, searching the
//! refinement tree for the lexicographically largest relabelled adjacency
//! matrix. Automorphisms discovered at the leaves prune the tree in two
//! ways: equal leaves send the search back to the node where the two paths
//! diverge, and sibling branches in the same orbit of the prefix stabiliser
//! are skipped.

use alloc::vec::Vec;

use crate::graph::{Graph, GraphError, VertexSet};

/// Canonical forms are only computed up to this order.
pub const MAX_CANON_ORDER: usize = 32;

/// The canonically relabelled graph. Two graphs (or two vertex-coloured
/// graphs with the same colour-class shape) are isomorphic iff their forms
/// are equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Graph);

impl CanonicalForm {
    pub fn graph(&self) -> &Graph {
        &self.0
    }

    /// Order byte followed by each adjacency row as four little-endian bytes.
    pub fn to_bytes(&self) -> Vec<u8> {
        let g = &self.0;
        let mut out = Vec::with_capacity(1 + 4 * g.order());
        out.push(g.order() as u8);
        for &row in g.rows() {
            out.extend_from_slice(&(row as u32).to_le_bytes());
        }
        out
    }
}

/// Result of a canonical labelling run.
#[derive(Debug, Clone)]
pub struct Labelling {
    pub form: CanonicalForm,
    /// `order[i]` is the vertex placed at canonical position `i`.
    pub order: Vec<usize>,
    /// Automorphism generators found along the way (as vertex maps).
    pub generators: Vec<Vec<usize>>,
}

/// Canonical form of `g`; orders above [`MAX_CANON_ORDER`] are rejected.
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    canonical_labelling(g, &[]).map(|l| l.form)
}

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<bool, GraphError> {
    if g1.order() != g2.order() || g1.size() != g2.size() {
        // still reject oversized inputs consistently
        check_order(g1)?;
        check_order(g2)?;
        return Ok(false);
    }
    Ok(canonical_form(g1)? == canonical_form(g2)?)
}

/// Canonical form of `g` with `marked` individualised, i.e. of the pair
/// `(g, marked)`. Equal for two vertices iff some automorphism maps one
/// to the other.
pub fn marked_form(g: &Graph, marked: usize) -> Result<CanonicalForm, GraphError> {
    let v = VertexSet::singleton(marked);
    canonical_labelling(g, &[v, g.vertices() - v]).map(|l| l.form)
}

fn check_order(g: &Graph) -> Result<(), GraphError> {
    if g.order() > MAX_CANON_ORDER {
        Err(GraphError::OrderTooLarge {
            order: g.order(),
            max: MAX_CANON_ORDER,
        })
    } else {
        Ok(())
    }
}

/// Canonical labelling of `g` coloured by the ordered `cells` (empty slice:
/// uncoloured). Non-empty `cells` must partition the vertex set; empty
/// cells are ignored.
pub fn canonical_labelling(g: &Graph, cells: &[VertexSet]) -> Result<Labelling, GraphError> {
    check_order(g)?;
    let n = g.order();
    let mut root = Partition::default();
    if cells.is_empty() {
        if n > 0 {
            root.push(g.vertices().bits());
        }
    } else {
        for c in cells.iter().filter(|c| !c.is_empty()) {
            root.push(c.bits());
        }
    }
    debug_assert_eq!(
        root.cells[..root.len].iter().fold(0, |a, c| a | c),
        g.vertices().bits()
    );
    if n == 0 {
        return Ok(Labelling {
            form: CanonicalForm(*g),
            order: Vec::new(),
            generators: Vec::new(),
        });
    }
    refine(g, &mut root);
    let mut search = Search {
        g,
        n,
        first: None,
        first_path: Vec::new(),
        best: None,
        best_path: Vec::new(),
        generators: Vec::new(),
    };
    let mut path = Vec::with_capacity(n);
    search.visit(&root, &mut path);
    let best = search.best.expect("search reaches at least one leaf");
    Ok(Labelling {
        form: CanonicalForm(best.form),
        order: best.order[..n].iter().map(|&v| v as usize).collect(),
        generators: search
            .generators
            .iter()
            .map(|g| g[..n].iter().map(|&v| v as usize).collect())
            .collect(),
    })
}

#[derive(Clone, Copy)]
struct Partition {
    cells: [u64; MAX_CANON_ORDER],
    len: usize,
}

impl Default for Partition {
    fn default() -> Self {
        Partition {
            cells: [0; MAX_CANON_ORDER],
            len: 0,
        }
    }
}

impl Partition {
    fn push(&mut self, cell: u64) {
        self.cells[self.len] = cell;
        self.len += 1;
    }

    /// Replaces cell `at` with `parts`, in order.
    fn replace(&mut self, at: usize, parts: &[u64]) {
        let extra = parts.len() - 1;
        self.cells.copy_within(at + 1..self.len, at + 1 + extra);
        self.cells[at..at + parts.len()].copy_from_slice(parts);
        self.len += extra;
    }

    fn is_discrete(&self, n: usize) -> bool {
        self.len == n
    }
}

/// Refines `p` to the coarsest equitable partition below it. Cells are split
/// by neighbour count into each splitter cell, pieces ordered by ascending
/// count, so the result commutes with relabelling.
fn refine(g: &Graph, p: &mut Partition) {
    let rows = g.rows();
    let mut buckets = [0u64; MAX_CANON_ORDER + 1];
    let mut pieces = [0u64; MAX_CANON_ORDER];
    let mut changed = true;
    while changed {
        changed = false;
        let mut si = 0;
        while si < p.len {
            let splitter = p.cells[si];
            let mut ci = 0;
            while ci < p.len {
                let cell = p.cells[ci];
                if cell.count_ones() < 2 {
                    ci += 1;
                    continue;
                }
                let (mut lo, mut hi) = (usize::MAX, 0);
                let mut bits = cell;
                while bits != 0 {
                    let v = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    let c = (rows[v] & splitter).count_ones() as usize;
                    buckets[c] |= 1 << v;
                    lo = lo.min(c);
                    hi = hi.max(c);
                }
                if lo == hi {
                    buckets[lo] = 0;
                    ci += 1;
                    continue;
                }
                let mut k = 0;
                for b in &mut buckets[lo..=hi] {
                    if *b != 0 {
                        pieces[k] = *b;
                        k += 1;
                        *b = 0;
                    }
                }
                p.replace(ci, &pieces[..k]);
                changed = true;
                ci += k;
            }
            si += 1;
        }
    }
}

struct Leaf {
    order: [u8; MAX_CANON_ORDER],
    form: Graph,
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    first: Option<Leaf>,
    first_path: Vec<usize>,
    best: Option<Leaf>,
    best_path: Vec<usize>,
    generators: Vec<[u8; MAX_CANON_ORDER]>,
}

fn common_prefix(a: &[usize], b: &[usize]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl Search<'_> {
    /// Returns `Some(level)` when an automorphism shows that every node
    /// deeper than `level` on the current path is already accounted for.
    fn visit(&mut self, p: &Partition, path: &mut Vec<usize>) -> Option<usize> {
        if p.is_discrete(self.n) {
            return self.leaf(p, path);
        }
        let target = (0..p.len)
            .filter(|&i| p.cells[i].count_ones() > 1)
            .min_by_key(|&i| p.cells[i].count_ones())
            .expect("non-discrete partition has a non-singleton cell");
        let cell = p.cells[target];
        let level = path.len();
        let mut explored = 0u64;
        let mut orbits = Orbits::identity(self.n);
        let mut orbits_gens = 0;
        for v in VertexSet(cell) {
            if explored != 0 {
                if orbits_gens != self.generators.len() {
                    orbits = Orbits::identity(self.n);
                    for gen in &self.generators {
                        if path.iter().all(|&x| gen[x] as usize == x) {
                            orbits.absorb(gen, self.n);
                        }
                    }
                    orbits_gens = self.generators.len();
                }
                let root = orbits.find(v);
                if VertexSet(explored).iter().any(|u| orbits.find(u) == root) {
                    continue;
                }
            }
            let mut child = *p;
            child.replace(target, &[1 << v, cell & !(1 << v)]);
            refine(self.g, &mut child);
            path.push(v);
            let back = self.visit(&child, path);
            path.pop();
            explored |= 1 << v;
            if let Some(to) = back {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    fn leaf(&mut self, p: &Partition, path: &[usize]) -> Option<usize> {
        let n = self.n;
        let mut order = [0u8; MAX_CANON_ORDER];
        let mut pos = [0u8; MAX_CANON_ORDER];
        for (i, cell) in p.cells[..n].iter().enumerate() {
            let v = cell.trailing_zeros() as u8;
            order[i] = v;
            pos[v as usize] = i as u8;
        }
        let mut rows = [0u64; MAX_CANON_ORDER];
        for i in 0..n {
            for w in self.g.neighbours(order[i] as usize) {
                rows[i] |= 1 << pos[w];
            }
        }
        let form = Graph::from_rows(&rows[..n]).expect("relabelling preserves simplicity");
        let leaf = Leaf { order, form };

        let Some(first) = &self.first else {
            self.first_path = path.to_vec();
            self.best_path = path.to_vec();
            self.best = Some(Leaf { order, form });
            self.first = Some(leaf);
            return None;
        };
        if first.form == leaf.form {
            let gen = automorphism(&first.order, &leaf.order, n);
            self.generators.push(gen);
            return Some(common_prefix(path, &self.first_path));
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.form.cmp(&best.form) {
            core::cmp::Ordering::Greater => {
                self.best = Some(leaf);
                self.best_path = path.to_vec();
                None
            }
            core::cmp::Ordering::Equal => {
                let gen = automorphism(&best.order, &leaf.order, n);
                self.generators.push(gen);
                Some(common_prefix(path, &self.best_path))
            }
            core::cmp::Ordering::Less => None,
        }
    }
}

/// The automorphism sending `from[i]` to `to[i]` for every position `i`.
fn automorphism(from: &[u8], to: &[u8], n: usize) -> [u8; MAX_CANON_ORDER] {
    let mut gen = [0u8; MAX_CANON_ORDER];
    for i in 0..n {
        gen[from[i] as usize] = to[i];
    }
    gen
}

struct Orbits {
    parent: [u8; MAX_CANON_ORDER],
}

impl Orbits {
    fn identity(n: usize) -> Self {
        let mut parent = [0u8; MAX_CANON_ORDER];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = i as u8;
        }
        Orbits { parent }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] as usize != v {
            let up = self.parent[self.parent[v] as usize];
            self.parent[v] = up;
            v = up as usize;
        }
        v
    }

    fn absorb(&mut self, gen: &[u8; MAX_CANON_ORDER], n: usize) {
        for (v, &image) in gen[..n].iter().enumerate() {
            let (a, b) = (self.find(v), self.find(image as usize));
            if a != b {
                self.parent[a.max(b)] = a.min(b) as u8;
            }
        }
    }
}
