//! Random balanced `k`-partite graphs and short-cycle deletion.

use alloc::vec::Vec;

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::ConstructionError;
use crate::graph::{shortest_cycle, Graph, MAX_ORDER};

/// Parameters for [`bollobas_sauer_sample`]. Parts are `0..n`, `n..2n`, ...
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    pub k: usize,
    /// Size of each part.
    pub n: usize,
    pub epsilon: f64,
    /// When set, `epsilon` must lie below `1 / (4 g)`.
    pub girth: Option<usize>,
    pub seed: u64,
}

impl SamplerConfig {
    pub fn validate(&self) -> Result<(), ConstructionError> {
        if self.k == 0 || self.n == 0 {
            return Err(ConstructionError::InvalidConfig("k and n must be positive"));
        }
        if self.k * self.n > MAX_ORDER {
            return Err(ConstructionError::Overflow {
                order: self.k * self.n,
            });
        }
        if !(self.epsilon.is_finite() && self.epsilon > 0.0) {
            return Err(ConstructionError::InvalidConfig("epsilon must be positive"));
        }
        if let Some(g) = self.girth {
            if g == 0 || self.epsilon * 4.0 * g as f64 >= 1.0 {
                return Err(ConstructionError::InvalidConfig(
                    "epsilon must be below 1/(4 girth)",
                ));
            }
        }
        Ok(())
    }

    /// `C(k, 2) n^(1 + ε)`, rounded half up.
    pub fn edge_target(&self) -> usize {
        let pairs = (self.k * (self.k - 1) / 2) as f64;
        libm::floor(pairs * libm::pow(self.n as f64, 1.0 + self.epsilon) + 0.5) as usize
    }

    /// Number of cross-part vertex pairs.
    pub fn slots(&self) -> usize {
        self.k * (self.k - 1) / 2 * self.n * self.n
    }
}

/// Draws `edge_target()` distinct cross-part edges uniformly without
/// replacement. Identical configurations give identical graphs.
pub fn bollobas_sauer_sample(cfg: &SamplerConfig) -> Result<Graph, ConstructionError> {
    cfg.validate()?;
    let m = cfg.edge_target();
    let order = cfg.k * cfg.n;
    let mut slots = Vec::with_capacity(cfg.slots());
    for u in 0..order {
        for v in u + 1..order {
            if u / cfg.n != v / cfg.n {
                slots.push((u, v));
            }
        }
    }
    if m > slots.len() {
        return Err(ConstructionError::TooManyEdges {
            edges: m,
            slots: slots.len(),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut g = Graph::new(order)?;
    for i in index::sample(&mut rng, slots.len(), m) {
        let (u, v) = slots[i];
        g.add_edge(u, v);
    }
    Ok(g)
}

/// Repeatedly finds a shortest cycle of length below `target` and deletes
/// its lexicographically smallest edge. Returns the graph and the number of
/// deletions.
pub fn remove_short_cycles(g: &Graph, target: usize) -> (Graph, usize) {
    let mut g = *g;
    let mut removed = 0;
    while let Some(cycle) = shortest_cycle(&g) {
        if cycle.len() >= target {
            break;
        }
        let (u, v) = (0..cycle.len())
            .map(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % cycle.len()]);
                (a.min(b), a.max(b))
            })
            .min()
            .expect("cycles are non-empty");
        g.remove_edge(u, v);
        removed += 1;
    }
    (g, removed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, girth, VertexSet};

    fn cfg(seed: u64) -> SamplerConfig {
        SamplerConfig {
            k: 3,
            n: 4,
            epsilon: 0.2,
            girth: None,
            seed,
        }
    }

    #[test]
    fn edge_target_rounds() {
        // 3 * 4^1.2 = 15.83
        assert_eq!(cfg(0).edge_target(), 16);
        assert_eq!(cfg(0).slots(), 48);
    }

    #[test]
    fn deterministic_and_multipartite() {
        let a = bollobas_sauer_sample(&cfg(7)).unwrap();
        assert_eq!(a, bollobas_sauer_sample(&cfg(7)).unwrap());
        assert_eq!(a.size(), 16);
        for (u, v) in a.edges() {
            assert_ne!(u / 4, v / 4);
        }
        let differs = (0..8).any(|s| bollobas_sauer_sample(&cfg(s)).unwrap() != a);
        assert!(differs);
    }

    #[test]
    fn validation() {
        let mut c = cfg(0);
        c.girth = Some(4);
        assert!(matches!(
            bollobas_sauer_sample(&c),
            Err(ConstructionError::InvalidConfig(_))
        ));
        c.epsilon = 0.05;
        assert!(bollobas_sauer_sample(&c).is_ok());
        c.epsilon = f64::NAN;
        assert!(c.validate().is_err());
        let big = SamplerConfig {
            k: 2,
            n: 2,
            epsilon: 1.5,
            girth: None,
            seed: 0,
        };
        assert_eq!(
            bollobas_sauer_sample(&big),
            Err(ConstructionError::TooManyEdges { edges: 6, slots: 4 })
        );
        let wide = SamplerConfig {
            k: 5,
            n: 13,
            epsilon: 0.1,
            girth: None,
            seed: 0,
        };
        assert_eq!(
            wide.validate(),
            Err(ConstructionError::Overflow { order: 65 })
        );
    }

    #[test]
    fn k4_cycle_removal_trace() {
        let (g, removed) = remove_short_cycles(&complete_graph(4).unwrap(), 4);
        assert_eq!(removed, 3);
        assert_eq!(g.size(), 3);
        assert_eq!(girth(&g), None);
        assert_eq!(g.neighbours(3), VertexSet::from_iter([0, 1, 2]));
    }

    #[test]
    fn removal_reaches_target() {
        let g = bollobas_sauer_sample(&SamplerConfig {
            k: 3,
            n: 8,
            epsilon: 0.3,
            girth: None,
            seed: 1,
        })
        .unwrap();
        let (h, removed) = remove_short_cycles(&g, 5);
        assert_eq!(h.size() + removed, g.size());
        assert!(girth(&h).is_none_or(|l| l >= 5));
    }
}
