//! JSON shapes written by the command-line tool.

use serde::{Deserialize, Serialize};
use unicolor_core::{Colouring, Graph, Ratio, Verdict, VerificationReport};

use crate::graph6;

/// One verification result. Field names are part of the output contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub graph6: String,
    pub k: usize,
    pub min_degree_ok: bool,
    pub connected_ok: bool,
    pub connectivity_ok: bool,
    pub xu_slack: i64,
    pub two_class_connected_ok: Option<bool>,
    pub partition_count: u64,
    pub count_capped: bool,
    /// `null` when the exact count ran out of budget.
    pub uniquely_colourable: Option<bool>,
}

impl ReportJson {
    pub fn new(g: &Graph, r: &VerificationReport) -> Self {
        ReportJson {
            graph6: graph6::encode(g),
            k: r.k,
            min_degree_ok: r.min_degree_ok,
            connected_ok: r.connected_ok,
            connectivity_ok: r.connectivity_ok,
            xu_slack: r.xu_slack,
            two_class_connected_ok: r.two_class_connected_ok,
            partition_count: r.partition_count,
            count_capped: r.count_capped,
            uniquely_colourable: r.verdict.as_option(),
        }
    }

    pub fn verdict(&self) -> Verdict {
        match self.uniquely_colourable {
            Some(true) => Verdict::Yes,
            Some(false) => Verdict::No,
            None => Verdict::Unknown,
        }
    }
}

/// A line of `check` output that could not be parsed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputErrorJson {
    /// 1-based line number, or 0 for a command-line argument.
    pub line: usize,
    pub input: String,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub graph6: String,
    pub n: usize,
    pub k: usize,
    pub edges: usize,
    pub report: ReportJson,
}

impl WitnessJson {
    pub fn new(g: &Graph, r: &VerificationReport) -> Self {
        WitnessJson {
            graph6: graph6::encode(g),
            n: g.order(),
            k: r.k,
            edges: g.size(),
            report: ReportJson::new(g, r),
        }
    }
}

/// Exact rational written as `"p/q"`, or `"p"` for integers.
pub fn ratio_string(r: &Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn classes_json(c: &Colouring) -> Vec<Vec<usize>> {
    c.classes()
        .iter()
        .map(|class| class.iter().collect())
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuPropertiesJson {
    /// Order, size, class sizes, induced copy and the per-vertex degree cases.
    pub postconditions_ok: bool,
    pub input_clique_number: usize,
    pub clique_number: usize,
    pub input_min_degree: Option<usize>,
    pub min_degree: Option<usize>,
    /// `null` when σ could not be computed within budget.
    pub chi_cr: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuJson {
    pub graph6: String,
    pub n: usize,
    pub edges: usize,
    pub k: usize,
    pub iterations: usize,
    pub classes: Vec<Vec<usize>>,
    pub properties: NuPropertiesJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleJson {
    pub graph6: String,
    pub k: usize,
    /// Part size.
    pub n: usize,
    pub epsilon: f64,
    pub seed: u64,
    pub target_girth: Option<usize>,
    pub edges_sampled: usize,
    pub edges_removed: usize,
    pub edges: usize,
    /// `null` for a forest (infinite girth).
    pub girth: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StatsJson {
    pub nodes: u64,
    pub generated: u64,
    pub structural: u64,
    pub necessary: u64,
    pub unique: u64,
    pub witnesses: u64,
}

impl From<&unicolor_core::census::CensusStats> for StatsJson {
    fn from(s: &unicolor_core::census::CensusStats) -> Self {
        StatsJson {
            nodes: s.nodes,
            generated: s.generated,
            structural: s.structural,
            necessary: s.necessary,
            unique: s.unique,
            witnesses: s.witnesses,
        }
    }
}

impl From<&StatsJson> for unicolor_core::census::CensusStats {
    fn from(s: &StatsJson) -> Self {
        unicolor_core::census::CensusStats {
            nodes: s.nodes,
            generated: s.generated,
            structural: s.structural,
            necessary: s.necessary,
            unique: s.unique,
            witnesses: s.witnesses,
        }
    }
}

/// Written to stderr at the end of a census run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusSummaryJson {
    pub n: usize,
    pub k: usize,
    pub complete: bool,
    pub next_root: Option<usize>,
    pub roots: usize,
    pub stats: StatsJson,
}
