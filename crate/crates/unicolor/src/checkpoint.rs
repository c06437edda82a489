//! Census checkpoints on disk: a versioned JSON blob. Witness reports are
//! recomputed on load, so only graphs and colourings are stored.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicolor_core::census::{CensusTask, Checkpoint, Witness};
use unicolor_core::colouring::verify;
use unicolor_core::{Colouring, Unlimited};

use crate::graph6;
use crate::json::StatsJson;

const FORMAT: &str = "unicolor-census-checkpoint";
const VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum CheckpointError {
    #[error("not a checkpoint file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("checkpoint format {format:?} version {version} is not supported")]
    Version { format: String, version: u32 },
    #[error("bad witness in checkpoint: {0}")]
    Witness(String),
}

#[derive(Debug, Serialize, Deserialize)]
struct TaskBlob {
    n: usize,
    k: usize,
    triangle_free: bool,
    connected: bool,
    min_degree: usize,
    balanced: bool,
    edges: Option<(usize, usize)>,
}

#[derive(Debug, Serialize, Deserialize)]
struct WitnessBlob {
    graph6: String,
    labels: Vec<usize>,
}

#[derive(Debug, Serialize, Deserialize)]
struct Blob {
    format: String,
    version: u32,
    task: TaskBlob,
    split_order: usize,
    next_root: usize,
    stats: StatsJson,
    witnesses: Vec<WitnessBlob>,
}

pub fn to_json(cp: &Checkpoint) -> String {
    let t = &cp.task;
    let blob = Blob {
        format: FORMAT.into(),
        version: VERSION,
        task: TaskBlob {
            n: t.n,
            k: t.k,
            triangle_free: t.triangle_free,
            connected: t.connected,
            min_degree: t.min_degree,
            balanced: t.balanced,
            edges: t.edges,
        },
        split_order: cp.split_order,
        next_root: cp.next_root,
        stats: (&cp.stats).into(),
        witnesses: cp
            .witnesses
            .iter()
            .map(|w| WitnessBlob {
                graph6: graph6::encode(&w.graph),
                labels: w.colouring.labels().collect(),
            })
            .collect(),
    };
    serde_json::to_string(&blob).expect("checkpoint serialises")
}

pub fn from_json(text: &str) -> Result<Checkpoint, CheckpointError> {
    let blob: Blob = serde_json::from_str(text)?;
    if blob.format != FORMAT || blob.version != VERSION {
        return Err(CheckpointError::Version {
            format: blob.format,
            version: blob.version,
        });
    }
    let t = blob.task;
    let task = CensusTask {
        n: t.n,
        k: t.k,
        triangle_free: t.triangle_free,
        connected: t.connected,
        min_degree: t.min_degree,
        balanced: t.balanced,
        edges: t.edges,
    };
    let mut witnesses = Vec::with_capacity(blob.witnesses.len());
    for w in blob.witnesses {
        let graph =
            graph6::parse(&w.graph6).map_err(|e| CheckpointError::Witness(e.to_string()))?;
        if w.labels.len() != graph.order() {
            return Err(CheckpointError::Witness(format!(
                "{} labels for {} vertices",
                w.labels.len(),
                graph.order()
            )));
        }
        let colouring = Colouring::from_labels(&w.labels);
        let report = verify(&graph, task.k, 2, &mut Unlimited);
        witnesses.push(Witness {
            graph,
            colouring,
            report,
        });
    }
    Ok(Checkpoint {
        task,
        split_order: blob.split_order,
        next_root: blob.next_root,
        stats: (&blob.stats).into(),
        witnesses,
    })
}
