use thiserror::Error;

use crate::symmetry::NodePartition;

#[derive(Debug, Error)]
pub enum Error {
    #[error("cannot parse rational number from {0:?}")]
    BadRational(String),
    #[error("invalid weighted graph: {0}")]
    InvalidWeightedGraph(String),
    #[error("invalid labeled graph: {0}")]
    InvalidLabeledGraph(String),
    #[error("catalog bounds exclude the unit graph: max_nodes {max_nodes} < k {k}")]
    BoundsExcludeUnit { k: usize, max_nodes: usize },
    #[error("graph is not twin-free; twin classes: {0}")]
    NotTwinFree(NodePartition),
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}
