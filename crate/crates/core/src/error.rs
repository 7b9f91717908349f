use std::path::PathBuf;

use crate::dataset::{ExpressionLabel, IdentityLabel, PoseLabel};

pub type Result<T> = std::result::Result<T, CompGanError>;

#[derive(Debug, thiserror::Error)]
pub enum CompGanError {
    #[error("io error at {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("manifest parse error at line {line}: {msg}")]
    ManifestParse { line: usize, msg: String },
    #[error("invalid label: {0}")]
    InvalidLabel(String),
    #[error("resolution too small: {0} (minimum 32)")]
    ResolutionTooSmall(usize),
    #[error("no ground-truth record for (identity={}, pose={}, expression={})", .identity.index(), .pose.name(), .expression.index())]
    MissingTarget {
        identity: IdentityLabel,
        pose: PoseLabel,
        expression: ExpressionLabel,
    },
    #[error("insufficient data for category {category}: requested {requested}, available {available}")]
    InsufficientData {
        category: String,
        requested: usize,
        available: usize,
    },
    #[error("split invariant violated: {0}")]
    SplitInvariant(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("checkpoint error: {0}")]
    Checkpoint(String),
    #[error("training diverged: {0}")]
    Diverged(String),
    #[error("image decode error at {path}: {source}")]
    Image {
        path: PathBuf,
        #[source]
        source: image::ImageError,
    },
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

impl CompGanError {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        CompGanError::Io {
            path: path.into(),
            source,
        }
    }
}
