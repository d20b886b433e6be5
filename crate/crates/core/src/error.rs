use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{context}: dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        actual: usize,
    },

    #[error("{context}: need at least {min} items, got {actual}")]
    TooFewItems {
        context: &'static str,
        min: usize,
        actual: usize,
    },

    #[error("{context}: value {value} outside [{min}, {max}]")]
    OutOfRange {
        context: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    #[error("{context}: non-finite value")]
    NonFinite { context: &'static str },

    #[error("{context}: empty input")]
    Empty { context: &'static str },

    #[error("invalid config at `{field}`: {message}")]
    Config { field: String, message: String },

    #[error("training diverged at epoch {epoch}: loss is not finite")]
    Diverged { epoch: usize },

    #[error("metric `{metric}` failed: {source}")]
    Metric {
        metric: &'static str,
        #[source]
        source: Box<Error>,
    },

    #[error("unknown dataset generator `{0}`")]
    UnknownGenerator(String),

    #[error("snapshot `{model_id}`: {message}")]
    Snapshot { model_id: String, message: String },

    #[error("search result is incomplete: expected {expected} scored vectors, got {actual}")]
    IncompleteResult { expected: usize, actual: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error("manifest: {0}")]
    Manifest(#[from] serde_json::Error),
}

impl Error {
    /// Wrap an error with the name of the metric that produced it.
    pub fn for_metric(metric: &'static str, source: Error) -> Self {
        Error::Metric {
            metric,
            source: Box::new(source),
        }
    }
}
