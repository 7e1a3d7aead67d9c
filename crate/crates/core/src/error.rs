use thiserror::Error;

/// Errors raised anywhere in the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    Input(String),

    #[error("edge ({0}, {1}) is not an edge of the host graph")]
    Containment(usize, usize),

    #[error("graph is not regular (degrees range over {min}..={max})")]
    NotRegular { min: usize, max: usize },

    #[error("eigensolver did not converge: {0}")]
    Numeric(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("budget exceeded: {0}")]
    Resource(String),

    #[error("generation failed: {0}")]
    Generation(String),

    #[error("extraction failed: {reason}")]
    Extraction {
        reason: String,
        /// Vertex sets removed before the failure, in removal order.
        trace: Vec<Vec<usize>>,
    },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("trial {index}: {source}")]
    Trial { index: usize, source: Box<Error> },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn input(msg: impl Into<String>) -> Error {
    Error::Input(msg.into())
}

/// Tags an error with the trial that raised it.
pub(crate) fn in_trial<T>(index: usize, r: Result<T>) -> Result<T> {
    r.map_err(|e| Error::Trial {
        index,
        source: Box::new(e),
    })
}
