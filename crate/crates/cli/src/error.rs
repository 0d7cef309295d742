use std::path::Path;

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: node id {id} is out of range for {n} nodes")]
    Range { line: usize, id: String, n: usize },

    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Stream(#[from] std::io::Error),

    #[error(transparent)]
    Core(#[from] centrality_core::Error),
}

impl FormatError {
    pub(crate) fn io(path: impl AsRef<Path>, source: std::io::Error) -> Self {
        FormatError::Io {
            path: path.as_ref().display().to_string(),
            source,
        }
    }

    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        FormatError::Parse {
            line,
            message: message.into(),
        }
    }

    /// Prefixes parse and range errors with the file they came from.
    pub fn in_file(self, path: &str) -> Self {
        match self {
            FormatError::Parse { line, message } => FormatError::Parse {
                line,
                message: format!("{message} (in {path})"),
            },
            other => other,
        }
    }
}
