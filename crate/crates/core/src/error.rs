use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    Range { vertex: usize, n: usize },

    #[error("invalid argument: {0}")]
    Argument(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("graph is not cop-win (corner rank is infinite)")]
    NotCopWin,

    #[error("order {requested} exceeds the search cap {cap}")]
    Resource { requested: usize, cap: usize },

    #[error("search would build about {estimate} candidate graphs, over the budget of {budget}")]
    Budget { estimate: u64, budget: u64 },

    #[error("invalid game state: {0}")]
    State(String),

    #[error("{file}: {source}")]
    Corpus {
        file: String,
        #[source]
        source: Box<Error>,
    },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn argument(message: impl Into<String>) -> Self {
        Error::Argument(message.into())
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
