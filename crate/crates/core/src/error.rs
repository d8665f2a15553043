use thiserror::Error;

/// Errors raised across the toolkit.
///
/// Budget and cap violations are kept apart from genuine input errors so
/// callers (the CLI in particular) can map them to distinct exit codes.
#[derive(Debug, Error)]
pub enum Error {
    #[error("{what}: group order {order} exceeds cap {cap}")]
    OrderCap {
        what: &'static str,
        order: usize,
        cap: usize,
    },

    #[error("{what}: step budget of {limit} exhausted at tuple depth {depth}")]
    Budget {
        what: &'static str,
        limit: u64,
        depth: usize,
    },

    #[error("{what}: {size} exceeds cap {cap}")]
    SizeCap {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("invalid group table: {0}")]
    InvalidGroup(String),

    #[error("line {line}, column {column}: {message}")]
    TableSyntax {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("subgroup is not normal in {group}")]
    NotNormal { group: String },

    #[error("{0}")]
    Precondition(String),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// True for errors caused by a budget or size cap rather than bad input.
    pub fn is_budget(&self) -> bool {
        matches!(
            self,
            Error::OrderCap { .. } | Error::Budget { .. } | Error::SizeCap { .. }
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
