use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ring construction: {0}")]
    Construction(String),

    #[error("ring order {order} exceeds the configured cap {cap}")]
    OrderCap { order: u128, cap: usize },

    #[error("ring axiom violated: {0}")]
    Axiom(String),

    #[error("invalid structure constants: {0}")]
    TableSpec(String),

    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("unknown catalog ring '{name}'; known names: {}", known.join(", "))]
    UnknownCatalog { name: String, known: Vec<String> },

    #[error("{msg} (in '{text}' at {start}..{end})")]
    Resolve {
        msg: String,
        text: String,
        start: usize,
        end: usize,
    },

    #[error("invalid graph: {0}")]
    Graph(String),

    #[error("not a tree: {0}")]
    NotATree(String),

    #[error("enumeration bound exceeded: graph has {n} vertices, bound is {bound}; use find_tpc for a single code")]
    EnumerationBound { n: usize, bound: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("finding: {0}")]
    Finding(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
