use serde::{Deserialize, Serialize};

pub const DEFAULT_RING_ORDER_CAP: usize = 4096;
pub const DEFAULT_SEARCH_VERTEX_BOUND: usize = 64;
pub const DEFAULT_ENUMERATION_BOUND: usize = 24;

/// Size limits shared by ring construction and the search routines.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct Limits {
    /// Largest ring order any constructor will build.
    pub ring_order_cap: usize,
    /// Vertex count above which exact search is considered expensive.
    pub search_vertex_bound: usize,
    /// Vertex count above which full enumeration of codes is refused.
    pub enumeration_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            ring_order_cap: DEFAULT_RING_ORDER_CAP,
            search_vertex_bound: DEFAULT_SEARCH_VERTEX_BOUND,
            enumeration_bound: DEFAULT_ENUMERATION_BOUND,
        }
    }
}
