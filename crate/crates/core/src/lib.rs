//! Zero-divisor graphs of finite commutative rings and total perfect codes.
//!
//! A total perfect code of a graph is a vertex set `C` such that every vertex
//! has exactly one neighbour in `C`. This crate builds finite rings, their
//! zero-divisor graphs, and decides code existence through several
//! independent routes that are cross-checked against an exact search.

pub mod error;
pub mod graph;
pub mod limits;
pub mod par;
pub mod parser;
pub mod ring;
pub mod tpc;
pub mod treelab;
pub mod verify;
pub mod zdg;

pub use error::{Error, Result};
pub use graph::{CodeSet, Graph};
pub use limits::Limits;
pub use par::Exec;
pub use ring::{FiniteRing, Ring, RingBuilder, TableRingSpec};
