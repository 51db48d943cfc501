pub mod error;
pub mod graph;

pub use error::{Error, Result};
pub use graph::{Cut, Graph, LinearForest, Matching, VertexCover, VertexSet};
pub mod analysis;
pub mod constructions;
pub mod counting;
pub mod hamiltonicity;
pub mod numerics;
pub mod par;
pub mod verify;
