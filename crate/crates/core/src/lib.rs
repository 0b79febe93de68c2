//! Corner ranking, capture time and rank cardinality vectors for the one-cop
//! game of cops and robbers, plus the exhaustive search used to check
//! realizability claims on small graphs.

pub mod catalog;
pub mod error;
pub mod game;
pub mod graph;
pub mod projection;
pub mod rank;
pub mod search;
pub mod vector;

pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use rank::{corner_rank, CaptureTime, CornerRanking, Rank, TopHeaviness};
pub use vector::RankVector;
