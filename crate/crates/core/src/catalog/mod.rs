//! Named figure graphs and the fixture corpus.

pub mod corpus;
pub mod named;

pub use corpus::{default_corpus_dir, load_corpus, parse_fixture, Fixture, FixtureCheck};
pub use named::{named_graph, NamedGraph};
