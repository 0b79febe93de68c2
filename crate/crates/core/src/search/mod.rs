//! Exhaustive enumeration, realizability census, minimality and the
//! verification suites.

pub mod census;
pub mod construct;
pub mod enumerate;
pub mod minimal;
pub mod suites;

pub use census::{census, census_count, census_index, CensusOptions, Method, RFilter, RealizationCensus};
pub use construct::{add_twin, extend_tail, truncate};
pub use enumerate::{canonical_key, enumerate_connected, graph_from_key, DEFAULT_CAP, MAX_CAP};
pub use minimal::{check_minimal, MinimalityVerdict};
pub use suites::{verify_suite, SuiteOptions, SuiteReport, SUITES};
