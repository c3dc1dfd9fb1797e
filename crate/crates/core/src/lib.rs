//! Shifting, exact matching search and constructive witness extraction for
//! uniform set families.
//!
//! Edges are subsets of `[n] = {1, ..., n}` with `n <= 128`, stored as
//! bitmasks. All counting is exact in `u128` with overflow reported as an
//! error.

pub mod binom;
pub mod bounds;
pub mod colex;
pub mod error;
pub mod family;
pub mod format;
pub mod random;
pub mod shift;
pub mod solver;
pub mod suites;
pub mod witness;

pub use binom::binom;
pub use bounds::{erdos_bound, BoundReport, Regime};
pub use error::{Error, Result};
pub use family::{ColoredFamilies, Edge, Matching, SetFamily, MAX_N};
pub use format::{parse_document, parse_shg, parse_shgm, to_shg, to_shgm, Document};
pub use shift::{ShiftOp, ShiftTrace, Side};
pub use solver::{max_matching, rainbow_matching, SolverLimits};
pub use suites::{run_suite, Suite, SuiteReport};
pub use witness::{CaseTag, ExtractionReport};
