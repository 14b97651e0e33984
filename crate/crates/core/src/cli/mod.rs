//! Front end: the operator parser, the check registry and report output.

pub mod commands;
pub mod parser;
pub mod pretty;
pub mod registry;

pub use parser::parse_operator;
pub use registry::{grid, run_all, run_check, AggregateReport, CheckId, CheckReport, Params, Profile, Verdict};
