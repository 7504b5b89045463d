//! Command-line front end for ranking alternatives rated with FNNNs.
//!
//! The binary `fnn-madm` is a thin wrapper around [`run`]. The modules are
//! public so tests and other tools can parse problem files and reports.

pub mod app;
pub mod error;
pub mod input;
pub mod report;

pub use app::{run, Env};
pub use error::CliError;
pub use input::{parse_problem, InputFormat, RawCell, RawProblem, WeightChoice};
pub use report::{RankDoc, SweepDoc};
