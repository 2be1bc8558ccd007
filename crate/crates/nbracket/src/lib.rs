//! Command-line front-end for `nbracket-core`: threaded oracle runs, JSON,
//! LaTeX and text output, a results log and a small benchmark harness.

pub mod bench;
pub mod commands;
pub mod config;
pub mod error;
pub mod json;
pub mod output;
pub mod parallel;
pub mod random;
pub mod record;

pub use config::{Format, MethodArg, RunConfig, Threads};
pub use error::CliError;
pub use parallel::Parallel;
