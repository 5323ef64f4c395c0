//! Command-line driver, file formats and threaded search for `taxicab-forge-core`.

pub mod cli;
pub mod format;
pub mod parallel;
