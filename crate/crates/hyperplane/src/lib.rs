//! File formats, reports and the `hyperplane` command-line tool built on
//! [`hyperplane_core`].

pub mod cli;
pub mod format;
pub mod report;

pub use cli::run;
