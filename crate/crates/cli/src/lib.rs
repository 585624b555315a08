//! Std front end for `prm-core`: text and JSON formats, a parallel weight
//! search, and the `prm` command-line tool.

pub mod commands;
pub mod formats;
pub mod records;
pub mod search;

pub use commands::{run, Cli, CliError, Format};
