//! File formats, the algebra expression language and the commands behind
//! the `tiltlab` binary.

pub mod commands;
pub mod error;
pub mod format;
pub mod spec;

pub use error::CliError;
