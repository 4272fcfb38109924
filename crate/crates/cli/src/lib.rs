//! File formats, reports and the `partmono` command-line tool.
//!
//! Exit codes: 0 for success or PASS, 1 when a violation is found, 2 for any
//! input or usage error.

pub mod commands;
pub mod format;

pub use commands::{run, Cli, CliError};

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
