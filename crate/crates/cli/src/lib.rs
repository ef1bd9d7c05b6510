//! The `lamina` command-line tool.

pub mod args;
pub mod commands;
pub mod report;
pub mod svg;

pub use args::Cli;
pub use commands::{run, CliError, Output};
pub use report::{RunReport, RunResults};

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Bad data: unreadable database, non-physical material, failed validation.
pub const EXIT_DATA: i32 = 2;
/// Bad usage: arguments, unknown material, point outside the domain.
pub const EXIT_USAGE: i32 = 3;
