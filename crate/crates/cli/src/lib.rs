//! Library half of the `l2dim` binary: serialized input/output schemas and
//! the three subcommand implementations, kept callable so tests can drive
//! them without spawning processes.

pub mod commands;
pub mod schema;

pub use commands::{cmd_compute, cmd_sweep, cmd_truncate, CliError, ComputeArgs, SweepArgs, TruncateArgs};
