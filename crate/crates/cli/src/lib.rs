//! Command-line front end: job files, checkpoints and command execution.

pub mod checkpoint;
pub mod error;
pub mod input;
pub mod run;

pub use error::{exit, CliError};
pub use input::{Job, JobSpec, Source};
pub use run::{run, Cli, Outcome};
