//! Command-line front end: schedule files, verification reports and the
//! `decouple` subcommands.

pub mod commands;
mod json;
pub mod report;
pub mod schedule;

pub use commands::{run, Cli, CliError, Output};
pub use report::{verify_file, verify_schedule, Mode, ModeRequest, Report, VerifyOptions, Witness};
pub use schedule::{LoadedFile, ScheduleFile, Times};
