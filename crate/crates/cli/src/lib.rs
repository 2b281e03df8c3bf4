//! Command-line front end for `hypnu`: figure data as CSV, spectra and
//! validation reports as JSON.

pub mod commands;
pub mod config;
pub mod error;
pub mod format;
pub mod report;

pub use commands::{Context, Kind, RmConvention};
pub use config::{load_config, parse_config, LoadedConfig, RunConfig};
pub use error::CliError;
