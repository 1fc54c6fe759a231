//! Library side of the `umbra` command: configuration, value parsers,
//! runners and output.

mod config;
mod output;
mod parse;
mod run;

pub use config::{Command, Family, Format, Method, RunConfig};
pub use output::{error_record, json_document, write_atomic, Cell, Table, SCHEMA, VERSION};
pub use parse::{parse_complex, parse_param_list, RangeSpec, MAX_POINTS};
pub use run::{execute, render, Artifact, CliError};
