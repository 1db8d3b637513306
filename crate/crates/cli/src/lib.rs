//! Input documents, analysis commands, report rendering and the invariant
//! suite behind the `jz` binary.

pub mod check;
pub mod commands;
pub mod corpus;
pub mod document;
pub mod error;
pub mod render;

pub use commands::{run, Command, OutputReport, Run};
pub use document::{build, parse_document, Input, InputDocument, Overrides};
pub use error::CliError;

/// Pretty JSON with a trailing newline.
pub fn to_json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}
