//! Command implementations behind the `kodaira` binary.
//!
//! Every command returns its full stdout as a string so the binary only has
//! to print and pick an exit status. JSON output carries `"schema": 1` and
//! sorted keys, so identical inputs give byte-identical output.

pub mod commands;
pub mod json;
pub mod table;

use std::fmt;

use kodaira_core::dsl::DslError;
use kodaira_core::Error;

pub const SCHEMA_VERSION: u64 = 1;

/// Result of a command that ran to completion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    /// Set when a verification row failed; the binary exits with 1.
    pub verification_failed: bool,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, verification_failed: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Usage, parse or evaluation errors caused by the input.
    Input(String),
    /// The library detected an internal inconsistency.
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    /// Renders `err` with the offending part of `source` underlined.
    pub fn from_dsl(err: &DslError, source: &str) -> Self {
        let start = err.span.start.min(source.len());
        let end = err.span.end.clamp(start, source.len());
        let pad = source[..start].chars().count();
        let width = source[start..end].chars().count().max(1);
        let msg = format!("{err}\n  {source}\n  {}{}", " ".repeat(pad), "^".repeat(width));
        match &err.kind {
            kodaira_core::dsl::DslErrorKind::Eval(e) if e.is_internal() => CliError::Internal(msg),
            _ => CliError::Input(msg),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            CliError::Internal(e.to_string())
        } else {
            CliError::Input(e.to_string())
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(msg) => write!(f, "error: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

impl std::error::Error for CliError {}
