//! The JSON sidecar written next to every data file: a full configuration
//! echo plus tool version and wall-clock duration. The `args` field holds the
//! reproduction-relevant flags (everything except `--out` and `--threads`),
//! so feeding them back to the same subcommand regenerates the data files
//! byte-for-byte.

use std::path::Path;

use anyhow::{Context, Result};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::output::write_text;

#[derive(Debug, Serialize, Deserialize)]
pub struct Manifest {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// Flags that determine the data files, excluding `--out`/`--threads`.
    pub args: Vec<String>,
    /// Structured echo of the resolved configuration.
    pub config: Value,
    /// Requested worker threads (0 = library default). Informational only:
    /// outputs are thread-count invariant.
    pub threads: usize,
    pub duration_seconds: f64,
}

impl Manifest {
    pub fn new(command: &str, args: Vec<String>, config: Value, threads: usize) -> Self {
        Self {
            tool: "qent".to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            args,
            config,
            threads,
            duration_seconds: 0.0,
        }
    }

    pub fn write(&self, path: &Path) -> Result<()> {
        let mut text = serde_json::to_string_pretty(self).context("serializing manifest")?;
        text.push('\n');
        write_text(path, &text)
    }
}
