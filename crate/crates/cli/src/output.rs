//! Deterministic text output: CSV files with UTF-8, LF line endings, `.`
//! decimal separator, and 17-significant-digit scientific floats so re-runs
//! with the same seed diff clean byte-for-byte.

use std::fs;
use std::path::Path;

use anyhow::{Context, Result};

/// Full-precision float formatting; `inf` is the serialized form of the
/// K = −ln 0 sentinel.
pub fn fmt_float(x: f64) -> String {
    if x.is_nan() {
        "nan".to_string()
    } else if x.is_infinite() {
        if x > 0.0 { "inf" } else { "-inf" }.to_string()
    } else {
        format!("{x:.16e}")
    }
}

/// Optional float column; absent values become empty fields.
pub fn fmt_opt_float(x: Option<f64>) -> String {
    x.map(fmt_float).unwrap_or_default()
}

/// Writes `content` to `path`, creating parent directories as needed.
pub fn write_text(path: &Path, content: &str) -> Result<()> {
    if let Some(parent) = path.parent() {
        if !parent.as_os_str().is_empty() {
            fs::create_dir_all(parent)
                .with_context(|| format!("creating output directory {}", parent.display()))?;
        }
    }
    fs::write(path, content).with_context(|| format!("writing {}", path.display()))
}
