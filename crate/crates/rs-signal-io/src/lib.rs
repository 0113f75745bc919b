//! Plain-text signal and table files.
//!
//! Signals are small and meant to be inspected by eye and diffed, so the
//! formats are deliberately simple UTF-8 text: one sample per line, or
//! comma-separated values on a line. Blank lines and lines starting with
//! `#` are ignored on input; CRLF is tolerated. Output always uses LF.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use rs_operators::Signal;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// A token failed to parse as a finite decimal real. Line and column
    /// are 1-based; the column points at the start of the token.
    #[error("{}:{line}:{column}: cannot parse {token:?} as a finite real", path.display())]
    Parse {
        path: PathBuf,
        line: usize,
        column: usize,
        token: String,
    },

    #[error("{}: file contains no samples", path.display())]
    Empty { path: PathBuf },
}

/// Read a signal from `path`.
///
/// Each non-blank, non-comment line yields one sample, or several when
/// comma-separated. The signal gets the default boundary policy
/// (replicate); callers rebind it as needed.
pub fn read_signal(path: impl AsRef<Path>) -> Result<Signal, IoError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })?;

    let mut samples = Vec::new();
    for (line_index, raw_line) in text.lines().enumerate() {
        let line = raw_line.strip_suffix('\r').unwrap_or(raw_line);
        if line.trim().is_empty() || line.trim_start().starts_with('#') {
            continue;
        }
        let mut column = 1usize;
        for token in line.split(',') {
            let trimmed = token.trim();
            let token_column = column + (token.len() - token.trim_start().len());
            let value = trimmed.parse::<f64>().ok().filter(|v| v.is_finite());
            match value {
                Some(v) => samples.push(v),
                None => {
                    return Err(IoError::Parse {
                        path: path.to_path_buf(),
                        line: line_index + 1,
                        column: token_column,
                        token: trimmed.to_string(),
                    })
                }
            }
            column += token.len() + 1; // past the comma
        }
    }

    if samples.is_empty() {
        return Err(IoError::Empty {
            path: path.to_path_buf(),
        });
    }
    Ok(Signal::new(samples).expect("samples are non-empty and finite"))
}

/// Render a real with 12 significant digits, trimming trailing zeros.
/// Integral values print exactly, with no decimal point.
pub fn format_real(value: f64) -> String {
    if value == 0.0 {
        return "0".to_string(); // covers -0.0
    }
    if value == value.trunc() && value.abs() < 1e15 {
        return format!("{}", value as i64);
    }
    let magnitude = value.abs().log10().floor() as i32;
    if (-4..12).contains(&magnitude) {
        let decimals = (11 - magnitude).max(0) as usize;
        let mut text = format!("{value:.decimals$}");
        if text.contains('.') {
            text.truncate(text.trim_end_matches('0').trim_end_matches('.').len());
        }
        text
    } else {
        format!("{value:.11e}")
    }
}

fn write_text(path: &Path, text: String) -> Result<(), IoError> {
    fs::write(path, text).map_err(|source| IoError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Write a signal, one sample per line.
pub fn write_signal(signal: &Signal, path: impl AsRef<Path>) -> Result<(), IoError> {
    let mut text = String::new();
    for &sample in signal.samples() {
        let _ = writeln!(text, "{}", format_real(sample));
    }
    write_text(path.as_ref(), text)
}

/// Write exact integers, one per line.
pub fn write_table(values: &[i64], path: impl AsRef<Path>) -> Result<(), IoError> {
    let mut text = String::new();
    for &value in values {
        let _ = writeln!(text, "{value}");
    }
    write_text(path.as_ref(), text)
}
