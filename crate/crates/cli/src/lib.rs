//! File formats and report rendering for the `centrality` command.
//!
//! - [`edgelist`]: graphs as `u v` lines, optional `# nodes: N` header
//! - [`tsv`]: score vectors as `node<TAB>score` after `#` parameter lines
//! - [`corpus`]: retrieval corpora kept as a directory of TSV files
//! - [`report`]: axiom verdicts and evaluation runs as text

pub mod corpus;
pub mod edgelist;
mod error;
pub mod report;
pub mod tsv;

pub use error::FormatError;

use std::io::{Read, Write};
use std::path::Path;

/// Reads a whole file, or standard input for `-`.
pub fn read_source(path: &str) -> Result<String, FormatError> {
    let mut text = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut text)?;
    } else {
        text = std::fs::read_to_string(path).map_err(|e| FormatError::io(path, e))?;
    }
    Ok(text)
}

/// Writes `text` to `path` through a temporary file in the same directory,
/// so a failed run never leaves a partial file behind. `None` is stdout.
pub fn write_output(path: Option<&Path>, text: &str) -> Result<(), FormatError> {
    let Some(path) = path else {
        let mut out = std::io::stdout().lock();
        out.write_all(text.as_bytes())?;
        return Ok(out.flush()?);
    };
    let dir = match path.parent() {
        Some(d) if !d.as_os_str().is_empty() => d,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(|e| FormatError::io(dir, e))?;
    tmp.write_all(text.as_bytes())?;
    tmp.persist(path).map_err(|e| FormatError::io(path, e.error))?;
    Ok(())
}
