//! Presentation files, caching, reports and the command line.

pub mod algebra;
pub mod cache;
pub mod commands;
pub mod format;
pub mod report;

use std::path::Path;

pub use format::{parse, Document, GenDecl, ParseError};

/// Builtin presentation files, by name.
pub const BUILTINS: [(&str, &str); 5] = [
    ("bilie", include_str!("../presentations/bilie.diop")),
    ("bilie_dual", include_str!("../presentations/bilie_dual.diop")),
    ("com", include_str!("../presentations/com.diop")),
    ("ibial", include_str!("../presentations/ibial.diop")),
    ("lie", include_str!("../presentations/lie.diop")),
];

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{path}: {err}")]
    Parse { path: String, err: ParseError },
    #[error("cannot read {0}: {1}")]
    Io(String, std::io::Error),
    #[error(transparent)]
    Core(#[from] diopkit_core::Error),
    #[error("{0}")]
    Usage(String),
}

pub fn builtin(name: &str) -> Option<&'static str> {
    BUILTINS.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
}

/// Loads a builtin by name or a presentation file by path. A trailing `^op`
/// takes the opposite.
pub fn load(spec: &str) -> Result<Document, CliError> {
    if let Some(base) = spec.strip_suffix("^op") {
        return Ok(load(base)?.opposite()?);
    }
    let (text, default_name) = match builtin(spec) {
        Some(t) => (t.to_string(), spec.to_string()),
        None => {
            let path = Path::new(spec);
            let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(spec.to_string(), e))?;
            let stem = path.file_stem().and_then(|s| s.to_str()).unwrap_or("presentation").to_string();
            (text, stem)
        }
    };
    parse(&text, &default_name).map_err(|err| CliError::Parse { path: spec.to_string(), err })
}
