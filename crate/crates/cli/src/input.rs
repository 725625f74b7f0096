use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use nearring_core::builtin::builtin;
use nearring_core::table_format::load_nearring;
use nearring_core::{Error, NearRing};

/// Process exit codes. When several inputs are processed the largest wins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Exit {
    Clean = 0,
    Axiom = 1,
    Theorem = 2,
    Io = 3,
}

impl Exit {
    pub fn worst(self, other: Exit) -> Exit {
        self.max(other)
    }

    /// The code a core error maps to.
    pub fn of(e: &Error) -> Exit {
        match e {
            Error::Axiom(_) | Error::BadUnity { .. } | Error::NotUnital => Exit::Axiom,
            _ => Exit::Io,
        }
    }
}

/// A failure with the code it should produce.
#[derive(Debug)]
pub struct Failure {
    pub exit: Exit,
    pub message: String,
}

impl Failure {
    pub fn io(message: impl Into<String>) -> Self {
        Failure {
            exit: Exit::Io,
            message: message.into(),
        }
    }

    pub fn from_core(source: &str, e: &Error) -> Self {
        Failure {
            exit: Exit::of(e),
            message: format!("{source}: {e}"),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

pub const BUILTIN_PREFIX: &str = "builtin:";

/// Loads a table file, or a catalog entry written `builtin:NAME`.
pub fn load(source: &str) -> Result<NearRing, Failure> {
    if let Some(name) = source.strip_prefix(BUILTIN_PREFIX) {
        return builtin(name).map_err(|e| Failure::from_core(source, &e));
    }
    let bytes = fs::read(source).map_err(|e| Failure::io(format!("{source}: {e}")))?;
    load_nearring(&bytes).map_err(|e| Failure::from_core(source, &e))
}

/// `*.json` files directly inside `dir`, sorted by file name.
pub fn json_files(dir: &Path) -> Result<Vec<PathBuf>, Failure> {
    let entries = fs::read_dir(dir).map_err(|e| Failure::io(format!("{}: {e}", dir.display())))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry
            .map_err(|e| Failure::io(format!("{}: {e}", dir.display())))?
            .path();
        if path.is_file() && path.extension().is_some_and(|x| x == "json") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Expands directories among `paths` into their table files.
pub fn expand(paths: &[String]) -> Result<Vec<String>, Failure> {
    let mut out = Vec::new();
    for p in paths {
        let path = Path::new(p);
        if !p.starts_with(BUILTIN_PREFIX) && path.is_dir() {
            out.extend(json_files(path)?.iter().map(|f| f.display().to_string()));
        } else {
            out.push(p.clone());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn worst_code_wins() {
        assert_eq!(Exit::Clean.worst(Exit::Theorem), Exit::Theorem);
        assert_eq!(Exit::Io.worst(Exit::Axiom), Exit::Io);
    }

    #[test]
    fn builtin_inputs() {
        assert_eq!(load("builtin:m0_z3").unwrap().order(), 9);
        assert_eq!(load("builtin:nope").unwrap_err().exit, Exit::Io);
        assert_eq!(load("/no/such/file.json").unwrap_err().exit, Exit::Io);
    }
}
