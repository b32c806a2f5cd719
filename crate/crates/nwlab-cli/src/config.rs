//! Flat key = value experiment configuration.
//!
//! One experiment per file: `key = value` lines, `#` comments, blank lines
//! ignored. Every diagnostic carries the file path and, where a specific
//! key is at fault, its line number. Keys an experiment does not recognize
//! are rejected, so typos fail loudly instead of silently falling back to
//! defaults.

use std::cell::Cell;
use std::collections::BTreeMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

/// A configuration diagnostic with file/line context.
#[derive(Debug)]
pub struct ConfigError {
    path: PathBuf,
    line: Option<usize>,
    message: String,
}

impl ConfigError {
    fn new(path: &Path, line: Option<usize>, message: String) -> Self {
        ConfigError {
            path: path.to_path_buf(),
            line,
            message,
        }
    }
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "{}:{}: {}", self.path.display(), line, self.message),
            None => write!(f, "{}: {}", self.path.display(), self.message),
        }
    }
}

impl std::error::Error for ConfigError {}

struct Entry {
    value: String,
    line: usize,
    used: Cell<bool>,
}

/// A parsed configuration file: a key → value map remembering source lines
/// and which keys have been consumed.
pub struct Config {
    path: PathBuf,
    entries: BTreeMap<String, Entry>,
}

impl Config {
    /// Reads and parses a configuration file.
    pub fn load(path: &Path) -> Result<Config, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::new(path, None, format!("cannot read config: {e}")))?;
        let mut entries = BTreeMap::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(ConfigError::new(
                    path,
                    Some(line_no),
                    format!("expected `key = value`, got `{line}`"),
                ));
            };
            let key = key.trim();
            let value = value.trim();
            if key.is_empty() || value.is_empty() {
                return Err(ConfigError::new(
                    path,
                    Some(line_no),
                    format!("expected `key = value`, got `{line}`"),
                ));
            }
            if let Some(previous) = entries.insert(
                key.to_string(),
                Entry {
                    value: value.to_string(),
                    line: line_no,
                    used: Cell::new(false),
                },
            ) {
                let _ = previous;
                return Err(ConfigError::new(
                    path,
                    Some(line_no),
                    format!("duplicate key `{key}`"),
                ));
            }
        }
        Ok(Config {
            path: path.to_path_buf(),
            entries,
        })
    }

    /// The raw value of a key, marking it consumed.
    pub fn get_str(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(|e| {
            e.used.set(true);
            e.value.as_str()
        })
    }

    /// The value of a mandatory key.
    pub fn require_str(&self, key: &str) -> Result<&str, ConfigError> {
        self.get_str(key).ok_or_else(|| {
            ConfigError::new(&self.path, None, format!("missing required key `{key}`"))
        })
    }

    fn parse<T: FromStr>(&self, key: &str, value: &str, kind: &str) -> Result<T, ConfigError> {
        value.parse::<T>().map_err(|_| {
            let line = self.entries.get(key).map(|e| e.line);
            ConfigError::new(
                &self.path,
                line,
                format!("key `{key}`: expected {kind}, got `{value}`"),
            )
        })
    }

    /// A mandatory typed value.
    pub fn require<T: FromStr>(&self, key: &str, kind: &str) -> Result<T, ConfigError> {
        let value = self.require_str(key)?;
        self.parse(key, value, kind)
    }

    /// An optional typed value with a default.
    pub fn get_or<T: FromStr>(&self, key: &str, kind: &str, default: T) -> Result<T, ConfigError> {
        match self.get_str(key) {
            Some(value) => self.parse(key, value, kind),
            None => Ok(default),
        }
    }

    /// A diagnostic anchored at a key's source line (or the file when the
    /// key was defaulted).
    pub fn error_at(&self, key: &str, message: impl Into<String>) -> ConfigError {
        let line = self.entries.get(key).map(|e| e.line);
        ConfigError::new(&self.path, line, message.into())
    }

    /// Fails if any key was never consumed — typos must not silently fall
    /// back to defaults.
    pub fn reject_unknown(&self, experiment: &str) -> Result<(), ConfigError> {
        for (key, entry) in &self.entries {
            if !entry.used.get() {
                return Err(ConfigError::new(
                    &self.path,
                    Some(entry.line),
                    format!("unknown key `{key}` for experiment `{experiment}`"),
                ));
            }
        }
        Ok(())
    }

    /// All key = value pairs in sorted order, for the run summary.
    pub fn pairs(&self) -> Vec<(String, String)> {
        self.entries
            .iter()
            .map(|(k, e)| (k.clone(), e.value.clone()))
            .collect()
    }
}
