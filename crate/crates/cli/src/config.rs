//! Settings merged from flags, the environment and an optional TOML file.
//! Flags win over `CDEG_GENUS_CAP`, which wins over the file, which wins
//! over the built-in defaults.

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Deserialize;

pub const GENUS_CAP_ENV: &str = "CDEG_GENUS_CAP";

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub genus_cap: Option<usize>,
    pub workers: Option<usize>,
    pub cache_path: Option<PathBuf>,
}

/// A config file that cannot be parsed, or an environment value that is
/// not a number. Both are usage errors.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config file {}", path.display()))?;
        toml::from_str(&text)
            .map_err(|e| UsageError(format!("config file {}: {e}", path.display())).into())
    }
}

/// Effective settings.
#[derive(Debug, Clone)]
pub struct Settings {
    pub genus_cap: Option<usize>,
    pub workers: Option<usize>,
    pub cache_path: Option<PathBuf>,
}

impl Settings {
    pub fn resolve(file: Option<FileConfig>) -> Result<Self> {
        let file = file.unwrap_or_default();
        let env_cap = match std::env::var(GENUS_CAP_ENV) {
            Ok(v) => Some(v.trim().parse::<usize>().map_err(|_| {
                UsageError(format!(
                    "{GENUS_CAP_ENV} must be a nonnegative integer, got {v:?}"
                ))
            })?),
            Err(_) => None,
        };
        Ok(Settings {
            genus_cap: env_cap.or(file.genus_cap),
            workers: file.workers,
            cache_path: file.cache_path,
        })
    }
}
