//! Flat `key = value` configuration files. Flags always override file
//! values; the file only fills gaps.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;

#[derive(Debug)]
pub enum ConfigError {
    Io(String, std::io::Error),
    Parse { line: usize, content: String },
    BadValue { key: String, value: String },
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConfigError::Io(path, e) => write!(f, "cannot read config {path}: {e}"),
            ConfigError::Parse { line, content } => {
                write!(f, "config line {line} is not `key = value`: {content:?}")
            }
            ConfigError::BadValue { key, value } => {
                write!(f, "config value for {key} is not a number: {value:?}")
            }
        }
    }
}

impl std::error::Error for ConfigError {}

/// Parsed configuration: bare string values keyed by lowercase name.
/// Lines starting with `#` and blank lines are skipped.
#[derive(Debug, Default, Clone)]
pub struct ConfigFile {
    values: HashMap<String, String>,
}

impl ConfigFile {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError::Io(path.display().to_string(), e))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        let mut values = HashMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(ConfigError::Parse {
                    line: i + 1,
                    content: raw.to_string(),
                });
            };
            values.insert(
                key.trim().to_ascii_lowercase(),
                value.trim().to_string(),
            );
        }
        Ok(ConfigFile { values })
    }

    /// Numeric lookup; `flag` wins when present.
    pub fn number(&self, key: &str, flag: Option<f64>) -> Result<Option<f64>, ConfigError> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v
                .parse::<f64>()
                .map(Some)
                .map_err(|_| ConfigError::BadValue {
                    key: key.to_string(),
                    value: v.clone(),
                }),
        }
    }

    /// String lookup; `flag` wins when present.
    pub fn string(&self, key: &str, flag: Option<String>) -> Option<String> {
        flag.or_else(|| self.values.get(key).cloned())
    }
}
