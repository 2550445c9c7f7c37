//! Optional `key = value` configuration file.

use std::path::Path;

use serde::Deserialize;

use crate::error::CliError;

#[derive(Debug, Clone, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct Config {
    /// Default budget in seconds for commands and claims.
    pub budget_seconds: Option<f64>,
    /// Random orders added to each order pool.
    pub order_sample: Option<usize>,
    /// Seed for those orders.
    pub order_seed: Option<u64>,
    /// Worker threads for `verify`.
    pub jobs: Option<usize>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Usage(format!("config: {}", e.message())))
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        Self::parse(&text)
    }
}
