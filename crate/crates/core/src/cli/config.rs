use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{DEFAULT_PREC, MAX_PREC, MIN_PREC};

/// Environment variable naming the default config file.
pub const CONFIG_ENV: &str = "BINPADE_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridLimits {
    pub max_n: u32,
    pub max_m: u32,
    pub max_rho: u64,
    pub random_systems: usize,
    pub seed: u64,
}

impl Default for GridLimits {
    fn default() -> Self {
        GridLimits { max_n: 5, max_m: 4, max_rho: 4, random_systems: 25, seed: 7 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GoldenPaths {
    /// Directory of `*.json` golden cases replayed by `verify`.
    pub dir: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Config {
    pub precision: u32,
    pub format: Format,
    pub verify: GridLimits,
    pub golden: GoldenPaths,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            precision: DEFAULT_PREC,
            format: Format::Json,
            verify: GridLimits::default(),
            golden: GoldenPaths::default(),
        }
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Config> {
        let cfg: Config = toml::from_str(text).map_err(|e| Error::Parse(format!("config: {e}")))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("config {}: {e}", path.display())))?;
        let mut cfg = Config::parse(&text)?;
        if let Some(dir) = cfg.golden.dir.as_mut() {
            if dir.is_relative() {
                if let Some(parent) = path.parent() {
                    *dir = parent.join(&*dir);
                }
            }
        }
        Ok(cfg)
    }

    /// The explicit path, else the environment variable, else defaults.
    pub fn resolve(explicit: Option<&Path>) -> Result<Config> {
        match explicit {
            Some(p) => Config::load(p),
            None => match std::env::var_os(CONFIG_ENV) {
                Some(p) if !p.is_empty() => Config::load(Path::new(&p)),
                _ => Ok(Config::default()),
            },
        }
    }

    pub fn validate(&self) -> Result<()> {
        check_precision(self.precision)
    }
}

pub fn check_precision(bits: u32) -> Result<()> {
    if !(MIN_PREC..=MAX_PREC).contains(&bits) {
        return Err(Error::BadParams(format!("precision {bits} outside [{MIN_PREC}, {MAX_PREC}]")));
    }
    Ok(())
}
