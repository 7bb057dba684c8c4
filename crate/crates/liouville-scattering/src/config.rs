//! Run configuration ingested from TOML.
//!
//! ```toml
//! [metric]
//! family = "hyperbolic_bump"
//! A = 1.0
//! B = 6.2831853071795865
//! eps0 = 1.0
//! eps1 = 1.0
//!
//! [metric.params]
//! beta = 0.1
//! beta2 = 0.05
//! bump_height = 0.2
//! bump_center = 0.45
//! bump_width = 0.2
//!
//! [run]
//! lambda = 1.0
//! n_channels = 50
//!
//! [tolerances]
//! picard = 1e-12
//! match_consistency = 1e-7
//! unitarity = 1e-6
//! ```

use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("config parse error: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("invalid configuration: {0}")]
    Invalid(String),
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct TabulatedData {
    pub x: Vec<f64>,
    pub a: Vec<f64>,
    pub y: Vec<f64>,
    pub b: Vec<f64>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct MetricConfig {
    pub family: String,
    #[serde(rename = "A")]
    pub radial_extent: f64,
    #[serde(rename = "B")]
    pub circumference: f64,
    #[serde(default = "default_eps")]
    pub eps0: f64,
    #[serde(default = "default_eps")]
    pub eps1: f64,
    #[serde(default)]
    pub delta: Option<f64>,
    #[serde(default)]
    pub params: BTreeMap<String, f64>,
    #[serde(default)]
    pub table: Option<TabulatedData>,
}

fn default_eps() -> f64 {
    1.0
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct RunSection {
    #[serde(default = "default_lambda")]
    pub lambda: f64,
    #[serde(default = "default_channels")]
    pub n_channels: usize,
    /// Normalization constants of the end-normalized solutions, as (re, im).
    #[serde(default = "default_c")]
    pub c10: [f64; 2],
    #[serde(default = "default_c")]
    pub c11: [f64; 2],
}

fn default_lambda() -> f64 {
    1.0
}

fn default_channels() -> usize {
    50
}

fn default_c() -> [f64; 2] {
    [1.0, 0.0]
}

impl Default for RunSection {
    fn default() -> Self {
        RunSection {
            lambda: default_lambda(),
            n_channels: default_channels(),
            c10: default_c(),
            c11: default_c(),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Tolerances {
    #[serde(default = "default_picard")]
    pub picard: f64,
    #[serde(default = "default_match")]
    pub match_consistency: f64,
    #[serde(default = "default_unitarity")]
    pub unitarity: f64,
    #[serde(default = "default_fingerprint")]
    pub fingerprint: f64,
}

fn default_picard() -> f64 {
    1e-12
}

fn default_match() -> f64 {
    1e-7
}

fn default_unitarity() -> f64 {
    1e-6
}

fn default_fingerprint() -> f64 {
    1e-6
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            picard: default_picard(),
            match_consistency: default_match(),
            unitarity: default_unitarity(),
            fingerprint: default_fingerprint(),
        }
    }
}

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct RunConfig {
    pub metric: MetricConfig,
    #[serde(default)]
    pub run: RunSection,
    #[serde(default)]
    pub tolerances: Tolerances,
}

impl RunConfig {
    pub fn from_toml_str(text: &str) -> Result<RunConfig, ConfigError> {
        let cfg: RunConfig = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_path(path: &Path) -> Result<RunConfig, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|source| ConfigError::Io {
            path: path.display().to_string(),
            source,
        })?;
        Self::from_toml_str(&text)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.run.lambda == 0.0 {
            return Err(ConfigError::Invalid("lambda must be non-zero".into()));
        }
        if self.run.n_channels == 0 {
            return Err(ConfigError::Invalid("n_channels must be >= 1".into()));
        }
        for (name, v) in [
            ("tolerances.picard", self.tolerances.picard),
            (
                "tolerances.match_consistency",
                self.tolerances.match_consistency,
            ),
            ("tolerances.unitarity", self.tolerances.unitarity),
            ("tolerances.fingerprint", self.tolerances.fingerprint),
        ] {
            if !(v > 0.0) {
                return Err(ConfigError::Invalid(format!("{name} must be positive")));
            }
        }
        if !(self.metric.radial_extent > 0.0) || !(self.metric.circumference > 0.0) {
            return Err(ConfigError::Invalid(
                "extents A, B must be positive".into(),
            ));
        }
        Ok(())
    }

    /// The configuration shipped as the default example surface.
    pub fn shipped_default() -> RunConfig {
        RunConfig::from_toml_str(include_str!("../configs/default.toml")).unwrap()
    }
}
