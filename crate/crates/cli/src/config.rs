//! Run configuration: defaults, then a `key=value` file, then flags.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::ValueEnum;
use serde::Serialize;

pub const CONFIG_ENV: &str = "APNKIT_CONFIG";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Text,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, true)
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Text => "text",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RunConfig {
    /// Largest field degree any scan may use.
    pub max_n: u32,
    /// Largest degree of the field holding roots of unity / singular points.
    pub max_root_field: u32,
    pub max_trial_degree: u32,
    /// 0 means one worker per core.
    pub workers: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            max_n: apnkit::apncode::DEFAULT_SCAN_CEILING,
            max_root_field: apnkit::field::MAX_FIELD_DEGREE,
            max_trial_degree: apnkit::factorlab::MAX_TRIAL_DEGREE,
            workers: 0,
            format: Format::Json,
            out: None,
            seed: 2024,
        }
    }
}

fn positive<T: FromStr + PartialOrd + Default>(key: &str, v: &str) -> Result<T, String> {
    let x: T = v.parse().map_err(|_| format!("{key}: cannot parse {v:?}"))?;
    if x <= T::default() {
        return Err(format!("{key}: must be positive"));
    }
    Ok(x)
}

impl RunConfig {
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), String> {
        match key {
            "max_n" => self.max_n = positive(key, value)?,
            "max_root_field" => self.max_root_field = positive(key, value)?,
            "max_trial_degree" => self.max_trial_degree = positive(key, value)?,
            "workers" => self.workers = value.parse().map_err(|_| format!("workers: cannot parse {value:?}"))?,
            "format" => self.format = value.parse()?,
            "out" => self.out = Some(PathBuf::from(value)),
            "seed" => self.seed = value.parse().map_err(|_| format!("seed: cannot parse {value:?}"))?,
            _ => return Err(format!("unknown config key {key:?}")),
        }
        Ok(())
    }

    /// Lines are `key = value`; `#` starts a comment.
    pub fn apply_file(&mut self, path: &Path) -> Result<(), String> {
        let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| format!("{}:{}: expected key=value", path.display(), no + 1))?;
            self.set(k.trim(), v.trim())
                .map_err(|e| format!("{}:{}: {e}", path.display(), no + 1))?;
        }
        Ok(())
    }

    /// One-line `key=value;...` rendering for CSV and text headers.
    pub fn header(&self) -> String {
        format!(
            "max_n={};max_root_field={};max_trial_degree={};workers={};format={};seed={}",
            self.max_n, self.max_root_field, self.max_trial_degree, self.workers, self.format, self.seed
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_overrides_defaults() {
        let dir = std::env::temp_dir().join(format!("apnkit-cfg-{}", std::process::id()));
        std::fs::write(&dir, "# scan limits\nmax_n = 9\nformat=csv  # inline\n\nseed=7\n").unwrap();
        let mut c = RunConfig::default();
        c.apply_file(&dir).unwrap();
        std::fs::remove_file(&dir).unwrap();
        assert_eq!((c.max_n, c.format, c.seed), (9, Format::Csv, 7));
    }

    #[test]
    fn rejects_bad_values() {
        let mut c = RunConfig::default();
        assert!(c.set("max_n", "0").is_err());
        assert!(c.set("colour", "red").is_err());
        assert!(c.set("format", "xml").is_err());
    }
}
