//! Flat key=value config files and the merged run options.
//!
//! Every long flag of the subcommands can also be given in a config file
//! passed with `--config`; values on the command line win. Lines starting
//! with `#` and blank lines are skipped.

use std::collections::HashMap;
use std::path::Path;

use uniwalk::{Complex64, QubitState};

use crate::CliError;

const KNOWN_KEYS: &[&str] = &[
    "t", "n0", "tmax", "a_re", "a_im", "b_re", "b_im", "coin", "alpha", "beta", "phi",
    "method", "output", "normalize", "seed", "points", "t_lo", "t_hi", "fit",
];

#[derive(Debug, Default)]
pub struct FileConfig {
    values: HashMap<String, String>,
}

impl FileConfig {
    pub fn load(path: Option<&Path>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Self::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let mut values = HashMap::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                return Err(CliError::Config(format!(
                    "{}:{}: expected key=value, got `{line}`",
                    path.display(),
                    lineno + 1
                )));
            };
            let key = key.trim().to_string();
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return Err(CliError::Config(format!(
                    "{}:{}: unknown key `{key}`",
                    path.display(),
                    lineno + 1
                )));
            }
            values.insert(key, value.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn get<T: std::str::FromStr>(&self, key: &str) -> Result<Option<T>, CliError> {
        match self.values.get(key) {
            None => Ok(None),
            Some(raw) => raw
                .parse::<T>()
                .map(Some)
                .map_err(|_| CliError::Config(format!("config key `{key}`: bad value `{raw}`"))),
        }
    }

    pub fn get_flag(&self, key: &str) -> Result<bool, CliError> {
        match self.values.get(key).map(String::as_str) {
            None => Ok(false),
            Some("true") | Some("1") | Some("yes") => Ok(true),
            Some("false") | Some("0") | Some("no") => Ok(false),
            Some(raw) => Err(CliError::Config(format!("config key `{key}`: bad flag `{raw}`"))),
        }
    }
}

/// CLI value if present, else config value, else the fallback.
pub fn pick<T: std::str::FromStr + Copy>(
    cli: Option<T>,
    cfg: &FileConfig,
    key: &str,
    fallback: Option<T>,
) -> Result<T, CliError> {
    if let Some(v) = cli {
        return Ok(v);
    }
    if let Some(v) = cfg.get::<T>(key)? {
        return Ok(v);
    }
    fallback.ok_or_else(|| CliError::Config(format!("missing required option `--{}`", key.replace('_', "-"))))
}

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn unit_interval(bits: u64) -> f64 {
    (bits >> 11) as f64 / (1u64 << 53) as f64
}

/// Tolerance accepted on |a|^2 + |b|^2 before a state is rejected
/// (without `--normalize`).
const STATE_TOL: f64 = 1e-9;

/// Builds the initial coin state from explicit amplitudes, or from a seed
/// when one is given.
pub fn resolve_state(
    amplitudes: (f64, f64, f64, f64),
    normalize: bool,
    seed: Option<u64>,
) -> Result<QubitState, CliError> {
    if let Some(seed) = seed {
        let mut s = seed;
        let a = Complex64::new(unit_interval(splitmix64(&mut s)) - 0.5, unit_interval(splitmix64(&mut s)) - 0.5);
        let b = Complex64::new(unit_interval(splitmix64(&mut s)) - 0.5, unit_interval(splitmix64(&mut s)) - 0.5);
        return QubitState::normalized(a, b)
            .map_err(|e| CliError::Config(format!("seed {seed} gave an invalid state: {e}")));
    }
    let (a_re, a_im, b_re, b_im) = amplitudes;
    let a = Complex64::new(a_re, a_im);
    let b = Complex64::new(b_re, b_im);
    let norm_sq = a.norm_sqr() + b.norm_sqr();
    if !norm_sq.is_finite() {
        return Err(CliError::Config("state amplitudes must be finite".into()));
    }
    if !normalize && (norm_sq - 1.0).abs() > STATE_TOL {
        return Err(CliError::Config(format!(
            "state has |a|^2 + |b|^2 = {norm_sq}; pass --normalize to rescale"
        )));
    }
    QubitState::normalized(a, b).map_err(|e| CliError::Config(format!("invalid state: {e}")))
}
