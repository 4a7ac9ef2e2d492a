use std::path::PathBuf;

use maxmult::oracle::OracleConfig;
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Config {
    pub oracle: OracleConfig,
    /// Largest graph the survey cross-checks with the oracle; larger graphs
    /// are classified and certificate-checked only.
    pub max_exhaustive_n: usize,
    /// JSON-lines results file of a survey.
    pub out: PathBuf,
    /// Worker threads; 0 uses one per core.
    pub jobs: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config { oracle: OracleConfig::default(), max_exhaustive_n: 10, out: PathBuf::from("survey.jsonl"), jobs: 0 }
    }
}

impl Config {
    pub fn validate(&self) -> Result<(), CliError> {
        let o = &self.oracle;
        let tolerances = [
            ("accept-tol", o.accept_tol),
            ("gap-tol", o.gap_tol),
            ("pattern-floor", o.pattern_floor),
            ("accept-floor", o.accept_floor),
        ];
        for (name, v) in tolerances {
            if !(v > 0.0 && v.is_finite()) {
                return Err(CliError::Config(format!("{name} must be positive, got {v}")));
            }
        }
        if o.accept_floor < o.pattern_floor {
            return Err(CliError::Config("accept-floor must be at least pattern-floor".into()));
        }
        if o.restarts == 0 || o.max_iters == 0 {
            return Err(CliError::Config("restarts and iterations must be positive".into()));
        }
        if self.max_exhaustive_n < 4 {
            return Err(CliError::Config(format!("max-exhaustive-n must be at least 4, got {}", self.max_exhaustive_n)));
        }
        Ok(())
    }
}
