//! Run configuration: a flat TOML file in user-facing units.
//!
//! Powers are in dBm, gains in dB, decoding cost in dBm per bps/Hz and the
//! amplifier efficiency `nu` as a fraction. Unknown keys are rejected.

use std::path::Path;

use hybrid_aee::experiments::{SweepParameter, SweepSpec};
use hybrid_aee::units::{db_to_linear, dbm_to_watts, Decibel, DbmPower};
use hybrid_aee::{GsConfig, LinkGains, Scenario, SystemParams};
use serde::Deserialize;

use crate::CliError;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub p_s_dbm: f64,
    pub p_jm_dbm: f64,
    pub p_m_dbm: f64,
    pub g_su_db: f64,
    pub g_sa_db: f64,
    pub g_au_db: f64,
    pub sigma2_dbm: f64,
    pub nu: f64,
    pub p_ft_dbm: f64,
    pub p_fr_dbm: f64,
    pub rho_d_dbm_per_rate: f64,

    /// Golden-section bracket tolerance (W).
    pub epsilon: Option<f64>,
    pub max_iter: Option<usize>,

    /// Overrides for the `sweep` subcommand's grid.
    pub sweep_lo: Option<f64>,
    pub sweep_hi: Option<f64>,
    pub sweep_points: Option<usize>,
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))
    }

    pub fn scenario(&self) -> Result<Scenario, CliError> {
        let dbm = |x| dbm_to_watts(DbmPower(x)).map_err(CliError::from_config);
        let db = |x| db_to_linear(Decibel(x)).map_err(CliError::from_config);
        let gains = LinkGains { g_su: db(self.g_su_db)?, g_sa: db(self.g_sa_db)?, g_au: db(self.g_au_db)? };
        let params = SystemParams {
            p_s: dbm(self.p_s_dbm)?,
            sigma2: dbm(self.sigma2_dbm)?,
            p_jm: dbm(self.p_jm_dbm)?,
            p_m: dbm(self.p_m_dbm)?,
            p_fr: dbm(self.p_fr_dbm)?,
            p_ft: dbm(self.p_ft_dbm)?,
            rho_d: dbm(self.rho_d_dbm_per_rate)?,
            nu: self.nu,
        };
        Scenario::new(gains, params).map_err(CliError::from_config)
    }

    /// Solver settings; a command-line epsilon wins over the file.
    pub fn gs_config(&self, epsilon_flag: Option<f64>) -> Result<GsConfig, CliError> {
        let defaults = GsConfig::default();
        let cfg = GsConfig {
            epsilon: epsilon_flag.or(self.epsilon).unwrap_or(defaults.epsilon),
            max_iter: self.max_iter.unwrap_or(defaults.max_iter),
        };
        cfg.validate().map_err(CliError::from_config)?;
        Ok(cfg)
    }

    pub fn sweep_spec(&self, parameter: SweepParameter) -> Result<SweepSpec, CliError> {
        let d = parameter.default_spec();
        let spec = SweepSpec {
            parameter,
            lo: self.sweep_lo.unwrap_or(d.lo),
            hi: self.sweep_hi.unwrap_or(d.hi),
            points: self.sweep_points.unwrap_or(d.points),
            scale: d.scale,
        };
        spec.validate().map_err(CliError::from_config)?;
        Ok(spec)
    }
}
