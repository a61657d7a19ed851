use thiserror::Error;

/// Errors raised by the model, solver and experiment layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid parameter `{name}` = {value}: {reason}")]
    InvalidParameter {
        name: &'static str,
        value: f64,
        reason: &'static str,
    },

    #[error("lambert W iteration did not converge for x = {x} after {iterations} iterations")]
    Convergence { x: f64, iterations: usize },

    #[error("both attack modes infeasible: P_m = {p_m} W is below P_fr = {p_fr} W and P_ft = {p_ft} W")]
    Infeasible { p_m: f64, p_fr: f64, p_ft: f64 },

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("no mode switch between rho_d = {lo_dbm} dBm and {hi_dbm} dBm")]
    NoCrossing { lo_dbm: f64, hi_dbm: f64 },

    #[error("no feasible rows for parameter `{0}`")]
    NoFeasibleRows(String),
}

pub type Result<T> = std::result::Result<T, Error>;
