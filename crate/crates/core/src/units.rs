//! Decibel-domain conversions.
//!
//! Everything downstream works in linear units (watts, unitless gains);
//! dB and dBm only appear at the configuration boundary.

use crate::error::{Error, Result};

/// A power ratio in dB (10·log10 convention).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Decibel(pub f64);

/// An absolute power in dBm.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct DbmPower(pub f64);

fn require_finite(x: f64, what: &str) -> Result<()> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("{what} must be finite, got {x}")))
    }
}

/// `10^(x/10)`.
pub fn db_to_linear(x: Decibel) -> Result<f64> {
    require_finite(x.0, "dB value")?;
    Ok(10f64.powf(x.0 / 10.0))
}

/// `10^((x - 30)/10)` watts.
pub fn dbm_to_watts(x: DbmPower) -> Result<f64> {
    require_finite(x.0, "dBm value")?;
    Ok(10f64.powf((x.0 - 30.0) / 10.0))
}

pub fn watts_to_dbm(watts: f64) -> Result<DbmPower> {
    if !(watts > 0.0) || !watts.is_finite() {
        return Err(Error::Domain(format!(
            "power must be positive and finite to express in dBm, got {watts} W"
        )));
    }
    Ok(DbmPower(10.0 * watts.log10() + 30.0))
}

pub fn linear_to_db(ratio: f64) -> Result<Decibel> {
    if !(ratio > 0.0) || !ratio.is_finite() {
        return Err(Error::Domain(format!(
            "ratio must be positive and finite to express in dB, got {ratio}"
        )));
    }
    Ok(Decibel(10.0 * ratio.log10()))
}
