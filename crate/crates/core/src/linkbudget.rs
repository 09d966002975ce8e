//! RF link budgets and laser power-delivery budgets.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::attenuation::{laser_specific_loss, PathIntegrator, VisibilityClass, WeatherProfile};
use crate::error::{check_range, Error, Result};
use crate::geometry::{slant_distance, Position3D};
use crate::scenario::UavNode;

pub const SPEED_OF_LIGHT_MPS: f64 = 299_792_458.0;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RadioConfig {
    pub tx_power_dbm: f64,
    pub tx_gain_dbi: f64,
    pub rx_gain_dbi: f64,
    pub frequency_ghz: f64,
    pub rx_sensitivity_dbm: f64,
}

impl RadioConfig {
    pub fn validate(&self) -> Result<()> {
        check_range("frequency_ghz", self.frequency_ghz, 1.0, 100.0)?;
        check_range("tx_gain_dbi", self.tx_gain_dbi, -10.0, 60.0)?;
        check_range("rx_gain_dbi", self.rx_gain_dbi, -10.0, 60.0)?;
        if !self.tx_power_dbm.is_finite() || !self.rx_sensitivity_dbm.is_finite() {
            return Err(Error::domain("radio", "power levels must be finite"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct LinkReport {
    pub distance_m: f64,
    /// Path elevation above the horizontal, `[0, 90]` degrees.
    pub elevation_deg: f64,
    pub fspl_db: f64,
    pub gaseous_db: f64,
    pub rain_db: f64,
    pub cloud_db: f64,
    pub fog_db: f64,
    pub rx_power_dbm: f64,
    pub margin_db: f64,
    pub viable: bool,
}

impl LinkReport {
    pub fn total_attenuation_db(&self) -> f64 {
        self.gaseous_db + self.rain_db + self.cloud_db + self.fog_db
    }
}

/// Free-space path loss `20·log10(4π·d·f/c)` in dB.
pub fn fspl(distance_m: f64, frequency_ghz: f64) -> Result<f64> {
    if !(distance_m > 0.0) || distance_m.is_infinite() {
        return Err(Error::domain("distance_m", format!("{distance_m} must be > 0")));
    }
    if !(frequency_ghz > 0.0) || frequency_ghz.is_infinite() {
        return Err(Error::domain("frequency_ghz", format!("{frequency_ghz} must be > 0")));
    }
    Ok(20.0 * (4.0 * PI * distance_m * frequency_ghz * 1e9 / SPEED_OF_LIGHT_MPS).log10())
}

/// Link budget between two fixed points.
pub fn rf_link_between(
    integrator: &PathIntegrator<'_>,
    a: Position3D,
    b: Position3D,
    radio: &RadioConfig,
    profile: &WeatherProfile,
) -> Result<LinkReport> {
    radio.validate()?;
    let att = integrator.attenuation(profile, a, b, radio.frequency_ghz)?;
    let distance_m = slant_distance(a, b);
    let fspl_db = fspl(distance_m, radio.frequency_ghz)?;
    let rx_power_dbm =
        radio.tx_power_dbm + radio.tx_gain_dbi + radio.rx_gain_dbi - fspl_db - att.total_db;
    let margin_db = rx_power_dbm - radio.rx_sensitivity_dbm;
    Ok(LinkReport {
        distance_m,
        elevation_deg: att.elevation_deg,
        fspl_db,
        gaseous_db: att.gaseous_db,
        rain_db: att.rain_db,
        cloud_db: att.cloud_db,
        fog_db: att.fog_db,
        rx_power_dbm,
        margin_db,
        viable: margin_db >= 0.0,
    })
}

/// Link budget between two nodes at their start-of-run positions.
pub fn rf_link(a: &UavNode, b: &UavNode, radio: &RadioConfig, profile: &WeatherProfile) -> Result<LinkReport> {
    rf_link_between(
        &PathIntegrator::default(),
        a.position_at(0.0),
        b.position_at(0.0),
        radio,
        profile,
    )
}

/// Power (W) arriving at the receiver of a laser power beam.
pub fn laser_delivery(
    tx_power_w: f64,
    distance_m: f64,
    visibility: VisibilityClass,
    rx_efficiency: f64,
) -> Result<f64> {
    if !(tx_power_w >= 0.0) || tx_power_w.is_infinite() {
        return Err(Error::domain("tx_power_w", format!("{tx_power_w} must be >= 0")));
    }
    if !(distance_m >= 0.0) || distance_m.is_infinite() {
        return Err(Error::domain("distance_m", format!("{distance_m} must be >= 0")));
    }
    if !(rx_efficiency > 0.0 && rx_efficiency <= 1.0) {
        return Err(Error::domain("rx_efficiency", format!("{rx_efficiency} not in (0, 1]")));
    }
    let loss_db = laser_specific_loss(visibility) * distance_m / 1_000.0;
    Ok(tx_power_w * 10f64.powf(-loss_db / 10.0) * rx_efficiency)
}
