//! International Standard Atmosphere and unit conversions.
//!
//! Altitudes are geopotential meters above mean sea level. The full
//! seven-layer lapse-rate table is carried, but samples are only served up
//! to [`MAX_ALTITUDE_M`]: no platform in the network operates above it.

use crate::error::{check_range, Result};

/// Standard gravitational acceleration (m/s²).
pub const G0: f64 = 9.80665;
/// Specific gas constant for dry air (J/(kg·K)).
pub const R_DRY_AIR: f64 = 287.05;
pub const SEA_LEVEL_TEMPERATURE_K: f64 = 288.15;
pub const SEA_LEVEL_PRESSURE_PA: f64 = 101_325.0;
/// Sea-level water-vapour density of the reference standard atmosphere (g/m³).
pub const STANDARD_WATER_VAPOR_G_M3: f64 = 7.5;
/// Scale height of the exponential water-vapour profile (m).
pub const WATER_VAPOR_SCALE_HEIGHT_M: f64 = 2_000.0;
pub const MAX_ALTITUDE_M: f64 = 32_000.0;

pub const METERS_PER_FOOT: f64 = 0.3048;
pub const MPS_PER_KNOT: f64 = 0.514444;

/// (base altitude m, lapse rate K/m)
const LAYERS: [(f64, f64); 7] = [
    (0.0, -0.0065),
    (11_000.0, 0.0),
    (20_000.0, 0.001),
    (32_000.0, 0.0028),
    (47_000.0, 0.0),
    (51_000.0, -0.0028),
    (71_000.0, -0.002),
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AtmosphereSample {
    pub altitude_m: f64,
    pub temperature_k: f64,
    pub pressure_pa: f64,
    pub density_kg_m3: f64,
    pub water_vapor_density_g_m3: f64,
}

impl AtmosphereSample {
    pub fn pressure_hpa(&self) -> f64 {
        self.pressure_pa / 100.0
    }
}

/// ISA conditions at `altitude_m`, with water vapour decaying exponentially
/// from `surface_water_vapor_g_m3` at sea level.
pub fn isa_sample(altitude_m: f64, surface_water_vapor_g_m3: f64) -> Result<AtmosphereSample> {
    check_range("altitude_m", altitude_m, 0.0, MAX_ALTITUDE_M)?;
    check_range(
        "surface_water_vapor_g_m3",
        surface_water_vapor_g_m3,
        0.0,
        f64::MAX,
    )?;

    let (temperature_k, pressure_pa) = temperature_pressure(altitude_m);
    Ok(AtmosphereSample {
        altitude_m,
        temperature_k,
        pressure_pa,
        density_kg_m3: pressure_pa / (R_DRY_AIR * temperature_k),
        water_vapor_density_g_m3: surface_water_vapor_g_m3
            * (-altitude_m / WATER_VAPOR_SCALE_HEIGHT_M).exp(),
    })
}

/// Air density (kg/m³) of the standard atmosphere.
pub fn isa_density(altitude_m: f64) -> Result<f64> {
    isa_sample(altitude_m, 0.0).map(|s| s.density_kg_m3)
}

fn temperature_pressure(altitude_m: f64) -> (f64, f64) {
    let mut t = SEA_LEVEL_TEMPERATURE_K;
    let mut p = SEA_LEVEL_PRESSURE_PA;
    for (i, &(base, lapse)) in LAYERS.iter().enumerate() {
        let top = LAYERS.get(i + 1).map_or(f64::INFINITY, |l| l.0);
        let dh = altitude_m.min(top) - base;
        let t_end = t + lapse * dh;
        p = if lapse == 0.0 {
            p * (-G0 * dh / (R_DRY_AIR * t)).exp()
        } else {
            p * (t_end / t).powf(-G0 / (lapse * R_DRY_AIR))
        };
        t = t_end;
        if altitude_m <= top {
            break;
        }
    }
    (t, p)
}

pub fn knots_from_mps(v: f64) -> f64 {
    v / MPS_PER_KNOT
}

pub fn mps_from_knots(v: f64) -> f64 {
    v * MPS_PER_KNOT
}

pub fn feet_from_m(d: f64) -> f64 {
    d / METERS_PER_FOOT
}

pub fn m_from_feet(d: f64) -> f64 {
    d * METERS_PER_FOOT
}
