//! Integration of specific attenuations along a straight slant path.
//!
//! The path is cut into altitude slices no thicker than the integrator's
//! step, with extra cuts at every weather-layer boundary so each slice lies
//! entirely inside or outside each layer. Gaseous absorption is evaluated at
//! the slice mid-altitude; liquid layers are uniform, so their contribution
//! is exact.

use serde::Serialize;

use crate::atmosphere::{isa_sample, MAX_ALTITUDE_M};
use crate::error::{check_range, Error, Result};
use crate::geometry::{elevation_angle, slant_distance, Position3D};

use super::liquid::cloud_fog_specific_attenuation;
use super::tables::Tables;
use super::weather::WeatherProfile;

pub const DEFAULT_STEP_M: f64 = 100.0;
/// Paths flatter than this are outside the validity of the layered models.
pub const MIN_PATH_ELEVATION_DEG: f64 = 5.0;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize)]
pub struct AttenuationBreakdown {
    pub gaseous_db: f64,
    pub rain_db: f64,
    pub cloud_db: f64,
    pub fog_db: f64,
    /// Always `gaseous_db + rain_db + cloud_db + fog_db`, summed in that order.
    pub total_db: f64,
    pub path_length_m: f64,
    /// Elevation of the path above the horizontal, in `[0, 90]` degrees.
    pub elevation_deg: f64,
}

#[derive(Debug, Clone, Copy)]
pub struct PathIntegrator<'t> {
    tables: &'t Tables,
    step_m: f64,
}

impl Default for PathIntegrator<'static> {
    fn default() -> Self {
        PathIntegrator::new(Tables::shipped())
    }
}

impl<'t> PathIntegrator<'t> {
    pub fn new(tables: &'t Tables) -> Self {
        PathIntegrator {
            tables,
            step_m: DEFAULT_STEP_M,
        }
    }

    /// Maximum altitude thickness of one slice.
    pub fn with_step(mut self, step_m: f64) -> Result<Self> {
        if !(step_m > 0.0) || step_m.is_infinite() {
            return Err(Error::domain("step_m", format!("{step_m} must be > 0")));
        }
        self.step_m = step_m;
        Ok(self)
    }

    pub fn tables(&self) -> &'t Tables {
        self.tables
    }

    pub fn step_m(&self) -> f64 {
        self.step_m
    }

    /// Attenuation breakdown between `a` and `b` at `frequency_ghz`.
    /// The result does not depend on the direction of travel.
    pub fn attenuation(
        &self,
        profile: &WeatherProfile,
        a: Position3D,
        b: Position3D,
        frequency_ghz: f64,
    ) -> Result<AttenuationBreakdown> {
        profile.validate()?;
        check_range("altitude_m", a.z, 0.0, MAX_ALTITUDE_M)?;
        check_range("altitude_m", b.z, 0.0, MAX_ALTITUDE_M)?;
        let (low, high) = if a.z <= b.z { (a, b) } else { (b, a) };
        let elevation_deg = elevation_angle(low, high)?;
        if elevation_deg < MIN_PATH_ELEVATION_DEG {
            return Err(Error::OutOfValidity {
                elevation_deg,
                reason: format!("path elevation must be >= {MIN_PATH_ELEVATION_DEG} deg"),
            });
        }
        let path_length_m = slant_distance(low, high);
        // slant length per meter of climb
        let stretch = path_length_m / (high.z - low.z);

        let tables = self.tables;
        let rain_gamma = if profile.rain_rate_mm_h > 0.0 {
            tables.rain_specific_attenuation(frequency_ghz, profile.rain_rate_mm_h, profile.rain_polarization)?
        } else {
            0.0
        };
        let fog_gamma = cloud_fog_specific_attenuation(frequency_ghz, profile.fog_lwd_g_m3, profile.liquid_water_temp_k)?;
        let cloud_gamma =
            cloud_fog_specific_attenuation(frequency_ghz, profile.cloud_lwd_g_m3, profile.liquid_water_temp_k)?;

        let cuts = slice_boundaries(low.z, high.z, self.step_m, profile);
        let mut out = AttenuationBreakdown {
            path_length_m,
            elevation_deg,
            ..Default::default()
        };
        for w in cuts.windows(2) {
            let (h0, h1) = (w[0], w[1]);
            let mid = 0.5 * (h0 + h1);
            let km = (h1 - h0) * stretch / 1_000.0;
            let sample = isa_sample(mid, profile.surface_water_vapor_g_m3)?;
            out.gaseous_db += tables.gaseous_specific_attenuation(frequency_ghz, &sample)? * km;
            if profile.in_rain(mid) {
                out.rain_db += rain_gamma * km;
            }
            if profile.in_fog(mid) {
                out.fog_db += fog_gamma * km;
            }
            if profile.in_cloud(mid) {
                out.cloud_db += cloud_gamma * km;
            }
        }
        out.total_db = out.gaseous_db + out.rain_db + out.cloud_db + out.fog_db;
        Ok(out)
    }
}

fn slice_boundaries(low: f64, high: f64, step: f64, profile: &WeatherProfile) -> Vec<f64> {
    let n = ((high - low) / step).ceil().max(1.0) as usize;
    let mut cuts: Vec<f64> = (0..=n)
        .map(|i| low + (high - low) * i as f64 / n as f64)
        .chain(profile.layer_boundaries().filter(|&h| h > low && h < high))
        .collect();
    cuts.sort_by(f64::total_cmp);
    cuts.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    cuts
}

/// Attenuation between two points with the built-in tables and 100 m slices.
pub fn path_attenuation(
    profile: &WeatherProfile,
    a: Position3D,
    b: Position3D,
    frequency_ghz: f64,
) -> Result<AttenuationBreakdown> {
    PathIntegrator::default().attenuation(profile, a, b, frequency_ghz)
}
