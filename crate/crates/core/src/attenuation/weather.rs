use serde::{Deserialize, Serialize};

use crate::atmosphere::STANDARD_WATER_VAPOR_G_M3;
use crate::error::{Error, Result};

use super::laser::VisibilityClass;
use super::liquid::{DEFAULT_LIQUID_TEMP_K, MAX_LIQUID_TEMP_K, MIN_LIQUID_TEMP_K};
use super::rain::Polarization;

pub const DEFAULT_RAIN_TOP_M: f64 = 1_700.0;
pub const MAX_FOG_LWD_G_M3: f64 = 1.0;
pub const MAX_CLOUD_LWD_G_M3: f64 = 5.0;

/// Horizontally uniform, vertically layered weather. Altitudes are meters
/// above ground. Every layer is off when its rate or water density is zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct WeatherProfile {
    pub rain_rate_mm_h: f64,
    /// Rain fills `[0, rain_top_m)`.
    pub rain_top_m: f64,
    pub rain_polarization: Polarization,
    pub fog_lwd_g_m3: f64,
    /// Fog fills `[0, fog_top_m)`.
    pub fog_top_m: f64,
    pub cloud_lwd_g_m3: f64,
    pub cloud_base_m: f64,
    pub cloud_top_m: f64,
    pub liquid_water_temp_k: f64,
    pub surface_water_vapor_g_m3: f64,
    pub visibility_class: VisibilityClass,
}

impl Default for WeatherProfile {
    fn default() -> Self {
        WeatherProfile {
            rain_rate_mm_h: 0.0,
            rain_top_m: DEFAULT_RAIN_TOP_M,
            rain_polarization: Polarization::Circular,
            fog_lwd_g_m3: 0.0,
            fog_top_m: 0.0,
            cloud_lwd_g_m3: 0.0,
            cloud_base_m: 0.0,
            cloud_top_m: 0.0,
            liquid_water_temp_k: DEFAULT_LIQUID_TEMP_K,
            surface_water_vapor_g_m3: STANDARD_WATER_VAPOR_G_M3,
            visibility_class: VisibilityClass::Clear,
        }
    }
}

const PRESETS: [(&str, &str); 6] = [
    ("clear", include_str!("../../examples/weather/clear.json")),
    ("advection-fog", include_str!("../../examples/weather/advection-fog.json")),
    ("cumulonimbus", include_str!("../../examples/weather/cumulonimbus.json")),
    ("rain-medium", include_str!("../../examples/weather/rain-medium.json")),
    ("rain-heavy", include_str!("../../examples/weather/rain-heavy.json")),
    ("rain-violent", include_str!("../../examples/weather/rain-violent.json")),
];

impl WeatherProfile {
    /// A dry, cloudless atmosphere with no water vapour at all.
    pub fn dry() -> Self {
        WeatherProfile {
            surface_water_vapor_g_m3: 0.0,
            ..Default::default()
        }
    }

    pub fn preset_names() -> impl Iterator<Item = &'static str> {
        PRESETS.iter().map(|(name, _)| *name)
    }

    pub fn preset(name: &str) -> Option<WeatherProfile> {
        PRESETS.iter().find(|(n, _)| *n == name).map(|(n, text)| {
            WeatherProfile::from_json(n, text).expect("built-in weather presets are valid")
        })
    }

    /// Parses and validates a JSON weather document.
    pub fn from_json(source_name: &str, text: &str) -> Result<WeatherProfile> {
        let profile: WeatherProfile = serde_json::from_str(text).map_err(|e| Error::Parse {
            source_name: source_name.to_string(),
            line: e.line(),
            message: e.to_string(),
        })?;
        profile.validate()?;
        Ok(profile)
    }

    pub fn validate(&self) -> Result<()> {
        let non_negative = [
            ("rain_rate_mm_h", self.rain_rate_mm_h),
            ("rain_top_m", self.rain_top_m),
            ("fog_lwd_g_m3", self.fog_lwd_g_m3),
            ("fog_top_m", self.fog_top_m),
            ("cloud_lwd_g_m3", self.cloud_lwd_g_m3),
            ("cloud_base_m", self.cloud_base_m),
            ("cloud_top_m", self.cloud_top_m),
            ("surface_water_vapor_g_m3", self.surface_water_vapor_g_m3),
        ];
        for (name, v) in non_negative {
            if !(v >= 0.0) || v.is_infinite() {
                return Err(Error::domain(name, format!("{v} must be finite and >= 0")));
            }
        }
        if self.fog_lwd_g_m3 > MAX_FOG_LWD_G_M3 {
            return Err(Error::domain("fog_lwd_g_m3", format!("{} > {MAX_FOG_LWD_G_M3}", self.fog_lwd_g_m3)));
        }
        if self.cloud_lwd_g_m3 > MAX_CLOUD_LWD_G_M3 {
            return Err(Error::domain(
                "cloud_lwd_g_m3",
                format!("{} > {MAX_CLOUD_LWD_G_M3}", self.cloud_lwd_g_m3),
            ));
        }
        if self.cloud_lwd_g_m3 > 0.0 && !(self.cloud_top_m > self.cloud_base_m) {
            return Err(Error::domain("cloud_top_m", "cloud top must lie above cloud base"));
        }
        if !(MIN_LIQUID_TEMP_K..=MAX_LIQUID_TEMP_K).contains(&self.liquid_water_temp_k) {
            return Err(Error::Range {
                quantity: "liquid_water_temp_k",
                value: self.liquid_water_temp_k,
                min: MIN_LIQUID_TEMP_K,
                max: MAX_LIQUID_TEMP_K,
            });
        }
        Ok(())
    }

    pub fn in_rain(&self, altitude_m: f64) -> bool {
        self.rain_rate_mm_h > 0.0 && altitude_m < self.rain_top_m
    }

    pub fn in_fog(&self, altitude_m: f64) -> bool {
        self.fog_lwd_g_m3 > 0.0 && altitude_m < self.fog_top_m
    }

    pub fn in_cloud(&self, altitude_m: f64) -> bool {
        self.cloud_lwd_g_m3 > 0.0 && altitude_m >= self.cloud_base_m && altitude_m <= self.cloud_top_m
    }

    /// Altitudes at which some layer starts or ends.
    pub(crate) fn layer_boundaries(&self) -> impl Iterator<Item = f64> {
        [
            (self.rain_rate_mm_h > 0.0).then_some(self.rain_top_m),
            (self.fog_lwd_g_m3 > 0.0).then_some(self.fog_top_m),
            (self.cloud_lwd_g_m3 > 0.0).then_some(self.cloud_base_m),
            (self.cloud_lwd_g_m3 > 0.0).then_some(self.cloud_top_m),
        ]
        .into_iter()
        .flatten()
    }
}
