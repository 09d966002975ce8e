//! Atmospheric attenuation: gaseous absorption, rain, cloud and fog for RF
//! links, and visibility-dependent loss for laser power beaming.

pub mod gaseous;
pub mod laser;
pub mod liquid;
pub mod path;
pub mod rain;
pub mod tables;
pub mod weather;

pub use gaseous::gaseous_specific_attenuation;
pub use laser::{laser_specific_loss, VisibilityClass};
pub use liquid::{
    cloud_fog_specific_attenuation, columnar_cloud_attenuation, liquid_water_coefficient,
};
pub use path::{path_attenuation, AttenuationBreakdown, PathIntegrator};
pub use rain::{rain_specific_attenuation, Polarization, RainCoefficients};
pub use tables::{SpectroscopicLine, Tables};
pub use weather::WeatherProfile;
