//! Cloud and fog attenuation in the Rayleigh regime.
//!
//! `γ_c = K_l · M`, with `K_l` from the double-Debye dielectric permittivity
//! of liquid water.

use crate::error::{check_range, Error, Result};

use super::gaseous::{MAX_FREQUENCY_GHZ, MIN_FREQUENCY_GHZ};

pub const MIN_LIQUID_TEMP_K: f64 = 233.0;
pub const MAX_LIQUID_TEMP_K: f64 = 313.0;
pub const DEFAULT_LIQUID_TEMP_K: f64 = 273.15;
/// Lowest elevation for which the columnar model is valid.
pub const MIN_COLUMNAR_ELEVATION_DEG: f64 = 5.0;

/// Complex permittivity `(ε′, ε″)` of liquid water.
pub fn water_permittivity(frequency_ghz: f64, temperature_k: f64) -> (f64, f64) {
    let theta = 300.0 / temperature_k;
    let eps0 = 77.66 + 103.3 * (theta - 1.0);
    let eps1 = 0.0671 * eps0;
    let eps2 = 3.52;
    // principal and secondary relaxation frequencies (GHz)
    let fp = 20.20 - 146.0 * (theta - 1.0) + 316.0 * (theta - 1.0).powi(2);
    let fs = 39.8 * fp;
    let f = frequency_ghz;

    let eps_im = f * (eps0 - eps1) / (fp * (1.0 + (f / fp).powi(2)))
        + f * (eps1 - eps2) / (fs * (1.0 + (f / fs).powi(2)));
    let eps_re = (eps0 - eps1) / (1.0 + (f / fp).powi(2))
        + (eps1 - eps2) / (1.0 + (f / fs).powi(2))
        + eps2;
    (eps_re, eps_im)
}

/// `K_l` in (dB/km)/(g/m³).
pub fn liquid_water_coefficient(frequency_ghz: f64, temperature_k: f64) -> Result<f64> {
    check_range("frequency_ghz", frequency_ghz, MIN_FREQUENCY_GHZ, MAX_FREQUENCY_GHZ)?;
    check_range("liquid_temp_k", temperature_k, MIN_LIQUID_TEMP_K, MAX_LIQUID_TEMP_K)?;
    let (eps_re, eps_im) = water_permittivity(frequency_ghz, temperature_k);
    let eta = (2.0 + eps_re) / eps_im;
    Ok(0.819 * frequency_ghz / (eps_im * (1.0 + eta * eta)))
}

/// Specific attenuation (dB/km) inside a cloud or fog of liquid water density `lwd_g_m3`.
pub fn cloud_fog_specific_attenuation(frequency_ghz: f64, lwd_g_m3: f64, liquid_temp_k: f64) -> Result<f64> {
    if !(lwd_g_m3 >= 0.0) || lwd_g_m3.is_infinite() {
        return Err(Error::domain("lwd_g_m3", format!("{lwd_g_m3} must be >= 0")));
    }
    let kl = liquid_water_coefficient(frequency_ghz, liquid_temp_k)?;
    Ok(kl * lwd_g_m3)
}

/// Slant attenuation (dB) through a total columnar liquid water content `L`
/// (kg/m²): `A = L · K_l / sin θ`.
pub fn columnar_cloud_attenuation(
    columnar_kg_m2: f64,
    frequency_ghz: f64,
    elevation_deg: f64,
    liquid_temp_k: f64,
) -> Result<f64> {
    if !(MIN_COLUMNAR_ELEVATION_DEG..=90.0).contains(&elevation_deg) {
        return Err(Error::OutOfValidity {
            elevation_deg,
            reason: "columnar cloud model holds for 5 to 90 deg".into(),
        });
    }
    if !(columnar_kg_m2 >= 0.0) || columnar_kg_m2.is_infinite() {
        return Err(Error::domain("columnar_kg_m2", format!("{columnar_kg_m2} must be >= 0")));
    }
    let kl = liquid_water_coefficient(frequency_ghz, liquid_temp_k)?;
    Ok(columnar_kg_m2 * kl / elevation_deg.to_radians().sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_coefficients() {
        // independent NumPy evaluation of the same permittivity model
        for (f, t, expected) in [
            (28.0, 273.15, 0.678755466076),
            (40.0, 273.15, 1.28796947935),
            (10.0, 293.15, 0.0534252333717),
            (94.0, 263.15, 4.56772063638),
        ] {
            let kl = liquid_water_coefficient(f, t).unwrap();
            assert!((kl - expected).abs() / expected < 1e-9, "{f} {t}: {kl}");
        }
    }

    #[test]
    fn thick_fog_at_28_ghz() {
        let g = cloud_fog_specific_attenuation(28.0, 0.5, 273.15).unwrap();
        assert!((g - 0.34).abs() / 0.34 < 0.15, "{g}");
        assert!((2.0 * g - 0.68).abs() < 0.01);
    }

    #[test]
    fn forty_to_twentyeight_ratio() {
        let r = liquid_water_coefficient(40.0, 273.15).unwrap()
            / liquid_water_coefficient(28.0, 273.15).unwrap();
        assert!((1.7..=2.2).contains(&r), "{r}");
    }

    #[test]
    fn zero_water_and_ranges() {
        assert_eq!(cloud_fog_specific_attenuation(60.0, 0.0, 250.0).unwrap(), 0.0);
        assert!(cloud_fog_specific_attenuation(28.0, 0.5, 230.0).is_err());
        assert!(cloud_fog_specific_attenuation(28.0, 0.5, 314.0).is_err());
        assert!(cloud_fog_specific_attenuation(28.0, -0.1, 273.15).is_err());
    }

    #[test]
    fn columnar_examples() {
        let kl = liquid_water_coefficient(28.0, 273.15).unwrap();
        assert_eq!(columnar_cloud_attenuation(1.3, 28.0, 90.0, 273.15).unwrap(), 1.3 * kl);
        assert_eq!(columnar_cloud_attenuation(2.0, 28.0, 90.0, 273.15).unwrap(), 2.0 * kl);
        let a30 = columnar_cloud_attenuation(2.0, 28.0, 30.0, 273.15).unwrap();
        assert!((a30 - 4.0 * kl).abs() < 1e-12);
        assert!(matches!(
            columnar_cloud_attenuation(2.0, 28.0, 4.9, 273.15),
            Err(Error::OutOfValidity { .. })
        ));
        assert!(columnar_cloud_attenuation(2.0, 28.0, 5.0, 273.15).is_ok());
    }
}
