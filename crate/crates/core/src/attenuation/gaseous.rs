//! Line-by-line oxygen and water-vapour absorption.
//!
//! Specific attenuation is `0.1820 · f · N''(f)` where the imaginary
//! refractivity `N''` sums a Van Vleck-Weisskopf-type line shape over every
//! tabulated line, plus the dry-air (Debye + pressure-induced nitrogen)
//! continuum. Pressures enter in hPa; `p` is the dry-air partial pressure and
//! `e` the water-vapour partial pressure.

use crate::atmosphere::AtmosphereSample;
use crate::error::{check_range, Result};

use super::tables::{SpectroscopicLine, Tables};

pub const MIN_FREQUENCY_GHZ: f64 = 1.0;
pub const MAX_FREQUENCY_GHZ: f64 = 100.0;

/// Partial pressures and inverse temperature for one atmospheric sample.
#[derive(Debug, Clone, Copy)]
struct GasState {
    /// dry-air pressure (hPa)
    p: f64,
    /// water-vapour partial pressure (hPa)
    e: f64,
    /// 300 / T
    theta: f64,
}

impl GasState {
    fn new(sample: &AtmosphereSample) -> Self {
        let t = sample.temperature_k;
        let e = sample.water_vapor_density_g_m3 * t / 216.7;
        GasState {
            p: (sample.pressure_hpa() - e).max(0.0),
            e,
            theta: 300.0 / t,
        }
    }
}

fn oxygen_refractivity(lines: &[SpectroscopicLine], f: f64, s: GasState) -> f64 {
    let GasState { p, e, theta } = s;
    let lines_sum: f64 = lines
        .iter()
        .map(|line| {
            let f0 = line.center_frequency_ghz;
            let [a1, a2, a3, a4, a5, a6] = line.params;
            let strength = a1 * 1e-7 * p * theta.powi(3) * (a2 * (1.0 - theta)).exp();
            let width = a3 * 1e-4 * (p * theta.powf(0.8 - a4) + 1.1 * e * theta);
            // Zeeman splitting floor
            let width = (width * width + 2.25e-6).sqrt();
            let interference = (a5 + a6 * theta) * 1e-4 * (p + e) * theta.powf(0.8);
            let shape = f / f0
                * ((width - interference * (f0 - f)) / ((f0 - f).powi(2) + width * width)
                    + (width - interference * (f0 + f)) / ((f0 + f).powi(2) + width * width));
            strength * shape
        })
        .sum();

    let d = 5.6e-4 * (p + e) * theta.powf(0.8);
    let continuum = f
        * p
        * theta
        * theta
        * (6.14e-5 / (d * (1.0 + (f / d).powi(2)))
            + 1.4e-12 * p * theta.powf(1.5) / (1.0 + 1.9e-5 * f.powf(1.5)));
    lines_sum + continuum
}

fn water_vapor_refractivity(lines: &[SpectroscopicLine], f: f64, s: GasState) -> f64 {
    let GasState { p, e, theta } = s;
    if e == 0.0 {
        return 0.0;
    }
    lines
        .iter()
        .map(|line| {
            let f0 = line.center_frequency_ghz;
            let [b1, b2, b3, b4, b5, b6] = line.params;
            let strength = b1 * 1e-1 * e * theta.powf(3.5) * (b2 * (1.0 - theta)).exp();
            let width = b3 * 1e-4 * (p * theta.powf(b4) + b5 * e * theta.powf(b6));
            // Doppler broadening
            let width =
                0.535 * width + (0.217 * width * width + 2.1316e-12 * f0 * f0 / theta).sqrt();
            let shape = f / f0
                * (width / ((f0 - f).powi(2) + width * width)
                    + width / ((f0 + f).powi(2) + width * width));
            strength * shape
        })
        .sum()
}

impl Tables {
    /// Dry-air (oxygen + continuum) specific attenuation, dB/km.
    pub fn oxygen_specific_attenuation(&self, frequency_ghz: f64, sample: &AtmosphereSample) -> Result<f64> {
        check_range("frequency_ghz", frequency_ghz, MIN_FREQUENCY_GHZ, MAX_FREQUENCY_GHZ)?;
        let s = GasState::new(sample);
        Ok(0.1820 * frequency_ghz * oxygen_refractivity(&self.oxygen, frequency_ghz, s))
    }

    /// Water-vapour specific attenuation, dB/km.
    pub fn water_vapor_specific_attenuation(
        &self,
        frequency_ghz: f64,
        sample: &AtmosphereSample,
    ) -> Result<f64> {
        check_range("frequency_ghz", frequency_ghz, MIN_FREQUENCY_GHZ, MAX_FREQUENCY_GHZ)?;
        let s = GasState::new(sample);
        Ok(0.1820 * frequency_ghz * water_vapor_refractivity(&self.water_vapor, frequency_ghz, s))
    }

    /// Total gaseous (dry air plus water vapour) specific attenuation, dB/km.
    pub fn gaseous_specific_attenuation(&self, frequency_ghz: f64, sample: &AtmosphereSample) -> Result<f64> {
        Ok(self.oxygen_specific_attenuation(frequency_ghz, sample)?
            + self.water_vapor_specific_attenuation(frequency_ghz, sample)?)
    }
}

/// Total gaseous specific attenuation (dB/km) using the built-in line tables.
pub fn gaseous_specific_attenuation(frequency_ghz: f64, sample: &AtmosphereSample) -> Result<f64> {
    Tables::shipped().gaseous_specific_attenuation(frequency_ghz, sample)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atmosphere::isa_sample;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    // Reference values from an independent NumPy evaluation of the same
    // line-by-line formulation (dry pressure = total - e).
    #[test]
    fn frozen_sea_level_values() {
        let t = Tables::shipped();
        let s = isa_sample(0.0, 7.5).unwrap();
        for (f, dry, wet) in [
            (61.0, 14.8835534458, 0.158536293797),
            (22.235, 0.0130336821098, 0.180311001397),
            (28.0, 0.0183319934153, 0.0825139975052),
            (40.0, 0.0510996371813, 0.0783233536877),
            (10.0, 0.0080645829596, 0.00592534197007),
            (94.0, 0.033808094479, 0.370635701496),
        ] {
            let o = t.oxygen_specific_attenuation(f, &s).unwrap();
            let w = t.water_vapor_specific_attenuation(f, &s).unwrap();
            assert!(rel(o, dry) < 1e-9, "{f} GHz dry {o} vs {dry}");
            assert!(rel(w, wet) < 1e-9, "{f} GHz wet {w} vs {wet}");
        }
    }

    #[test]
    fn frozen_five_km_value() {
        let s = isa_sample(5_000.0, 7.5).unwrap();
        let g = gaseous_specific_attenuation(60.0, &s).unwrap();
        assert!(rel(g, 11.4116436121) < 1e-8, "{g}");
    }

    #[test]
    fn sixty_ghz_is_oxygen_dominated() {
        let wet = isa_sample(0.0, 7.5).unwrap();
        let dry = isa_sample(0.0, 0.0).unwrap();
        let a = gaseous_specific_attenuation(60.0, &wet).unwrap();
        let b = gaseous_specific_attenuation(60.0, &dry).unwrap();
        assert!(rel(a, b) < 0.05, "{a} vs {b}");
        assert_eq!(
            Tables::shipped().water_vapor_specific_attenuation(60.0, &dry).unwrap(),
            0.0
        );
    }

    #[test]
    fn oxygen_complex_band_above_one_db_per_km() {
        let s = isa_sample(0.0, 7.5).unwrap();
        let mut f = 53.0;
        while f <= 67.0 {
            let g = gaseous_specific_attenuation(f, &s).unwrap();
            assert!(g > 1.0, "{f} GHz: {g}");
            f += 0.05;
        }
    }

    #[test]
    fn frequency_range_enforced() {
        let s = isa_sample(0.0, 7.5).unwrap();
        assert!(gaseous_specific_attenuation(0.5, &s).is_err());
        assert!(gaseous_specific_attenuation(100.5, &s).is_err());
        assert!(gaseous_specific_attenuation(1.0, &s).is_ok());
        assert!(gaseous_specific_attenuation(100.0, &s).is_ok());
    }
}
