//! Rain specific attenuation `γ_R = k · R^α`.

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};

use super::tables::{RainTableRow, Tables};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Polarization {
    Horizontal,
    Vertical,
    /// Equal mix of H and V (45° tilt).
    #[default]
    Circular,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RainCoefficients {
    pub frequency_ghz: f64,
    pub k: f64,
    pub alpha: f64,
}

impl RainCoefficients {
    fn of_row(row: &RainTableRow, polarization: Polarization) -> Self {
        let (k, alpha) = match polarization {
            Polarization::Horizontal => (row.k_h, row.alpha_h),
            Polarization::Vertical => (row.k_v, row.alpha_v),
            Polarization::Circular => {
                let k = (row.k_h + row.k_v) / 2.0;
                (k, (row.k_h * row.alpha_h + row.k_v * row.alpha_v) / (2.0 * k))
            }
        };
        RainCoefficients {
            frequency_ghz: row.frequency_ghz,
            k,
            alpha,
        }
    }

    /// Specific attenuation in dB/km for a rain rate in mm/h.
    pub fn specific_attenuation(&self, rain_rate_mm_h: f64) -> f64 {
        if rain_rate_mm_h == 0.0 {
            0.0
        } else {
            self.k * rain_rate_mm_h.powf(self.alpha)
        }
    }
}

impl Tables {
    /// Power-law coefficients at `frequency_ghz`.
    ///
    /// Between table rows, `log k` and `α` are interpolated linearly in
    /// `log f`. Polarization is combined per row before interpolating.
    pub fn rain_coefficients(&self, frequency_ghz: f64, polarization: Polarization) -> Result<RainCoefficients> {
        let rows = &self.rain;
        let (lo, hi) = (rows[0].frequency_ghz, rows[rows.len() - 1].frequency_ghz);
        check_range("frequency_ghz", frequency_ghz, lo, hi)?;

        let upper = rows.partition_point(|r| r.frequency_ghz < frequency_ghz);
        let b = RainCoefficients::of_row(&rows[upper], polarization);
        if rows[upper].frequency_ghz == frequency_ghz {
            return Ok(b);
        }
        let a = RainCoefficients::of_row(&rows[upper - 1], polarization);
        let w = (frequency_ghz / a.frequency_ghz).ln() / (b.frequency_ghz / a.frequency_ghz).ln();
        Ok(RainCoefficients {
            frequency_ghz,
            k: (a.k.ln() + w * (b.k.ln() - a.k.ln())).exp(),
            alpha: a.alpha + w * (b.alpha - a.alpha),
        })
    }

    pub fn rain_specific_attenuation(
        &self,
        frequency_ghz: f64,
        rain_rate_mm_h: f64,
        polarization: Polarization,
    ) -> Result<f64> {
        if !(rain_rate_mm_h >= 0.0) || rain_rate_mm_h.is_infinite() {
            return Err(Error::domain("rain_rate_mm_h", format!("{rain_rate_mm_h} must be >= 0")));
        }
        Ok(self
            .rain_coefficients(frequency_ghz, polarization)?
            .specific_attenuation(rain_rate_mm_h))
    }
}

/// Rain specific attenuation (dB/km) from the built-in coefficient table.
pub fn rain_specific_attenuation(
    frequency_ghz: f64,
    rain_rate_mm_h: f64,
    polarization: Polarization,
) -> Result<f64> {
    Tables::shipped().rain_specific_attenuation(frequency_ghz, rain_rate_mm_h, polarization)
}
