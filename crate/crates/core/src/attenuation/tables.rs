//! Coefficient tables backing the gaseous and rain models.
//!
//! Three CSV files ship with the crate (see `data/` and its `SHA256SUMS`):
//!
//! | file | columns |
//! |------|---------|
//! | `p676_oxygen_lines.csv` | `f0_ghz,a1,a2,a3,a4,a5,a6` |
//! | `p676_water_lines.csv`  | `f0_ghz,b1,b2,b3,b4,b5,b6` |
//! | `p838_rain_coeffs.csv`  | `f_ghz,k_h,alpha_h,k_v,alpha_v` |
//!
//! Lines starting with `#` are comments. Every data row must have exactly the
//! header's column count, every value must be a finite number, and the
//! frequency column must be strictly increasing.

use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};

pub const OXYGEN_FILE: &str = "p676_oxygen_lines.csv";
pub const WATER_VAPOR_FILE: &str = "p676_water_lines.csv";
pub const RAIN_FILE: &str = "p838_rain_coeffs.csv";

/// Environment variable naming a directory that replaces the built-in tables.
pub const DATA_DIR_ENV: &str = "DAMU_DATA_DIR";

const OXYGEN_HEADER: [&str; 7] = ["f0_ghz", "a1", "a2", "a3", "a4", "a5", "a6"];
const WATER_VAPOR_HEADER: [&str; 7] = ["f0_ghz", "b1", "b2", "b3", "b4", "b5", "b6"];
const RAIN_HEADER: [&str; 5] = ["f_ghz", "k_h", "alpha_h", "k_v", "alpha_v"];

const SHIPPED_OXYGEN: &str = include_str!("../../data/p676_oxygen_lines.csv");
const SHIPPED_WATER_VAPOR: &str = include_str!("../../data/p676_water_lines.csv");
const SHIPPED_RAIN: &str = include_str!("../../data/p838_rain_coeffs.csv");

/// One absorption line: center frequency plus the six strength/width/shape
/// parameters of the line-by-line model.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectroscopicLine {
    pub center_frequency_ghz: f64,
    pub params: [f64; 6],
}

/// One row of the rain power-law coefficient table.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RainTableRow {
    pub frequency_ghz: f64,
    pub k_h: f64,
    pub alpha_h: f64,
    pub k_v: f64,
    pub alpha_v: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Tables {
    pub(crate) oxygen: Vec<SpectroscopicLine>,
    pub(crate) water_vapor: Vec<SpectroscopicLine>,
    pub(crate) rain: Vec<RainTableRow>,
}

impl Tables {
    /// Tables compiled into the crate. Parsed once, then shared read-only.
    pub fn shipped() -> &'static Tables {
        static SHIPPED: OnceLock<Tables> = OnceLock::new();
        SHIPPED.get_or_init(|| {
            Tables::parse(SHIPPED_OXYGEN, SHIPPED_WATER_VAPOR, SHIPPED_RAIN)
                .expect("built-in coefficient tables are well formed")
        })
    }

    pub fn parse(oxygen_csv: &str, water_vapor_csv: &str, rain_csv: &str) -> Result<Tables> {
        Ok(Tables {
            oxygen: parse_lines(OXYGEN_FILE, oxygen_csv, &OXYGEN_HEADER)?,
            water_vapor: parse_lines(WATER_VAPOR_FILE, water_vapor_csv, &WATER_VAPOR_HEADER)?,
            rain: parse_table(RAIN_FILE, rain_csv, &RAIN_HEADER)?
                .into_iter()
                .map(|r| RainTableRow {
                    frequency_ghz: r[0],
                    k_h: r[1],
                    alpha_h: r[2],
                    k_v: r[3],
                    alpha_v: r[4],
                })
                .collect(),
        })
    }

    pub fn from_dir(dir: impl AsRef<Path>) -> Result<Tables> {
        let dir = dir.as_ref();
        let read = |name: &str| {
            let path = dir.join(name);
            std::fs::read_to_string(&path).map_err(|e| Error::io(path, e))
        };
        Tables::parse(
            &read(OXYGEN_FILE)?,
            &read(WATER_VAPOR_FILE)?,
            &read(RAIN_FILE)?,
        )
    }

    /// Tables from `$DAMU_DATA_DIR` when set, otherwise the built-in ones.
    pub fn from_env() -> Result<std::borrow::Cow<'static, Tables>> {
        match std::env::var_os(DATA_DIR_ENV) {
            Some(dir) if !dir.is_empty() => Ok(std::borrow::Cow::Owned(Tables::from_dir(dir)?)),
            _ => Ok(std::borrow::Cow::Borrowed(Tables::shipped())),
        }
    }

    pub fn oxygen_lines(&self) -> &[SpectroscopicLine] {
        &self.oxygen
    }

    pub fn water_vapor_lines(&self) -> &[SpectroscopicLine] {
        &self.water_vapor
    }

    pub fn rain_rows(&self) -> &[RainTableRow] {
        &self.rain
    }
}

fn parse_lines(name: &str, text: &str, header: &[&str]) -> Result<Vec<SpectroscopicLine>> {
    Ok(parse_table(name, text, header)?
        .into_iter()
        .map(|r| SpectroscopicLine {
            center_frequency_ghz: r[0],
            params: [r[1], r[2], r[3], r[4], r[5], r[6]],
        })
        .collect())
}

fn parse_table(name: &str, text: &str, header: &[&str]) -> Result<Vec<Vec<f64>>> {
    let err = |line: usize, message: String| Error::Parse {
        source_name: name.to_string(),
        line,
        message,
    };
    let mut reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .flexible(true)
        .from_reader(text.as_bytes());

    let found = reader
        .headers()
        .map_err(|e| err(csv_line(&e), e.to_string()))?
        .clone();
    if found.iter().ne(header.iter().copied()) {
        return Err(err(
            found.position().map_or(1, |p| p.line() as usize),
            format!("expected header `{}`", header.join(",")),
        ));
    }

    let mut rows: Vec<Vec<f64>> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| err(csv_line(&e), e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line() as usize);
        if record.len() != header.len() {
            return Err(err(
                line,
                format!("expected {} fields, found {}", header.len(), record.len()),
            ));
        }
        let row = record
            .iter()
            .map(|field| match field.parse::<f64>() {
                Ok(v) if v.is_finite() => Ok(v),
                _ => Err(err(line, format!("`{field}` is not a finite number"))),
            })
            .collect::<Result<Vec<f64>>>()?;
        if let Some(prev) = rows.last() {
            if row[0] <= prev[0] {
                return Err(err(line, "frequencies must be strictly increasing".into()));
            }
        }
        if row[0] <= 0.0 {
            return Err(err(line, "frequency must be positive".into()));
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(err(1, "table has no data rows".into()));
    }
    Ok(rows)
}

fn csv_line(e: &csv::Error) -> usize {
    e.position().map_or(0, |p| p.line() as usize)
}
