use std::path::PathBuf;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Input lies outside the range a model is defined or validated for.
    #[error("{quantity} = {value} outside modeled range [{min}, {max}]")]
    Range {
        quantity: &'static str,
        value: f64,
        min: f64,
        max: f64,
    },

    /// Input violates a mathematical precondition (negative mass, bank >= 90 deg, ...).
    #[error("invalid {quantity}: {reason}")]
    Domain {
        quantity: &'static str,
        reason: String,
    },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("degenerate geometry: {0}")]
    Degenerate(String),

    /// Elevation outside the validity range of a slant-path model.
    #[error("elevation {elevation_deg:.3} deg outside model validity ({reason})")]
    OutOfValidity { elevation_deg: f64, reason: String },

    #[error("{source_name}:{line}: {message}")]
    Parse {
        source_name: String,
        line: usize,
        message: String,
    },

    #[error("invalid scenario: {0}")]
    Scenario(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub(crate) fn domain(quantity: &'static str, reason: impl Into<String>) -> Self {
        Error::Domain {
            quantity,
            reason: reason.into(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

/// Fails with [`Error::Range`] unless `min <= value <= max`.
pub(crate) fn check_range(quantity: &'static str, value: f64, min: f64, max: f64) -> Result<()> {
    if value.is_nan() || value < min || value > max {
        return Err(Error::Range {
            quantity,
            value,
            min,
            max,
        });
    }
    Ok(())
}
