//! Atmospheric loss of a 1550 nm power-beaming laser by visibility class.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VisibilityClass {
    /// Clear day, about 23 km visibility.
    #[default]
    Clear,
    Haze,
    /// About 50 m visibility.
    HeavyFog,
}

impl VisibilityClass {
    pub const ALL: [VisibilityClass; 3] = [
        VisibilityClass::Clear,
        VisibilityClass::Haze,
        VisibilityClass::HeavyFog,
    ];
}

/// Specific loss in dB/km.
pub fn laser_specific_loss(visibility: VisibilityClass) -> f64 {
    match visibility {
        VisibilityClass::Clear => 0.2,
        VisibilityClass::Haze => 4.0,
        VisibilityClass::HeavyFog => 272.0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table() {
        assert_eq!(laser_specific_loss(VisibilityClass::Clear), 0.2);
        assert_eq!(laser_specific_loss(VisibilityClass::Haze), 4.0);
        assert_eq!(laser_specific_loss(VisibilityClass::HeavyFog), 272.0);
    }

    #[test]
    fn serde_names() {
        let v: VisibilityClass = serde_json::from_str("\"heavy_fog\"").unwrap();
        assert_eq!(v, VisibilityClass::HeavyFog);
    }
}
