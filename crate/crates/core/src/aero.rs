//! Fixed-wing lift and payload feasibility.

use serde::{Deserialize, Serialize};

use crate::atmosphere::G0;
use crate::error::{Error, Result};

/// Upper bound accepted for a lift coefficient; anything above is not a real airfoil.
pub const MAX_LIFT_COEFFICIENT: f64 = 3.0;

/// Airframe class of a network node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NodeClass {
    Balloon,
    FixedWing,
    RotaryWing,
    Ground,
}

impl NodeClass {
    /// Maximum payload in kg, `None` when the class has no practical bound.
    /// The bound itself is exclusive.
    pub fn max_payload_kg(self) -> Option<f64> {
        match self {
            NodeClass::Balloon | NodeClass::Ground => None,
            NodeClass::FixedWing => Some(1_000.0),
            NodeClass::RotaryWing => Some(100.0),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            NodeClass::Balloon => "balloon",
            NodeClass::FixedWing => "FW",
            NodeClass::RotaryWing => "RW",
            NodeClass::Ground => "ground",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Airframe {
    pub wing_area_m2: f64,
    /// C_L at the operating angle of attack.
    pub lift_coefficient: f64,
    pub empty_mass_kg: f64,
    pub payload_mass_kg: f64,
}

impl Airframe {
    pub fn validate(&self) -> Result<()> {
        if !(self.wing_area_m2 > 0.0) {
            return Err(Error::domain("wing_area_m2", "must be > 0"));
        }
        if !(self.lift_coefficient > 0.0 && self.lift_coefficient <= MAX_LIFT_COEFFICIENT) {
            return Err(Error::domain(
                "lift_coefficient",
                format!("{} not in (0, {MAX_LIFT_COEFFICIENT}]", self.lift_coefficient),
            ));
        }
        if !(self.empty_mass_kg >= 0.0 && self.payload_mass_kg >= 0.0) {
            return Err(Error::domain("mass", "masses must be >= 0"));
        }
        Ok(())
    }

    pub fn total_mass_kg(&self) -> f64 {
        self.empty_mass_kg + self.payload_mass_kg
    }

    /// Weight the wing has to carry (N).
    pub fn weight_n(&self) -> f64 {
        self.total_mass_kg() * G0
    }
}

/// Lift `C_L · ρ · V² · A / 2` in newtons.
pub fn lift_force(cl: f64, density: f64, speed: f64, area: f64) -> Result<f64> {
    for (name, v) in [
        ("lift_coefficient", cl),
        ("density", density),
        ("speed", speed),
        ("area", area),
    ] {
        if !(v >= 0.0) || v.is_infinite() {
            return Err(Error::domain(name, format!("{v} must be finite and >= 0")));
        }
    }
    Ok(cl * density * speed * speed * area / 2.0)
}

/// Slowest airspeed at which the wing still carries the airframe's weight.
pub fn min_sustaining_speed(airframe: &Airframe, density: f64) -> Result<f64> {
    if airframe.wing_area_m2 == 0.0 || airframe.lift_coefficient == 0.0 {
        return Err(Error::Infeasible(
            "zero wing area or lift coefficient cannot generate lift".into(),
        ));
    }
    airframe.validate()?;
    if !(density > 0.0) {
        return Err(Error::domain("density", "must be > 0"));
    }
    let weight = airframe.weight_n();
    Ok((2.0 * weight / (airframe.lift_coefficient * density * airframe.wing_area_m2)).sqrt())
}

pub fn payload_feasible(class: NodeClass, payload_kg: f64) -> bool {
    if !(payload_kg >= 0.0) {
        return false;
    }
    class.max_payload_kg().is_none_or(|max| payload_kg < max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atmosphere::isa_density;

    #[test]
    fn worked_lift_example() {
        let rho = isa_density(5_000.0).unwrap();
        // invert L = C_L ρ V² A / 2 for the medium FW-UAV quoted at 11 800 N
        let cl = 2.0 * 11_800.0 / (rho * 50.0 * 50.0 * 11.0);
        assert!((cl - 1.165).abs() < 1e-3, "derived C_L {cl}");
        let lift = lift_force(1.165, 0.7364, 50.0, 11.0).unwrap();
        assert!((lift - 11_797.0).abs() < 1.0, "{lift}");
    }

    #[test]
    fn lift_arithmetic() {
        assert_eq!(lift_force(1.0, 1.225, 10.0, 1.0).unwrap(), 61.25);
        assert_eq!(lift_force(1.4, 0.9, 0.0, 20.0).unwrap(), 0.0);
        assert!(lift_force(-1.0, 1.0, 1.0, 1.0).is_err());
        assert!(lift_force(1.0, 1.0, f64::NAN, 1.0).is_err());
    }

    #[test]
    fn min_speed_inverts_lift() {
        let weight = lift_force(1.165, 0.7364, 50.0, 11.0).unwrap();
        let airframe = Airframe {
            wing_area_m2: 11.0,
            lift_coefficient: 1.165,
            empty_mass_kg: weight / G0,
            payload_mass_kg: 0.0,
        };
        let v = min_sustaining_speed(&airframe, 0.7364).unwrap();
        assert!((v - 50.0).abs() < 1e-9);

        let heavier = Airframe {
            payload_mass_kg: airframe.empty_mass_kg,
            ..airframe
        };
        let v2 = min_sustaining_speed(&heavier, 0.7364).unwrap();
        assert!((v2 / v - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn min_speed_edge_cases() {
        let empty = Airframe {
            wing_area_m2: 5.0,
            lift_coefficient: 1.0,
            empty_mass_kg: 0.0,
            payload_mass_kg: 0.0,
        };
        assert_eq!(min_sustaining_speed(&empty, 1.0).unwrap(), 0.0);
        let no_wing = Airframe {
            wing_area_m2: 0.0,
            ..empty
        };
        assert!(matches!(
            min_sustaining_speed(&no_wing, 1.0),
            Err(Error::Infeasible(_))
        ));
        let bad_cl = Airframe {
            lift_coefficient: 3.5,
            ..empty
        };
        assert!(matches!(
            min_sustaining_speed(&bad_cl, 1.0),
            Err(Error::Domain { .. })
        ));
        assert!(min_sustaining_speed(&empty, 0.0).is_err());
    }

    #[test]
    fn payload_classes() {
        assert!(!payload_feasible(NodeClass::RotaryWing, 150.0));
        assert!(payload_feasible(NodeClass::RotaryWing, 99.0));
        assert!(payload_feasible(NodeClass::FixedWing, 100.0));
        assert!(!payload_feasible(NodeClass::FixedWing, 1_000.0));
        assert!(payload_feasible(NodeClass::Balloon, 2_500.0));
        for class in [
            NodeClass::Balloon,
            NodeClass::FixedWing,
            NodeClass::RotaryWing,
            NodeClass::Ground,
        ] {
            assert!(payload_feasible(class, 0.0));
            assert!(!payload_feasible(class, -1.0));
        }
    }
}
