use std::fmt;

use serde::Serialize;

use crate::aero::{payload_feasible, NodeClass};

use super::{Placement, Scenario, UavNode};

/// Balloons sit in the stratosphere, above this altitude (m).
pub const BALLOON_MIN_ALTITUDE_M: f64 = 20_000.0;
/// Fixed-wing layer, exclusive bounds (m).
pub const FW_BAND_M: (f64, f64) = (1_000.0, 10_000.0);
pub const FW_CEILING_M: f64 = 16_000.0;
/// Rotary-wing layer upper bound, exclusive (m).
pub const RW_MAX_ALTITUDE_M: f64 = 1_000.0;
pub const RW_CEILING_M: f64 = 6_000.0;

/// A node that breaks one of the layer or payload rules.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub node_id: String,
    pub rule: &'static str,
    pub observed: f64,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "node `{}`: {} (observed {})", self.node_id, self.rule, self.observed)
    }
}

pub fn validate(scenario: &Scenario) -> Vec<Violation> {
    scenario.nodes.iter().flat_map(node_violations).collect()
}

fn node_violations(node: &UavNode) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut flag = |ok: bool, rule: &'static str, observed: f64| {
        if !ok {
            out.push(Violation {
                node_id: node.id.clone(),
                rule,
                observed,
            });
        }
    };
    let z = node.altitude_m();
    match node.class {
        NodeClass::Balloon => flag(z > BALLOON_MIN_ALTITUDE_M, "balloon altitude band", z),
        NodeClass::FixedWing => {
            flag(z > FW_BAND_M.0 && z < FW_BAND_M.1, "FW altitude band", z);
            flag(z <= FW_CEILING_M, "FW ceiling", z);
        }
        NodeClass::RotaryWing => {
            flag(z < RW_MAX_ALTITUDE_M, "RW altitude band", z);
            flag(z <= RW_CEILING_M, "RW ceiling", z);
        }
        NodeClass::Ground => {}
    }
    if matches!(node.placement, Placement::Cruise(_)) {
        flag(node.class == NodeClass::FixedWing, "cruise requires fixed-wing", z);
    }
    flag(payload_feasible(node.class, node.payload_kg), "payload bound", node.payload_kg);
    out
}
