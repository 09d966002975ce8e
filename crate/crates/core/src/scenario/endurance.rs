use serde::Serialize;

use super::UavNode;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum Endurance {
    Finite { seconds: f64 },
    /// Harvested power covers the average draw.
    Unbounded,
}

impl Endurance {
    pub fn seconds(self) -> Option<f64> {
        match self {
            Endurance::Finite { seconds } => Some(seconds),
            Endurance::Unbounded => None,
        }
    }
}

/// Time until the battery runs flat at the node's average net draw.
pub fn endurance(node: &UavNode) -> Endurance {
    let net_w = node.avg_power_draw_w - node.harvest_w;
    if net_w > 0.0 {
        Endurance::Finite {
            seconds: node.battery_wh * 3_600.0 / net_w,
        }
    } else if node.battery_wh == 0.0 && node.avg_power_draw_w == 0.0 && node.harvest_w == 0.0 {
        Endurance::Finite { seconds: 0.0 }
    } else {
        Endurance::Unbounded
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::aero::NodeClass;
    use crate::geometry::Position3D;
    use crate::linkbudget::RadioConfig;
    use crate::scenario::Placement;

    fn node(battery_wh: f64, draw_w: f64, harvest_w: f64) -> UavNode {
        let radio = RadioConfig {
            tx_power_dbm: 20.0,
            tx_gain_dbi: 10.0,
            rx_gain_dbi: 10.0,
            frequency_ghz: 28.0,
            rx_sensitivity_dbm: -90.0,
        };
        UavNode {
            battery_wh,
            avg_power_draw_w: draw_w,
            harvest_w,
            ..UavNode::new("n", NodeClass::RotaryWing, Placement::Static(Position3D::new(0.0, 0.0, 50.0)), radio)
        }
    }

    #[test]
    fn mini_uav_half_hour() {
        assert_eq!(endurance(&node(80.0, 160.0, 0.0)), Endurance::Finite { seconds: 1_800.0 });
    }

    #[test]
    fn laser_top_up_extends_flight() {
        assert_eq!(endurance(&node(80.0, 160.0, 40.0)), Endurance::Finite { seconds: 2_400.0 });
    }

    #[test]
    fn self_sustaining() {
        assert_eq!(endurance(&node(80.0, 160.0, 160.0)), Endurance::Unbounded);
        assert_eq!(endurance(&node(0.0, 10.0, 50.0)), Endurance::Unbounded);
        assert_eq!(endurance(&node(0.0, 0.0, 0.0)), Endurance::Finite { seconds: 0.0 });
        assert_eq!(endurance(&node(0.0, 160.0, 0.0)).seconds(), Some(0.0));
    }
}
