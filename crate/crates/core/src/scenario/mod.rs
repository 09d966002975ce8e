//! Network scenarios: node definitions, per-layer altitude and payload rules,
//! time-stepped link simulation and endurance accounting.
//!
//! The on-disk format is JSON; see `docs/scenario-schema.md`.

mod endurance;
mod output;
mod simulate;
mod validate;

use std::collections::HashSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::aero::NodeClass;
use crate::attenuation::WeatherProfile;
use crate::error::{Error, Result};
use crate::geometry::{cruise_position, CircularCruise, Position3D};
use crate::linkbudget::RadioConfig;

pub use endurance::{endurance, Endurance};
pub use output::{write_csv, CSV_HEADER};
pub use simulate::{max_los_deviation_deg, simulate, simulate_with, LinkOutcome, LinkSample};
pub use validate::{validate, Violation};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Placement {
    Static(Position3D),
    /// Fixed-wing loiter circle.
    Cruise(CircularCruise),
}

#[derive(Debug, Clone, PartialEq)]
pub struct UavNode {
    pub id: String,
    pub class: NodeClass,
    pub placement: Placement,
    pub radio: RadioConfig,
    pub battery_wh: f64,
    pub avg_power_draw_w: f64,
    /// Solar or beamed power input.
    pub harvest_w: f64,
    pub payload_kg: f64,
}

impl UavNode {
    /// Node with no battery, draw, harvest or payload.
    pub fn new(id: impl Into<String>, class: NodeClass, placement: Placement, radio: RadioConfig) -> Self {
        UavNode {
            id: id.into(),
            class,
            placement,
            radio,
            battery_wh: 0.0,
            avg_power_draw_w: 0.0,
            harvest_w: 0.0,
            payload_kg: 0.0,
        }
    }

    pub fn position_at(&self, t_s: f64) -> Position3D {
        match &self.placement {
            Placement::Static(p) => *p,
            Placement::Cruise(c) => cruise_position(c, t_s),
        }
    }

    pub fn altitude_m(&self) -> f64 {
        match &self.placement {
            Placement::Static(p) => p.z,
            Placement::Cruise(c) => c.altitude_m(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinkSpec {
    pub id: String,
    pub a: String,
    pub b: String,
    /// Explicit radio parameters; otherwise `a` transmits with its own
    /// radio and `b` receives with its own.
    pub radio: Option<RadioConfig>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub nodes: Vec<UavNode>,
    pub links: Vec<LinkSpec>,
    pub weather: WeatherProfile,
    pub duration_s: f64,
    pub timestep_s: f64,
}

impl Scenario {
    pub fn node(&self, id: &str) -> Option<&UavNode> {
        self.nodes.iter().find(|n| n.id == id)
    }

    /// Radio parameters used to evaluate `link`.
    pub fn link_radio(&self, link: &LinkSpec) -> Result<RadioConfig> {
        if let Some(r) = link.radio {
            return Ok(r);
        }
        let a = self.node(&link.a).ok_or_else(|| unknown_node(&link.id, &link.a))?;
        let b = self.node(&link.b).ok_or_else(|| unknown_node(&link.id, &link.b))?;
        Ok(RadioConfig {
            rx_gain_dbi: b.radio.rx_gain_dbi,
            rx_sensitivity_dbm: b.radio.rx_sensitivity_dbm,
            ..a.radio
        })
    }

    /// Number of simulated timesteps: `floor(duration / timestep)`.
    pub fn step_count(&self) -> usize {
        let q = self.duration_s / self.timestep_s;
        // 0.3 / 0.1 is 2.9999999999999996 in binary floating point
        let n = if (q - q.round()).abs() < 1e-9 { q.round() } else { q.floor() };
        n.max(0.0) as usize
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Scenario> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Scenario::from_json(&path.display().to_string(), &text)
    }

    pub fn from_json(source_name: &str, text: &str) -> Result<Scenario> {
        let doc: ScenarioDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
            source_name: source_name.to_string(),
            line: e.line(),
            message: e.to_string(),
        })?;
        doc.into_scenario()
    }
}

fn unknown_node(link: &str, node: &str) -> Error {
    Error::Scenario(format!("link `{link}` references unknown node `{node}`"))
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct ScenarioDoc {
    #[serde(default)]
    nodes: Vec<NodeDoc>,
    #[serde(default)]
    links: Vec<LinkDoc>,
    #[serde(default)]
    weather: WeatherDoc,
    sim: SimDoc,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct NodeDoc {
    id: String,
    class: NodeClass,
    #[serde(default)]
    position: Option<Position3D>,
    #[serde(default)]
    cruise: Option<CruiseDoc>,
    radio: RadioConfig,
    #[serde(default)]
    battery_wh: f64,
    #[serde(default)]
    avg_power_draw_w: f64,
    #[serde(default)]
    harvest_w: f64,
    #[serde(default)]
    payload_kg: f64,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct CruiseDoc {
    center_x: f64,
    center_y: f64,
    altitude_m: f64,
    speed_mps: f64,
    bank_angle_deg: f64,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct LinkDoc {
    #[serde(default)]
    id: Option<String>,
    a: String,
    b: String,
    #[serde(default)]
    radio: Option<RadioConfig>,
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(untagged)]
enum WeatherDoc {
    Preset(String),
    Profile(WeatherProfile),
}

impl Default for WeatherDoc {
    fn default() -> Self {
        WeatherDoc::Profile(WeatherProfile::default())
    }
}

#[derive(Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct SimDoc {
    duration_s: f64,
    timestep_s: f64,
}

impl ScenarioDoc {
    fn into_scenario(self) -> Result<Scenario> {
        let weather = match self.weather {
            WeatherDoc::Preset(name) => WeatherProfile::preset(&name)
                .ok_or_else(|| Error::Scenario(format!("unknown weather preset `{name}`")))?,
            WeatherDoc::Profile(p) => {
                p.validate()?;
                p
            }
        };
        if !(self.sim.timestep_s > 0.0) || self.sim.timestep_s.is_infinite() {
            return Err(Error::Scenario(format!("timestep_s {} must be > 0", self.sim.timestep_s)));
        }
        if !(self.sim.duration_s >= 0.0) || self.sim.duration_s.is_infinite() {
            return Err(Error::Scenario(format!("duration_s {} must be >= 0", self.sim.duration_s)));
        }

        let mut ids = HashSet::new();
        let mut nodes = Vec::with_capacity(self.nodes.len());
        for n in self.nodes {
            if !ids.insert(n.id.clone()) {
                return Err(Error::Scenario(format!("duplicate node id `{}`", n.id)));
            }
            nodes.push(n.into_node()?);
        }

        let mut link_ids = HashSet::new();
        let mut links = Vec::with_capacity(self.links.len());
        for l in self.links {
            let id = l.id.unwrap_or_else(|| format!("{}-{}", l.a, l.b));
            for end in [&l.a, &l.b] {
                if !ids.contains(end) {
                    return Err(unknown_node(&id, end));
                }
            }
            if l.a == l.b {
                return Err(Error::Scenario(format!("link `{id}` connects a node to itself")));
            }
            if let Some(r) = &l.radio {
                r.validate()
                    .map_err(|e| Error::Scenario(format!("link `{id}`: {e}")))?;
            }
            if !link_ids.insert(id.clone()) {
                return Err(Error::Scenario(format!("duplicate link id `{id}`")));
            }
            links.push(LinkSpec {
                id,
                a: l.a,
                b: l.b,
                radio: l.radio,
            });
        }

        Ok(Scenario {
            nodes,
            links,
            weather,
            duration_s: self.sim.duration_s,
            timestep_s: self.sim.timestep_s,
        })
    }
}

impl NodeDoc {
    fn into_node(self) -> Result<UavNode> {
        let ctx = |msg: String| Error::Scenario(format!("node `{}`: {msg}", self.id));
        let placement = match (self.position, &self.cruise) {
            (Some(p), None) => {
                if ![p.x, p.y, p.z].iter().all(|v| v.is_finite()) || p.z < 0.0 {
                    return Err(ctx("position must be finite with z >= 0".into()));
                }
                Placement::Static(p)
            }
            (None, Some(c)) => Placement::Cruise(
                CircularCruise::new(c.center_x, c.center_y, c.altitude_m, c.speed_mps, c.bank_angle_deg)
                    .map_err(|e| ctx(e.to_string()))?,
            ),
            _ => return Err(ctx("exactly one of `position` or `cruise` is required".into())),
        };
        self.radio.validate().map_err(|e| ctx(e.to_string()))?;
        for (name, v) in [
            ("battery_wh", self.battery_wh),
            ("avg_power_draw_w", self.avg_power_draw_w),
            ("harvest_w", self.harvest_w),
            ("payload_kg", self.payload_kg),
        ] {
            if !(v >= 0.0) || v.is_infinite() {
                return Err(ctx(format!("{name} = {v} must be finite and >= 0")));
            }
        }
        Ok(UavNode {
            id: self.id,
            class: self.class,
            placement,
            radio: self.radio,
            battery_wh: self.battery_wh,
            avg_power_draw_w: self.avg_power_draw_w,
            harvest_w: self.harvest_w,
            payload_kg: self.payload_kg,
        })
    }
}
