//! Flat-Earth Cartesian geometry of the network layers.
//!
//! `x`/`y` span the horizontal plane, `z` is altitude above ground, all in
//! meters. Over the ≤ 20 km ranges involved, Earth curvature moves
//! elevation angles by less than 0.1°.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::atmosphere::{feet_from_m, knots_from_mps, m_from_feet};
use crate::error::{Error, Result};

/// Constant of the imperial turn-radius rule `R[ft] = V[kn]² / (11.26 · tan θ)`.
pub const TURN_RADIUS_CONSTANT: f64 = 11.26;

/// Number of points used to sample a cruise circle for angular spreads.
pub const SPREAD_SAMPLES: usize = 3600;

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Position3D {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Position3D {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Self { x, y, z }
    }

    fn sub(self, o: Position3D) -> [f64; 3] {
        [self.x - o.x, self.y - o.y, self.z - o.z]
    }

    pub fn horizontal_distance(self, o: Position3D) -> f64 {
        (self.x - o.x).hypot(self.y - o.y)
    }
}

/// Unit vector from `from` to `to`; `None` if the points coincide.
pub fn line_of_sight(from: Position3D, to: Position3D) -> Option<[f64; 3]> {
    let d = to.sub(from);
    let n = norm(d);
    (n > 0.0).then(|| [d[0] / n, d[1] / n, d[2] / n])
}

/// Angle between two unit vectors in degrees, accurate for nearly parallel vectors.
pub fn angle_between_deg(a: [f64; 3], b: [f64; 3]) -> f64 {
    norm(cross(a, b)).atan2(dot(a, b)).to_degrees()
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// Level-turn radius in feet for a speed in knots.
pub fn turn_radius_ft(speed_knots: f64, bank_angle_deg: f64) -> Result<f64> {
    if !(speed_knots > 0.0) || speed_knots.is_infinite() {
        return Err(Error::domain("speed", format!("{speed_knots} must be > 0")));
    }
    if bank_angle_deg == 0.0 {
        return Err(Error::domain(
            "bank_angle_deg",
            "zero bank angle gives an infinite turn radius",
        ));
    }
    if !(bank_angle_deg > 0.0 && bank_angle_deg < 90.0) {
        return Err(Error::domain(
            "bank_angle_deg",
            format!("{bank_angle_deg} not in (0, 90)"),
        ));
    }
    Ok(speed_knots * speed_knots / (TURN_RADIUS_CONSTANT * bank_angle_deg.to_radians().tan()))
}

/// Level-turn radius in meters for a speed in m/s.
pub fn turn_radius(speed_mps: f64, bank_angle_deg: f64) -> Result<f64> {
    turn_radius_ft(knots_from_mps(speed_mps), bank_angle_deg).map(m_from_feet)
}

/// Fixed-wing loiter circle. Radius and period are derived from speed and
/// bank angle and cannot be set independently.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CircularCruise {
    center_x: f64,
    center_y: f64,
    altitude_m: f64,
    speed_mps: f64,
    bank_angle_deg: f64,
    radius_m: f64,
    period_s: f64,
}

impl CircularCruise {
    pub fn new(
        center_x: f64,
        center_y: f64,
        altitude_m: f64,
        speed_mps: f64,
        bank_angle_deg: f64,
    ) -> Result<Self> {
        if !(altitude_m >= 0.0) || !center_x.is_finite() || !center_y.is_finite() {
            return Err(Error::domain("cruise", "center must be finite, altitude >= 0"));
        }
        let radius_m = turn_radius(speed_mps, bank_angle_deg)?;
        Ok(Self {
            center_x,
            center_y,
            altitude_m,
            speed_mps,
            bank_angle_deg,
            radius_m,
            period_s: 2.0 * PI * radius_m / speed_mps,
        })
    }

    pub fn center(&self) -> Position3D {
        Position3D::new(self.center_x, self.center_y, self.altitude_m)
    }
    pub fn altitude_m(&self) -> f64 {
        self.altitude_m
    }
    pub fn speed_mps(&self) -> f64 {
        self.speed_mps
    }
    pub fn bank_angle_deg(&self) -> f64 {
        self.bank_angle_deg
    }
    pub fn radius_m(&self) -> f64 {
        self.radius_m
    }
    pub fn radius_ft(&self) -> f64 {
        feet_from_m(self.radius_m)
    }
    pub fn period_s(&self) -> f64 {
        self.period_s
    }

    /// Point on the circle at phase angle `phase_rad`, measured counter-clockwise from +x.
    pub fn point_at_phase(&self, phase_rad: f64) -> Position3D {
        Position3D::new(
            self.center_x + self.radius_m * phase_rad.cos(),
            self.center_y + self.radius_m * phase_rad.sin(),
            self.altitude_m,
        )
    }
}

/// Position along the cruise circle at time `t_s`; the aircraft starts on the
/// +x side of the center and flies counter-clockwise.
pub fn cruise_position(cruise: &CircularCruise, t_s: f64) -> Position3D {
    cruise.point_at_phase(2.0 * PI * t_s / cruise.period_s)
}

/// Signed elevation of `target` seen from `observer`, in degrees.
pub fn elevation_angle(observer: Position3D, target: Position3D) -> Result<f64> {
    if observer == target {
        return Err(Error::Degenerate(
            "elevation angle between identical points".into(),
        ));
    }
    let dz = target.z - observer.z;
    Ok(dz.atan2(observer.horizontal_distance(target)).to_degrees())
}

pub fn slant_distance(a: Position3D, b: Position3D) -> f64 {
    norm(b.sub(a))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpreadMode {
    /// Largest angle between any two lines of sight to the circle.
    FullSpan,
    /// Largest angle between the line of sight to the center and to any circle point.
    HalfAngle,
}

/// Maximum angular deviation, in degrees, of the line of sight from
/// `observer` to an aircraft flying `cruise`.
pub fn angular_spread(
    observer: Position3D,
    cruise: &CircularCruise,
    mode: SpreadMode,
) -> Result<f64> {
    let center = cruise.center();
    let r = cruise.radius_m();
    let level_tol = 1e-9 * (1.0 + center.z.abs());
    if (observer.z - center.z).abs() <= level_tol
        && observer.horizontal_distance(center) <= r * (1.0 + 1e-12)
    {
        return Err(Error::Degenerate(
            "observer lies within the cruise disk".into(),
        ));
    }

    let dirs: Vec<[f64; 3]> = (0..SPREAD_SAMPLES)
        .map(|i| {
            let phase = 2.0 * PI * i as f64 / SPREAD_SAMPLES as f64;
            line_of_sight(observer, cruise.point_at_phase(phase))
                .expect("observer outside the disk cannot coincide with a circle point")
        })
        .collect();

    match mode {
        SpreadMode::HalfAngle => {
            let axis = line_of_sight(observer, center).expect("observer is off-center");
            Ok(dirs
                .iter()
                .map(|&d| angle_between_deg(axis, d))
                .fold(0.0, f64::max))
        }
        SpreadMode::FullSpan => {
            let mut best = (1.0, 0, 0);
            for i in 0..dirs.len() {
                for j in i + 1..dirs.len() {
                    let c = dot(dirs[i], dirs[j]);
                    if c < best.0 {
                        best = (c, i, j);
                    }
                }
            }
            Ok(angle_between_deg(dirs[best.1], dirs[best.2]))
        }
    }
}
