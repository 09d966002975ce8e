//! Feasibility and link-budget engine for a distributed multi-layer UAV network
//! (stratospheric balloons, fixed-wing and rotary-wing UAVs).
//!
//! The crate is organized bottom-up:
//!
//! - [`atmosphere`]: ISA temperature/pressure/density profile and unit conversions.
//! - [`aero`]: fixed-wing lift, minimum sustaining speed, payload classes.
//! - [`geometry`]: circular cruise paths, elevation angles, line-of-sight spreads.
//! - [`attenuation`]: gaseous, rain, cloud/fog and laser losses plus slant-path integration.
//! - [`linkbudget`]: free-space loss, RF link reports, laser power delivery.
//! - [`scenario`]: scenario files, node validation, time-stepped simulation, endurance.

pub mod aero;
pub mod atmosphere;
pub mod attenuation;
pub mod error;
pub mod geometry;
pub mod linkbudget;
pub mod scenario;

pub use error::{Error, Result};
