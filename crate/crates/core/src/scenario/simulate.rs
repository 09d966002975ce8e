use rayon::prelude::*;

use crate::attenuation::PathIntegrator;
use crate::error::Result;
use crate::geometry::{angle_between_deg, elevation_angle, line_of_sight, slant_distance};
use crate::linkbudget::{fspl, rf_link_between, LinkReport, RadioConfig};

use super::{LinkSpec, Scenario};

#[derive(Debug, Clone, PartialEq)]
pub enum LinkOutcome {
    Report(LinkReport),
    /// The link could not be evaluated at this instant, e.g. the path became
    /// too flat for the attenuation models. Geometry is still reported.
    Invalid {
        distance_m: f64,
        elevation_deg: f64,
        fspl_db: Option<f64>,
        reason: String,
    },
}

impl LinkOutcome {
    pub fn report(&self) -> Option<&LinkReport> {
        match self {
            LinkOutcome::Report(r) => Some(r),
            LinkOutcome::Invalid { .. } => None,
        }
    }

    pub fn viable(&self) -> bool {
        self.report().is_some_and(|r| r.viable)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LinkSample {
    pub t_s: f64,
    pub link_id: String,
    /// Unit line-of-sight vector from endpoint `a` to endpoint `b`.
    pub line_of_sight: Option<[f64; 3]>,
    pub outcome: LinkOutcome,
}

/// Runs the scenario with the built-in coefficient tables.
pub fn simulate(scenario: &Scenario) -> Result<Vec<LinkSample>> {
    simulate_with(scenario, &PathIntegrator::default())
}

/// One sample per link per timestep, ordered by time then link id.
///
/// Timesteps are evaluated in parallel; the result does not depend on
/// scheduling.
pub fn simulate_with(scenario: &Scenario, integrator: &PathIntegrator<'_>) -> Result<Vec<LinkSample>> {
    let mut links: Vec<(&LinkSpec, RadioConfig, usize, usize)> = scenario
        .links
        .iter()
        .map(|l| {
            let idx = |id: &str| scenario.nodes.iter().position(|n| n.id == id);
            let radio = scenario.link_radio(l)?;
            Ok((l, radio, idx(&l.a).expect("checked"), idx(&l.b).expect("checked")))
        })
        .collect::<Result<_>>()?;
    links.sort_by(|x, y| x.0.id.cmp(&y.0.id));

    let steps = scenario.step_count();
    let samples = (0..steps)
        .into_par_iter()
        .flat_map_iter(|k| {
            let t_s = k as f64 * scenario.timestep_s;
            links.iter().map(move |&(link, radio, ia, ib)| {
                let a = scenario.nodes[ia].position_at(t_s);
                let b = scenario.nodes[ib].position_at(t_s);
                let outcome = match rf_link_between(integrator, a, b, &radio, &scenario.weather) {
                    Ok(report) => LinkOutcome::Report(report),
                    Err(e) => {
                        let distance_m = slant_distance(a, b);
                        let (low, high) = if a.z <= b.z { (a, b) } else { (b, a) };
                        LinkOutcome::Invalid {
                            distance_m,
                            elevation_deg: elevation_angle(low, high).unwrap_or(f64::NAN),
                            fspl_db: fspl(distance_m, radio.frequency_ghz).ok(),
                            reason: e.to_string(),
                        }
                    }
                };
                LinkSample {
                    t_s,
                    link_id: link.id.clone(),
                    line_of_sight: line_of_sight(a, b),
                    outcome,
                }
            })
        })
        .collect();
    Ok(samples)
}

/// Largest angle (deg) between any two line-of-sight directions recorded for
/// `link_id`, i.e. how far the beam has to steer over the run.
pub fn max_los_deviation_deg(samples: &[LinkSample], link_id: &str) -> Option<f64> {
    let dirs: Vec<[f64; 3]> = samples
        .iter()
        .filter(|s| s.link_id == link_id)
        .filter_map(|s| s.line_of_sight)
        .collect();
    if dirs.is_empty() {
        return None;
    }
    let mut max: f64 = 0.0;
    for i in 0..dirs.len() {
        for j in i + 1..dirs.len() {
            max = max.max(angle_between_deg(dirs[i], dirs[j]));
        }
    }
    Some(max)
}
