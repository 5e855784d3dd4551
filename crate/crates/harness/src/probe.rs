//! Wall-time scaling of the two design algorithms against array size.

use std::time::Instant;

use dsfps_core::channel::partial_csi_tx;
use dsfps_core::design::{rbr_from_input, rsd_from_input, DesignConfig, DesignInput};
use serde::Serialize;

use crate::error::Result;
use crate::experiment::{trial_seed, Scenario};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScalingRow {
    pub n_t: usize,
    pub rbr_median_ms: f64,
    pub rsd_median_ms: Option<f64>,
    pub rbr_median_iters: usize,
}

/// Timed runs per design and trial; the fastest one counts.
pub const BEST_OF: usize = 3;

/// Times `rbr_design` (and `rsd_design` when `with_rsd`) for each `N_t`,
/// reporting medians over `trials` seeded channels of the best of
/// [`BEST_OF`] runs. Array sizes are interleaved within each trial so load
/// bursts hit every size alike. Channel synthesis is excluded from the
/// timings.
pub fn scaling_probe(
    scenario: &Scenario,
    design: &DesignConfig,
    n_antennas: &[usize],
    trials: usize,
    with_rsd: bool,
) -> Result<Vec<ScalingRow>> {
    let trials = trials.max(1);
    let mut rbr_ms = vec![Vec::with_capacity(trials); n_antennas.len()];
    let mut rsd_ms = vec![Vec::with_capacity(trials); n_antennas.len()];
    let mut iters = vec![Vec::with_capacity(trials); n_antennas.len()];
    for t in 0..trials {
        let seed = trial_seed(design.seed, t as u64);
        let cfg = DesignConfig { seed, ..design.clone() };
        for (i, &n_t) in n_antennas.iter().enumerate() {
            let ch = Scenario {
                n_t,
                ..scenario.clone()
            }
            .channel(seed)?;
            let input = DesignInput::from_partial_csi(&partial_csi_tx(&ch), &ch.band, ch.n_r())?;

            let (ms, out) = best_of(|| rbr_from_input(&input, &cfg))?;
            rbr_ms[i].push(ms);
            iters[i].push(out.iterations);

            if with_rsd {
                rsd_ms[i].push(best_of(|| rsd_from_input(&input, &cfg))?.0);
            }
        }
    }
    Ok(n_antennas
        .iter()
        .enumerate()
        .map(|(i, &n_t)| {
            iters[i].sort_unstable();
            ScalingRow {
                n_t,
                rbr_median_ms: median(&mut rbr_ms[i]),
                rsd_median_ms: with_rsd.then(|| median(&mut rsd_ms[i])),
                rbr_median_iters: iters[i][trials / 2],
            }
        })
        .collect())
}

fn best_of<T>(mut f: impl FnMut() -> dsfps_core::Result<T>) -> Result<(f64, T)> {
    let mut best = f64::INFINITY;
    let mut last = None;
    for _ in 0..BEST_OF {
        let start = Instant::now();
        let out = f()?;
        best = best.min(start.elapsed().as_secs_f64() * 1e3);
        last = Some(out);
    }
    Ok((best, last.expect("at least one run")))
}

pub fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}
