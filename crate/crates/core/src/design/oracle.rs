use super::beamformer::{normalize_power, Beamformer, DesignConfig};
use super::input::DesignInput;
use super::network::SwitchMatrix;
use super::rsd::eigen_digital;
use crate::error::{Error, Result};

/// Largest number of switch configurations the oracle will enumerate.
pub const ORACLE_LIMIT: u128 = 1_000_000;

/// Exhaustive-search optimum and the number of configurations it visited.
#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub beamformer: Beamformer,
    pub objective: f64,
    pub configurations: u128,
}

/// `(L_t·Q)^{N_t}`, saturating at `u128::MAX`.
pub fn configuration_count(n_t: usize, candidates: usize) -> u128 {
    let mut total: u128 = 1;
    for _ in 0..n_t {
        total = total.saturating_mul(candidates as u128);
    }
    total
}

/// Enumerates every switch configuration, pairs each with the equal-power
/// eigen digital stage and keeps the first one with the largest
/// [`DesignInput::objective`].
pub fn brute_force_oracle(input: &DesignInput, cfg: &DesignConfig) -> Result<OracleOutcome> {
    cfg.validate()?;
    let bank = cfg.bank()?;
    let n_t = input.n_t();
    let candidates = bank.size();
    let configurations = configuration_count(n_t, candidates);
    if configurations > ORACLE_LIMIT {
        return Err(Error::TooLarge {
            configurations,
            limit: ORACLE_LIMIT,
        });
    }

    let mut selection = alloc::vec![0usize; n_t];
    let mut best: Option<(f64, Beamformer)> = None;
    let mut visited: u128 = 0;
    loop {
        let switches = SwitchMatrix::new_unchecked(selection.clone());
        let digital = eigen_digital(input, &switches, &bank, cfg.n_streams)?;
        let bf = normalize_power(
            &Beamformer::new(bank, switches, digital, cfg.transmit_power_mw)?,
            cfg.transmit_power_mw,
        )?;
        let value = input.objective(&bf)?;
        visited += 1;
        if best.as_ref().is_none_or(|(b, _)| value > *b) {
            best = Some((value, bf));
        }
        // Odometer increment, last antenna fastest.
        let mut pos = n_t;
        loop {
            if pos == 0 {
                let (objective, beamformer) = best.expect("at least one configuration");
                return Ok(OracleOutcome {
                    beamformer,
                    objective,
                    configurations: visited,
                });
            }
            pos -= 1;
            selection[pos] += 1;
            if selection[pos] < candidates {
                break;
            }
            selection[pos] = 0;
        }
    }
}
