use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::beamformer::{normalize_power, Beamformer, DesignConfig};
use super::input::DesignInput;
use super::network::{argmax_first, FpsBank, SwitchMatrix};
use super::procrustes::procrustes_digital;
use crate::channel::{BandConfig, PartialCsi};
use crate::error::Result;
use crate::numerics::{right_singular_basis, ComplexMatrix};

/// Result of a row-by-row run with its convergence trace.
#[derive(Debug, Clone)]
pub struct RbrOutcome {
    pub beamformer: Beamformer,
    /// Full alternating iterations performed.
    pub iterations: usize,
    /// `(1/K)·Σ_k ‖P[k] − S·F·D[k]‖_F²` after each iteration.
    pub history: Vec<f64>,
    pub converged: bool,
    /// Set when the channel carries no energy; the design is then arbitrary.
    pub degenerate: bool,
}

/// Row-by-row design from partial CSI.
pub fn rbr_design(csi: &PartialCsi, band: &BandConfig, n_r: usize, cfg: &DesignConfig) -> Result<Beamformer> {
    Ok(rbr_from_input(&DesignInput::from_partial_csi(csi, band, n_r)?, cfg)?.beamformer)
}

/// Alternates a procrustes digital update with independent per-antenna
/// switch updates towards the unconstrained targets `P[k]`.
pub fn rbr_from_input(input: &DesignInput, cfg: &DesignConfig) -> Result<RbrOutcome> {
    cfg.validate()?;
    let bank = cfg.bank()?;
    let n_t = input.n_t();
    let targets: Vec<ComplexMatrix> = input
        .effective
        .iter()
        .map(|g| right_singular_basis(g, cfg.n_streams))
        .collect::<Result<_>>()?;

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mut switches = SwitchMatrix::new_unchecked((0..n_t).map(|_| rng.random_range(0..bank.size())).collect());

    let mut history = Vec::new();
    let mut converged = false;
    let mut scores = alloc::vec![0.0; bank.size()];
    while history.len() < cfg.rbr_max_iters {
        let digital = digital_step(&targets, &switches, &bank)?;
        for i in 0..n_t {
            row_scores(&targets, &digital, &bank, i, &mut scores);
            switches.selection_mut()[i] = argmax_first(&scores);
        }
        let obj = euclidean_objective(&targets, &switches, &bank, &digital)?;
        let previous = history.last().copied();
        history.push(obj);
        if let Some(prev) = previous {
            if (prev - obj).abs() <= cfg.rbr_rel_tol * prev.abs().max(f64::MIN_POSITIVE) {
                converged = true;
                break;
            }
        }
    }

    // The last switch update invalidates the digital part; re-solve it.
    let digital = digital_step(&targets, &switches, &bank)?;
    let bf = Beamformer::new(bank, switches, digital, cfg.transmit_power_mw)?;
    Ok(RbrOutcome {
        beamformer: normalize_power(&bf, cfg.transmit_power_mw)?,
        iterations: history.len(),
        history,
        converged,
        degenerate: input.is_degenerate(),
    })
}

fn digital_step(targets: &[ComplexMatrix], switches: &SwitchMatrix, bank: &FpsBank) -> Result<Vec<ComplexMatrix>> {
    targets.iter().map(|p| procrustes_digital(p, switches, bank)).collect()
}

/// `scores[l·Q + q] = Re(f_q · Σ_k Σ_s D[k][l,s]·conj(P[k][i,s]))`.
fn row_scores(targets: &[ComplexMatrix], digital: &[ComplexMatrix], bank: &FpsBank, i: usize, out: &mut [f64]) {
    let f = bank.phase_vector();
    let q_count = bank.fps_per_chain();
    for l in 0..bank.rf_chains() {
        let mut z = num_complex::Complex64::new(0.0, 0.0);
        for (p, d) in targets.iter().zip(digital) {
            for (dv, pv) in d.row(l).iter().zip(p.row(i)) {
                z += dv * pv.conj();
            }
        }
        for (q, phase) in f.iter().enumerate() {
            out[l * q_count + q] = (phase * z).re;
        }
    }
}

/// `(1/K)·Σ_k ‖P[k] − S·F·D[k]‖_F²`.
pub fn euclidean_objective(
    targets: &[ComplexMatrix],
    switches: &SwitchMatrix,
    bank: &FpsBank,
    digital: &[ComplexMatrix],
) -> Result<f64> {
    let sf = super::network::apply_analog(switches, bank)?;
    let mut total = 0.0;
    for (p, d) in targets.iter().zip(digital) {
        total += p.sub(&sf.matmul(d)?)?.frobenius_norm_sq();
    }
    Ok(total / targets.len() as f64)
}
