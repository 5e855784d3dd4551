use alloc::vec::Vec;

use num_complex::Complex64;

use super::beamformer::{normalize_power, Beamformer, DesignConfig};
use super::input::DesignInput;
use super::network::{argmax_first, left_apply_analog, FpsBank, SwitchMatrix};
use crate::channel::{BandConfig, PartialCsi};
use crate::error::Result;
use crate::numerics::{right_singular_basis, ComplexMatrix, Lu};

/// Row-successive design from partial CSI.
pub fn rsd_design(csi: &PartialCsi, band: &BandConfig, n_r: usize, cfg: &DesignConfig) -> Result<Beamformer> {
    rsd_from_input(&DesignInput::from_partial_csi(csi, band, n_r)?, cfg)
}

/// Row-successive design: antennas are assigned in natural order, each to
/// the shifter that maximizes the log-det gain over all subcarriers given
/// the assignments made so far. The digital stage then takes the leading
/// right singular vectors of `G[k]·S·F` with equal power.
pub fn rsd_from_input(input: &DesignInput, cfg: &DesignConfig) -> Result<Beamformer> {
    cfg.validate()?;
    let bank = cfg.bank()?;
    let switches = rsd_select(input, &bank)?;
    let digital = eigen_digital(input, &switches, &bank, cfg.n_streams)?;
    let bf = Beamformer::new(bank, switches, digital, cfg.transmit_power_mw)?;
    normalize_power(&bf, cfg.transmit_power_mw)
}

/// Leading `N_s` right singular vectors of `G[k]·S·F` per subcarrier.
pub(crate) fn eigen_digital(
    input: &DesignInput,
    switches: &SwitchMatrix,
    bank: &FpsBank,
    n_streams: usize,
) -> Result<Vec<ComplexMatrix>> {
    input
        .effective
        .iter()
        .map(|g| right_singular_basis(&left_apply_analog(g, switches, bank), n_streams))
        .collect()
}

fn rsd_select(input: &DesignInput, bank: &FpsBank) -> Result<SwitchMatrix> {
    let n_t = input.n_t();
    let l_t = bank.rf_chains();
    let f = bank.phase_vector();
    // Running G[k]·S_{1:i}·F, one column per RF chain.
    let mut acc: Vec<ComplexMatrix> = input
        .effective
        .iter()
        .map(|g| ComplexMatrix::zeros(g.rows(), l_t))
        .collect();
    let mut selection = Vec::with_capacity(n_t);
    let mut scores = alloc::vec![0.0; bank.size()];

    for i in 0..n_t {
        stage_scores(input, &acc, bank, i, &mut scores)?;
        let best = argmax_first(&scores);
        let (chain, q) = bank.locate(best);
        for (g, a) in input.effective.iter().zip(acc.iter_mut()) {
            for r in 0..g.rows() {
                a[(r, chain)] += g[(r, i)] * f[q];
            }
        }
        selection.push(best);
    }
    Ok(SwitchMatrix::new_unchecked(selection))
}

/// Log-det gain of every candidate for antenna `i`, summed over subcarriers:
/// `Σ_k log2|I + T[k]^{-1}·X_c[k]|` with `T = I + g·A·A^H` and `X_c` the
/// change of `g·A·A^H` when candidate `c` joins its chain's column.
fn stage_scores(
    input: &DesignInput,
    acc: &[ComplexMatrix],
    bank: &FpsBank,
    i: usize,
    scores: &mut [f64],
) -> Result<()> {
    let f = bank.phase_vector();
    scores.iter_mut().for_each(|s| *s = 0.0);
    for ((g, &snr), a) in input.effective.iter().zip(&input.snr_scale).zip(acc) {
        let rows = g.rows();
        let t = ComplexMatrix::identity(rows).add(&a.matmul(&a.adjoint())?.scaled(snr))?;
        let lu = Lu::factor(&t)?;
        let column = g.column(i);
        for (c, score) in scores.iter_mut().enumerate() {
            let (chain, q) = bank.locate(c);
            let b: Vec<Complex64> = column.iter().map(|z| z * f[q]).collect();
            let x = ComplexMatrix::from_fn(rows, rows, |r, s| {
                let al_r = a[(r, chain)];
                let al_s = a[(s, chain)];
                (b[r] * al_s.conj() + al_r * b[s].conj() + b[r] * b[s].conj()) * snr
            });
            let m = ComplexMatrix::identity(rows).add(&lu.solve(&x)?)?;
            *score += Lu::factor(&m).map_or(f64::NEG_INFINITY, |m| m.log2_abs_det());
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::log2_det_hpd;
    use num_complex::Complex64;

    #[test]
    fn stage_score_is_log_det_increment() {
        let g = ComplexMatrix::from_fn(3, 5, |r, c| {
            Complex64::new((r + 2 * c) as f64 * 0.1 - 0.4, (r * c) as f64 * 0.07)
        });
        let input = DesignInput::new(alloc::vec![g.clone()], alloc::vec![2.5]).unwrap();
        let bank = FpsBank::new(2, 3).unwrap();
        let prior = SwitchMatrix::new(alloc::vec![4, 1], &bank).unwrap();
        // Accumulated G·S·F over the first two antennas.
        let mut acc = ComplexMatrix::zeros(3, 2);
        let f = bank.phase_vector();
        for (i, &sel) in prior.selection().iter().enumerate() {
            let (chain, q) = bank.locate(sel);
            for r in 0..3 {
                acc[(r, chain)] += g[(r, i)] * f[q];
            }
        }
        let mut scores = alloc::vec![0.0; bank.size()];
        stage_scores(&input, core::slice::from_ref(&acc), &bank, 2, &mut scores).unwrap();
        let gram = |a: &ComplexMatrix| {
            ComplexMatrix::identity(3)
                .add(&a.matmul(&a.adjoint()).unwrap().scaled(2.5))
                .unwrap()
        };
        let before = log2_det_hpd(&gram(&acc)).unwrap();
        for (c, score) in scores.iter().enumerate() {
            let (chain, q) = bank.locate(c);
            let mut next = acc.clone();
            for r in 0..3 {
                next[(r, chain)] += g[(r, 2)] * f[q];
            }
            let direct = log2_det_hpd(&gram(&next)).unwrap() - before;
            assert!((score - direct).abs() < 1e-12, "candidate {c}: {score} vs {direct}");
        }
    }

    #[test]
    fn selection_is_deterministic() {
        let g = ComplexMatrix::from_fn(2, 6, |r, c| Complex64::from_polar(1.0 + r as f64, 0.3 * (r * c) as f64));
        let input = DesignInput::new(alloc::vec![g], alloc::vec![1.0]).unwrap();
        let cfg = DesignConfig {
            n_streams: 2,
            n_rf: 2,
            fps_per_chain: 4,
            ..DesignConfig::default()
        };
        let a = rsd_from_input(&input, &cfg).unwrap();
        let b = rsd_from_input(&input, &cfg).unwrap();
        assert_eq!(a, b);
    }
}
