use alloc::vec::Vec;

use super::network::{apply_analog, FpsBank, SwitchMatrix};
use crate::error::{invalid, mismatch, Result};
use crate::numerics::ComplexMatrix;

/// Parameters shared by the design algorithms.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignConfig {
    pub n_streams: usize,
    pub n_rf: usize,
    pub fps_per_chain: usize,
    pub transmit_power_mw: f64,
    pub rbr_max_iters: usize,
    pub rbr_rel_tol: f64,
    pub seed: u64,
}

impl Default for DesignConfig {
    fn default() -> Self {
        Self {
            n_streams: 4,
            n_rf: 4,
            fps_per_chain: 8,
            transmit_power_mw: 100.0,
            rbr_max_iters: 100,
            rbr_rel_tol: 1e-6,
            seed: 0,
        }
    }
}

impl DesignConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n_streams == 0 || self.n_rf == 0 || self.fps_per_chain == 0 || self.rbr_max_iters == 0 {
            return Err(invalid!(
                "stream, RF chain, shifter and iteration counts must be positive"
            ));
        }
        if self.n_streams > self.n_rf {
            return Err(invalid!(
                "{} streams need at least as many RF chains, got {}",
                self.n_streams,
                self.n_rf
            ));
        }
        if !(self.transmit_power_mw > 0.0) || !self.transmit_power_mw.is_finite() {
            return Err(invalid!("transmit power must be positive"));
        }
        if !(self.rbr_rel_tol > 0.0) {
            return Err(invalid!("RBR tolerance must be positive"));
        }
        Ok(())
    }

    pub fn bank(&self) -> Result<FpsBank> {
        FpsBank::new(self.n_rf, self.fps_per_chain)
    }
}

/// A designed hybrid precoder: switch state plus one digital matrix per
/// subcarrier, scaled to the transmit power budget.
#[derive(Debug, Clone, PartialEq)]
pub struct Beamformer {
    pub bank: FpsBank,
    pub switches: SwitchMatrix,
    /// `D[k]`, each `L_t × N_s`.
    pub digital: Vec<ComplexMatrix>,
    pub transmit_power: f64,
}

impl Beamformer {
    pub fn new(
        bank: FpsBank,
        switches: SwitchMatrix,
        digital: Vec<ComplexMatrix>,
        transmit_power: f64,
    ) -> Result<Self> {
        if digital.is_empty() {
            return Err(invalid!("at least one digital matrix is required"));
        }
        let shape = digital[0].shape();
        if shape.0 != bank.rf_chains() || digital.iter().any(|d| d.shape() != shape) {
            return Err(mismatch!("digital matrices must all be {}xN_s", bank.rf_chains()));
        }
        SwitchMatrix::new(switches.selection().to_vec(), &bank)?;
        Ok(Self {
            bank,
            switches,
            digital,
            transmit_power,
        })
    }

    pub fn n_streams(&self) -> usize {
        self.digital[0].cols()
    }

    pub fn analog(&self) -> ComplexMatrix {
        apply_analog(&self.switches, &self.bank).expect("validated selection")
    }

    /// Full precoder `S·F·D[k]` (`N_t × N_s`).
    pub fn precoder(&self, k: usize) -> ComplexMatrix {
        self.analog().matmul(&self.digital[k]).expect("shapes agree")
    }

    /// `Σ_k ‖S·F·D[k]‖_F²`.
    pub fn radiated_power(&self) -> f64 {
        radiated_power(&self.switches, &self.bank, &self.digital)
    }
}

/// `Σ_k ‖S·F·D[k]‖_F²`; each antenna contributes the squared norm of the
/// digital row feeding its RF chain.
pub(crate) fn radiated_power(switches: &SwitchMatrix, bank: &FpsBank, digital: &[ComplexMatrix]) -> f64 {
    let mut load = alloc::vec![0usize; bank.rf_chains()];
    for &s in switches.selection() {
        load[bank.locate(s).0] += 1;
    }
    digital
        .iter()
        .map(|d| {
            load.iter()
                .enumerate()
                .map(|(chain, &n)| n as f64 * d.row(chain).iter().map(|z| z.norm_sqr()).sum::<f64>())
                .sum::<f64>()
        })
        .sum()
}

/// Scales every `D[k]` by one common factor so that `Σ_k ‖S·F·D[k]‖_F² = ρ`.
pub fn normalize_power(bf: &Beamformer, rho: f64) -> Result<Beamformer> {
    if !(rho >= 0.0) || !rho.is_finite() {
        return Err(invalid!("transmit power must be finite and non-negative, got {rho}"));
    }
    let current = bf.radiated_power();
    if !(current > 0.0) {
        return Err(invalid!("cannot normalize an all-zero digital precoder"));
    }
    let factor = libm::sqrt(rho / current);
    Ok(Beamformer {
        bank: bf.bank,
        switches: bf.switches.clone(),
        digital: bf.digital.iter().map(|d| d.scaled(factor)).collect(),
        transmit_power: rho,
    })
}
