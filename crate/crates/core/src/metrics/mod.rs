//! Spectral efficiency under optimal combining, the transceiver power model
//! and energy efficiency.

mod power;

pub use power::{
    active_fps_count, energy_efficiency, receive_power, transmit_power, Architecture, ArchitectureSpec, PowerModel,
};

use alloc::vec::Vec;

use crate::channel::ChannelRealization;
use crate::design::Beamformer;
use crate::error::{mismatch, Result};
use crate::numerics::{capacity_logdet, ComplexMatrix};

/// Spectral efficiency (bits/s/Hz) of `bf` over `channel`, with the
/// receiver combining onto the leading `N_s` left singular vectors of each
/// `H[k]`.
pub fn spectral_efficiency(channel: &ChannelRealization, bf: &Beamformer) -> Result<f64> {
    SpectralEvaluator::new(channel, bf.n_streams())?.evaluate(bf)
}

/// Caches `W[k]^H·H[k] = diag(s)·V^H` so that many beamformers can be scored
/// against one channel.
#[derive(Debug, Clone)]
pub struct SpectralEvaluator {
    n_t: usize,
    combined: Vec<ComplexMatrix>,
    inverse_noise: Vec<f64>,
}

impl SpectralEvaluator {
    pub fn new(channel: &ChannelRealization, n_streams: usize) -> Result<Self> {
        let combined = (0..channel.subcarrier_count())
            .map(|k| {
                let svd = channel.compact_svd(k);
                let keep = svd.rank().min(n_streams).max(1);
                ComplexMatrix::from_fn(keep, channel.n_t(), |r, c| svd.v[(c, r)].conj() * svd.s[r])
            })
            .collect();
        Ok(Self {
            n_t: channel.n_t(),
            combined,
            inverse_noise: channel.band.noise_power().iter().map(|s| 1.0 / s).collect(),
        })
    }

    pub fn evaluate(&self, bf: &Beamformer) -> Result<f64> {
        if bf.switches.n_antennas() != self.n_t {
            return Err(mismatch!(
                "beamformer drives {} antennas, channel has {}",
                bf.switches.n_antennas(),
                self.n_t
            ));
        }
        if bf.digital.len() != self.combined.len() {
            return Err(mismatch!(
                "{} digital matrices for {} subcarriers",
                bf.digital.len(),
                self.combined.len()
            ));
        }
        let mut total = 0.0;
        for ((wh, &g), d) in self.combined.iter().zip(&self.inverse_noise).zip(&bf.digital) {
            let eff = crate::design::left_apply_analog(wh, &bf.switches, &bf.bank).matmul(d)?;
            total += capacity_logdet(&eff, g)?;
        }
        Ok(total / self.combined.len() as f64)
    }
}
