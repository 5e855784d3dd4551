use alloc::vec::Vec;

use crate::channel::{BandConfig, ChannelRealization, PartialCsi};
use crate::error::{invalid, mismatch, Result};
use crate::numerics::{capacity_logdet, ComplexMatrix};

use super::beamformer::Beamformer;
use super::network::left_apply_analog;

/// What a design algorithm sees of the channel on each subcarrier: a
/// matrix `G[k]` with `N_t` columns and an SNR scale `g[k]`, such that the
/// design objective is `log2|I + g[k]·G[k]·X·X^H·G[k]^H|` for a precoder `X`.
///
/// Partial CSI gives `G = Λ̄·A_t^H` with `g = N_r/σ²`. Full CSI gives
/// `G = diag(s)·V^H` from the compact SVD of `H`, with `g = 1/σ²`; this has
/// the same Gram matrix as `H` so every objective is unchanged.
#[derive(Debug, Clone, PartialEq)]
pub struct DesignInput {
    pub effective: Vec<ComplexMatrix>,
    pub snr_scale: Vec<f64>,
}

impl DesignInput {
    pub fn new(effective: Vec<ComplexMatrix>, snr_scale: Vec<f64>) -> Result<Self> {
        if effective.is_empty() {
            return Err(invalid!("at least one subcarrier is required"));
        }
        if effective.len() != snr_scale.len() {
            return Err(mismatch!(
                "{} matrices for {} SNR scales",
                effective.len(),
                snr_scale.len()
            ));
        }
        let n_t = effective[0].cols();
        if n_t == 0 || effective.iter().any(|g| g.cols() != n_t || g.rows() == 0) {
            return Err(mismatch!("effective matrices must share a non-zero antenna count"));
        }
        if effective.iter().any(|g| !g.is_finite()) {
            return Err(crate::Error::NonFinite("effective channel"));
        }
        if snr_scale.iter().any(|g| !(*g >= 0.0) || !g.is_finite()) {
            return Err(invalid!("SNR scales must be finite and non-negative"));
        }
        Ok(Self { effective, snr_scale })
    }

    pub fn from_partial_csi(csi: &PartialCsi, band: &BandConfig, n_r: usize) -> Result<Self> {
        csi.validate()?;
        if csi.subcarrier_count() != band.subcarrier_count() {
            return Err(mismatch!(
                "CSI covers {} subcarriers, band has {}",
                csi.subcarrier_count(),
                band.subcarrier_count()
            ));
        }
        if n_r == 0 {
            return Err(invalid!("receiver must have at least one antenna"));
        }
        let effective = csi
            .a_t
            .iter()
            .zip(&csi.gain_amplitudes)
            .map(|(a, lam)| ComplexMatrix::from_fn(a.cols(), a.rows(), |p, i| a[(i, p)].conj() * lam[p]))
            .collect();
        let snr_scale = band.noise_power().iter().map(|s| n_r as f64 / s).collect();
        Self::new(effective, snr_scale)
    }

    pub fn from_channel(ch: &ChannelRealization) -> Result<Self> {
        let effective = (0..ch.subcarrier_count())
            .map(|k| {
                let svd = ch.compact_svd(k);
                let vh = svd.v.adjoint();
                ComplexMatrix::from_fn(vh.rows(), vh.cols(), |r, c| vh[(r, c)] * svd.s[r])
            })
            .collect();
        let snr_scale = ch.band.noise_power().iter().map(|s| 1.0 / s).collect();
        Self::new(effective, snr_scale)
    }

    pub fn n_t(&self) -> usize {
        self.effective[0].cols()
    }

    pub fn subcarrier_count(&self) -> usize {
        self.effective.len()
    }

    /// True when every effective matrix is exactly zero (no usable path).
    pub fn is_degenerate(&self) -> bool {
        self.effective
            .iter()
            .all(|g| g.as_slice().iter().all(|z| z.re == 0.0 && z.im == 0.0))
    }

    /// `(1/K)·Σ_k log2|I + g[k]·G[k]·SFD[k]·(SFD[k])^H·G[k]^H|`.
    pub fn objective(&self, bf: &Beamformer) -> Result<f64> {
        if bf.switches.n_antennas() != self.n_t() {
            return Err(mismatch!(
                "beamformer drives {} antennas, channel has {}",
                bf.switches.n_antennas(),
                self.n_t()
            ));
        }
        if bf.digital.len() != self.subcarrier_count() {
            return Err(mismatch!(
                "{} digital matrices for {} subcarriers",
                bf.digital.len(),
                self.subcarrier_count()
            ));
        }
        let mut total = 0.0;
        for ((g, &scale), d) in self.effective.iter().zip(&self.snr_scale).zip(&bf.digital) {
            let gsf = left_apply_analog(g, &bf.switches, &bf.bank);
            total += capacity_logdet(&gsf.matmul(d)?, scale)?;
        }
        Ok(total / self.subcarrier_count() as f64)
    }
}
