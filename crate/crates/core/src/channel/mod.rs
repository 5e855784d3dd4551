//! Sparse multipath THz channels over a planar-array pair.

mod corrupt;
mod generator;
mod geometry;

use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{invalid, mismatch, Error, Result};
use crate::numerics::{orthonormal_factor, thin_svd, ComplexMatrix, Svd};

pub use corrupt::{corrupt_csi, perturb_amplitude};
pub use generator::PathGenerator;
pub use geometry::{
    orthogonality_bound, steering_vector, verify_orthogonality, ArrayGeometry, OrthogonalityCheck, SPEED_OF_LIGHT,
};

/// Carrier layout and per-subcarrier noise.
#[derive(Debug, Clone, PartialEq)]
pub struct BandConfig {
    center_frequency: f64,
    subcarrier_frequencies: Vec<f64>,
    noise_power: Vec<f64>,
}

impl BandConfig {
    pub fn new(center_frequency: f64, subcarrier_frequencies: Vec<f64>, noise_power: Vec<f64>) -> Result<Self> {
        if !(center_frequency > 0.0) || !center_frequency.is_finite() {
            return Err(invalid!("center frequency must be positive"));
        }
        if subcarrier_frequencies.is_empty() {
            return Err(invalid!("at least one subcarrier is required"));
        }
        if subcarrier_frequencies.len() != noise_power.len() {
            return Err(mismatch!(
                "{} subcarriers but {} noise powers",
                subcarrier_frequencies.len(),
                noise_power.len()
            ));
        }
        if subcarrier_frequencies.iter().any(|f| !(*f > 0.0) || !f.is_finite()) {
            return Err(invalid!("subcarrier frequencies must be positive"));
        }
        if noise_power.iter().any(|s| !(*s > 0.0) || !s.is_finite()) {
            return Err(invalid!("noise powers must be positive"));
        }
        Ok(Self {
            center_frequency,
            subcarrier_frequencies,
            noise_power,
        })
    }

    /// `count` subcarriers evenly spread over `bandwidth` around the center,
    /// all with the same noise power (mW).
    pub fn uniform(center_frequency: f64, bandwidth: f64, count: usize, noise_mw: f64) -> Result<Self> {
        if count == 0 {
            return Err(invalid!("at least one subcarrier is required"));
        }
        let spacing = bandwidth / count as f64;
        let mid = (count as f64 - 1.0) / 2.0;
        let freqs = (0..count)
            .map(|k| center_frequency + (k as f64 - mid) * spacing)
            .collect();
        Self::new(center_frequency, freqs, alloc::vec![noise_mw; count])
    }

    pub fn center_frequency(&self) -> f64 {
        self.center_frequency
    }

    pub fn center_wavelength(&self) -> f64 {
        SPEED_OF_LIGHT / self.center_frequency
    }

    pub fn subcarrier_frequencies(&self) -> &[f64] {
        &self.subcarrier_frequencies
    }

    pub fn noise_power(&self) -> &[f64] {
        &self.noise_power
    }

    pub fn wavelength(&self, k: usize) -> f64 {
        SPEED_OF_LIGHT / self.subcarrier_frequencies[k]
    }

    pub fn subcarrier_count(&self) -> usize {
        self.subcarrier_frequencies.len()
    }
}

/// One propagation path: departure/arrival directions and its complex gain
/// on every subcarrier.
#[derive(Debug, Clone, PartialEq)]
pub struct Path {
    pub azimuth_dod: f64,
    pub elevation_dod: f64,
    pub azimuth_doa: f64,
    pub elevation_doa: f64,
    pub gains: Vec<Complex64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PathSet {
    paths: Vec<Path>,
}

impl PathSet {
    /// Validates angle ranges, gain finiteness and a common subcarrier count.
    pub fn new(paths: Vec<Path>) -> Result<Self> {
        let Some(first) = paths.first() else {
            return Err(invalid!("path set must contain at least one path"));
        };
        let k = first.gains.len();
        if k == 0 {
            return Err(invalid!("paths must carry at least one gain"));
        }
        for (i, p) in paths.iter().enumerate() {
            if p.gains.len() != k {
                return Err(mismatch!("path {i} has {} gains, expected {k}", p.gains.len()));
            }
            for angle in [p.azimuth_dod, p.elevation_dod, p.azimuth_doa, p.elevation_doa] {
                if !(0.0..TAU).contains(&angle) {
                    return Err(invalid!("path {i} angle {angle} outside [0, 2π)"));
                }
            }
            if p.gains.iter().any(|g| !g.re.is_finite() || !g.im.is_finite()) {
                return Err(Error::NonFinite("path gains"));
            }
        }
        Ok(Self { paths })
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn subcarrier_count(&self) -> usize {
        self.paths[0].gains.len()
    }
}

/// Per-subcarrier channel together with the factors that built it:
/// `H[k] = A_r[k] · diag(gains[k]) · A_t[k]^H`.
#[derive(Debug, Clone)]
pub struct ChannelRealization {
    pub band: BandConfig,
    pub tx_geometry: ArrayGeometry,
    pub rx_geometry: ArrayGeometry,
    pub a_t: Vec<ComplexMatrix>,
    pub a_r: Vec<ComplexMatrix>,
    pub gains: Vec<Vec<Complex64>>,
    pub h: Vec<ComplexMatrix>,
}

impl ChannelRealization {
    pub fn n_t(&self) -> usize {
        self.tx_geometry.element_count()
    }

    pub fn n_r(&self) -> usize {
        self.rx_geometry.element_count()
    }

    pub fn n_paths(&self) -> usize {
        self.gains[0].len()
    }

    pub fn subcarrier_count(&self) -> usize {
        self.h.len()
    }

    /// Thin SVD of `H[k]` computed through its low-rank factors, with at
    /// most `N_p` components.
    pub fn compact_svd(&self, k: usize) -> Svd {
        let (q_r, r_r) = orthonormal_factor(&self.a_r[k]);
        let (q_t, r_t) = orthonormal_factor(&self.a_t[k]);
        let gains = &self.gains[k];
        let weighted = ComplexMatrix::from_fn(r_r.rows(), r_r.cols(), |i, p| r_r[(i, p)] * gains[p]);
        let core = weighted.matmul(&r_t.adjoint()).expect("factor shapes agree");
        let small = thin_svd(&core);
        Svd {
            u: q_r.matmul(&small.u).expect("factor shapes agree"),
            s: small.s,
            v: q_t.matmul(&small.v).expect("factor shapes agree"),
        }
    }

    /// Frobenius distance between the stored `H[k]` and the product of its
    /// stored factors.
    pub fn factor_residual(&self, k: usize) -> f64 {
        let rebuilt = factor_product(&self.a_r[k], &self.gains[k], &self.a_t[k]);
        rebuilt.sub(&self.h[k]).expect("matching shapes").frobenius_norm()
    }
}

/// What the transmitter is assumed to know: departure steering matrices and
/// path-gain amplitudes, without the gain phases.
#[derive(Debug, Clone, PartialEq)]
pub struct PartialCsi {
    pub a_t: Vec<ComplexMatrix>,
    pub gain_amplitudes: Vec<Vec<f64>>,
}

impl PartialCsi {
    pub fn n_t(&self) -> usize {
        self.a_t[0].rows()
    }

    pub fn n_paths(&self) -> usize {
        self.a_t[0].cols()
    }

    pub fn subcarrier_count(&self) -> usize {
        self.a_t.len()
    }

    pub fn validate(&self) -> Result<()> {
        if self.a_t.is_empty() || self.a_t.len() != self.gain_amplitudes.len() {
            return Err(mismatch!(
                "{} steering matrices for {} amplitude vectors",
                self.a_t.len(),
                self.gain_amplitudes.len()
            ));
        }
        let shape = self.a_t[0].shape();
        for (a, amps) in self.a_t.iter().zip(&self.gain_amplitudes) {
            if a.shape() != shape || amps.len() != shape.1 {
                return Err(mismatch!("inconsistent partial CSI dimensions"));
            }
            if amps.iter().any(|x| !(*x >= 0.0) || !x.is_finite()) {
                return Err(invalid!("gain amplitudes must be finite and non-negative"));
            }
        }
        Ok(())
    }
}

/// Builds steering matrices at each subcarrier wavelength and the resulting
/// multipath channel.
pub fn synthesize_channel(
    paths: &PathSet,
    tx: &ArrayGeometry,
    rx: &ArrayGeometry,
    band: &BandConfig,
) -> Result<ChannelRealization> {
    if paths.is_empty() {
        return Err(invalid!("path set must contain at least one path"));
    }
    let k_count = band.subcarrier_count();
    if paths.subcarrier_count() != k_count {
        return Err(mismatch!(
            "paths carry {} gains but the band has {k_count} subcarriers",
            paths.subcarrier_count()
        ));
    }
    let mut a_t = Vec::with_capacity(k_count);
    let mut a_r = Vec::with_capacity(k_count);
    let mut gains = Vec::with_capacity(k_count);
    let mut h = Vec::with_capacity(k_count);
    for k in 0..k_count {
        let lambda = band.wavelength(k);
        let mut t_cols = Vec::with_capacity(paths.len());
        let mut r_cols = Vec::with_capacity(paths.len());
        for p in paths.paths() {
            t_cols.push(steering_vector(tx, lambda, p.azimuth_dod, p.elevation_dod)?);
            r_cols.push(steering_vector(rx, lambda, p.azimuth_doa, p.elevation_doa)?);
        }
        let at = ComplexMatrix::from_columns(&t_cols)?;
        let ar = ComplexMatrix::from_columns(&r_cols)?;
        let g: Vec<Complex64> = paths.paths().iter().map(|p| p.gains[k]).collect();
        h.push(factor_product(&ar, &g, &at));
        a_t.push(at);
        a_r.push(ar);
        gains.push(g);
    }
    Ok(ChannelRealization {
        band: band.clone(),
        tx_geometry: *tx,
        rx_geometry: *rx,
        a_t,
        a_r,
        gains,
        h,
    })
}

fn factor_product(a_r: &ComplexMatrix, gains: &[Complex64], a_t: &ComplexMatrix) -> ComplexMatrix {
    let scaled = ComplexMatrix::from_fn(a_r.rows(), a_r.cols(), |i, p| a_r[(i, p)] * gains[p]);
    scaled.matmul(&a_t.adjoint()).expect("factor shapes agree")
}

/// Transmitter-side view of a channel: steering matrices plus `|α|`.
pub fn partial_csi_tx(ch: &ChannelRealization) -> PartialCsi {
    PartialCsi {
        a_t: ch.a_t.clone(),
        gain_amplitudes: ch.gains.iter().map(|g| g.iter().map(|z| z.norm()).collect()).collect(),
    }
}
