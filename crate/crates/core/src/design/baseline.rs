use crate::channel::ChannelRealization;
use crate::error::{invalid, Result};

/// Unconstrained reference: equal power over the top `N_s` singular modes
/// of every `H[k]`, `(1/K)·Σ_k Σ_i log2(1 + ρ/(K·N_s·σ²_k)·s_i²)`.
pub fn fully_digital_baseline(channel: &ChannelRealization, n_streams: usize, rho: f64) -> Result<f64> {
    if n_streams == 0 {
        return Err(invalid!("at least one stream is required"));
    }
    if !(rho >= 0.0) || !rho.is_finite() {
        return Err(invalid!("transmit power must be finite and non-negative, got {rho}"));
    }
    let k_count = channel.subcarrier_count() as f64;
    let mut total = 0.0;
    for (k, &noise) in channel.band.noise_power().iter().enumerate() {
        let svd = channel.compact_svd(k);
        let gain = rho / (k_count * n_streams as f64 * noise);
        total += svd
            .s
            .iter()
            .take(n_streams)
            .map(|s| libm::log2(1.0 + gain * s * s))
            .sum::<f64>();
    }
    Ok(total / k_count)
}
