use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use num_complex::Complex64;

use super::PartialCsi;
use crate::error::{invalid, Result};
use crate::numerics::ComplexMatrix;

/// Degrades partial CSI to accuracy level `accuracy` ∈ [0, 1].
///
/// Amplitudes become `ξ·λ̄ + √(1−ξ²)·e·λ̄` (clamped at zero) and every
/// steering entry keeps unit modulus while its phase θ becomes
/// `ξ·θ + √(1−ξ²)·e·θ`, with independent standard normal `e` per entry.
/// `ξ = 1` returns the input unchanged.
pub fn corrupt_csi(csi: &PartialCsi, accuracy: f64, seed: u64) -> Result<PartialCsi> {
    if !(0.0..=1.0).contains(&accuracy) {
        return Err(invalid!("CSI accuracy must lie in [0, 1], got {accuracy}"));
    }
    if accuracy == 1.0 {
        return Ok(csi.clone());
    }
    let spread = libm::sqrt(1.0 - accuracy * accuracy);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut noise = move || -> f64 { StandardNormal.sample(&mut rng) };

    let mut gain_amplitudes = csi.gain_amplitudes.clone();
    for amps in &mut gain_amplitudes {
        for a in amps.iter_mut() {
            *a = perturb_amplitude(*a, accuracy, noise()).max(0.0);
        }
    }

    let a_t = csi
        .a_t
        .iter()
        .map(|m| {
            let mut out = m.clone();
            for i in 0..m.rows() {
                for z in out.row_mut(i) {
                    let theta = z.arg();
                    let e = noise();
                    let perturbed = accuracy * theta + spread * e * theta;
                    *z = Complex64::new(libm::cos(perturbed), libm::sin(perturbed));
                }
            }
            out
        })
        .collect::<alloc::vec::Vec<ComplexMatrix>>();

    Ok(PartialCsi { a_t, gain_amplitudes })
}

/// `ξ·λ + √(1−ξ²)·e·λ` for one standard normal draw `e`, before clamping.
pub fn perturb_amplitude(amplitude: f64, accuracy: f64, e: f64) -> f64 {
    let spread = libm::sqrt(1.0 - accuracy * accuracy);
    accuracy * amplitude + spread * e * amplitude
}
