//! Dense complex kernels: matrix type, Jacobi SVD, log-det capacity and a
//! small LU for the per-stage determinants.

mod lu;
mod matrix;
mod qr;
mod svd;

pub use lu::{log2_det_hpd, Lu};
pub use matrix::ComplexMatrix;
pub use qr::orthonormal_factor;
pub use svd::{right_singular_basis, singular_values, thin_svd, truncated_svd, Svd};

use crate::error::{invalid, Result};

/// `log2 |I + gain · M · M^H|`, evaluated from the singular values of `M`.
pub fn capacity_logdet(m: &ComplexMatrix, gain: f64) -> Result<f64> {
    if !(gain >= 0.0) {
        return Err(invalid!("gain must be non-negative, got {gain}"));
    }
    if !m.is_finite() {
        return Err(crate::error::Error::NonFinite("capacity input"));
    }
    Ok(capacity_from_singular_values(&singular_values(m), gain))
}

pub(crate) fn capacity_from_singular_values(s: &[f64], gain: f64) -> f64 {
    s.iter().map(|&x| libm::log2(1.0 + gain * x * x)).sum()
}
