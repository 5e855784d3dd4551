use alloc::vec::Vec;
use core::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{invalid, Result};

/// Speed of light in vacuum, m/s.
pub const SPEED_OF_LIGHT: f64 = 299_792_458.0;

/// Uniform planar array on the yz-plane: `len_y` elements along y, `len_z`
/// along z, uniform spacing.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArrayGeometry {
    len_y: usize,
    len_z: usize,
    spacing: f64,
}

impl ArrayGeometry {
    pub fn new(len_y: usize, len_z: usize, spacing: f64) -> Result<Self> {
        if len_y == 0 || len_z == 0 {
            return Err(invalid!("array dimensions must be positive, got {len_y}x{len_z}"));
        }
        if !(spacing > 0.0) || !spacing.is_finite() {
            return Err(invalid!("antenna spacing must be positive, got {spacing}"));
        }
        Ok(Self { len_y, len_z, spacing })
    }

    /// Array with half-wavelength spacing at `center_frequency` (Hz).
    pub fn half_wavelength(len_y: usize, len_z: usize, center_frequency: f64) -> Result<Self> {
        if !(center_frequency > 0.0) {
            return Err(invalid!("center frequency must be positive, got {center_frequency}"));
        }
        Self::new(len_y, len_z, SPEED_OF_LIGHT / center_frequency / 2.0)
    }

    /// Near-square factorization of `n` elements (`len_y ≥ len_z`).
    pub fn square_ish(n: usize, center_frequency: f64) -> Result<Self> {
        if n == 0 {
            return Err(invalid!("array must have at least one element"));
        }
        let mut len_z = libm::sqrt(n as f64) as usize;
        while len_z > 1 && !n.is_multiple_of(len_z) {
            len_z -= 1;
        }
        Self::half_wavelength(n / len_z.max(1), len_z.max(1), center_frequency)
    }

    #[inline]
    pub fn len_y(&self) -> usize {
        self.len_y
    }

    #[inline]
    pub fn len_z(&self) -> usize {
        self.len_z
    }

    #[inline]
    pub fn spacing(&self) -> f64 {
        self.spacing
    }

    #[inline]
    pub fn element_count(&self) -> usize {
        self.len_y * self.len_z
    }
}

/// Array response of a planar array toward (azimuth, elevation).
///
/// Entry `a·len_z + b` is `exp(j·2π·d/λ·(a·sinφ·sinθ + b·cosθ))`, i.e. the
/// Kronecker product of the y-axis and z-axis responses.
pub fn steering_vector(geom: &ArrayGeometry, wavelength: f64, azimuth: f64, elevation: f64) -> Result<Vec<Complex64>> {
    if !(wavelength > 0.0) || !wavelength.is_finite() {
        return Err(invalid!("wavelength must be positive, got {wavelength}"));
    }
    let k = 2.0 * PI * geom.spacing / wavelength;
    let step_y = k * libm::sin(azimuth) * libm::sin(elevation);
    let step_z = k * libm::cos(elevation);
    let mut out = Vec::with_capacity(geom.element_count());
    for a in 0..geom.len_y {
        for b in 0..geom.len_z {
            let phase = a as f64 * step_y + b as f64 * step_z;
            out.push(Complex64::new(libm::cos(phase), libm::sin(phase)));
        }
    }
    Ok(out)
}

/// Measured and analytic cross-correlation of two steering directions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OrthogonalityCheck {
    /// `(1/N)·|a_i^H a_l|`.
    pub measured: f64,
    /// `1 / (N·|sin(πdΨ₁/λ)·sin(πdΨ₂/λ)|)`; `+∞` where undefined.
    pub bound: f64,
}

/// Normalized inner product of two steering vectors together with the
/// closed-form upper bound on its magnitude.
pub fn verify_orthogonality(
    geom: &ArrayGeometry,
    wavelength: f64,
    angles_i: (f64, f64),
    angles_l: (f64, f64),
) -> Result<OrthogonalityCheck> {
    let a_i = steering_vector(geom, wavelength, angles_i.0, angles_i.1)?;
    let a_l = steering_vector(geom, wavelength, angles_l.0, angles_l.1)?;
    let n = geom.element_count() as f64;
    let inner: Complex64 = a_i.iter().zip(&a_l).map(|(x, y)| x.conj() * y).sum();
    Ok(OrthogonalityCheck {
        measured: inner.norm() / n,
        bound: orthogonality_bound(geom, wavelength, angles_i, angles_l),
    })
}

/// Closed-form bound on `(1/N)|a_i^H a_l|`; infinite when either direction
/// difference vanishes or the sines hit a zero.
pub fn orthogonality_bound(
    geom: &ArrayGeometry,
    wavelength: f64,
    (az_i, el_i): (f64, f64),
    (az_l, el_l): (f64, f64),
) -> f64 {
    let psi1 = libm::sin(az_l) * libm::sin(el_l) - libm::sin(az_i) * libm::sin(el_i);
    let psi2 = libm::cos(el_l) - libm::cos(el_i);
    if psi1 == 0.0 || psi2 == 0.0 {
        return f64::INFINITY;
    }
    let scale = PI * geom.spacing / wavelength;
    let denom = geom.element_count() as f64 * (libm::sin(scale * psi1) * libm::sin(scale * psi2)).abs();
    if denom == 0.0 {
        f64::INFINITY
    } else {
        1.0 / denom
    }
}
