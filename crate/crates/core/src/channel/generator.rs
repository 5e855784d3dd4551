use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{BandConfig, Path, PathSet};

/// Random sparse, LoS-dominant path sets.
///
/// Path 0 is the line-of-sight path with amplitude `λ_c / (4π·D)` for the
/// configured distance proxy `D`; every other path is weaker by a uniform
/// draw from `nlos_attenuation_db`. Phases are uniform and each NLoS path
/// carries an excess delay that rotates its phase across subcarriers.
/// All distances here are synthetic: nothing is ray traced.
#[derive(Debug, Clone, PartialEq)]
pub struct PathGenerator {
    pub n_paths: usize,
    /// (start, width) of the azimuth sector, radians.
    pub azimuth_sector: (f64, f64),
    /// (start, width) of the elevation sector, radians.
    pub elevation_sector: (f64, f64),
    pub distance_m: f64,
    pub nlos_attenuation_db: (f64, f64),
    pub max_excess_delay_s: f64,
}

impl Default for PathGenerator {
    fn default() -> Self {
        Self {
            n_paths: 5,
            azimuth_sector: (-PI / 2.0, PI),
            elevation_sector: (0.0, PI),
            distance_m: 40.0,
            nlos_attenuation_db: (5.0, 15.0),
            max_excess_delay_s: 50e-9,
        }
    }
}

impl PathGenerator {
    pub fn with_paths(mut self, n_paths: usize) -> Self {
        self.n_paths = n_paths;
        self
    }

    pub fn with_distance(mut self, distance_m: f64) -> Self {
        self.distance_m = distance_m;
        self
    }

    /// Line-of-sight amplitude for the configured distance.
    pub fn los_amplitude(&self, band: &BandConfig) -> f64 {
        band.center_wavelength() / (4.0 * PI * self.distance_m)
    }

    pub fn generate(&self, band: &BandConfig, seed: u64) -> PathSet {
        assert!(self.n_paths >= 1, "at least one path is required");
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let los = self.los_amplitude(band);
        let fc = band.center_frequency();
        let mut paths = Vec::with_capacity(self.n_paths);
        for i in 0..self.n_paths {
            let azimuth_dod = sector_draw(&mut rng, self.azimuth_sector);
            let elevation_dod = sector_draw(&mut rng, self.elevation_sector);
            let azimuth_doa = sector_draw(&mut rng, self.azimuth_sector);
            let elevation_doa = sector_draw(&mut rng, self.elevation_sector);
            let (amplitude, delay) = if i == 0 {
                (los, 0.0)
            } else {
                let (lo, hi) = self.nlos_attenuation_db;
                let loss_db = lo + (hi - lo) * rng.random::<f64>();
                (
                    los * libm::pow(10.0, -loss_db / 20.0),
                    self.max_excess_delay_s * rng.random::<f64>(),
                )
            };
            let phase0 = TAU * rng.random::<f64>();
            let gains = band
                .subcarrier_frequencies()
                .iter()
                .map(|&f| Complex64::from_polar(amplitude, phase0 - TAU * (f - fc) * delay))
                .collect();
            paths.push(Path {
                azimuth_dod,
                elevation_dod,
                azimuth_doa,
                elevation_doa,
                gains,
            });
        }
        PathSet::new(paths).expect("generated paths satisfy invariants")
    }
}

fn sector_draw(rng: &mut ChaCha8Rng, (start, width): (f64, f64)) -> f64 {
    wrap_angle(start + width * rng.random::<f64>())
}

/// Maps an angle into [0, 2π).
pub(crate) fn wrap_angle(x: f64) -> f64 {
    let mut r = x % TAU;
    if r < 0.0 {
        r += TAU;
    }
    if r >= TAU {
        0.0
    } else {
        r
    }
}
