#![allow(dead_code)]

use dsfps_core::numerics::{orthonormal_factor, ComplexMatrix};
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    ComplexMatrix::from_fn(rows, cols, |_, _| {
        let re: f64 = StandardNormal.sample(rng);
        let im: f64 = StandardNormal.sample(rng);
        Complex64::new(re, im)
    })
}

/// Random `rows × cols` matrix with orthonormal columns.
pub fn semi_unitary(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let (q, _) = orthonormal_factor(&gaussian(rows, cols, rng));
    q
}

/// Determinant by cofactor expansion along the first row.
pub fn cofactor_det(m: &[Vec<Complex64>]) -> Complex64 {
    let n = m.len();
    if n == 1 {
        return m[0][0];
    }
    let mut total = Complex64::new(0.0, 0.0);
    for j in 0..n {
        let minor: Vec<Vec<Complex64>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, z)| *z)
                    .collect()
            })
            .collect();
        let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
        total += m[0][j] * cofactor_det(&minor) * sign;
    }
    total
}

pub fn to_rows(m: &ComplexMatrix) -> Vec<Vec<Complex64>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// Water-filling rate `(1/K)·Σ log2(1 + p_i·g_i)` over all `modes` with
/// `Σ p_i = total`: the largest average rate any precoder can reach.
pub fn water_filling(modes: &[f64], total: f64, k_count: usize) -> f64 {
    let active: Vec<f64> = modes.iter().copied().filter(|g| *g > 0.0).collect();
    if active.is_empty() || total == 0.0 {
        return 0.0;
    }
    let used = |mu: f64| active.iter().map(|g| (mu - 1.0 / g).max(0.0)).sum::<f64>();
    let (mut lo, mut hi) = (0.0, total + active.iter().map(|g| 1.0 / g).fold(0.0, f64::max));
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if used(mid) > total {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    active
        .iter()
        .map(|g| (1.0 + (hi - 1.0 / g).max(0.0) * g).log2())
        .sum::<f64>()
        / k_count as f64
}
