//! One-sided (Hestenes) Jacobi SVD for complex matrices.
//!
//! The matrices this crate decomposes are small in at least one dimension
//! (path count, RF chains, streams), so an O(m·n²) Jacobi sweep is cheap and
//! gives singular values with high relative accuracy.

use alloc::vec::Vec;

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{invalid, Error, Result};

const MAX_SWEEPS: usize = 80;

/// Thin singular value decomposition `M = U · diag(s) · V^H`.
#[derive(Debug, Clone)]
pub struct Svd {
    /// Left singular vectors, one per column.
    pub u: ComplexMatrix,
    /// Singular values, non-negative and sorted descending.
    pub s: Vec<f64>,
    /// Right singular vectors, one per column.
    pub v: ComplexMatrix,
}

impl Svd {
    /// Number of singular values above `1e-12 × s_max`.
    pub fn rank(&self) -> usize {
        let Some(&largest) = self.s.first() else {
            return 0;
        };
        if largest == 0.0 {
            return 0;
        }
        self.s.iter().filter(|&&x| x > 1e-12 * largest).count()
    }
}

/// Top-`r` singular triplets of `m`.
///
/// `U` and `V` each have `r` orthonormal columns even when `m` has rank
/// below `r`; the extra columns are completed to an orthonormal set.
pub fn truncated_svd(m: &ComplexMatrix, r: usize) -> Result<Svd> {
    let (rows, cols) = m.shape();
    if r == 0 || r > rows.min(cols) {
        return Err(invalid!(
            "truncation rank {r} outside 1..={} for a {rows}x{cols} matrix",
            rows.min(cols)
        ));
    }
    if !m.is_finite() {
        return Err(Error::NonFinite("svd input"));
    }
    let full = thin_svd(m);
    Ok(Svd {
        u: full.u.leading_columns(r),
        s: full.s[..r].to_vec(),
        v: full.v.leading_columns(r),
    })
}

/// First `r` right singular vectors of `m`, allowing `r` up to `m.cols()`.
///
/// When `r` exceeds the row count the basis is completed with vectors from
/// the null space of `m`.
pub fn right_singular_basis(m: &ComplexMatrix, r: usize) -> Result<ComplexMatrix> {
    if r == 0 || r > m.cols() {
        return Err(invalid!(
            "requested {r} right singular vectors of a matrix with {} columns",
            m.cols()
        ));
    }
    let padded = m.pad_rows(r);
    Ok(truncated_svd(&padded, r)?.v)
}

/// Full thin SVD with `min(rows, cols)` components.
pub fn thin_svd(m: &ComplexMatrix) -> Svd {
    if m.rows() >= m.cols() {
        jacobi_tall(m)
    } else {
        // M^H = U' S V'^H  =>  M = V' S U'^H
        let t = jacobi_tall(&m.adjoint());
        Svd { u: t.v, s: t.s, v: t.u }
    }
}

/// Singular values only, descending.
pub fn singular_values(m: &ComplexMatrix) -> Vec<f64> {
    thin_svd(m).s
}

fn jacobi_tall(m: &ComplexMatrix) -> Svd {
    let (rows, cols) = m.shape();
    debug_assert!(rows >= cols);
    // Work column-major: cols vectors of length rows.
    let mut a: Vec<Vec<Complex64>> = (0..cols).map(|j| m.column(j)).collect();
    let mut v: Vec<Vec<Complex64>> = (0..cols)
        .map(|j| {
            let mut e = alloc::vec![Complex64::new(0.0, 0.0); cols];
            e[j] = Complex64::new(1.0, 0.0);
            e
        })
        .collect();

    let eps = f64::EPSILON;
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..cols {
            for q in (p + 1)..cols {
                let alpha: f64 = a[p].iter().map(Complex64::norm_sqr).sum();
                let beta: f64 = a[q].iter().map(Complex64::norm_sqr).sum();
                let gamma: Complex64 = a[p].iter().zip(&a[q]).map(|(x, y)| x.conj() * y).sum();
                let g = gamma.norm();
                if g == 0.0 || g <= eps * libm::sqrt(alpha * beta) {
                    continue;
                }
                rotated = true;
                // Align the phase of column q so the pair inner product is real.
                let phase = gamma.conj() / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + libm::sqrt(1.0 + zeta * zeta));
                let c = 1.0 / libm::sqrt(1.0 + t * t);
                let s = c * t;
                rotate(&mut a, p, q, phase, c, s);
                rotate(&mut v, p, q, phase, c, s);
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<(f64, usize)> = a
        .iter()
        .enumerate()
        .map(|(j, col)| (libm::sqrt(col.iter().map(Complex64::norm_sqr).sum()), j))
        .collect();
    // Stable sort keeps the original column order among equal values.
    order.sort_by(|x, y| y.0.partial_cmp(&x.0).unwrap_or(core::cmp::Ordering::Equal));

    let largest = order.first().map_or(0.0, |x| x.0);
    let floor = largest * 1e-14 + f64::MIN_POSITIVE;
    let mut s = Vec::with_capacity(cols);
    let mut u_cols: Vec<Vec<Complex64>> = Vec::with_capacity(cols);
    let mut v_cols: Vec<Vec<Complex64>> = Vec::with_capacity(cols);
    let mut pending = Vec::new();
    for &(sigma, j) in &order {
        // Canonical phase: the largest entry of each right vector is real positive.
        let lead = v[j]
            .iter()
            .fold((0.0, Complex64::new(1.0, 0.0)), |best, z| {
                if z.norm() > best.0 {
                    (z.norm(), *z)
                } else {
                    best
                }
            })
            .1;
        let phase = lead.conj() / lead.norm();
        v_cols.push(v[j].iter().map(|z| z * phase).collect());
        if sigma > floor {
            s.push(sigma);
            u_cols.push(a[j].iter().map(|z| z * phase / sigma).collect());
        } else {
            s.push(0.0);
            pending.push(u_cols.len());
            u_cols.push(Vec::new());
        }
    }
    complete_orthonormal(&mut u_cols, &pending, rows);

    Svd {
        u: ComplexMatrix::from_columns(&u_cols).expect("finite svd factors"),
        s,
        v: ComplexMatrix::from_columns(&v_cols).expect("finite svd factors"),
    }
}

fn rotate(cols: &mut [Vec<Complex64>], p: usize, q: usize, phase: Complex64, c: f64, s: f64) {
    let (left, right) = cols.split_at_mut(q);
    let cp = &mut left[p];
    let cq = &mut right[0];
    for (x, y) in cp.iter_mut().zip(cq.iter_mut()) {
        let xp = *x;
        let yq = *y * phase;
        *x = xp * c - yq * s;
        *y = xp * s + yq * c;
    }
}

/// Fills the columns listed in `pending` with unit vectors orthogonal to
/// every other column, using Gram-Schmidt over the standard basis.
fn complete_orthonormal(cols: &mut [Vec<Complex64>], pending: &[usize], dim: usize) {
    let mut candidate = 0usize;
    for &slot in pending {
        loop {
            assert!(candidate < dim, "cannot complete an orthonormal basis");
            let mut w = alloc::vec![Complex64::new(0.0, 0.0); dim];
            w[candidate] = Complex64::new(1.0, 0.0);
            candidate += 1;
            // Two passes of classical Gram-Schmidt for stability.
            for _ in 0..2 {
                for (k, other) in cols.iter().enumerate() {
                    if k == slot || other.is_empty() {
                        continue;
                    }
                    let proj: Complex64 = other.iter().zip(&w).map(|(o, x)| o.conj() * x).sum();
                    for (x, o) in w.iter_mut().zip(other) {
                        *x -= proj * o;
                    }
                }
            }
            let norm = libm::sqrt(w.iter().map(Complex64::norm_sqr).sum());
            if norm > 1e-6 {
                cols[slot] = w.into_iter().map(|x| x / norm).collect();
                break;
            }
        }
    }
}
