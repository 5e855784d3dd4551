use alloc::vec::Vec;

use num_complex::Complex64;

use super::matrix::ComplexMatrix;
use crate::error::{mismatch, Error, Result};

/// LU factorization with partial pivoting of a square complex matrix.
#[derive(Debug, Clone)]
pub struct Lu {
    n: usize,
    // Packed L (unit lower, below diagonal) and U (upper, with diagonal).
    lu: Vec<Complex64>,
    perm: Vec<usize>,
    swaps: usize,
}

impl Lu {
    pub fn factor(m: &ComplexMatrix) -> Result<Self> {
        let (n, cols) = m.shape();
        if n != cols {
            return Err(mismatch!("LU of a non-square {n}x{cols} matrix"));
        }
        let mut lu = m.as_slice().to_vec();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut swaps = 0;
        for k in 0..n {
            let (pivot, best) =
                (k..n)
                    .map(|i| (i, lu[i * n + k].norm()))
                    .fold((k, -1.0), |acc, x| if x.1 > acc.1 { x } else { acc });
            if best == 0.0 {
                return Err(Error::Singular);
            }
            if pivot != k {
                for j in 0..n {
                    lu.swap(k * n + j, pivot * n + j);
                }
                perm.swap(k, pivot);
                swaps += 1;
            }
            let d = lu[k * n + k];
            for i in (k + 1)..n {
                let f = lu[i * n + k] / d;
                lu[i * n + k] = f;
                for j in (k + 1)..n {
                    let u = lu[k * n + j];
                    lu[i * n + j] -= f * u;
                }
            }
        }
        Ok(Self { n, lu, perm, swaps })
    }

    pub fn determinant(&self) -> Complex64 {
        let mut det = if self.swaps.is_multiple_of(2) {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(-1.0, 0.0)
        };
        for k in 0..self.n {
            det *= self.lu[k * self.n + k];
        }
        det
    }

    /// `log2 |det|`, accumulated per pivot to avoid overflow.
    pub fn log2_abs_det(&self) -> f64 {
        (0..self.n).map(|k| libm::log2(self.lu[k * self.n + k].norm())).sum()
    }

    /// Solves `A X = B` for every column of `B`.
    pub fn solve(&self, b: &ComplexMatrix) -> Result<ComplexMatrix> {
        let n = self.n;
        if b.rows() != n {
            return Err(mismatch!("right-hand side has {} rows, system has {n}", b.rows()));
        }
        let m = b.cols();
        let mut x = ComplexMatrix::from_fn(n, m, |i, j| b[(self.perm[i], j)]);
        for j in 0..m {
            for i in 0..n {
                let mut acc = x[(i, j)];
                for k in 0..i {
                    acc -= self.lu[i * n + k] * x[(k, j)];
                }
                x[(i, j)] = acc;
            }
            for i in (0..n).rev() {
                let mut acc = x[(i, j)];
                for k in (i + 1)..n {
                    acc -= self.lu[i * n + k] * x[(k, j)];
                }
                x[(i, j)] = acc / self.lu[i * n + i];
            }
        }
        Ok(x)
    }
}

/// `log2 det` of a Hermitian positive-definite matrix.
pub fn log2_det_hpd(m: &ComplexMatrix) -> Result<f64> {
    Ok(Lu::factor(m)?.log2_abs_det())
}
