use alloc::vec::Vec;

use num_complex::Complex64;

use super::matrix::ComplexMatrix;

/// Rank-revealing thin QR by modified Gram-Schmidt with one
/// re-orthogonalization pass: `A = Q·R` with `Q` having orthonormal columns.
///
/// Columns whose residual falls below `1e-12·‖A‖_F` are dropped from `Q`,
/// so `Q` has `rank(A)` columns (at least one) and `R` is `rank × cols`.
pub fn orthonormal_factor(a: &ComplexMatrix) -> (ComplexMatrix, ComplexMatrix) {
    let (rows, cols) = a.shape();
    let threshold = 1e-12 * a.frobenius_norm();
    let mut q_cols: Vec<Vec<Complex64>> = Vec::new();
    let mut r_rows: Vec<Vec<Complex64>> = Vec::new();
    for j in 0..cols {
        let mut w = a.column(j);
        let mut coeffs = alloc::vec![Complex64::new(0.0, 0.0); q_cols.len()];
        for _ in 0..2 {
            for (idx, q) in q_cols.iter().enumerate() {
                let proj: Complex64 = q.iter().zip(&w).map(|(x, y)| x.conj() * y).sum();
                coeffs[idx] += proj;
                for (y, x) in w.iter_mut().zip(q) {
                    *y -= proj * x;
                }
            }
        }
        for (row, c) in r_rows.iter_mut().zip(&coeffs) {
            row[j] = *c;
        }
        let norm = libm::sqrt(w.iter().map(Complex64::norm_sqr).sum());
        if norm > threshold && norm > 0.0 {
            let mut r_row = alloc::vec![Complex64::new(0.0, 0.0); cols];
            r_row[j] = Complex64::new(norm, 0.0);
            r_rows.push(r_row);
            q_cols.push(w.into_iter().map(|x| x / norm).collect());
        }
    }
    if q_cols.is_empty() {
        let mut e = alloc::vec![Complex64::new(0.0, 0.0); rows];
        e[0] = Complex64::new(1.0, 0.0);
        q_cols.push(e);
        r_rows.push(alloc::vec![Complex64::new(0.0, 0.0); cols]);
    }
    let q = ComplexMatrix::from_columns(&q_cols).expect("finite factor");
    let r_data: Vec<Complex64> = r_rows.into_iter().flatten().collect();
    let r = ComplexMatrix::new(q.cols(), cols, r_data).expect("finite factor");
    (q, r)
}
