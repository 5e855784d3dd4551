use super::network::{project_onto_analog, FpsBank, SwitchMatrix};
use crate::error::{invalid, Result};
use crate::numerics::{thin_svd, ComplexMatrix};

/// Semi-unitary `D` (`L_t × N_s`) minimizing `‖P − S·F·D‖_F`.
///
/// With `P^H·S·F = U·Σ·V^H`, the minimizer is `V·U^H`. When `P^H·S·F` is
/// rank deficient the minimizer is not unique and one of them is returned.
pub fn procrustes_digital(p: &ComplexMatrix, switches: &SwitchMatrix, bank: &FpsBank) -> Result<ComplexMatrix> {
    if p.cols() == 0 || p.cols() > bank.rf_chains() {
        return Err(invalid!(
            "{} target columns cannot be served by {} RF chains",
            p.cols(),
            bank.rf_chains()
        ));
    }
    let cross = project_onto_analog(p, switches, bank)?;
    if !cross.is_finite() {
        return Err(crate::Error::NonFinite("procrustes input"));
    }
    let svd = thin_svd(&cross);
    svd.v.matmul(&svd.u.adjoint())
}
