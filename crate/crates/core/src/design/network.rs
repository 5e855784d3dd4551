use alloc::vec::Vec;
use core::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{invalid, mismatch, Error, Result};
use crate::numerics::ComplexMatrix;

/// `L_t` RF chains, each feeding `Q` fixed phase shifters whose phases are
/// spread uniformly over [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FpsBank {
    rf_chains: usize,
    fps_per_chain: usize,
}

impl FpsBank {
    pub fn new(rf_chains: usize, fps_per_chain: usize) -> Result<Self> {
        if rf_chains == 0 || fps_per_chain == 0 {
            return Err(invalid!(
                "bank needs at least one RF chain and one phase shifter, got {rf_chains}x{fps_per_chain}"
            ));
        }
        Ok(Self {
            rf_chains,
            fps_per_chain,
        })
    }

    #[inline]
    pub fn rf_chains(&self) -> usize {
        self.rf_chains
    }

    #[inline]
    pub fn fps_per_chain(&self) -> usize {
        self.fps_per_chain
    }

    /// Total phase shifters `L_t·Q`, i.e. the number of switch positions.
    #[inline]
    pub fn size(&self) -> usize {
        self.rf_chains * self.fps_per_chain
    }

    /// Phase of shifter `q` within a chain: `2π·q/Q`.
    pub fn phase(&self, q: usize) -> f64 {
        TAU * q as f64 / self.fps_per_chain as f64
    }

    pub fn phases(&self) -> Vec<f64> {
        (0..self.fps_per_chain).map(|q| self.phase(q)).collect()
    }

    /// `e^{jΦ_q}` for every shifter of one chain.
    pub fn phase_vector(&self) -> Vec<Complex64> {
        (0..self.fps_per_chain)
            .map(|q| {
                let p = self.phase(q);
                Complex64::new(libm::cos(p), libm::sin(p))
            })
            .collect()
    }

    /// (RF chain, shifter within chain) behind switch position `index`.
    #[inline]
    pub fn locate(&self, index: usize) -> (usize, usize) {
        (index / self.fps_per_chain, index % self.fps_per_chain)
    }
}

/// Block-diagonal phase matrix `F = blkdiag(f, …, f)` of shape `L_t·Q × L_t`.
pub fn fps_phase_matrix(bank: &FpsBank) -> ComplexMatrix {
    let f = bank.phase_vector();
    let q = bank.fps_per_chain();
    ComplexMatrix::from_fn(bank.size(), bank.rf_chains(), |row, col| {
        if row / q == col {
            f[row % q]
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Switch network state: the phase shifter each antenna is connected to.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SwitchMatrix {
    selection: Vec<usize>,
}

impl SwitchMatrix {
    pub fn new(selection: Vec<usize>, bank: &FpsBank) -> Result<Self> {
        if selection.is_empty() {
            return Err(invalid!("switch network needs at least one antenna"));
        }
        if let Some((i, &s)) = selection.iter().enumerate().find(|(_, &s)| s >= bank.size()) {
            return Err(invalid!(
                "antenna {i} selects shifter {s}, bank only has {}",
                bank.size()
            ));
        }
        Ok(Self { selection })
    }

    pub(crate) fn new_unchecked(selection: Vec<usize>) -> Self {
        Self { selection }
    }

    pub fn selection(&self) -> &[usize] {
        &self.selection
    }

    pub(crate) fn selection_mut(&mut self) -> &mut [usize] {
        &mut self.selection
    }

    pub fn n_antennas(&self) -> usize {
        self.selection.len()
    }

    /// Dense binary `S` (`N_t × L_t·Q`) with one 1 per row.
    pub fn materialize(&self, bank: &FpsBank) -> ComplexMatrix {
        ComplexMatrix::from_fn(self.selection.len(), bank.size(), |i, l| {
            if self.selection[i] == l {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }
}

/// Analog precoder `S·F` (`N_t × L_t`) without forming `S`: row `i` is row
/// `selection[i]` of `F`.
pub fn apply_analog(switches: &SwitchMatrix, bank: &FpsBank) -> Result<ComplexMatrix> {
    if let Some(&bad) = switches.selection().iter().find(|&&s| s >= bank.size()) {
        return Err(invalid!("selection {bad} out of range for a bank of {}", bank.size()));
    }
    let f = bank.phase_vector();
    let mut out = ComplexMatrix::zeros(switches.n_antennas(), bank.rf_chains());
    for (i, &s) in switches.selection().iter().enumerate() {
        let (chain, q) = bank.locate(s);
        out[(i, chain)] = f[q];
    }
    Ok(out)
}

/// Position of the largest score, lowest index on ties.
pub fn switch_row_update(scores: &[f64]) -> Result<usize> {
    if scores.is_empty() {
        return Err(invalid!("score vector is empty"));
    }
    if scores.iter().any(|s| !s.is_finite()) {
        return Err(Error::NonFinite("switch scores"));
    }
    Ok(argmax_first(scores))
}

pub(crate) fn argmax_first(scores: &[f64]) -> usize {
    let mut best = 0;
    for (i, &s) in scores.iter().enumerate().skip(1) {
        if s > scores[best] {
            best = i;
        }
    }
    best
}

/// `P^H · S·F` (`N_s × L_t`) accumulated row by row.
pub(crate) fn project_onto_analog(p: &ComplexMatrix, switches: &SwitchMatrix, bank: &FpsBank) -> Result<ComplexMatrix> {
    if p.rows() != switches.n_antennas() {
        return Err(mismatch!(
            "target has {} rows, switch network has {} antennas",
            p.rows(),
            switches.n_antennas()
        ));
    }
    let f = bank.phase_vector();
    let mut out = ComplexMatrix::zeros(p.cols(), bank.rf_chains());
    for (i, &s) in switches.selection().iter().enumerate() {
        let (chain, q) = bank.locate(s);
        for (st, z) in p.row(i).iter().enumerate() {
            out[(st, chain)] += z.conj() * f[q];
        }
    }
    Ok(out)
}

/// `G · S·F` for a row-major `G` with `N_t` columns.
pub(crate) fn left_apply_analog(g: &ComplexMatrix, switches: &SwitchMatrix, bank: &FpsBank) -> ComplexMatrix {
    let f = bank.phase_vector();
    let mut out = ComplexMatrix::zeros(g.rows(), bank.rf_chains());
    for (i, &s) in switches.selection().iter().enumerate() {
        let (chain, q) = bank.locate(s);
        let phase = f[q];
        for r in 0..g.rows() {
            out[(r, chain)] += g[(r, i)] * phase;
        }
    }
    out
}
