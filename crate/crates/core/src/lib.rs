//! Dynamic-subarray hybrid beamforming with fixed phase shifters.
//!
//! Each transmit antenna picks one of `L_t·Q` fixed phase shifters through a
//! switch network, so the analog precoder is `S·F` with a one-hot-per-row
//! switch matrix `S` and a block-diagonal phase matrix `F`. This crate holds
//! the channel model, the two design algorithms (row-successive
//! decomposition and row-by-row alternating minimization), an exhaustive
//! oracle for small instances, and spectral/energy efficiency metrics.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
// `!(x > 0.0)` also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod channel;
pub mod design;
pub mod error;
pub mod metrics;
pub mod numerics;
pub mod units;

pub use error::{Error, Result};
