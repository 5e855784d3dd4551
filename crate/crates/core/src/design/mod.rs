//! Switch/shifter network types and the hybrid precoder design algorithms.

mod baseline;
mod beamformer;
mod input;
mod network;
mod oracle;
mod procrustes;
mod rbr;
mod rsd;

pub use baseline::fully_digital_baseline;
pub use beamformer::{normalize_power, Beamformer, DesignConfig};
pub use input::DesignInput;
pub(crate) use network::left_apply_analog;
pub use network::{apply_analog, fps_phase_matrix, switch_row_update, FpsBank, SwitchMatrix};
pub use oracle::{brute_force_oracle, configuration_count, OracleOutcome, ORACLE_LIMIT};
pub use procrustes::procrustes_digital;
pub use rbr::{euclidean_objective, rbr_design, rbr_from_input, RbrOutcome};
pub use rsd::{rsd_design, rsd_from_input};
