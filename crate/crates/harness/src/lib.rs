//! Experiment harness for DS-FPS hybrid beamforming: JSON channel and
//! beamformer files, seeded sweeps with CSV/JSON output, and a wall-time
//! scaling probe.

pub mod error;
pub mod experiment;
pub mod formats;
pub mod probe;

pub use error::{HarnessError, Result};
pub use experiment::{emit, run_experiment, Algorithm, ExperimentConfig, OutputFormat, ResultRecord, Sweep};
pub use probe::{scaling_probe, ScalingRow};
