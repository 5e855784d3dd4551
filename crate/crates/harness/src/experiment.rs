//! Seeded parameter sweeps: configuration, per-trial execution and output.

use std::fs::File;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use dsfps_core::channel::{
    corrupt_csi, partial_csi_tx, synthesize_channel, ArrayGeometry, BandConfig, ChannelRealization, PathGenerator,
};
use dsfps_core::design::{
    brute_force_oracle, configuration_count, fully_digital_baseline, rbr_from_input, rsd_from_input, Beamformer,
    DesignConfig, DesignInput, ORACLE_LIMIT,
};
use dsfps_core::metrics::{
    active_fps_count, energy_efficiency, receive_power, transmit_power, ArchitectureSpec, PowerModel, SpectralEvaluator,
};
use dsfps_core::units::dbm_to_mw;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{config_error, Result};
use crate::formats::{load_channel, load_power_model, ChannelFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    Rsd,
    Rbr,
    Oracle,
    FullyDigital,
}

impl Algorithm {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "rsd" => Ok(Self::Rsd),
            "rbr" => Ok(Self::Rbr),
            "oracle" => Ok(Self::Oracle),
            "fully_digital" => Ok(Self::FullyDigital),
            other => Err(config_error(format!("unknown algorithm `{other}`"))),
        }
    }
}

/// Which parameter a sweep varies, with its values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sweep {
    TransmitPowerDbm(Vec<f64>),
    NAntennas(Vec<usize>),
    FpsTotal(Vec<usize>),
    CsiAccuracy(Vec<f64>),
}

impl Sweep {
    pub fn len(&self) -> usize {
        match self {
            Sweep::TransmitPowerDbm(v) | Sweep::CsiAccuracy(v) => v.len(),
            Sweep::NAntennas(v) | Sweep::FpsTotal(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn value(&self, i: usize) -> f64 {
        match self {
            Sweep::TransmitPowerDbm(v) | Sweep::CsiAccuracy(v) => v[i],
            Sweep::NAntennas(v) | Sweep::FpsTotal(v) => v[i] as f64,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CsiMode {
    #[default]
    Partial,
    Full,
}

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum ChannelSource {
    /// Fresh random path set per trial.
    #[default]
    Generator,
    /// One fixed channel for every trial.
    File { path: PathBuf },
}

/// Synthetic scenario used by the generator source.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Scenario {
    pub n_t: usize,
    pub n_r: usize,
    pub center_hz: f64,
    pub bandwidth_hz: f64,
    pub subcarriers: usize,
    pub noise_dbm: f64,
    pub n_paths: usize,
    /// Synthetic distance proxy for the LoS amplitude, metres.
    pub distance_m: f64,
}

impl Default for Scenario {
    fn default() -> Self {
        Self {
            n_t: 64,
            n_r: 64,
            center_hz: 3e11,
            bandwidth_hz: 5e9,
            subcarriers: 10,
            noise_dbm: -87.0,
            n_paths: 5,
            distance_m: 40.0,
        }
    }
}

impl Scenario {
    pub fn band(&self) -> Result<BandConfig> {
        Ok(BandConfig::uniform(
            self.center_hz,
            self.bandwidth_hz,
            self.subcarriers,
            dbm_to_mw(self.noise_dbm),
        )?)
    }

    pub fn channel(&self, seed: u64) -> Result<ChannelRealization> {
        let band = self.band()?;
        let tx = ArrayGeometry::square_ish(self.n_t, self.center_hz)?;
        let rx = ArrayGeometry::square_ish(self.n_r, self.center_hz)?;
        let paths = PathGenerator::default()
            .with_paths(self.n_paths)
            .with_distance(self.distance_m)
            .generate(&band, seed);
        Ok(synthesize_channel(&paths, &tx, &rx, &band)?)
    }
}

/// Digital/analog design parameters; power given in dBm at this boundary.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct DesignSection {
    pub n_streams: usize,
    pub n_rf: usize,
    pub fps_per_chain: usize,
    pub transmit_power_dbm: f64,
    pub rbr_max_iters: usize,
    pub rbr_rel_tol: f64,
}

impl Default for DesignSection {
    fn default() -> Self {
        let d = DesignConfig::default();
        Self {
            n_streams: d.n_streams,
            n_rf: d.n_rf,
            fps_per_chain: d.fps_per_chain,
            transmit_power_dbm: 20.0,
            rbr_max_iters: d.rbr_max_iters,
            rbr_rel_tol: d.rbr_rel_tol,
        }
    }
}

impl DesignSection {
    fn to_config(&self, seed: u64) -> DesignConfig {
        DesignConfig {
            n_streams: self.n_streams,
            n_rf: self.n_rf,
            fps_per_chain: self.fps_per_chain,
            transmit_power_mw: dbm_to_mw(self.transmit_power_dbm),
            rbr_max_iters: self.rbr_max_iters,
            rbr_rel_tol: self.rbr_rel_tol,
            seed,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OutputSpec {
    pub path: PathBuf,
    #[serde(default)]
    pub format: OutputFormat,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    #[serde(default)]
    pub channel: ChannelSource,
    #[serde(default)]
    pub scenario: Scenario,
    #[serde(default)]
    pub design: DesignSection,
    pub sweep: Sweep,
    pub algorithms: Vec<Algorithm>,
    #[serde(default = "one")]
    pub trials: usize,
    #[serde(default)]
    pub master_seed: u64,
    #[serde(default)]
    pub csi: CsiMode,
    #[serde(default = "unit")]
    pub csi_accuracy: f64,
    #[serde(default = "default_power_model")]
    pub power_model: String,
    #[serde(default)]
    pub output: Option<OutputSpec>,
}

fn one() -> usize {
    1
}

fn unit() -> f64 {
    1.0
}

fn default_power_model() -> String {
    "thz-typical".to_owned()
}

impl ExperimentConfig {
    /// Config with default scenario and design for the given sweep.
    pub fn new(sweep: Sweep, algorithms: Vec<Algorithm>) -> Self {
        Self {
            channel: ChannelSource::default(),
            scenario: Scenario::default(),
            design: DesignSection::default(),
            sweep,
            algorithms,
            trials: 1,
            master_seed: 0,
            csi: CsiMode::default(),
            csi_accuracy: 1.0,
            power_model: default_power_model(),
            output: None,
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    /// Checks every sweep point, including the oracle size guard.
    pub fn validate(&self) -> Result<()> {
        if self.sweep.is_empty() {
            return Err(config_error("sweep list is empty"));
        }
        if self.trials == 0 {
            return Err(config_error("trials must be at least 1"));
        }
        if self.algorithms.is_empty() {
            return Err(config_error("no algorithms selected"));
        }
        if !(0.0..=1.0).contains(&self.csi_accuracy) {
            return Err(config_error("csi_accuracy must lie in [0, 1]"));
        }
        let fixed = match &self.channel {
            ChannelSource::File { path } => Some(load_channel(path)?),
            ChannelSource::Generator => None,
        };
        if fixed.is_some() && matches!(self.sweep, Sweep::NAntennas(_)) {
            return Err(config_error("an antenna sweep needs the generator channel source"));
        }
        if self.csi == CsiMode::Full && (matches!(self.sweep, Sweep::CsiAccuracy(_)) || self.csi_accuracy != 1.0) {
            return Err(config_error("CSI accuracy only applies to partial CSI"));
        }
        load_power_model(&self.power_model)?;
        for i in 0..self.sweep.len() {
            let point = self.point(i)?;
            point.design.to_config(0).validate()?;
            if !(0.0..=1.0).contains(&point.accuracy) {
                return Err(config_error("csi_accuracy must lie in [0, 1]"));
            }
            if self.algorithms.contains(&Algorithm::Oracle) {
                let n_t = match &fixed {
                    Some(f) => f.tx.l * f.tx.w,
                    None => point.scenario.n_t,
                };
                let count = configuration_count(n_t, point.design.n_rf * point.design.fps_per_chain);
                if count > ORACLE_LIMIT {
                    return Err(config_error(format!(
                        "oracle would enumerate {count} configurations (limit {ORACLE_LIMIT})"
                    )));
                }
            }
        }
        Ok(())
    }

    fn point(&self, i: usize) -> Result<Point> {
        let mut scenario = self.scenario.clone();
        let mut design = self.design.clone();
        let mut accuracy = self.csi_accuracy;
        match &self.sweep {
            Sweep::TransmitPowerDbm(v) => design.transmit_power_dbm = v[i],
            Sweep::NAntennas(v) => {
                scenario.n_t = v[i];
                scenario.n_r = v[i];
            }
            Sweep::FpsTotal(v) => {
                if v[i] == 0 || v[i] % design.n_rf != 0 {
                    return Err(config_error(format!(
                        "fps_total {} is not a positive multiple of {} RF chains",
                        v[i], design.n_rf
                    )));
                }
                design.fps_per_chain = v[i] / design.n_rf;
            }
            Sweep::CsiAccuracy(v) => accuracy = v[i],
        }
        Ok(Point {
            axis: self.sweep.value(i),
            scenario,
            design,
            accuracy,
        })
    }
}

struct Point {
    axis: f64,
    scenario: Scenario,
    design: DesignSection,
    accuracy: f64,
}

/// One (axis value, algorithm, trial) outcome.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResultRecord {
    pub axis: f64,
    pub algorithm: Algorithm,
    pub seed: u64,
    pub se_bits: f64,
    pub p_tx_mw: f64,
    pub p_rx_mw: f64,
    pub ee: f64,
    pub iters: usize,
    pub wall_ms: f64,
}

/// Seed of trial `trial`: first word of the ChaCha stream `trial` under
/// `master`, so trials are independent of scheduling.
pub fn trial_seed(master: u64, trial: u64) -> u64 {
    let mut rng = ChaCha8Rng::seed_from_u64(master);
    rng.set_stream(trial);
    rng.next_u64()
}

/// Runs every sweep point × trial × algorithm, in parallel, and returns the
/// records sorted by axis value, algorithm and seed.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<Vec<ResultRecord>> {
    cfg.validate()?;
    let model = load_power_model(&cfg.power_model)?;
    let fixed: Option<ChannelFile> = match &cfg.channel {
        ChannelSource::File { path } => Some(load_channel(path)?),
        ChannelSource::Generator => None,
    };
    let points = (0..cfg.sweep.len()).map(|i| cfg.point(i)).collect::<Result<Vec<_>>>()?;
    let tasks: Vec<(usize, u64)> = (0..points.len())
        .flat_map(|p| (0..cfg.trials as u64).map(move |t| (p, t)))
        .collect();

    let mut records: Vec<ResultRecord> = tasks
        .par_iter()
        .map(|&(p, t)| run_trial(cfg, &points[p], fixed.as_ref(), &model, trial_seed(cfg.master_seed, t)))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect();
    records.sort_by(|a, b| {
        a.axis
            .total_cmp(&b.axis)
            .then(a.algorithm.cmp(&b.algorithm))
            .then(a.seed.cmp(&b.seed))
    });
    Ok(records)
}

fn run_trial(
    cfg: &ExperimentConfig,
    point: &Point,
    fixed: Option<&ChannelFile>,
    model: &PowerModel,
    seed: u64,
) -> Result<Vec<ResultRecord>> {
    let channel = match fixed {
        Some(file) => file.realize()?,
        None => point.scenario.channel(seed)?,
    };
    let design = point.design.to_config(seed);
    let input = match cfg.csi {
        CsiMode::Full => DesignInput::from_channel(&channel)?,
        CsiMode::Partial => {
            let csi = corrupt_csi(&partial_csi_tx(&channel), point.accuracy, seed ^ 0x9e37_79b9_7f4a_7c15)?;
            DesignInput::from_partial_csi(&csi, &channel.band, channel.n_r())?
        }
    };
    let evaluator = SpectralEvaluator::new(&channel, design.n_streams)?;

    let mut out = Vec::with_capacity(cfg.algorithms.len());
    for &algorithm in &cfg.algorithms {
        let start = Instant::now();
        let (se, iters, switches) = match algorithm {
            Algorithm::FullyDigital => (
                fully_digital_baseline(&channel, design.n_streams, design.transmit_power_mw)?,
                0,
                None,
            ),
            _ => {
                let (bf, iters): (Beamformer, usize) = match algorithm {
                    Algorithm::Rsd => (rsd_from_input(&input, &design)?, 0),
                    Algorithm::Rbr => {
                        let o = rbr_from_input(&input, &design)?;
                        (o.beamformer, o.iterations)
                    }
                    _ => (brute_force_oracle(&input, &design)?.beamformer, 0),
                };
                (evaluator.evaluate(&bf)?, iters, Some(bf.switches))
            }
        };
        let wall_ms = start.elapsed().as_secs_f64() * 1e3;
        let (p_tx, p_rx) = match switches {
            Some(s) => {
                let spec =
                    ArchitectureSpec::ds_fps(channel.n_t(), design.n_rf, design.fps_per_chain, active_fps_count(&s));
                (
                    transmit_power(&spec, model, design.transmit_power_mw)?,
                    receive_power(&spec, model)?,
                )
            }
            None => fully_digital_power(model, channel.n_t(), channel.n_r(), design.transmit_power_mw),
        };
        out.push(ResultRecord {
            axis: point.axis,
            algorithm,
            seed,
            se_bits: se,
            p_tx_mw: p_tx,
            p_rx_mw: p_rx,
            ee: energy_efficiency(se, p_tx, p_rx)?,
            iters,
            wall_ms,
        });
    }
    Ok(out)
}

/// One RF chain per antenna and no analog network on either side.
pub fn fully_digital_power(model: &PowerModel, n_t: usize, n_r: usize, rho: f64) -> (f64, f64) {
    let (t, r) = (n_t as f64, n_r as f64);
    (
        model.p_bb + (model.p_dac + model.p_rf + model.p_pa) * t + rho,
        model.p_bb + (model.p_adc + model.p_rf + model.p_lna) * r,
    )
}

pub const CSV_HEADER: [&str; 9] = [
    "axis",
    "algorithm",
    "seed",
    "se_bits",
    "p_tx_mw",
    "p_rx_mw",
    "ee",
    "iters",
    "wall_ms",
];

pub fn write_csv<W: Write>(records: &[ResultRecord], writer: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(writer);
    w.write_record(CSV_HEADER)?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_json<W: Write>(records: &[ResultRecord], mut writer: W) -> Result<()> {
    serde_json::to_writer_pretty(&mut writer, records)?;
    writer.write_all(b"\n")?;
    Ok(())
}

pub fn read_csv(text: &str) -> Result<Vec<ResultRecord>> {
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    Ok(rdr.deserialize().collect::<std::result::Result<_, _>>()?)
}

/// Writes `records` to `path`. Floats use shortest round-trip formatting,
/// so no digits are lost.
pub fn emit(records: &[ResultRecord], format: OutputFormat, path: impl AsRef<Path>) -> Result<()> {
    let file = std::io::BufWriter::new(File::create(path)?);
    match format {
        OutputFormat::Csv => write_csv(records, file),
        OutputFormat::Json => write_json(records, file),
    }
}
