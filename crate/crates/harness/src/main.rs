use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dsfps::experiment::{
    emit, run_experiment, write_csv, write_json, Algorithm, ExperimentConfig, OutputFormat, Sweep,
};
use dsfps::formats::{save_channel, ChannelFile};
use dsfps::probe::scaling_probe;
use dsfps::{HarnessError, Result};
use dsfps_core::channel::{synthesize_channel, ArrayGeometry, PathGenerator};

#[derive(Parser)]
#[command(name = "dsfps", version, about = "DS-FPS hybrid beamforming experiments")]
struct Cli {
    /// Overrides the master seed of any experiment.
    #[arg(long, env = "DSFPS_SEED", global = true)]
    seed_override: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Csv => OutputFormat::Csv,
            Format::Json => OutputFormat::Json,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Axis {
    Rho,
    NAntennas,
    FpsTotal,
    CsiAccuracy,
}

#[derive(Subcommand)]
enum Command {
    /// Run an experiment described by a JSON config.
    Run {
        #[arg(long)]
        config: PathBuf,
        /// Output file; defaults to the config's output path, else stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum)]
        format: Option<Format>,
    },
    /// One-axis sweep on the default desk-scale scenario.
    Sweep {
        #[arg(long, value_enum)]
        axis: Axis,
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<f64>,
        #[arg(long, value_delimiter = ',', default_value = "rsd,rbr")]
        algorithms: Vec<String>,
        #[arg(long, default_value_t = 1)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Median design wall time against transmit array size.
    ProbeScaling {
        #[arg(long, value_delimiter = ',', default_value = "16,32,64,128")]
        nt: Vec<usize>,
        #[arg(long, default_value_t = 5)]
        trials: usize,
        /// Also time the successive-decision design.
        #[arg(long)]
        rsd: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Write a random path set to a channel file.
    GenChannel {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 5)]
        paths: usize,
        #[arg(long, default_value_t = 64)]
        n_t: usize,
        #[arg(long, default_value_t = 64)]
        n_r: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Run { config, out, format } => {
            let mut cfg = ExperimentConfig::load(config)?;
            if let Some(s) = cli.seed_override {
                cfg.master_seed = s;
            }
            let records = run_experiment(&cfg)?;
            let spec = cfg.output.clone();
            let format = format
                .map(OutputFormat::from)
                .or(spec.as_ref().map(|o| o.format))
                .unwrap_or_default();
            match out.or(spec.map(|o| o.path)) {
                Some(path) => emit(&records, format, path),
                None => to_stdout(&records, format),
            }
        }
        Command::Sweep {
            axis,
            values,
            algorithms,
            trials,
            seed,
            out,
            format,
        } => {
            let sweep = match axis {
                Axis::Rho => Sweep::TransmitPowerDbm(values),
                Axis::CsiAccuracy => Sweep::CsiAccuracy(values),
                Axis::NAntennas => Sweep::NAntennas(as_counts(&values)?),
                Axis::FpsTotal => Sweep::FpsTotal(as_counts(&values)?),
            };
            let algorithms = algorithms.iter().map(|a| Algorithm::parse(a)).collect::<Result<_>>()?;
            let mut cfg = ExperimentConfig::new(sweep, algorithms);
            cfg.trials = trials;
            cfg.master_seed = cli.seed_override.unwrap_or(seed);
            let records = run_experiment(&cfg)?;
            match out {
                Some(path) => emit(&records, format.into(), path),
                None => to_stdout(&records, format.into()),
            }
        }
        Command::ProbeScaling { nt, trials, rsd, seed } => {
            let scenario = Default::default();
            let design = dsfps_core::design::DesignConfig {
                seed: cli.seed_override.unwrap_or(seed),
                ..Default::default()
            };
            let rows = scaling_probe(&scenario, &design, &nt, trials, rsd)?;
            let mut w = csv::Writer::from_writer(std::io::stdout().lock());
            for row in &rows {
                w.serialize(row)?;
            }
            w.flush()?;
            Ok(())
        }
        Command::GenChannel {
            seed,
            paths,
            n_t,
            n_r,
            out,
        } => {
            let scenario = dsfps::experiment::Scenario {
                n_t,
                n_r,
                n_paths: paths,
                ..Default::default()
            };
            let band = scenario.band()?;
            let tx = ArrayGeometry::square_ish(n_t, scenario.center_hz)?;
            let rx = ArrayGeometry::square_ish(n_r, scenario.center_hz)?;
            let set = PathGenerator::default()
                .with_paths(paths)
                .with_distance(scenario.distance_m)
                .generate(&band, seed);
            synthesize_channel(&set, &tx, &rx, &band)?;
            save_channel(&ChannelFile::from_parts(&set, &tx, &rx, &band), out)
        }
    }
}

fn as_counts(values: &[f64]) -> Result<Vec<usize>> {
    values
        .iter()
        .map(|&v| {
            if v >= 1.0 && v.fract() == 0.0 {
                Ok(v as usize)
            } else {
                Err(HarnessError::Config(format!("expected a positive integer, got {v}")))
            }
        })
        .collect()
}

fn to_stdout(records: &[dsfps::ResultRecord], format: OutputFormat) -> Result<()> {
    let mut out = std::io::stdout().lock();
    match format {
        OutputFormat::Csv => write_csv(records, &mut out)?,
        OutputFormat::Json => write_json(records, &mut out)?,
    }
    out.flush()?;
    Ok(())
}
