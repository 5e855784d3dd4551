//! JSON documents for channels, beamformers and power models.

use std::fs;
use std::path::Path as FsPath;

use dsfps_core::channel::{synthesize_channel, ArrayGeometry, BandConfig, ChannelRealization, Path, PathSet};
use dsfps_core::design::{Beamformer, FpsBank, SwitchMatrix};
use dsfps_core::metrics::PowerModel;
use dsfps_core::numerics::ComplexMatrix;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{config_error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BandJson {
    pub center_hz: f64,
    pub subcarriers_hz: Vec<f64>,
    pub noise_mw: Vec<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrayJson {
    #[serde(rename = "L")]
    pub l: usize,
    #[serde(rename = "W")]
    pub w: usize,
    pub spacing_m: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PathJson {
    pub az_dod_rad: f64,
    pub el_dod_rad: f64,
    pub az_doa_rad: f64,
    pub el_doa_rad: f64,
    pub gains: Vec<[f64; 2]>,
}

/// A path set together with the band and both array geometries.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChannelFile {
    pub band: BandJson,
    pub tx: ArrayJson,
    pub rx: ArrayJson,
    pub paths: Vec<PathJson>,
}

impl ChannelFile {
    pub fn from_parts(paths: &PathSet, tx: &ArrayGeometry, rx: &ArrayGeometry, band: &BandConfig) -> Self {
        let array = |g: &ArrayGeometry| ArrayJson {
            l: g.len_y(),
            w: g.len_z(),
            spacing_m: g.spacing(),
        };
        Self {
            band: BandJson {
                center_hz: band.center_frequency(),
                subcarriers_hz: band.subcarrier_frequencies().to_vec(),
                noise_mw: band.noise_power().to_vec(),
            },
            tx: array(tx),
            rx: array(rx),
            paths: paths
                .paths()
                .iter()
                .map(|p| PathJson {
                    az_dod_rad: p.azimuth_dod,
                    el_dod_rad: p.elevation_dod,
                    az_doa_rad: p.azimuth_doa,
                    el_doa_rad: p.elevation_doa,
                    gains: p.gains.iter().map(|g| [g.re, g.im]).collect(),
                })
                .collect(),
        }
    }

    /// Validated core types: path set, TX geometry, RX geometry, band.
    pub fn to_parts(&self) -> Result<(PathSet, ArrayGeometry, ArrayGeometry, BandConfig)> {
        let band = BandConfig::new(
            self.band.center_hz,
            self.band.subcarriers_hz.clone(),
            self.band.noise_mw.clone(),
        )?;
        let tx = ArrayGeometry::new(self.tx.l, self.tx.w, self.tx.spacing_m)?;
        let rx = ArrayGeometry::new(self.rx.l, self.rx.w, self.rx.spacing_m)?;
        let paths = PathSet::new(
            self.paths
                .iter()
                .map(|p| Path {
                    azimuth_dod: p.az_dod_rad,
                    elevation_dod: p.el_dod_rad,
                    azimuth_doa: p.az_doa_rad,
                    elevation_doa: p.el_doa_rad,
                    gains: p.gains.iter().map(|g| Complex64::new(g[0], g[1])).collect(),
                })
                .collect(),
        )?;
        Ok((paths, tx, rx, band))
    }

    pub fn realize(&self) -> Result<ChannelRealization> {
        let (paths, tx, rx, band) = self.to_parts()?;
        Ok(synthesize_channel(&paths, &tx, &rx, &band)?)
    }
}

pub fn load_channel(path: impl AsRef<FsPath>) -> Result<ChannelFile> {
    let file: ChannelFile = serde_json::from_str(&fs::read_to_string(path)?)?;
    file.to_parts()?;
    Ok(file)
}

pub fn save_channel(file: &ChannelFile, path: impl AsRef<FsPath>) -> Result<()> {
    fs::write(path, serde_json::to_string_pretty(file)?)?;
    Ok(())
}

/// Serialized precoder: switch selection, bank shape, `D[k]` as nested
/// `[re, im]` rows, and the power budget.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BeamformerFile {
    pub selection: Vec<usize>,
    pub rf_chains: usize,
    pub phases_q: usize,
    pub d_matrices: Vec<Vec<Vec<[f64; 2]>>>,
    pub rho_mw: f64,
}

impl From<&Beamformer> for BeamformerFile {
    fn from(bf: &Beamformer) -> Self {
        Self {
            selection: bf.switches.selection().to_vec(),
            rf_chains: bf.bank.rf_chains(),
            phases_q: bf.bank.fps_per_chain(),
            d_matrices: bf
                .digital
                .iter()
                .map(|d| {
                    (0..d.rows())
                        .map(|i| d.row(i).iter().map(|z| [z.re, z.im]).collect())
                        .collect()
                })
                .collect(),
            rho_mw: bf.transmit_power,
        }
    }
}

impl BeamformerFile {
    pub fn to_beamformer(&self) -> Result<Beamformer> {
        let bank = FpsBank::new(self.rf_chains, self.phases_q)?;
        let switches = SwitchMatrix::new(self.selection.clone(), &bank)?;
        let digital = self
            .d_matrices
            .iter()
            .map(|rows| {
                let cols = rows.first().map_or(0, Vec::len);
                if rows.iter().any(|r| r.len() != cols) {
                    return Err(config_error("ragged digital matrix"));
                }
                let data = rows.iter().flatten().map(|z| Complex64::new(z[0], z[1])).collect();
                Ok(ComplexMatrix::new(rows.len(), cols, data)?)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Beamformer::new(bank, switches, digital, self.rho_mw)?)
    }
}

/// JSON mirror of [`PowerModel`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PowerModelJson {
    pub p_bb: f64,
    pub p_dac: f64,
    pub p_adc: f64,
    pub p_rf: f64,
    pub p_pa: f64,
    pub p_lna: f64,
    pub p_sw: f64,
    pub p_ps_3bit: f64,
    pub p_ps_2bit: f64,
    pub p_ps_1bit: f64,
    pub p_fps: f64,
}

impl From<PowerModel> for PowerModelJson {
    fn from(m: PowerModel) -> Self {
        Self {
            p_bb: m.p_bb,
            p_dac: m.p_dac,
            p_adc: m.p_adc,
            p_rf: m.p_rf,
            p_pa: m.p_pa,
            p_lna: m.p_lna,
            p_sw: m.p_sw,
            p_ps_3bit: m.p_ps_3bit,
            p_ps_2bit: m.p_ps_2bit,
            p_ps_1bit: m.p_ps_1bit,
            p_fps: m.p_fps,
        }
    }
}

impl From<PowerModelJson> for PowerModel {
    fn from(m: PowerModelJson) -> Self {
        Self {
            p_bb: m.p_bb,
            p_dac: m.p_dac,
            p_adc: m.p_adc,
            p_rf: m.p_rf,
            p_pa: m.p_pa,
            p_lna: m.p_lna,
            p_sw: m.p_sw,
            p_ps_3bit: m.p_ps_3bit,
            p_ps_2bit: m.p_ps_2bit,
            p_ps_1bit: m.p_ps_1bit,
            p_fps: m.p_fps,
        }
    }
}

/// Resolves a preset name (`thz-typical`, `thz-low-cost`) or a path to
/// a JSON power model.
pub fn load_power_model(name_or_path: &str) -> Result<PowerModel> {
    if let Some(model) = PowerModel::preset(name_or_path) {
        return Ok(model);
    }
    let text = fs::read_to_string(name_or_path)
        .map_err(|e| config_error(format!("unknown power model `{name_or_path}`: {e}")))?;
    let model: PowerModel = serde_json::from_str::<PowerModelJson>(&text)?.into();
    model.validate()?;
    Ok(model)
}
