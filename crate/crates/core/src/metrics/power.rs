use alloc::collections::BTreeSet;

use crate::design::SwitchMatrix;
use crate::error::{invalid, Result};

/// Per-component power draw in mW.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerModel {
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

impl PowerModel {
    /// Typical 0.3 THz component figures.
    pub fn thz_typical() -> Self {
        Self {
            p_bb: 200.0,
            p_dac: 110.0,
            p_adc: 158.6,
            p_rf: 43.0,
            p_pa: 49.0,
            p_lna: 53.0,
            p_sw: 9.0,
            p_ps_3bit: 52.0,
            p_ps_2bit: 39.0,
            p_ps_1bit: 26.0,
            p_fps: 16.8,
        }
    }

    /// Alternative figures with cheaper switches and shifters.
    pub fn thz_low_cost() -> Self {
        Self {
            p_bb: 243.0,
            p_dac: 110.0,
            p_adc: 200.0,
            p_rf: 43.0,
            p_pa: 16.0,
            p_lna: 30.0,
            p_sw: 5.0,
            p_ps_3bit: 50.0,
            p_ps_2bit: 20.0,
            p_ps_1bit: 10.0,
            p_fps: 6.8,
        }
    }

    /// Looks up a preset by its external name.
    pub fn preset(name: &str) -> Option<Self> {
        match name {
            "thz-typical" => Some(Self::thz_typical()),
            "thz-low-cost" => Some(Self::thz_low_cost()),
            _ => None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let all = [
            self.p_bb,
            self.p_dac,
            self.p_adc,
            self.p_rf,
            self.p_pa,
            self.p_lna,
            self.p_sw,
            self.p_ps_3bit,
            self.p_ps_2bit,
            self.p_ps_1bit,
            self.p_fps,
        ];
        if all.iter().any(|p| !(*p >= 0.0) || !p.is_finite()) {
            return Err(invalid!("component powers must be finite and non-negative"));
        }
        Ok(())
    }
}

impl Default for PowerModel {
    fn default() -> Self {
        Self::thz_typical()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Architecture {
    DsFps,
    FullyConnected,
    ArrayOfSubarrays,
    Dhb2Bit,
    Dhb1Bit,
    FpsGroupConnected,
    Spsf,
    Srps,
}

impl Architecture {
    pub const ALL: [Architecture; 8] = [
        Architecture::DsFps,
        Architecture::FullyConnected,
        Architecture::ArrayOfSubarrays,
        Architecture::Dhb2Bit,
        Architecture::Dhb1Bit,
        Architecture::FpsGroupConnected,
        Architecture::Spsf,
        Architecture::Srps,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Architecture::DsFps => "DS-FPS",
            Architecture::FullyConnected => "FC",
            Architecture::ArrayOfSubarrays => "AoSA",
            Architecture::Dhb2Bit => "DHB-2bit",
            Architecture::Dhb1Bit => "DHB-1bit",
            Architecture::FpsGroupConnected => "FPS-GC",
            Architecture::Spsf => "SPSF",
            Architecture::Srps => "SRPS",
        }
    }
}

/// Hardware counts for one architecture. Kind-specific fields are optional
/// and checked when a power figure is requested.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArchitectureSpec {
    pub kind: Architecture,
    pub n_t: usize,
    pub l_t: usize,
    pub q: Option<usize>,
    pub n_active_fps: Option<usize>,
    pub n_sw: Option<usize>,
    pub n_fps: Option<usize>,
    pub beta: Option<f64>,
}

impl ArchitectureSpec {
    /// Spec with only the common counts filled in.
    pub fn new(kind: Architecture, n_t: usize, l_t: usize) -> Self {
        Self {
            kind,
            n_t,
            l_t,
            q: None,
            n_active_fps: None,
            n_sw: None,
            n_fps: None,
            beta: None,
        }
    }

    pub fn ds_fps(n_t: usize, l_t: usize, q: usize, n_active_fps: usize) -> Self {
        Self {
            q: Some(q),
            n_active_fps: Some(n_active_fps),
            ..Self::new(Architecture::DsFps, n_t, l_t)
        }
    }

    pub fn fps_gc(n_t: usize, l_t: usize, n_sw: usize, n_fps: usize) -> Self {
        Self {
            n_sw: Some(n_sw),
            n_fps: Some(n_fps),
            ..Self::new(Architecture::FpsGroupConnected, n_t, l_t)
        }
    }

    pub fn with_beta(kind: Architecture, n_t: usize, l_t: usize, beta: f64) -> Self {
        Self {
            beta: Some(beta),
            ..Self::new(kind, n_t, l_t)
        }
    }

    fn validate(&self) -> Result<()> {
        if self.l_t == 0 || self.n_t == 0 {
            return Err(invalid!("antenna and RF chain counts must be positive"));
        }
        match self.kind {
            Architecture::DsFps => {
                let (Some(q), Some(active)) = (self.q, self.n_active_fps) else {
                    return Err(invalid!("DS-FPS needs q and n_active_fps"));
                };
                if active > self.l_t * q {
                    return Err(invalid!(
                        "{active} active shifters exceed the bank size {}",
                        self.l_t * q
                    ));
                }
            }
            Architecture::FpsGroupConnected => {
                if self.n_sw.is_none() || self.n_fps.is_none() {
                    return Err(invalid!("FPS-GC needs n_sw and n_fps"));
                }
            }
            Architecture::Spsf | Architecture::Srps => match self.beta {
                Some(b) if b >= 1.0 && b.is_finite() => {}
                Some(b) => return Err(invalid!("beta must be at least 1, got {b}")),
                None => return Err(invalid!("{} needs beta", self.kind.name())),
            },
            _ => {}
        }
        Ok(())
    }

    /// Active antenna count: `N_t/β` for the antenna-selection designs.
    fn active_antennas(&self) -> f64 {
        match self.kind {
            Architecture::Spsf | Architecture::Srps => self.n_t as f64 / self.beta.unwrap_or(1.0),
            _ => self.n_t as f64,
        }
    }

    fn analog_power(&self, m: &PowerModel) -> f64 {
        let n_t = self.n_t as f64;
        match self.kind {
            Architecture::DsFps => m.p_sw * n_t + m.p_fps * self.n_active_fps.unwrap_or(0) as f64,
            Architecture::FullyConnected => m.p_ps_3bit * n_t * self.l_t as f64,
            Architecture::ArrayOfSubarrays => m.p_ps_3bit * n_t,
            Architecture::Dhb2Bit => m.p_sw * n_t + m.p_ps_2bit * n_t,
            Architecture::Dhb1Bit => m.p_sw * n_t + m.p_ps_1bit * n_t,
            Architecture::FpsGroupConnected => {
                m.p_sw * self.n_sw.unwrap_or(0) as f64 + m.p_fps * self.n_fps.unwrap_or(0) as f64
            }
            Architecture::Spsf | Architecture::Srps => {
                let active = self.active_antennas();
                m.p_ps_3bit * active + m.p_sw * active
            }
        }
    }
}

/// Transmitter power in mW, including the radiated power `rho`.
pub fn transmit_power(spec: &ArchitectureSpec, model: &PowerModel, rho: f64) -> Result<f64> {
    spec.validate()?;
    if !(rho >= 0.0) || !rho.is_finite() {
        return Err(invalid!("transmit power must be finite and non-negative, got {rho}"));
    }
    let l_t = spec.l_t as f64;
    let common = model.p_bb + model.p_dac * l_t + model.p_rf * l_t + model.p_pa * spec.active_antennas() + rho;
    Ok(common + spec.analog_power(model))
}

/// Receiver power in mW: converters and amplifiers swapped for their receive
/// counterparts and no radiated power.
pub fn receive_power(spec: &ArchitectureSpec, model: &PowerModel) -> Result<f64> {
    spec.validate()?;
    let l_t = spec.l_t as f64;
    let common = model.p_bb + model.p_adc * l_t + model.p_rf * l_t + model.p_lna * spec.active_antennas();
    Ok(common + spec.analog_power(model))
}

/// Bits/s/Hz per watt; powers are given in mW.
pub fn energy_efficiency(se: f64, p_tx_mw: f64, p_rx_mw: f64) -> Result<f64> {
    let total = p_tx_mw + p_rx_mw;
    if !(total > 0.0) || !total.is_finite() {
        return Err(invalid!("total power must be positive, got {total} mW"));
    }
    Ok(se / (total / 1000.0))
}

/// Number of distinct shifters used by at least one antenna.
pub fn active_fps_count(switches: &SwitchMatrix) -> usize {
    switches.selection().iter().collect::<BTreeSet<_>>().len()
}
