mod common;

use std::collections::HashSet;

use common::rng;
use dsfps_core::channel::*;
use dsfps_core::design::*;
use dsfps_core::metrics::*;
use dsfps_core::numerics::ComplexMatrix;
use num_complex::Complex64;
use rand::Rng;

fn rel_eq(a: f64, b: f64) -> bool {
    (a - b).abs() <= 1e-9 * b.abs()
}

fn golden_specs() -> Vec<(ArchitectureSpec, f64, f64)> {
    // Hand-computed at N_t = 1024, L_t = 4, ρ = 100 mW with the default model.
    vec![
        (ArchitectureSpec::ds_fps(1024, 4, 8, 32), 60_841.6, 65_032.0),
        (
            ArchitectureSpec::new(Architecture::FullyConnected, 1024, 4),
            264_080.0,
            268_270.4,
        ),
        (
            ArchitectureSpec::new(Architecture::ArrayOfSubarrays, 1024, 4),
            104_336.0,
            108_526.4,
        ),
        (
            ArchitectureSpec::new(Architecture::Dhb2Bit, 1024, 4),
            100_240.0,
            104_430.4,
        ),
        (
            ArchitectureSpec::new(Architecture::Dhb1Bit, 1024, 4),
            86_928.0,
            91_118.4,
        ),
        (ArchitectureSpec::fps_gc(1024, 4, 2048, 32), 70_057.6, 74_248.0),
        (
            ArchitectureSpec::with_beta(Architecture::Spsf, 1024, 4, 2.0),
            57_232.0,
            59_374.4,
        ),
        (
            ArchitectureSpec::with_beta(Architecture::Srps, 1024, 4, 2.0),
            57_232.0,
            59_374.4,
        ),
    ]
}

#[test]
fn golden_power_table() {
    let model = PowerModel::thz_typical();
    for (spec, tx, rx) in golden_specs() {
        assert!(
            rel_eq(transmit_power(&spec, &model, 100.0).unwrap(), tx),
            "{:?}",
            spec.kind
        );
        assert!(rel_eq(receive_power(&spec, &model).unwrap(), rx), "{:?}", spec.kind);
    }
    let alt = PowerModel::preset("thz-low-cost").unwrap();
    let ds = ArchitectureSpec::ds_fps(1024, 4, 8, 32);
    assert!(rel_eq(transmit_power(&ds, &alt, 100.0).unwrap(), 22_676.6));
    assert_eq!(PowerModel::preset("thz-typical"), Some(PowerModel::thz_typical()));
    assert!(PowerModel::preset("nope").is_none());
}

#[test]
fn transmit_power_is_affine_in_rho() {
    let model = PowerModel::thz_typical();
    for (spec, _, _) in golden_specs() {
        let base = transmit_power(&spec, &model, 0.0).unwrap();
        for rho in [1.0, 37.5, 1000.0] {
            assert!(rel_eq(transmit_power(&spec, &model, rho).unwrap() - base, rho));
        }
    }
}

#[test]
fn ds_fps_analog_power_is_bounded_by_bank() {
    let m = PowerModel::thz_typical();
    let common = m.p_bb + 4.0 * (m.p_dac + m.p_rf) + 64.0 * m.p_pa;
    for active in 0..=32 {
        let analog = transmit_power(&ArchitectureSpec::ds_fps(64, 4, 8, active), &m, 0.0).unwrap() - common;
        assert!(analog <= m.p_sw * 64.0 + m.p_fps * 32.0 + 1e-9);
    }
}

#[test]
fn active_count_matches_hash_set() {
    let mut r = rng(31);
    for _ in 0..500 {
        let bank = FpsBank::new(r.random_range(1..5), r.random_range(1..9)).unwrap();
        let n_t = r.random_range(1..64);
        let sel: Vec<usize> = (0..n_t).map(|_| r.random_range(0..bank.size())).collect();
        let distinct: HashSet<usize> = sel.iter().copied().collect();
        let s = SwitchMatrix::new(sel, &bank).unwrap();
        assert_eq!(active_fps_count(&s), distinct.len());
    }
}

fn rank_one(n_side: usize, alpha: Complex64) -> ChannelRealization {
    let band = BandConfig::uniform(3e11, 1e9, 1, 1e-9).unwrap();
    let geom = ArrayGeometry::half_wavelength(n_side, n_side, 3e11).unwrap();
    let paths = PathSet::new(vec![Path {
        azimuth_dod: 0.4,
        elevation_dod: 1.2,
        azimuth_doa: 1.9,
        elevation_doa: 0.8,
        gains: vec![alpha],
    }])
    .unwrap();
    synthesize_channel(&paths, &geom, &geom, &band).unwrap()
}

#[test]
fn zero_digital_has_zero_rate() {
    let ch = rank_one(3, Complex64::new(1e-5, 0.0));
    let bank = FpsBank::new(1, 4).unwrap();
    let s = SwitchMatrix::new(vec![0; 9], &bank).unwrap();
    let bf = Beamformer::new(bank, s, vec![ComplexMatrix::zeros(1, 1)], 0.0).unwrap();
    assert_eq!(spectral_efficiency(&ch, &bf).unwrap(), 0.0);
}

#[test]
fn aligned_rank_one_reaches_closed_form() {
    let alpha = Complex64::new(2e-6, 1e-6);
    let ch = rank_one(4, alpha);
    let bank = FpsBank::new(1, 360).unwrap();
    let steer = ch.a_t[0].column(0);
    let sel: Vec<usize> = steer
        .iter()
        .map(|z| ((z.arg().rem_euclid(std::f64::consts::TAU) / bank.phase(1)).round() as usize) % 360)
        .collect();
    let s = SwitchMatrix::new(sel, &bank).unwrap();
    let bf = Beamformer::new(bank, s, vec![ComplexMatrix::identity(1)], 0.0).unwrap();
    let rho = 10.0;
    let bf = normalize_power(&bf, rho).unwrap();
    let se = spectral_efficiency(&ch, &bf).unwrap();
    let closed = (1.0 + rho * 256.0 * alpha.norm_sqr() / 1e-9).log2();
    assert!((se - closed).abs() <= 0.005 * closed, "{se} vs {closed}");
    assert!((fully_digital_baseline(&ch, 1, rho).unwrap() - closed).abs() < 1e-10 * closed);
}

#[test]
fn rate_grows_with_power_for_fixed_switches() {
    let band = BandConfig::uniform(3e11, 5e9, 3, 1e-9).unwrap();
    let geom = ArrayGeometry::half_wavelength(4, 4, 3e11).unwrap();
    let ch = synthesize_channel(&PathGenerator::default().generate(&band, 7), &geom, &geom, &band).unwrap();
    let csi = partial_csi_tx(&ch);
    let bf = rsd_design(&csi, &band, 16, &DesignConfig::default()).unwrap();
    let mut last = 0.0;
    for dbm in [-10.0, 0.0, 10.0, 20.0, 30.0] {
        let scaled = normalize_power(&bf, dsfps_core::units::dbm_to_mw(dbm)).unwrap();
        let se = spectral_efficiency(&ch, &scaled).unwrap();
        assert!(se >= last);
        last = se;
    }
}

#[test]
fn efficiency_ratio_at_reference_config() {
    let model = PowerModel::thz_typical();
    let ds = ArchitectureSpec::ds_fps(1024, 4, 8, 32);
    let fc = ArchitectureSpec::new(Architecture::FullyConnected, 1024, 4);
    let p_ds = transmit_power(&ds, &model, 100.0).unwrap() + receive_power(&ds, &model).unwrap();
    let p_fc = transmit_power(&fc, &model, 100.0).unwrap() + receive_power(&fc, &model).unwrap();
    let ratio = p_fc / p_ds;
    assert!(rel_eq(ratio, 532_350.4 / 125_873.6));
    // Equal rates: efficiency scales with the inverse power ratio.
    let ee_ds = energy_efficiency(30.0, p_ds, 0.0).unwrap();
    let ee_fc = energy_efficiency(30.0, p_fc, 0.0).unwrap();
    assert!(rel_eq(ee_ds / ee_fc, ratio));
}
