/// dBm to milliwatts.
pub fn dbm_to_mw(dbm: f64) -> f64 {
    libm::pow(10.0, dbm / 10.0)
}

/// Milliwatts to dBm.
pub fn mw_to_dbm(mw: f64) -> f64 {
    10.0 * libm::log10(mw)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        assert_eq!(dbm_to_mw(20.0), 100.0);
        assert!((dbm_to_mw(-87.0) - 1.995_262_314_968_88e-9).abs() < 1e-21);
        assert!((mw_to_dbm(dbm_to_mw(13.3)) - 13.3).abs() < 1e-12);
    }
}
