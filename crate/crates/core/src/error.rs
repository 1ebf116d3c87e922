use thiserror::Error;

/// Errors produced by domain constructors and operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{quantity} must be finite, got {value}")]
    NonFinite { quantity: &'static str, value: f64 },
    #[error("power must be non-negative, got {0} W")]
    NegativePower(f64),
    #[error("ratio must be positive, got {0}")]
    NonPositiveRatio(f64),
    #[error("bandwidth must be positive, got {0} Hz")]
    NonPositiveBandwidth(f64),
    #[error("temperature must be non-negative, got {0} K")]
    NegativeTemperature(f64),
    #[error("receiver temperature must be positive, got {0} K")]
    NonPositiveReceiverTemperature(f64),
    #[error("noise figure must be non-negative, got {0} dB")]
    NegativeNoiseFigure(f64),
    #[error("allowed degradation must be non-negative, got {0} dB")]
    NegativeDegradation(f64),
    #[error("SINR ({sinr}) exceeds SNR ({snr}); interference cannot improve the link")]
    DegradationInverted { snr: f64, sinr: f64 },
    #[error("untabulated mobility: {0} km/hr (tabulated speeds: 3 and 120 km/hr)")]
    UntabulatedMobility(f64),
    #[error(
        "untabulated FDD bandwidth: {0} MHz (tabulated: 2.5, 5, 7.5, 10, 12.5, 15, 17.5, 20 MHz)"
    )]
    UntabulatedBandwidth(f64),
    #[error("data rate must be positive, got {0} Mbps")]
    NonPositiveRate(f64),
    #[error("spectral efficiency must be positive, got {0} bps/Hz")]
    NonPositiveEfficiency(f64),
    #[error("invalid cabin geometry: {0}")]
    InvalidGeometry(String),
    #[error("distance must be positive, got {0} m")]
    NonPositiveDistance(f64),
    #[error("frequency must be positive, got {0} Hz")]
    NonPositiveFrequency(f64),
    #[error("offender list is empty")]
    NoOffenders,
    #[error("invalid offender list: {0}")]
    InvalidOffenderList(String),
    #[error("offender entry {index}: {message}")]
    InvalidOffender { index: usize, message: String },
    #[error("invalid parameter override: {0}")]
    InvalidOverride(String),
}

pub type Result<T> = std::result::Result<T, Error>;
