//! Victim receiver noise: equivalent amplifier temperature from the noise
//! figure, the thermal noise floor of the channel, and the output SNR/SINR.

use crate::error::{Error, Result};
use crate::standards::StationProfile;
use crate::units::{db_to_linear, Bandwidth, Decibel, PowerLevel, Temperature, BOLTZMANN};

/// Reference temperature (K) in the noise-figure definition. Fixed by that
/// definition; independent of the profile's antenna temperature, which may
/// be overridden separately.
pub const NF_REFERENCE_KELVIN: f64 = 290.0;

/// Thermal and amplifier contributions behind a noise floor.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NoiseBreakdown {
    /// Equivalent amplifier temperature, 290 * (10^(NF/10) - 1).
    pub t_amp: Temperature,
    /// Antenna plus amplifier temperature.
    pub t_total: Temperature,
    /// k * B_CH * t_total.
    pub noise: PowerLevel,
}

/// Equivalent amplifier temperature for a noise figure:
/// 290 * (10^(NF/10) - 1) K. Zero exactly when NF is 0 dB.
pub fn amplifier_temperature(nf: Decibel) -> Result<Temperature> {
    if nf.db() < 0.0 {
        return Err(Error::NegativeNoiseFigure(nf.db()));
    }
    Temperature::from_kelvin(NF_REFERENCE_KELVIN * (db_to_linear(nf) - 1.0))
}

/// Noise power k * B_CH * (T_RX + T_AMP) at the receiver output. Demodulator
/// and decoder losses are taken as zero.
pub fn noise_power(profile: &StationProfile, b_ch: Bandwidth) -> NoiseBreakdown {
    let t_amp = amplifier_temperature(profile.nf()).expect("profile guarantees NF >= 0");
    let t_total = profile.t_rx() + t_amp;
    let noise = PowerLevel::from_watts_unchecked(BOLTZMANN * b_ch.hz() * t_total.kelvin());
    NoiseBreakdown {
        t_amp,
        t_total,
        noise,
    }
}

/// Output SNR: received power over the channel noise floor.
pub fn snr_out(p_rx: PowerLevel, profile: &StationProfile, b_ch: Bandwidth) -> f64 {
    p_rx.watts() / noise_power(profile, b_ch).noise.watts()
}

/// Output SINR: received power over aggregate interference plus noise.
/// Reduces to [`snr_out`] when the interference is zero.
pub fn sinr_out(
    p_rx: PowerLevel,
    i_agg: PowerLevel,
    profile: &StationProfile,
    b_ch: Bandwidth,
) -> f64 {
    p_rx.watts() / (i_agg.watts() + noise_power(profile, b_ch).noise.watts())
}
