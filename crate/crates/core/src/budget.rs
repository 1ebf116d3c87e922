//! Allowed-degradation to interference-threshold conversion.
//!
//! The degradation d is the output SNR over the output SINR; holding it at a
//! profile's allowed maximum and solving for the interference gives the
//! largest aggregate interference power the receiver tolerates:
//! I_max = N * (10^(d/10) - 1). The engine always computes from first
//! principles in watts; the display-rounded reduced model is kept separate.

use crate::error::{Error, Result};
use crate::noise::{noise_power, sinr_out, snr_out, NoiseBreakdown};
use crate::standards::StationProfile;
use crate::units::{db_to_linear, Bandwidth, Decibel, PowerLevel};

/// Constant term (dBmW) of the reduced mobile-station model
/// I_max = -113.112 + 10*log10(B_MHz). A display-rounded constant; the
/// first-principles engine agrees with it within 0.01 dB.
pub const MS_REDUCED_MODEL_CONSTANT_DBMW: f64 = -113.112;

/// Interference budget for one profile and channel bandwidth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BudgetResult {
    pub profile: StationProfile,
    pub b_ch: Bandwidth,
    pub noise: NoiseBreakdown,
    /// Allowed degradation used for the budget (the profile's d_max).
    pub d: Decibel,
    /// Maximum tolerable aggregate interference power.
    pub i_agg_max: PowerLevel,
}

impl BudgetResult {
    /// i_agg_max as a fraction of the noise power: 10^(d/10) - 1.
    /// Bandwidth-independent, which makes it a convenient sanity check.
    pub fn noise_fraction(&self) -> f64 {
        db_to_linear(self.d) - 1.0
    }
}

/// Degradation d = 10*log10(SNR/SINR). Requires snr >= sinr > 0; in this
/// model interference can only lower the SINR.
pub fn degradation(snr: f64, sinr: f64) -> Result<Decibel> {
    if snr.is_nan() || snr.is_infinite() {
        return Err(Error::NonFinite {
            quantity: "SNR",
            value: snr,
        });
    }
    if sinr.is_nan() || sinr.is_infinite() {
        return Err(Error::NonFinite {
            quantity: "SINR",
            value: sinr,
        });
    }
    if snr <= 0.0 {
        return Err(Error::NonPositiveRatio(snr));
    }
    if sinr <= 0.0 {
        return Err(Error::NonPositiveRatio(sinr));
    }
    if sinr > snr {
        return Err(Error::DegradationInverted { snr, sinr });
    }
    Ok(Decibel(10.0 * (snr / sinr).log10()))
}

/// Maximum aggregate interference for the profile's allowed degradation over
/// a channel bandwidth. A zero allowed degradation yields zero interference,
/// not an error.
pub fn max_aggregate_interference(profile: &StationProfile, b_ch: Bandwidth) -> BudgetResult {
    let noise = noise_power(profile, b_ch);
    let fraction = db_to_linear(profile.d_max()) - 1.0;
    let i_agg_max = PowerLevel::from_watts_unchecked(noise.noise.watts() * fraction);
    BudgetResult {
        profile: *profile,
        b_ch,
        noise,
        d: profile.d_max(),
        i_agg_max,
    }
}

/// Reduced mobile-station model: -113.112 + 10*log10(B_MHz) dBmW.
///
/// Kept separate from the engine so the rounded constant never feeds
/// downstream arithmetic.
pub fn ms_reduced_model(b_ch_mhz: f64) -> Result<PowerLevel> {
    if b_ch_mhz.is_nan() || b_ch_mhz.is_infinite() {
        return Err(Error::NonFinite {
            quantity: "bandwidth",
            value: b_ch_mhz,
        });
    }
    if b_ch_mhz <= 0.0 {
        return Err(Error::NonPositiveBandwidth(b_ch_mhz * 1e6));
    }
    PowerLevel::from_dbmw(MS_REDUCED_MODEL_CONSTANT_DBMW + 10.0 * b_ch_mhz.log10())
}

/// Re-derives the degradation from SNR and SINR evaluated with the
/// interference at the budget limit. The received power cancels
/// algebraically, so this recovers the profile's d_max and serves as an
/// end-to-end consistency check.
pub fn degradation_roundtrip(
    profile: &StationProfile,
    b_ch: Bandwidth,
    p_rx: PowerLevel,
) -> Result<Decibel> {
    if p_rx.is_zero() {
        return Err(Error::NonPositiveRatio(0.0));
    }
    let limit = max_aggregate_interference(profile, b_ch).i_agg_max;
    let snr = snr_out(p_rx, profile, b_ch);
    let sinr = sinr_out(p_rx, limit, profile, b_ch);
    degradation(snr, sinr)
}
