//! Rate, spectral efficiency and mobility coupling, and the interference
//! threshold sweeps over the tabulated peak rates.
//!
//! The spectral efficiency eta = R_b / B_CH ties a peak data rate to the
//! channel bandwidth that carries it; pushing that effective bandwidth
//! through the budget yields the threshold as a function of rate, mobility
//! and link. Sweeps are keyed by peak rate; the nominal FDD/TDD bandwidths
//! ride along as metadata.

use serde::Serialize;

use crate::budget::max_aggregate_interference;
use crate::error::{Error, Result};
use crate::standards::{
    LinkDirection, PeakRateTable, RateSide, SpectralEfficiencyTable, StationProfile,
    FDD_BANDWIDTHS_MHZ,
};
use crate::units::{Bandwidth, PowerLevel};

/// Mobility speed bound to the "pedestrian" sweep label.
pub const PEDESTRIAN_SPEED_KMH: f64 = 3.0;
/// Mobility speed bound to the "high-speed" sweep label.
pub const HIGH_SPEED_KMH: f64 = 120.0;

/// One point of a threshold sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepPoint {
    pub mobility_kmh: f64,
    pub link: LinkDirection,
    pub side: RateSide,
    pub b_fdd_mhz: f64,
    pub b_tdd_mhz: f64,
    pub r_peak_mbps: f64,
    pub eta_bps_hz: f64,
    /// r_peak / eta.
    pub b_eff_mhz: f64,
    pub i_agg_max: PowerLevel,
}

/// Channel bandwidth that carries rate r_b at spectral efficiency eta.
pub fn effective_bandwidth(r_b_mbps: f64, eta_bps_hz: f64) -> Result<Bandwidth> {
    if !r_b_mbps.is_finite() || r_b_mbps <= 0.0 {
        return Err(Error::NonPositiveRate(r_b_mbps));
    }
    if !eta_bps_hz.is_finite() || eta_bps_hz <= 0.0 {
        return Err(Error::NonPositiveEfficiency(eta_bps_hz));
    }
    Bandwidth::from_mhz(r_b_mbps / eta_bps_hz)
}

/// Interference threshold for a peak rate at a tabulated mobility: the
/// budget evaluated over the effective bandwidth r_b / eta(mobility, link).
pub fn threshold_at_rate(
    r_b_mbps: f64,
    mobility_kmh: f64,
    link: LinkDirection,
    profile: &StationProfile,
    eta: &SpectralEfficiencyTable,
) -> Result<PowerLevel> {
    let eta_value = eta.lookup(mobility_kmh, link)?;
    let b_eff = effective_bandwidth(r_b_mbps, eta_value)?;
    Ok(max_aggregate_interference(profile, b_eff).i_agg_max)
}

/// Threshold sweep across every tabulated (bandwidth, link, side) cell at
/// one mobility: 32 points ordered by FDD bandwidth, then link, then side.
pub fn generate_sweep(
    mobility_kmh: f64,
    profile: &StationProfile,
    eta: &SpectralEfficiencyTable,
    rates: &PeakRateTable,
) -> Result<Vec<SweepPoint>> {
    let mut points = Vec::with_capacity(32);
    for &b_fdd in &FDD_BANDWIDTHS_MHZ {
        for link in LinkDirection::ALL {
            let eta_value = eta.lookup(mobility_kmh, link)?;
            for side in RateSide::ALL {
                let r_peak = rates.lookup(b_fdd, link, side)?;
                let b_eff_mhz = r_peak / eta_value;
                let budget = max_aggregate_interference(profile, Bandwidth::from_mhz(b_eff_mhz)?);
                points.push(SweepPoint {
                    mobility_kmh,
                    link,
                    side,
                    b_fdd_mhz: b_fdd,
                    b_tdd_mhz: 2.0 * b_fdd,
                    r_peak_mbps: r_peak,
                    eta_bps_hz: eta_value,
                    b_eff_mhz,
                    i_agg_max: budget.i_agg_max,
                });
            }
        }
    }
    Ok(points)
}

/// Header of the sweep CSV serialization contract.
pub const SWEEP_CSV_HEADER: &str =
    "mobility_kmh,link,side,b_fdd_mhz,b_tdd_mhz,r_peak_mbps,eta_bps_hz,b_eff_mhz,i_agg_max_dbmw";

pub(crate) fn round4(x: f64) -> f64 {
    if x.is_finite() {
        (x * 1e4).round() / 1e4
    } else {
        x
    }
}

/// Renders a sweep as CSV with values at 4 decimal places.
pub fn sweep_to_csv(points: &[SweepPoint]) -> String {
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for p in points {
        out.push_str(&format!(
            "{:.4},{},{},{:.4},{:.4},{:.4},{:.4},{:.4},{:.4}\n",
            p.mobility_kmh,
            p.link.label(),
            p.side.label(),
            p.b_fdd_mhz,
            p.b_tdd_mhz,
            p.r_peak_mbps,
            p.eta_bps_hz,
            p.b_eff_mhz,
            p.i_agg_max.dbmw()
        ));
    }
    out
}

#[derive(Serialize)]
struct SweepRecord {
    mobility_kmh: f64,
    link: &'static str,
    side: &'static str,
    b_fdd_mhz: f64,
    b_tdd_mhz: f64,
    r_peak_mbps: f64,
    eta_bps_hz: f64,
    b_eff_mhz: f64,
    /// None (null) when the threshold is zero power (-infinity dBmW).
    i_agg_max_dbmw: Option<f64>,
}

/// Renders a sweep as a JSON array with the same field names and 4-decimal
/// values as the CSV form.
pub fn sweep_to_json(points: &[SweepPoint]) -> String {
    let records: Vec<SweepRecord> = points
        .iter()
        .map(|p| SweepRecord {
            mobility_kmh: round4(p.mobility_kmh),
            link: p.link.label(),
            side: p.side.label(),
            b_fdd_mhz: round4(p.b_fdd_mhz),
            b_tdd_mhz: round4(p.b_tdd_mhz),
            r_peak_mbps: round4(p.r_peak_mbps),
            eta_bps_hz: round4(p.eta_bps_hz),
            b_eff_mhz: round4(p.b_eff_mhz),
            i_agg_max_dbmw: p.i_agg_max.dbmw().is_finite().then(|| round4(p.i_agg_max.dbmw())),
        })
        .collect();
    serde_json::to_string_pretty(&records).expect("sweep records always serialize")
}
