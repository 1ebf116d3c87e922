//! Aggregate offender power versus an interference threshold.
//!
//! An operational consumer for the budget thresholds: each offender radiates
//! a flat EIRP density, propagates over free space, and the in-band powers
//! sum linearly at the victim antenna. Receive antenna gain is fixed at
//! 0 dBi and no wall or body losses are applied; both are extension points.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::units::{Bandwidth, Decibel, PowerLevel};

/// Speed of light in m/s.
const SPEED_OF_LIGHT_M_S: f64 = 299_792_458.0;

/// Default offender EIRP density in dBmW/MHz, the regulatory UWB limit.
pub const DEFAULT_EIRP_DENSITY_DBMW_PER_MHZ: f64 = -41.3;

/// One interfering emitter: a flat EIRP density at a distance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OffenderSource {
    eirp_density_dbmw_per_mhz: f64,
    distance_m: f64,
    frequency_hz: f64,
}

impl OffenderSource {
    pub fn new(eirp_density_dbmw_per_mhz: f64, distance_m: f64, frequency_hz: f64) -> Result<Self> {
        if !eirp_density_dbmw_per_mhz.is_finite() {
            return Err(Error::NonFinite {
                quantity: "EIRP density",
                value: eirp_density_dbmw_per_mhz,
            });
        }
        if !distance_m.is_finite() || distance_m <= 0.0 {
            return Err(Error::NonPositiveDistance(distance_m));
        }
        if !frequency_hz.is_finite() || frequency_hz <= 0.0 {
            return Err(Error::NonPositiveFrequency(frequency_hz));
        }
        Ok(OffenderSource {
            eirp_density_dbmw_per_mhz,
            distance_m,
            frequency_hz,
        })
    }

    /// An offender at the regulatory EIRP density limit.
    pub fn at_regulatory_limit(distance_m: f64, frequency_hz: f64) -> Result<Self> {
        Self::new(DEFAULT_EIRP_DENSITY_DBMW_PER_MHZ, distance_m, frequency_hz)
    }

    pub fn eirp_density_dbmw_per_mhz(&self) -> f64 {
        self.eirp_density_dbmw_per_mhz
    }

    pub fn distance_m(&self) -> f64 {
        self.distance_m
    }

    pub fn frequency_hz(&self) -> f64 {
        self.frequency_hz
    }
}

/// Compliance verdict of a margin report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Compliant,
    Exceeded,
}

impl Verdict {
    pub fn label(self) -> &'static str {
        match self {
            Verdict::Compliant => "Compliant",
            Verdict::Exceeded => "Exceeded",
        }
    }
}

/// Aggregate offender power compared against a threshold.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MarginReport {
    pub threshold: PowerLevel,
    pub aggregate: PowerLevel,
    /// threshold - aggregate in dB; negative when the budget is exceeded,
    /// -infinity against a zero-power threshold.
    pub margin_db: Decibel,
    pub verdict: Verdict,
}

/// Free-space path loss 20*log10(4 * pi * d * f / c).
pub fn free_space_path_loss(distance_m: f64, frequency_hz: f64) -> Result<Decibel> {
    if !distance_m.is_finite() || distance_m <= 0.0 {
        return Err(Error::NonPositiveDistance(distance_m));
    }
    if !frequency_hz.is_finite() || frequency_hz <= 0.0 {
        return Err(Error::NonPositiveFrequency(frequency_hz));
    }
    // 20*log10(4*pi/c) = -147.552 dB
    let constant = 20.0 * (4.0 * std::f64::consts::PI / SPEED_OF_LIGHT_M_S).log10();
    Ok(Decibel(
        20.0 * distance_m.log10() + 20.0 * frequency_hz.log10() + constant,
    ))
}

/// Offender power landing in the victim band: the flat density integrated
/// over the victim bandwidth, attenuated by free-space path loss. Whether
/// the victim band actually falls inside the offender's emission band is the
/// caller's responsibility.
pub fn in_band_offender_power(src: &OffenderSource, victim_bw: Bandwidth) -> PowerLevel {
    let fspl = free_space_path_loss(src.distance_m, src.frequency_hz)
        .expect("source guarantees positive distance and frequency");
    let dbmw = src.eirp_density_dbmw_per_mhz + 10.0 * victim_bw.mhz().log10() - fspl.db();
    PowerLevel::from_dbmw(dbmw).expect("finite by construction")
}

/// Sums the in-band contributions of all sources in the linear domain and
/// reports the margin against a threshold. The boundary is inclusive: a
/// margin of exactly 0 dB is compliant.
pub fn aggregate_and_margin(
    sources: &[OffenderSource],
    threshold: PowerLevel,
    victim_bw: Bandwidth,
) -> Result<MarginReport> {
    if sources.is_empty() {
        return Err(Error::NoOffenders);
    }
    let aggregate = sources
        .iter()
        .map(|s| in_band_offender_power(s, victim_bw))
        .fold(PowerLevel::ZERO, |acc, p| acc + p);
    let margin_db = Decibel(threshold.dbmw() - aggregate.dbmw());
    let verdict = if margin_db.db() >= 0.0 {
        Verdict::Compliant
    } else {
        Verdict::Exceeded
    };
    Ok(MarginReport {
        threshold,
        aggregate,
        margin_db,
        verdict,
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct OffenderEntry {
    eirp_dbm_per_mhz: Option<f64>,
    distance_m: f64,
    frequency_ghz: f64,
}

/// Parses an offender list from a JSON array of
/// `{eirp_dbm_per_mhz?, distance_m, frequency_ghz}` objects. A missing EIRP
/// density defaults to the regulatory limit. Errors name the offending
/// entry index.
pub fn offenders_from_json(doc: &str) -> Result<Vec<OffenderSource>> {
    let raw: Vec<serde_json::Value> =
        serde_json::from_str(doc).map_err(|e| Error::InvalidOffenderList(e.to_string()))?;
    let mut sources = Vec::with_capacity(raw.len());
    for (index, value) in raw.into_iter().enumerate() {
        let entry: OffenderEntry = serde_json::from_value(value).map_err(|e| {
            Error::InvalidOffender {
                index,
                message: e.to_string(),
            }
        })?;
        let source = OffenderSource::new(
            entry
                .eirp_dbm_per_mhz
                .unwrap_or(DEFAULT_EIRP_DENSITY_DBMW_PER_MHZ),
            entry.distance_m,
            entry.frequency_ghz * 1e9,
        )
        .map_err(|e| Error::InvalidOffender {
            index,
            message: e.to_string(),
        })?;
        sources.push(source);
    }
    Ok(sources)
}
