//! Embedded registry of the standard parameters consumed by the budget
//! equations, with JSON-based overrides.
//!
//! Ships the published IEEE 802.20 receiver profiles, the mobility- and
//! link-dependent minimum spectral efficiencies, the per-bandwidth peak data
//! rates (generated from their per-MHz ratios), and the UWB regulatory
//! limits. The registry is immutable after construction; overrides build a
//! replacement registry and never mutate in place.

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::units::{Decibel, Temperature};

/// Victim station kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StationKind {
    MobileStation,
    BaseStation,
}

impl StationKind {
    pub fn label(self) -> &'static str {
        match self {
            StationKind::MobileStation => "mobile station",
            StationKind::BaseStation => "base station",
        }
    }
}

/// Link direction between base station and mobile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LinkDirection {
    Downlink,
    Uplink,
}

impl LinkDirection {
    pub const ALL: [LinkDirection; 2] = [LinkDirection::Downlink, LinkDirection::Uplink];

    pub fn label(self) -> &'static str {
        match self {
            LinkDirection::Downlink => "DL",
            LinkDirection::Uplink => "UL",
        }
    }
}

/// Lower or upper extremity of the tabulated per-user peak rate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum RateSide {
    Low,
    High,
}

impl RateSide {
    pub const ALL: [RateSide; 2] = [RateSide::Low, RateSide::High];

    pub fn label(self) -> &'static str {
        match self {
            RateSide::Low => "Low",
            RateSide::High => "High",
        }
    }
}

/// Mobility classes and their maximum supported speeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MobilityClass {
    Stationary,
    Pedestrian,
    Vehicular,
    HighSpeedVehicular,
    Aeronautical,
    Satellite,
}

impl MobilityClass {
    pub const ALL: [MobilityClass; 6] = [
        MobilityClass::Stationary,
        MobilityClass::Pedestrian,
        MobilityClass::Vehicular,
        MobilityClass::HighSpeedVehicular,
        MobilityClass::Aeronautical,
        MobilityClass::Satellite,
    ];

    pub fn max_speed_kmh(self) -> f64 {
        match self {
            MobilityClass::Stationary => 0.0,
            MobilityClass::Pedestrian => 10.0,
            MobilityClass::Vehicular => 100.0,
            MobilityClass::HighSpeedVehicular => 500.0,
            MobilityClass::Aeronautical => 1500.0,
            MobilityClass::Satellite => 27000.0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            MobilityClass::Stationary => "stationary",
            MobilityClass::Pedestrian => "pedestrian",
            MobilityClass::Vehicular => "vehicular",
            MobilityClass::HighSpeedVehicular => "high-speed vehicular",
            MobilityClass::Aeronautical => "aeronautical",
            MobilityClass::Satellite => "satellite",
        }
    }
}

/// Victim receiver parameters: allowed degradation, antenna temperature and
/// noise figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationProfile {
    kind: StationKind,
    d_max: Decibel,
    t_rx: Temperature,
    nf: Decibel,
}

impl StationProfile {
    /// Builds a profile, enforcing d_max >= 0, NF >= 0 and T_RX > 0.
    pub fn new(kind: StationKind, d_max: Decibel, t_rx: Temperature, nf: Decibel) -> Result<Self> {
        if d_max.db() < 0.0 {
            return Err(Error::NegativeDegradation(d_max.db()));
        }
        if nf.db() < 0.0 {
            return Err(Error::NegativeNoiseFigure(nf.db()));
        }
        if t_rx.kelvin() <= 0.0 {
            return Err(Error::NonPositiveReceiverTemperature(t_rx.kelvin()));
        }
        Ok(StationProfile {
            kind,
            d_max,
            t_rx,
            nf,
        })
    }

    pub fn kind(&self) -> StationKind {
        self.kind
    }

    pub fn d_max(&self) -> Decibel {
        self.d_max
    }

    pub fn t_rx(&self) -> Temperature {
        self.t_rx
    }

    pub fn nf(&self) -> Decibel {
        self.nf
    }
}

/// Speeds (km/hr) at which the spectral efficiency is tabulated.
pub const ETA_SPEEDS_KMH: [f64; 2] = [3.0, 120.0];

/// Minimum spectral efficiency in bps/Hz keyed by (mobility speed, link).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralEfficiencyTable {
    dl_3_kmh: f64,
    ul_3_kmh: f64,
    dl_120_kmh: f64,
    ul_120_kmh: f64,
}

impl SpectralEfficiencyTable {
    /// The published table: 2.0 / 1.0 bps/Hz at 3 km/hr, 1.5 / 0.75 at 120 km/hr.
    pub fn standard() -> Self {
        SpectralEfficiencyTable {
            dl_3_kmh: 2.0,
            ul_3_kmh: 1.0,
            dl_120_kmh: 1.5,
            ul_120_kmh: 0.75,
        }
    }

    pub fn with_entries(dl_3: f64, ul_3: f64, dl_120: f64, ul_120: f64) -> Result<Self> {
        for eta in [dl_3, ul_3, dl_120, ul_120] {
            if !eta.is_finite() || eta <= 0.0 {
                return Err(Error::NonPositiveEfficiency(eta));
            }
        }
        Ok(SpectralEfficiencyTable {
            dl_3_kmh: dl_3,
            ul_3_kmh: ul_3,
            dl_120_kmh: dl_120,
            ul_120_kmh: ul_120,
        })
    }

    /// Looks up eta at a tabulated speed. There is no interpolation between
    /// the two mobility anchors; untabulated speeds are an error.
    pub fn lookup(&self, speed_kmh: f64, link: LinkDirection) -> Result<f64> {
        if speed_kmh == ETA_SPEEDS_KMH[0] {
            Ok(match link {
                LinkDirection::Downlink => self.dl_3_kmh,
                LinkDirection::Uplink => self.ul_3_kmh,
            })
        } else if speed_kmh == ETA_SPEEDS_KMH[1] {
            Ok(match link {
                LinkDirection::Downlink => self.dl_120_kmh,
                LinkDirection::Uplink => self.ul_120_kmh,
            })
        } else {
            Err(Error::UntabulatedMobility(speed_kmh))
        }
    }

    /// All four (speed, link, eta) entries.
    pub fn entries(&self) -> [(f64, LinkDirection, f64); 4] {
        [
            (ETA_SPEEDS_KMH[0], LinkDirection::Downlink, self.dl_3_kmh),
            (ETA_SPEEDS_KMH[0], LinkDirection::Uplink, self.ul_3_kmh),
            (ETA_SPEEDS_KMH[1], LinkDirection::Downlink, self.dl_120_kmh),
            (ETA_SPEEDS_KMH[1], LinkDirection::Uplink, self.ul_120_kmh),
        ]
    }
}

/// FDD channel bandwidths (MHz) tabulated for the wideband OFDMA mode. The
/// paired TDD bandwidth is twice the FDD value.
pub const FDD_BANDWIDTHS_MHZ: [f64; 8] = [2.5, 5.0, 7.5, 10.0, 12.5, 15.0, 17.5, 20.0];

/// Per-user peak rate extremities in Mbps per MHz of TDD bandwidth.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakRateRatios {
    pub dl_low: f64,
    pub dl_high: f64,
    pub ul_low: f64,
    pub ul_high: f64,
}

impl PeakRateRatios {
    /// Ratios matching the published per-user range at the 2.5 MHz reference
    /// bandwidth: 1 to 4.5 Mbps down and 0.3 to 2.25 Mbps up.
    pub fn standard() -> Self {
        PeakRateRatios {
            dl_low: 0.4,
            dl_high: 1.8,
            ul_low: 0.12,
            ul_high: 0.9,
        }
    }
}

/// One generated peak-rate cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakRateRow {
    pub b_fdd_mhz: f64,
    pub b_tdd_mhz: f64,
    pub link: LinkDirection,
    pub side: RateSide,
    pub r_peak_mbps: f64,
}

/// Peak data rate per user for every tabulated bandwidth, link and side,
/// generated from [`PeakRateRatios`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PeakRateTable {
    // Hundredths of Mbps per MHz of TDD bandwidth, ordered
    // [dl_low, dl_high, ul_low, ul_high]. Integer-valued for the standard
    // ratios, which keeps every generated cell an exact decimal.
    centi_ratios: [f64; 4],
}

impl PeakRateTable {
    pub fn standard() -> Self {
        PeakRateTable {
            centi_ratios: [40.0, 180.0, 12.0, 90.0],
        }
    }

    pub fn from_ratios(ratios: PeakRateRatios) -> Result<Self> {
        let r = [ratios.dl_low, ratios.dl_high, ratios.ul_low, ratios.ul_high];
        for v in r {
            if !v.is_finite() || v <= 0.0 {
                return Err(Error::NonPositiveRate(v));
            }
        }
        Ok(PeakRateTable {
            centi_ratios: r.map(|v| v * 100.0),
        })
    }

    fn centi(&self, link: LinkDirection, side: RateSide) -> f64 {
        match (link, side) {
            (LinkDirection::Downlink, RateSide::Low) => self.centi_ratios[0],
            (LinkDirection::Downlink, RateSide::High) => self.centi_ratios[1],
            (LinkDirection::Uplink, RateSide::Low) => self.centi_ratios[2],
            (LinkDirection::Uplink, RateSide::High) => self.centi_ratios[3],
        }
    }

    /// Rate ratio in Mbps per MHz of TDD bandwidth.
    pub fn ratio(&self, link: LinkDirection, side: RateSide) -> f64 {
        self.centi(link, side) / 100.0
    }

    /// Peak rate in Mbps for a tabulated FDD bandwidth: ratio * B_TDD with
    /// B_TDD = 2 * B_FDD. The eight tabulated bandwidths are exact binary
    /// fractions, so the equality match involves no tolerance.
    pub fn lookup(&self, b_fdd_mhz: f64, link: LinkDirection, side: RateSide) -> Result<f64> {
        if !FDD_BANDWIDTHS_MHZ.contains(&b_fdd_mhz) {
            return Err(Error::UntabulatedBandwidth(b_fdd_mhz));
        }
        Ok(self.centi(link, side) * (2.0 * b_fdd_mhz) / 100.0)
    }

    /// All 32 cells, ordered by FDD bandwidth, then link, then side.
    pub fn rows(&self) -> Vec<PeakRateRow> {
        let mut rows = Vec::with_capacity(32);
        for &b_fdd in &FDD_BANDWIDTHS_MHZ {
            for link in LinkDirection::ALL {
                for side in RateSide::ALL {
                    rows.push(PeakRateRow {
                        b_fdd_mhz: b_fdd,
                        b_tdd_mhz: 2.0 * b_fdd,
                        link,
                        side,
                        r_peak_mbps: self
                            .lookup(b_fdd, link, side)
                            .expect("tabulated bandwidth"),
                    });
                }
            }
        }
        rows
    }
}

/// Regulatory parameters of the wideband offender.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UwbParameters {
    /// Maximum EIRP density in dBmW per MHz.
    pub max_eirp_density_dbmw_per_mhz: f64,
    /// Channel bandwidth in MHz.
    pub channel_bw_mhz: f64,
    /// Allocated band, GHz.
    pub band_low_ghz: f64,
    pub band_high_ghz: f64,
}

impl UwbParameters {
    /// FCC Part 15 limit with the 528 MHz channelization in 3.1-10.6 GHz.
    pub fn standard() -> Self {
        UwbParameters {
            max_eirp_density_dbmw_per_mhz: -41.3,
            channel_bw_mhz: 528.0,
            band_low_ghz: 3.1,
            band_high_ghz: 10.6,
        }
    }
}

/// Immutable registry of every standard parameter, with optional overrides.
#[derive(Debug, Clone, PartialEq)]
pub struct Registry {
    mobile_station: StationProfile,
    base_station: StationProfile,
    eta: SpectralEfficiencyTable,
    peak_rates: PeakRateTable,
    uwb: UwbParameters,
}

impl Registry {
    /// Registry loaded with the published standard values: d_max 0.5 dB and
    /// T_RX 290 K for both stations, NF 10 dB (mobile) and 5 dB (base).
    pub fn standard() -> Self {
        let ms = StationProfile::new(
            StationKind::MobileStation,
            Decibel(0.5),
            Temperature::kelvin_unchecked(290.0),
            Decibel(10.0),
        )
        .expect("standard mobile profile is valid");
        let bs = StationProfile::new(
            StationKind::BaseStation,
            Decibel(0.5),
            Temperature::kelvin_unchecked(290.0),
            Decibel(5.0),
        )
        .expect("standard base profile is valid");
        Registry {
            mobile_station: ms,
            base_station: bs,
            eta: SpectralEfficiencyTable::standard(),
            peak_rates: PeakRateTable::standard(),
            uwb: UwbParameters::standard(),
        }
    }

    /// Standard registry with a JSON override document applied.
    pub fn with_overrides_json(doc: &str) -> Result<Self> {
        Self::standard().apply_overrides_json(doc)
    }

    pub fn profile(&self, kind: StationKind) -> StationProfile {
        match kind {
            StationKind::MobileStation => self.mobile_station,
            StationKind::BaseStation => self.base_station,
        }
    }

    pub fn eta(&self) -> &SpectralEfficiencyTable {
        &self.eta
    }

    pub fn peak_rates(&self) -> &PeakRateTable {
        &self.peak_rates
    }

    pub fn uwb(&self) -> &UwbParameters {
        &self.uwb
    }

    /// Applies a JSON override document, returning a new registry. Unknown
    /// keys and out-of-range values are rejected with the offending key in
    /// the message.
    pub fn apply_overrides_json(&self, doc: &str) -> Result<Registry> {
        let parsed: OverrideDoc =
            serde_json::from_str(doc).map_err(|e| Error::InvalidOverride(e.to_string()))?;
        let mut next = self.clone();
        if let Some(o) = &parsed.mobile_station {
            next.mobile_station = apply_profile(&self.mobile_station, o, "mobile_station")?;
        }
        if let Some(o) = &parsed.base_station {
            next.base_station = apply_profile(&self.base_station, o, "base_station")?;
        }
        if let Some(o) = &parsed.eta_table {
            next.eta = SpectralEfficiencyTable::with_entries(
                o.dl_3_kmh.unwrap_or(self.eta.dl_3_kmh),
                o.ul_3_kmh.unwrap_or(self.eta.ul_3_kmh),
                o.dl_120_kmh.unwrap_or(self.eta.dl_120_kmh),
                o.ul_120_kmh.unwrap_or(self.eta.ul_120_kmh),
            )
            .map_err(|e| Error::InvalidOverride(format!("eta_table: {e}")))?;
        }
        if let Some(o) = &parsed.peak_rate_ratios {
            let base = PeakRateRatios {
                dl_low: self.peak_rates.ratio(LinkDirection::Downlink, RateSide::Low),
                dl_high: self.peak_rates.ratio(LinkDirection::Downlink, RateSide::High),
                ul_low: self.peak_rates.ratio(LinkDirection::Uplink, RateSide::Low),
                ul_high: self.peak_rates.ratio(LinkDirection::Uplink, RateSide::High),
            };
            next.peak_rates = PeakRateTable::from_ratios(PeakRateRatios {
                dl_low: o.dl_low.unwrap_or(base.dl_low),
                dl_high: o.dl_high.unwrap_or(base.dl_high),
                ul_low: o.ul_low.unwrap_or(base.ul_low),
                ul_high: o.ul_high.unwrap_or(base.ul_high),
            })
            .map_err(|e| Error::InvalidOverride(format!("peak_rate_ratios: {e}")))?;
        }
        Ok(next)
    }

    /// Plain-text dump of every registry value, rendered with the same digits
    /// the standards publish.
    pub fn dump(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        let profile_line = |p: &StationProfile| {
            format!(
                "d_max = {} dB, T_RX = {} K, NF = {} dB",
                p.d_max().db(),
                p.t_rx().kelvin(),
                p.nf().db()
            )
        };
        writeln!(out, "station profiles").unwrap();
        writeln!(out, "  mobile station: {}", profile_line(&self.mobile_station)).unwrap();
        writeln!(out, "  base station:   {}", profile_line(&self.base_station)).unwrap();
        writeln!(out, "spectral efficiency [bps/Hz]").unwrap();
        writeln!(
            out,
            "  3 km/hr:   DL {:?}, UL {:?}",
            self.eta.dl_3_kmh, self.eta.ul_3_kmh
        )
        .unwrap();
        writeln!(
            out,
            "  120 km/hr: DL {:?}, UL {:?}",
            self.eta.dl_120_kmh, self.eta.ul_120_kmh
        )
        .unwrap();
        writeln!(out, "peak data rate per user [Mbps]").unwrap();
        let join = |vals: Vec<f64>| {
            vals.iter()
                .map(|v| format!("{v}"))
                .collect::<Vec<_>>()
                .join(" ")
        };
        writeln!(out, "  B_FDD [MHz]: {}", join(FDD_BANDWIDTHS_MHZ.to_vec())).unwrap();
        writeln!(
            out,
            "  B_TDD [MHz]: {}",
            join(FDD_BANDWIDTHS_MHZ.iter().map(|b| 2.0 * b).collect())
        )
        .unwrap();
        for (label, link, side) in [
            ("DL low: ", LinkDirection::Downlink, RateSide::Low),
            ("DL high:", LinkDirection::Downlink, RateSide::High),
            ("UL low: ", LinkDirection::Uplink, RateSide::Low),
            ("UL high:", LinkDirection::Uplink, RateSide::High),
        ] {
            let rates = FDD_BANDWIDTHS_MHZ
                .iter()
                .map(|&b| self.peak_rates.lookup(b, link, side).expect("tabulated"))
                .collect();
            writeln!(out, "  {} {}", label, join(rates)).unwrap();
        }
        writeln!(out, "mobility classes [km/hr]").unwrap();
        let classes = MobilityClass::ALL
            .iter()
            .map(|c| format!("{} {}", c.label(), c.max_speed_kmh()))
            .collect::<Vec<_>>()
            .join(", ");
        writeln!(out, "  {classes}").unwrap();
        writeln!(out, "offender limits").unwrap();
        writeln!(
            out,
            "  max EIRP density {} dBmW/MHz, channel BW {} MHz, band {}-{} GHz",
            self.uwb.max_eirp_density_dbmw_per_mhz,
            self.uwb.channel_bw_mhz,
            self.uwb.band_low_ghz,
            self.uwb.band_high_ghz
        )
        .unwrap();
        out
    }
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct OverrideDoc {
    mobile_station: Option<ProfileOverride>,
    base_station: Option<ProfileOverride>,
    eta_table: Option<EtaOverride>,
    peak_rate_ratios: Option<RatioOverride>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProfileOverride {
    d_max_db: Option<f64>,
    t_rx_k: Option<f64>,
    nf_db: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct EtaOverride {
    dl_3_kmh: Option<f64>,
    ul_3_kmh: Option<f64>,
    dl_120_kmh: Option<f64>,
    ul_120_kmh: Option<f64>,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct RatioOverride {
    dl_low: Option<f64>,
    dl_high: Option<f64>,
    ul_low: Option<f64>,
    ul_high: Option<f64>,
}

fn apply_profile(
    base: &StationProfile,
    o: &ProfileOverride,
    key: &str,
) -> Result<StationProfile> {
    let wrap = |e: Error| Error::InvalidOverride(format!("{key}: {e}"));
    let d_max = match o.d_max_db {
        Some(v) => Decibel::new(v).map_err(wrap)?,
        None => base.d_max(),
    };
    let t_rx = match o.t_rx_k {
        Some(v) => Temperature::from_kelvin(v).map_err(wrap)?,
        None => base.t_rx(),
    };
    let nf = match o.nf_db {
        Some(v) => Decibel::new(v).map_err(wrap)?,
        None => base.nf(),
    };
    StationProfile::new(base.kind(), d_max, t_rx, nf).map_err(wrap)
}
