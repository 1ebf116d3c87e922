//! Logarithmic and linear unit domains shared by every other module.
//!
//! Power, bandwidth and temperature are newtypes whose constructors enforce
//! the domain invariants, so downstream math never re-validates. Conversions
//! between the dB and linear views round-trip within 1e-12 relative.

use crate::error::{Error, Result};

/// Boltzmann constant in J/K (exact SI value).
pub const BOLTZMANN: f64 = 1.380649e-23;

/// A dimensionless ratio expressed in decibels.
///
/// Inputs must be finite. Infinities appear only in documented degenerate
/// results, e.g. the margin against a zero-power threshold.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Decibel(pub(crate) f64);

impl Decibel {
    pub const ZERO: Decibel = Decibel(0.0);

    /// Wraps a finite dB value; NaN and infinities are rejected.
    pub fn new(db: f64) -> Result<Self> {
        if !db.is_finite() {
            return Err(Error::NonFinite {
                quantity: "dB value",
                value: db,
            });
        }
        Ok(Decibel(db))
    }

    pub fn db(self) -> f64 {
        self.0
    }
}

/// dB to linear power ratio: 10^(x/10).
pub fn db_to_linear(x: Decibel) -> f64 {
    10f64.powf(x.0 / 10.0)
}

/// Linear power ratio to dB: 10*log10(r). Requires r > 0.
pub fn linear_to_db(r: f64) -> Result<Decibel> {
    if r.is_nan() || r.is_infinite() {
        return Err(Error::NonFinite {
            quantity: "power ratio",
            value: r,
        });
    }
    if r <= 0.0 {
        return Err(Error::NonPositiveRatio(r));
    }
    Ok(Decibel(10.0 * r.log10()))
}

/// A power carried in both linear (watts) and logarithmic (dBmW) views.
///
/// Watts are the stored representation and the dBmW view is derived on
/// demand, so the two can never disagree. Zero power is representable and
/// reads as -infinity dBmW; a zero-degradation budget legitimately allows
/// zero interference.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct PowerLevel {
    watts: f64,
}

impl PowerLevel {
    pub const ZERO: PowerLevel = PowerLevel { watts: 0.0 };

    /// Power from watts. Requires a finite, non-negative value.
    pub fn from_watts(watts: f64) -> Result<Self> {
        if watts.is_nan() || watts.is_infinite() {
            return Err(Error::NonFinite {
                quantity: "power",
                value: watts,
            });
        }
        if watts < 0.0 {
            return Err(Error::NegativePower(watts));
        }
        Ok(PowerLevel { watts })
    }

    /// Power from dBmW. -infinity maps to zero power; NaN and +infinity are
    /// rejected.
    pub fn from_dbmw(dbmw: f64) -> Result<Self> {
        if dbmw.is_nan() || dbmw == f64::INFINITY {
            return Err(Error::NonFinite {
                quantity: "power in dBmW",
                value: dbmw,
            });
        }
        if dbmw == f64::NEG_INFINITY {
            return Ok(PowerLevel::ZERO);
        }
        Ok(PowerLevel {
            watts: 10f64.powf((dbmw - 30.0) / 10.0),
        })
    }

    /// For internally computed values that are non-negative by construction.
    pub(crate) fn from_watts_unchecked(watts: f64) -> Self {
        debug_assert!(!watts.is_nan() && watts >= 0.0);
        PowerLevel { watts }
    }

    pub fn watts(self) -> f64 {
        self.watts
    }

    /// 10*log10(watts) + 30; -infinity for zero power.
    pub fn dbmw(self) -> f64 {
        if self.watts == 0.0 {
            f64::NEG_INFINITY
        } else {
            10.0 * self.watts.log10() + 30.0
        }
    }

    pub fn is_zero(self) -> bool {
        self.watts == 0.0
    }
}

impl std::ops::Add for PowerLevel {
    type Output = PowerLevel;

    fn add(self, rhs: PowerLevel) -> PowerLevel {
        PowerLevel {
            watts: self.watts + rhs.watts,
        }
    }
}

/// A channel bandwidth; strictly positive.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Bandwidth {
    hertz: f64,
}

impl Bandwidth {
    pub fn from_hz(hertz: f64) -> Result<Self> {
        if hertz.is_nan() || hertz.is_infinite() {
            return Err(Error::NonFinite {
                quantity: "bandwidth",
                value: hertz,
            });
        }
        if hertz <= 0.0 {
            return Err(Error::NonPositiveBandwidth(hertz));
        }
        Ok(Bandwidth { hertz })
    }

    pub fn from_mhz(mhz: f64) -> Result<Self> {
        Self::from_hz(mhz * 1e6)
    }

    pub fn hz(self) -> f64 {
        self.hertz
    }

    pub fn mhz(self) -> f64 {
        self.hertz / 1e6
    }
}

/// An absolute temperature; non-negative.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct Temperature {
    kelvin: f64,
}

impl Temperature {
    pub fn from_kelvin(kelvin: f64) -> Result<Self> {
        if kelvin.is_nan() || kelvin.is_infinite() {
            return Err(Error::NonFinite {
                quantity: "temperature",
                value: kelvin,
            });
        }
        if kelvin < 0.0 {
            return Err(Error::NegativeTemperature(kelvin));
        }
        Ok(Temperature { kelvin })
    }

    pub(crate) const fn kelvin_unchecked(kelvin: f64) -> Self {
        Temperature { kelvin }
    }

    pub fn kelvin(self) -> f64 {
        self.kelvin
    }
}

impl std::ops::Add for Temperature {
    type Output = Temperature;

    fn add(self, rhs: Temperature) -> Temperature {
        Temperature {
            kelvin: self.kelvin + rhs.kelvin,
        }
    }
}
