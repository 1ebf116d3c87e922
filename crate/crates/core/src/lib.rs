//! Interference budget toolkit for spectrum coexistence studies.
//!
//! An IEEE 802.20 (MBWA) receiver tolerates only a capped degradation of its
//! output SNR. This crate converts that allowance into the maximum aggregate
//! interference power the receiver can absorb, couples the threshold to
//! channel bandwidth, link direction, peak data rate and mobility through the
//! published standard tables, and adds two practical companions: the
//! worst-case master-to-slave distance inside a railway cabin, and a margin
//! check for a population of UWB-class offenders radiating through free
//! space.
//!
//! Everything is computed in the linear domain (watts, hertz, kelvin);
//! decibel values exist only at API boundaries.

pub mod budget;
pub mod capacity;
mod error;
pub mod geometry;
pub mod margin;
pub mod noise;
pub mod standards;
pub mod units;

pub use error::{Error, Result};
