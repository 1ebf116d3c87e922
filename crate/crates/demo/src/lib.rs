//! Browser bindings for the interference budget toolkit.
//!
//! Three interactive operations back the static page in `www/`: the
//! interference budget for a station and bandwidth, the threshold sweep over
//! the tabulated peak rates, and the worst-case cabin distance. Each returns
//! a JSON string so the page needs no generated bindings beyond the module
//! itself.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use coexkit::budget::max_aggregate_interference;
use coexkit::capacity::{generate_sweep, sweep_to_json, HIGH_SPEED_KMH, PEDESTRIAN_SPEED_KMH};
use coexkit::geometry::{optimal_master_xy, worst_case_corner, CabinGeometry};
use coexkit::standards::{Registry, StationKind};
use coexkit::units::Bandwidth;

fn station_kind(label: &str) -> Result<StationKind, String> {
    match label {
        "ms" => Ok(StationKind::MobileStation),
        "bs" => Ok(StationKind::BaseStation),
        other => Err(format!("unknown station '{other}' (expected ms or bs)")),
    }
}

fn mobility_speed(label: &str) -> Result<f64, String> {
    match label {
        "pedestrian" => Ok(PEDESTRIAN_SPEED_KMH),
        "highspeed" => Ok(HIGH_SPEED_KMH),
        other => Err(format!(
            "unknown mobility '{other}' (expected pedestrian or highspeed)"
        )),
    }
}

#[derive(Serialize)]
struct BudgetReport {
    station: &'static str,
    b_ch_mhz: f64,
    t_amp_k: f64,
    t_total_k: f64,
    noise_dbmw: f64,
    noise_w: f64,
    d_max_db: f64,
    i_agg_max_dbmw: f64,
    i_agg_max_w: f64,
    noise_fraction: f64,
}

pub(crate) fn budget_report_impl(station: &str, bw_mhz: f64) -> Result<String, String> {
    let kind = station_kind(station)?;
    let bw = Bandwidth::from_mhz(bw_mhz).map_err(|e| e.to_string())?;
    let profile = Registry::standard().profile(kind);
    let budget = max_aggregate_interference(&profile, bw);
    let report = BudgetReport {
        station: kind.label(),
        b_ch_mhz: bw.mhz(),
        t_amp_k: budget.noise.t_amp.kelvin(),
        t_total_k: budget.noise.t_total.kelvin(),
        noise_dbmw: budget.noise.noise.dbmw(),
        noise_w: budget.noise.noise.watts(),
        d_max_db: budget.d.db(),
        i_agg_max_dbmw: budget.i_agg_max.dbmw(),
        i_agg_max_w: budget.i_agg_max.watts(),
        noise_fraction: budget.noise_fraction(),
    };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

pub(crate) fn sweep_points_impl(mobility: &str, station: &str) -> Result<String, String> {
    let speed = mobility_speed(mobility)?;
    let kind = station_kind(station)?;
    let reg = Registry::standard();
    let profile = reg.profile(kind);
    let points = generate_sweep(speed, &profile, reg.eta(), reg.peak_rates())
        .map_err(|e| e.to_string())?;
    Ok(sweep_to_json(&points))
}

#[derive(Serialize)]
struct CabinReport {
    length_m: f64,
    width_m: f64,
    height_m: f64,
    master: [f64; 3],
    worst_case_distance_m: f64,
    worst_corner: [f64; 3],
    optimal_master: [f64; 2],
}

pub(crate) fn cabin_report_impl(
    length_m: f64,
    width_m: f64,
    height_m: f64,
    master_x: Option<f64>,
    master_y: Option<f64>,
) -> Result<String, String> {
    let cabin = CabinGeometry::with_master_xy(
        length_m,
        width_m,
        height_m,
        master_x.unwrap_or(length_m / 2.0),
        master_y.unwrap_or(width_m / 2.0),
    )
    .map_err(|e| e.to_string())?;
    let (corner, distance) = worst_case_corner(&cabin);
    let report = CabinReport {
        length_m: cabin.length(),
        width_m: cabin.width(),
        height_m: cabin.height(),
        master: cabin.master(),
        worst_case_distance_m: distance,
        worst_corner: corner,
        optimal_master: optimal_master_xy(&cabin),
    };
    serde_json::to_string(&report).map_err(|e| e.to_string())
}

/// Interference budget for a station ("ms" or "bs") and bandwidth in MHz.
#[wasm_bindgen]
pub fn budget_report(station: &str, bw_mhz: f64) -> Result<String, JsError> {
    budget_report_impl(station, bw_mhz).map_err(|e| JsError::new(&e))
}

/// 32-point threshold sweep for a mobility label ("pedestrian" or
/// "highspeed") and station.
#[wasm_bindgen]
pub fn sweep_points(mobility: &str, station: &str) -> Result<String, JsError> {
    sweep_points_impl(mobility, station).map_err(|e| JsError::new(&e))
}

/// Worst-case master-to-slave distance for a cabin; the master defaults to
/// the ceiling center when no position is given.
#[wasm_bindgen]
pub fn cabin_report(
    length_m: f64,
    width_m: f64,
    height_m: f64,
    master_x: Option<f64>,
    master_y: Option<f64>,
) -> Result<String, JsError> {
    cabin_report_impl(length_m, width_m, height_m, master_x, master_y)
        .map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn budget_report_matches_library_values() {
        let json: serde_json::Value =
            serde_json::from_str(&budget_report_impl("ms", 1.0).unwrap()).unwrap();
        let dbmw = json["i_agg_max_dbmw"].as_f64().unwrap();
        assert!((dbmw - (-113.11093200261113)).abs() < 1e-9, "got {dbmw}");
        assert_eq!(json["station"], "mobile station");
    }

    #[test]
    fn budget_report_rejects_bad_inputs() {
        assert!(budget_report_impl("tower", 1.0).is_err());
        assert!(budget_report_impl("ms", 0.0).is_err());
    }

    #[test]
    fn sweep_points_has_32_rows() {
        let json: serde_json::Value =
            serde_json::from_str(&sweep_points_impl("pedestrian", "ms").unwrap()).unwrap();
        assert_eq!(json.as_array().unwrap().len(), 32);
        assert!(sweep_points_impl("vehicular", "ms").is_err());
    }

    #[test]
    fn cabin_report_default_master() {
        let json: serde_json::Value =
            serde_json::from_str(&cabin_report_impl(18.70, 2.90, 2.50, None, None).unwrap())
                .unwrap();
        let d = json["worst_case_distance_m"].as_f64().unwrap();
        assert!((d - 9.786470252343283).abs() < 1e-9, "got {d}");
        assert!(cabin_report_impl(-1.0, 2.0, 2.0, None, None).is_err());
    }
}
