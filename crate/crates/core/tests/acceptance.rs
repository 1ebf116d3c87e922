//! Acceptance suite: one test per release criterion, each printing a PASS
//! line with the checked tolerance. Run with `--nocapture` to see them.

use coexkit::budget::{degradation_roundtrip, max_aggregate_interference};
use coexkit::capacity::generate_sweep;
use coexkit::geometry::{worst_case_distance, CabinGeometry};
use coexkit::margin::{aggregate_and_margin, free_space_path_loss, OffenderSource};
use coexkit::standards::{
    LinkDirection, PeakRateTable, RateSide, Registry, StationKind, StationProfile,
    FDD_BANDWIDTHS_MHZ,
};
use coexkit::units::{db_to_linear, linear_to_db, Bandwidth, Decibel, PowerLevel, Temperature};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn ms_profile() -> StationProfile {
    Registry::standard().profile(StationKind::MobileStation)
}

fn mhz(m: f64) -> Bandwidth {
    Bandwidth::from_mhz(m).unwrap()
}

#[test]
fn criterion_1_reduced_model_reproduction() {
    // First-principles budget vs -113.112 + 10*log10(B_MHz), +/- 0.01 dB.
    let profile = ms_profile();
    for b in [0.625, 1.0, 2.5, 5.0, 10.0, 20.0, 40.0] {
        let engine = max_aggregate_interference(&profile, mhz(b)).i_agg_max.dbmw();
        let model = -113.112 + 10.0 * b.log10();
        let diff = (engine - model).abs();
        assert!(
            diff <= 0.01,
            "B = {b} MHz: engine {engine} vs model {model} (diff {diff})"
        );
    }
    println!("PASS criterion 1: reduced-model reproduction within 0.01 dB at 7 bandwidths");
}

#[test]
fn criterion_2_per_carrier_limit() {
    let dbmw = max_aggregate_interference(&ms_profile(), mhz(0.625))
        .i_agg_max
        .dbmw();
    let diff = (dbmw - (-115.15)).abs();
    assert!(diff <= 0.01, "625 kHz limit {dbmw} (diff {diff})");
    println!("PASS criterion 2: 625 kHz per-carrier limit {dbmw:.4} dBmW within 0.01 of -115.15");
}

#[test]
fn criterion_3_table_regeneration() {
    // All 32 peak-rate cells exactly as published, regenerated by the ratio
    // rule.
    let expected: [[f64; 8]; 4] = [
        [2.0, 4.0, 6.0, 8.0, 10.0, 12.0, 14.0, 16.0],
        [9.0, 18.0, 27.0, 36.0, 45.0, 54.0, 63.0, 72.0],
        [0.6, 1.2, 1.8, 2.4, 3.0, 3.6, 4.2, 4.8],
        [4.5, 9.0, 13.5, 18.0, 22.5, 27.0, 31.5, 36.0],
    ];
    let combos = [
        (LinkDirection::Downlink, RateSide::Low),
        (LinkDirection::Downlink, RateSide::High),
        (LinkDirection::Uplink, RateSide::Low),
        (LinkDirection::Uplink, RateSide::High),
    ];
    let rates = PeakRateTable::standard();
    for (row, (link, side)) in combos.iter().enumerate() {
        for (col, &b_fdd) in FDD_BANDWIDTHS_MHZ.iter().enumerate() {
            let got = rates.lookup(b_fdd, *link, *side).unwrap();
            assert_eq!(got, expected[row][col], "cell ({b_fdd}, {link:?}, {side:?})");
            // the generating rule, evaluated exactly in hundredths of Mbps
            let centi = (rates.ratio(*link, *side) * 100.0).round();
            assert_eq!(got, centi * (2.0 * b_fdd) / 100.0);
        }
    }

    // Spectral efficiency entries and station profiles, byte for byte in the
    // registry dump.
    let dump = Registry::standard().dump();
    let expected_dump = "\
station profiles
  mobile station: d_max = 0.5 dB, T_RX = 290 K, NF = 10 dB
  base station:   d_max = 0.5 dB, T_RX = 290 K, NF = 5 dB
spectral efficiency [bps/Hz]
  3 km/hr:   DL 2.0, UL 1.0
  120 km/hr: DL 1.5, UL 0.75
peak data rate per user [Mbps]
  B_FDD [MHz]: 2.5 5 7.5 10 12.5 15 17.5 20
  B_TDD [MHz]: 5 10 15 20 25 30 35 40
  DL low:  2 4 6 8 10 12 14 16
  DL high: 9 18 27 36 45 54 63 72
  UL low:  0.6 1.2 1.8 2.4 3 3.6 4.2 4.8
  UL high: 4.5 9 13.5 18 22.5 27 31.5 36
mobility classes [km/hr]
  stationary 0, pedestrian 10, vehicular 100, high-speed vehicular 500, aeronautical 1500, satellite 27000
offender limits
  max EIRP density -41.3 dBmW/MHz, channel BW 528 MHz, band 3.1-10.6 GHz
";
    assert_eq!(dump, expected_dump);
    println!("PASS criterion 3: 32 rate cells exact, registry dump byte-identical");
}

#[test]
fn criterion_4_sweep_fidelity() {
    let reg = Registry::standard();
    let profile = reg.profile(StationKind::MobileStation);
    let ped = generate_sweep(3.0, &profile, reg.eta(), reg.peak_rates()).unwrap();
    let fast = generate_sweep(120.0, &profile, reg.eta(), reg.peak_rates()).unwrap();
    assert_eq!(ped.len(), 32);
    assert_eq!(fast.len(), 32);

    // Endpoint checks on the pedestrian sweep.
    let dl_2mbps = ped
        .iter()
        .find(|p| p.link == LinkDirection::Downlink && p.r_peak_mbps == 2.0)
        .unwrap()
        .i_agg_max
        .dbmw();
    assert!(
        (dl_2mbps - (-113.112)).abs() <= 0.01,
        "(2 Mbps, DL): {dl_2mbps}"
    );
    let ul_36mbps = ped
        .iter()
        .find(|p| p.link == LinkDirection::Uplink && p.r_peak_mbps == 36.0)
        .unwrap()
        .i_agg_max
        .dbmw();
    assert!(
        (ul_36mbps - (-97.55)).abs() <= 0.01,
        "(36 Mbps, UL): {ul_36mbps}"
    );

    // Uniform mobility offset of 10*log10(4/3) dB at every point.
    let offset = 10.0 * (4.0f64 / 3.0).log10();
    for (p, f) in ped.iter().zip(&fast) {
        let delta = f.i_agg_max.dbmw() - p.i_agg_max.dbmw();
        assert!(
            (delta - offset).abs() <= 1e-6,
            "({}, {:?}, {:?}): delta {delta} vs {offset}",
            p.b_fdd_mhz,
            p.link,
            p.side
        );
    }
    println!(
        "PASS criterion 4: sweep endpoints within 0.01 dB, mobility offset {offset:.4} dB at all 32 points within 1e-6"
    );
}

#[test]
fn criterion_5_degradation_round_trip() {
    let mut rng = StdRng::seed_from_u64(0x05ee_dc0e);
    for trial in 0..1000 {
        let kind = if rng.random_bool(0.5) {
            StationKind::MobileStation
        } else {
            StationKind::BaseStation
        };
        let d_max: f64 = rng.random_range(1e-6..=6.0);
        let profile = StationProfile::new(
            kind,
            Decibel::new(d_max).unwrap(),
            Temperature::from_kelvin(rng.random_range(50.0..600.0)).unwrap(),
            Decibel::new(rng.random_range(0.0..15.0)).unwrap(),
        )
        .unwrap();
        let b = mhz(rng.random_range(0.01..100.0));
        let p_rx = PowerLevel::from_dbmw(rng.random_range(-150.0..0.0)).unwrap();
        let recovered = degradation_roundtrip(&profile, b, p_rx).unwrap().db();
        assert!(
            (recovered - d_max).abs() < 1e-9,
            "trial {trial}: recovered {recovered} vs d_max {d_max}"
        );
    }
    println!("PASS criterion 5: degradation round trip within 1e-9 dB on 1000 random triples");
}

#[test]
fn criterion_6_geometry() {
    let d = worst_case_distance(&CabinGeometry::default_cabin());
    assert!((d - 9.787).abs() <= 0.001, "default cabin: {d}");

    // Corner-maximizer property against a 3D grid oracle with <= 5 cm
    // spacing on 50 random boxes, agreement within one grid step.
    let mut rng = StdRng::seed_from_u64(0x0cab_14e0);
    for case in 0..50 {
        let (l, w, h) = (
            rng.random_range(0.4..3.0),
            rng.random_range(0.4..3.0),
            rng.random_range(0.4..3.0),
        );
        let master = [
            rng.random_range(0.0..=l),
            rng.random_range(0.0..=w),
            rng.random_range(0.0..=h),
        ];
        let g = CabinGeometry::with_master(l, w, h, master).unwrap();
        let analytic = worst_case_distance(&g);

        let spacing = 0.05f64;
        let steps = |dim: f64| (dim / spacing).ceil() as usize;
        let (nx, ny, nz) = (steps(l), steps(w), steps(h));
        let mut grid_max: f64 = 0.0;
        for ix in 0..=nx {
            for iy in 0..=ny {
                for iz in 0..=nz {
                    let p = [
                        l * ix as f64 / nx as f64,
                        w * iy as f64 / ny as f64,
                        h * iz as f64 / nz as f64,
                    ];
                    let dx = p[0] - master[0];
                    let dy = p[1] - master[1];
                    let dz = p[2] - master[2];
                    grid_max = grid_max.max((dx * dx + dy * dy + dz * dz).sqrt());
                }
            }
        }
        // no sampled box point beats the corner maximum, and the grid gets
        // within one grid step (cell diagonal) of it
        assert!(
            grid_max <= analytic + 1e-9,
            "case {case}: grid {grid_max} exceeds analytic {analytic}"
        );
        assert!(
            analytic - grid_max <= 3f64.sqrt() * spacing,
            "case {case}: analytic {analytic} too far above grid {grid_max}"
        );
    }
    println!("PASS criterion 6: default cabin {d:.4} m within 0.001 of 9.787; corner maximizer agrees with 50 grid oracles");
}

#[test]
fn criterion_7_margin_laws() {
    let src = OffenderSource::at_regulatory_limit(1.0, 3.5e9).unwrap();
    let threshold = PowerLevel::from_dbmw(-60.0).unwrap();
    let single = aggregate_and_margin(&[src], threshold, mhz(1.0))
        .unwrap()
        .aggregate
        .dbmw();
    for n in [1usize, 2, 10, 100] {
        let sources = vec![src; n];
        let agg = aggregate_and_margin(&sources, threshold, mhz(1.0))
            .unwrap()
            .aggregate
            .dbmw();
        let expected = single + 10.0 * (n as f64).log10();
        assert!(
            (agg - expected).abs() < 1e-9,
            "n = {n}: {agg} vs {expected}"
        );
    }
    let fspl = free_space_path_loss(1.0, 2.4e9).unwrap().db();
    assert!((fspl - 40.05).abs() <= 0.01, "FSPL(1 m, 2.4 GHz) = {fspl}");
    println!("PASS criterion 7: aggregation follows 10*log10(N) within 1e-9; FSPL(1 m, 2.4 GHz) = {fspl:.4} dB");
}

#[test]
fn criterion_8_unit_round_trips() {
    let mut rng = StdRng::seed_from_u64(0x000d_be11);
    for _ in 0..1_000_000 {
        let dbmw: f64 = rng.random_range(-200.0..60.0);
        let p = PowerLevel::from_dbmw(dbmw).unwrap();
        let back = PowerLevel::from_watts(p.watts()).unwrap().dbmw();
        let again = PowerLevel::from_dbmw(back).unwrap();
        let rel = (again.watts() - p.watts()).abs() / p.watts();
        assert!(rel < 1e-12, "dBmW {dbmw}: relative error {rel}");

        let ratio = db_to_linear(Decibel::new(dbmw / 10.0).unwrap());
        let back = db_to_linear(linear_to_db(ratio).unwrap());
        let rel = (back - ratio).abs() / ratio;
        assert!(rel < 1e-12, "ratio {ratio}: relative error {rel}");
    }
    println!("PASS criterion 8: dBmW/W and dB/ratio round trips within 1e-12 over 1e6 samples");
}
