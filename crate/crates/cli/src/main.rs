//! Command-line surface for the interference budget toolkit.
//!
//! Subcommands: `noise`, `budget`, `sweep`, `geometry`, `margin`. Shared
//! flags: `--format {human|csv|json}`, `--params <json-file>` for parameter
//! overrides, `--output <path>` to write to a file instead of stdout.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

use coexkit::budget::max_aggregate_interference;
use coexkit::capacity::{
    generate_sweep, sweep_to_csv, sweep_to_json, SweepPoint, HIGH_SPEED_KMH, PEDESTRIAN_SPEED_KMH,
};
use coexkit::geometry::{
    optimal_master_xy, worst_case_corner, CabinGeometry, DEFAULT_HEIGHT_M, DEFAULT_LENGTH_M,
    DEFAULT_WIDTH_M,
};
use coexkit::margin::{aggregate_and_margin, offenders_from_json, MarginReport};
use coexkit::noise::{noise_power, NoiseBreakdown};
use coexkit::standards::{Registry, StationKind, StationProfile};
use coexkit::units::{Bandwidth, PowerLevel};

use render::{Field, Format};

#[derive(Parser)]
#[command(
    name = "coexkit",
    version,
    about = "Interference budgets for UWB/MBWA spectrum coexistence"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// JSON file with parameter overrides
    #[arg(long, global = true, value_name = "FILE")]
    params: Option<PathBuf>,
    /// Write output to a file instead of standard output
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Thermal noise floor of a victim receiver
    Noise(NoiseArgs),
    /// Maximum tolerable aggregate interference for a victim receiver
    Budget(BudgetArgs),
    /// Interference thresholds across the tabulated peak data rates
    Sweep(SweepArgs),
    /// Worst-case master-to-slave distance inside a cabin
    Geometry(GeometryArgs),
    /// Aggregate offender power against an interference threshold
    Margin(MarginArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Station {
    Ms,
    Bs,
}

impl Station {
    fn kind(self) -> StationKind {
        match self {
            Station::Ms => StationKind::MobileStation,
            Station::Bs => StationKind::BaseStation,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
    /// 625 kHz per-carrier mode
    #[value(name = "625k")]
    Carrier625k,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mobility {
    Pedestrian,
    Highspeed,
}

impl Mobility {
    fn speed_kmh(self) -> f64 {
        match self {
            Mobility::Pedestrian => PEDESTRIAN_SPEED_KMH,
            Mobility::Highspeed => HIGH_SPEED_KMH,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Mobility::Pedestrian => "pedestrian",
            Mobility::Highspeed => "high-speed",
        }
    }
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct NoiseArgs {
    /// Victim station
    #[arg(long, value_enum)]
    station: Station,
    /// Channel bandwidth in MHz
    #[arg(long)]
    bw_mhz: f64,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
#[command(group = ArgGroup::new("channel").required(true).args(["bw_mhz", "mode"]))]
struct BudgetArgs {
    /// Victim station
    #[arg(long, value_enum)]
    station: Station,
    /// Channel bandwidth in MHz
    #[arg(long)]
    bw_mhz: Option<f64>,
    /// Fixed-carrier operating mode
    #[arg(long, value_enum)]
    mode: Option<Mode>,
}

#[derive(Args)]
struct SweepArgs {
    /// Mobility label bound to the tabulated spectral efficiencies
    #[arg(long, value_enum)]
    mobility: Mobility,
    /// Victim station
    #[arg(long, value_enum, default_value_t = Station::Ms)]
    station: Station,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct GeometryArgs {
    /// Cabin length in m
    #[arg(long, default_value_t = DEFAULT_LENGTH_M)]
    length: f64,
    /// Cabin width in m
    #[arg(long, default_value_t = DEFAULT_WIDTH_M)]
    width: f64,
    /// Cabin height in m
    #[arg(long, default_value_t = DEFAULT_HEIGHT_M)]
    height: f64,
    /// Master x position on the ceiling (default: length/2)
    #[arg(long)]
    master_x: Option<f64>,
    /// Master y position on the ceiling (default: width/2)
    #[arg(long)]
    master_y: Option<f64>,
    /// Read the cabin from a JSON file instead:
    /// {length_m, width_m, height_m, master_x_m?, master_y_m?}
    #[arg(long, value_name = "FILE", conflicts_with_all = [
        "length", "width", "height", "master_x", "master_y",
    ])]
    from_json: Option<PathBuf>,
}

#[derive(Args)]
#[command(allow_negative_numbers = true)]
struct MarginArgs {
    /// JSON file with an array of offenders:
    /// [{eirp_dbm_per_mhz?, distance_m, frequency_ghz}, ...]
    #[arg(long, value_name = "FILE")]
    offenders: PathBuf,
    /// Explicit threshold in dBmW; otherwise derived from station and bandwidth
    #[arg(long)]
    threshold_dbmw: Option<f64>,
    /// Victim station for a derived threshold
    #[arg(long, value_enum, default_value_t = Station::Ms)]
    station: Station,
    /// Victim channel bandwidth in MHz
    #[arg(long)]
    bw_mhz: f64,
}

fn main() -> ExitCode {
    match run() {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run() -> anyhow::Result<()> {
    let cli = Cli::parse();
    let registry = match &cli.params {
        Some(path) => {
            let doc = fs::read_to_string(path)
                .with_context(|| format!("reading parameter overrides from {}", path.display()))?;
            Registry::with_overrides_json(&doc)?
        }
        None => Registry::standard(),
    };

    let rendered = match &cli.command {
        Command::Noise(args) => cmd_noise(args, &registry, cli.format)?,
        Command::Budget(args) => cmd_budget(args, &registry, cli.format)?,
        Command::Sweep(args) => cmd_sweep(args, &registry, cli.format)?,
        Command::Geometry(args) => cmd_geometry(args, cli.format)?,
        Command::Margin(args) => cmd_margin(args, &registry, cli.format)?,
    };

    match &cli.output {
        Some(path) => fs::write(path, rendered)
            .with_context(|| format!("writing output to {}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(())
}

fn noise_fields(profile: &StationProfile, bw: Bandwidth, n: &NoiseBreakdown) -> Vec<Field> {
    vec![
        Field::Text("station", profile.kind().label().to_string()),
        Field::Num("b_ch_mhz", bw.mhz()),
        Field::Num("t_amp_k", n.t_amp.kelvin()),
        Field::Num("t_total_k", n.t_total.kelvin()),
        Field::Num("noise_dbmw", n.noise.dbmw()),
        Field::Watts("noise_w", n.noise.watts()),
    ]
}

fn cmd_noise(args: &NoiseArgs, registry: &Registry, format: Format) -> anyhow::Result<String> {
    let bw = Bandwidth::from_mhz(args.bw_mhz)?;
    let profile = registry.profile(args.station.kind());
    let n = noise_power(&profile, bw);
    let title = format!(
        "noise floor ({}, B_CH {:.4} MHz)",
        profile.kind().label(),
        bw.mhz()
    );
    Ok(render::record(&title, &noise_fields(&profile, bw, &n), format))
}

fn cmd_budget(args: &BudgetArgs, registry: &Registry, format: Format) -> anyhow::Result<String> {
    let bw = match (args.bw_mhz, args.mode) {
        (Some(mhz), None) => Bandwidth::from_mhz(mhz)?,
        (None, Some(Mode::Carrier625k)) => Bandwidth::from_mhz(0.625)?,
        _ => unreachable!("clap enforces exactly one of --bw-mhz/--mode"),
    };
    let profile = registry.profile(args.station.kind());
    let budget = max_aggregate_interference(&profile, bw);
    let mut fields = noise_fields(&profile, bw, &budget.noise);
    fields.extend([
        Field::Num("d_max_db", budget.d.db()),
        Field::Num("i_agg_max_dbmw", budget.i_agg_max.dbmw()),
        Field::Watts("i_agg_max_w", budget.i_agg_max.watts()),
        Field::Num("noise_fraction", budget.noise_fraction()),
    ]);
    let mode_note = if args.mode.is_some() { ", per 625 kHz carrier" } else { "" };
    let title = format!(
        "interference budget ({}, B_CH {:.4} MHz{})",
        profile.kind().label(),
        bw.mhz(),
        mode_note
    );
    Ok(render::record(&title, &fields, format))
}

fn cmd_sweep(args: &SweepArgs, registry: &Registry, format: Format) -> anyhow::Result<String> {
    let profile = registry.profile(args.station.kind());
    let points = generate_sweep(
        args.mobility.speed_kmh(),
        &profile,
        registry.eta(),
        registry.peak_rates(),
    )?;
    Ok(match format {
        Format::Csv => sweep_to_csv(&points),
        Format::Json => {
            let mut out = sweep_to_json(&points);
            out.push('\n');
            out
        }
        Format::Human => {
            let title = format!(
                "max aggregate interference sweep ({}, {})",
                args.mobility.label(),
                profile.kind().label()
            );
            let header = [
                "mobility_kmh",
                "link",
                "side",
                "b_fdd_mhz",
                "b_tdd_mhz",
                "r_peak_mbps",
                "eta_bps_hz",
                "b_eff_mhz",
                "i_agg_max_dbmw",
            ];
            let rows: Vec<Vec<String>> = points.iter().map(sweep_row).collect();
            render::table(&title, &header, &rows)
        }
    })
}

fn sweep_row(p: &SweepPoint) -> Vec<String> {
    vec![
        format!("{:.4}", p.mobility_kmh),
        p.link.label().to_string(),
        p.side.label().to_string(),
        format!("{:.4}", p.b_fdd_mhz),
        format!("{:.4}", p.b_tdd_mhz),
        format!("{:.4}", p.r_peak_mbps),
        format!("{:.4}", p.eta_bps_hz),
        format!("{:.4}", p.b_eff_mhz),
        format!("{:.4}", p.i_agg_max.dbmw()),
    ]
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct GeometryFile {
    length_m: f64,
    width_m: f64,
    height_m: f64,
    master_x_m: Option<f64>,
    master_y_m: Option<f64>,
}

fn cmd_geometry(args: &GeometryArgs, format: Format) -> anyhow::Result<String> {
    let (length, width, height, master_x, master_y) = match &args.from_json {
        Some(path) => {
            let doc = fs::read_to_string(path)
                .with_context(|| format!("reading geometry from {}", path.display()))?;
            let g: GeometryFile = serde_json::from_str(&doc)
                .with_context(|| format!("parsing geometry file {}", path.display()))?;
            (g.length_m, g.width_m, g.height_m, g.master_x_m, g.master_y_m)
        }
        None => (
            args.length,
            args.width,
            args.height,
            args.master_x,
            args.master_y,
        ),
    };
    let cabin = CabinGeometry::with_master_xy(
        length,
        width,
        height,
        master_x.unwrap_or(length / 2.0),
        master_y.unwrap_or(width / 2.0),
    )?;
    let (corner, distance) = worst_case_corner(&cabin);
    let optimal = optimal_master_xy(&cabin);
    let master = cabin.master();
    let fields = vec![
        Field::Num("length_m", cabin.length()),
        Field::Num("width_m", cabin.width()),
        Field::Num("height_m", cabin.height()),
        Field::Num("master_x_m", master[0]),
        Field::Num("master_y_m", master[1]),
        Field::Num("master_z_m", master[2]),
        Field::Num("worst_case_distance_m", distance),
        Field::Num("corner_x_m", corner[0]),
        Field::Num("corner_y_m", corner[1]),
        Field::Num("corner_z_m", corner[2]),
        Field::Num("optimal_master_x_m", optimal[0]),
        Field::Num("optimal_master_y_m", optimal[1]),
    ];
    let title = format!(
        "worst-case cabin distance ({:.2} x {:.2} x {:.2} m)",
        cabin.length(),
        cabin.width(),
        cabin.height()
    );
    Ok(render::record(&title, &fields, format))
}

fn margin_fields(report: &MarginReport, n_sources: usize, bw: Bandwidth) -> Vec<Field> {
    vec![
        Field::Int("n_offenders", n_sources),
        Field::Num("victim_bw_mhz", bw.mhz()),
        Field::Num("threshold_dbmw", report.threshold.dbmw()),
        Field::Watts("threshold_w", report.threshold.watts()),
        Field::Num("aggregate_dbmw", report.aggregate.dbmw()),
        Field::Watts("aggregate_w", report.aggregate.watts()),
        Field::Num("margin_db", report.margin_db.db()),
        Field::Text("verdict", report.verdict.label().to_string()),
    ]
}

fn cmd_margin(args: &MarginArgs, registry: &Registry, format: Format) -> anyhow::Result<String> {
    let doc = fs::read_to_string(&args.offenders)
        .with_context(|| format!("reading offenders from {}", args.offenders.display()))?;
    let sources = offenders_from_json(&doc)?;
    let bw = Bandwidth::from_mhz(args.bw_mhz)?;
    let profile = registry.profile(args.station.kind());
    let threshold = match args.threshold_dbmw {
        Some(dbmw) => PowerLevel::from_dbmw(dbmw)?,
        None => max_aggregate_interference(&profile, bw).i_agg_max,
    };
    let report = aggregate_and_margin(&sources, threshold, bw)?;
    let title = format!(
        "coexistence margin ({} offender{})",
        sources.len(),
        if sources.len() == 1 { "" } else { "s" }
    );
    Ok(render::record(
        &title,
        &margin_fields(&report, sources.len(), bw),
        format,
    ))
}
