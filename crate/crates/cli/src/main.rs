use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use posetween::bench::{run_bench, DEFAULT_CALLS};
use posetween::codec::pga_motor_to_pose;
use posetween::engines::EngineKind;
use posetween::scenario::ScenarioFile;
use posetween::selftest::{self, Decoders};
use posetween::sim::{
    channel_pass, encode_stream, run_matrix, sample_keyframes, trace_rows, write_trace,
    ChannelConfig, NETWORK_QUALITY_RATES,
};
use posetween::{Pga, Pose};

/// Rigid pose keyframe interpolation: stream simulation, bandwidth table,
/// conformance checks and engine benchmarks.
#[derive(Parser)]
#[command(name = "posetween", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a scenario file and write one trace per engine and rate.
    Simulate {
        scenario: PathBuf,
        /// Output directory.
        #[arg(long, default_value = "out")]
        out: PathBuf,
        /// Overrides the scenario's seed.
        #[arg(long)]
        seed: Option<u64>,
        /// Only engines whose name contains this (case-insensitive).
        #[arg(long)]
        filter: Option<String>,
        /// Also dump the received packet stream of each rate.
        #[arg(long)]
        packets: bool,
    },
    /// Update-rate pairs per network quality with bandwidth reduction and
    /// measured DualQuat/Baseline cost.
    Table1 {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the table to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Only rows whose quality label contains this.
        #[arg(long)]
        filter: Option<String>,
        /// Interpolations timed per engine for the cost column.
        #[arg(long, default_value_t = 200_000)]
        calls: usize,
    },
    /// Seeded round-trip, isomorphism and endpoint suites.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Also write the results to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Only suites whose name contains this.
        #[arg(long)]
        filter: Option<String>,
        /// Swap in a deliberately broken decoder.
        #[arg(long, hide = true)]
        mutate: Option<Mutation>,
    },
    /// Time each engine's interpolate call.
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also write the table to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Only engines whose name contains this (case-insensitive).
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value_t = DEFAULT_CALLS)]
        calls: usize,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum Mutation {
    /// Negate the translation read back from PGA motors.
    PgaSign,
}

/// Exit status: 0 ok, 1 run failure, 2 bad input.
enum Failure {
    Run(String),
    Input(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Run(_) => 1,
            Failure::Input(_) => 2,
        }
    }
}

fn run_err(e: impl std::fmt::Display) -> Failure {
    Failure::Run(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Simulate {
            scenario,
            out,
            seed,
            filter,
            packets,
        } => simulate(&scenario, &out, seed, filter.as_deref(), packets),
        Command::Table1 {
            seed,
            out,
            filter,
            calls,
        } => table1(seed, out.as_deref(), filter.as_deref(), calls),
        Command::Selftest {
            seed,
            out,
            filter,
            mutate,
        } => run_selftest(seed, out.as_deref(), filter.as_deref(), mutate),
        Command::Bench {
            seed,
            out,
            filter,
            calls,
        } => bench(seed, out.as_deref(), filter.as_deref(), calls),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            match &f {
                Failure::Run(m) | Failure::Input(m) => eprintln!("error: {m}"),
            }
            ExitCode::from(f.code())
        }
    }
}

fn engine_filter(engines: &[EngineKind], filter: Option<&str>) -> Vec<EngineKind> {
    engines
        .iter()
        .copied()
        .filter(|e| {
            filter.is_none_or(|f| e.name().to_lowercase().contains(&f.to_lowercase()))
        })
        .collect()
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    print!("{text}");
    io::stdout().flush().map_err(run_err)?;
    if let Some(path) = out {
        fs::write(path, text).map_err(|e| run_err(format!("{}: {e}", path.display())))?;
    }
    Ok(())
}

fn rate_label(rate: f64) -> String {
    format!("{rate}ups")
}

fn simulate(
    path: &Path,
    out: &Path,
    seed: Option<u64>,
    filter: Option<&str>,
    packets: bool,
) -> Result<(), Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    let mut file = ScenarioFile::from_json(&text)
        .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    if let Some(seed) = seed {
        file.seed = seed;
    }
    let name = path
        .file_stem()
        .map_or_else(|| "scenario".into(), |s| s.to_string_lossy().into_owned());
    let mut scenario = file.to_scenario(&name);
    scenario.engines = engine_filter(&scenario.engines, filter);
    if scenario.engines.is_empty() {
        return Err(Failure::Input(format!(
            "no engine in the scenario matches `{}`",
            filter.unwrap_or_default()
        )));
    }

    let results = run_matrix(std::slice::from_ref(&scenario)).map_err(run_err)?;
    fs::create_dir_all(out).map_err(|e| run_err(format!("{}: {e}", out.display())))?;

    println!(
        "{:<14} {:>8} {:>10} {:>12} {:>12} {:>12} {:>7} {:>5}",
        "engine", "rate", "bytes/s", "pos_rmse_m", "ang_rmse_deg", "jitter_m", "frames", "held"
    );
    for r in &results {
        let rep = &r.report;
        let trace = out.join(format!("{}_{}.csv", rep.engine, rate_label(rep.updates_per_sec)));
        let f = fs::File::create(&trace).map_err(|e| run_err(format!("{}: {e}", trace.display())))?;
        write_trace(f, &trace_rows(&r.reconstruction, &scenario.trajectory)).map_err(run_err)?;
        println!(
            "{:<14} {:>8} {:>10} {:>12.3e} {:>12.3e} {:>12.3e} {:>7} {:>5}",
            rep.engine.name(),
            rep.updates_per_sec,
            rep.bytes_per_sec,
            rep.pos_rmse,
            rep.ang_rmse,
            rep.jitter,
            rep.frames_rendered,
            rep.held_frames
        );
    }

    if packets {
        for &rate in &scenario.updates_per_sec {
            let cfg = ChannelConfig {
                updates_per_sec: rate,
                ..scenario.channel
            };
            let received: Vec<_> = channel_pass(&sample_keyframes(&scenario.trajectory, &cfg), &cfg)
                .into_iter()
                .map(|a| a.packet)
                .collect();
            let dump = out.join(format!("packets_{}.bin", rate_label(rate)));
            fs::write(&dump, encode_stream(&received, cfg.float_width))
                .map_err(|e| run_err(format!("{}: {e}", dump.display())))?;
        }
    }

    let reports: Vec<_> = results.iter().map(|r| &r.report).collect();
    let summary = serde_json::json!({
        "scenario": name,
        "seed": file.seed,
        "render_rate_hz": scenario.render_rate_hz,
        "runs": reports,
    });
    let summary_path = out.join("summary.json");
    fs::write(&summary_path, serde_json::to_string_pretty(&summary).map_err(run_err)?)
        .map_err(|e| run_err(format!("{}: {e}", summary_path.display())))?;
    println!("wrote {} traces to {}", results.len(), out.display());
    Ok(())
}

fn table1(seed: u64, out: Option<&Path>, filter: Option<&str>, calls: usize) -> Result<(), Failure> {
    let report = run_bench(calls, seed, &[EngineKind::Baseline, EngineKind::DualQuat]);
    let ratio = report.dq_over_baseline().unwrap_or(f64::NAN);
    let mut text = format!("{:<10} {:<20} {}\n", "quality", "rates vs", "cost DualQuat/Baseline");
    for pair in NETWORK_QUALITY_RATES
        .iter()
        .filter(|p| filter.is_none_or(|f| p.quality.to_lowercase().contains(&f.to_lowercase())))
    {
        let row = format!(
            "{} vs {} \u{2192} {}%",
            pair.baseline_rate,
            pair.proposed_rate,
            pair.reduction_percent()
        );
        text += &format!("{:<10} {:<20} {:.3}\n", pair.quality, row, ratio);
    }
    emit(&text, out)
}

fn flipped_pga(m: &Pga) -> posetween::Result<Pose> {
    pga_motor_to_pose(m).map(|p| Pose {
        t: p.t.map(|c| -c),
        ..p
    })
}

fn run_selftest(
    seed: u64,
    out: Option<&Path>,
    filter: Option<&str>,
    mutate: Option<Mutation>,
) -> Result<(), Failure> {
    let mut decoders = Decoders::default();
    if let Some(Mutation::PgaSign) = mutate {
        decoders.pga = flipped_pga;
    }
    let outcomes = selftest::run(seed, filter, &decoders);
    if outcomes.is_empty() {
        return Err(Failure::Input(format!(
            "no suite matches `{}`",
            filter.unwrap_or_default()
        )));
    }
    let mut text = String::new();
    for o in &outcomes {
        text += &format!("{o}\n");
    }
    let failed = outcomes.iter().filter(|o| !o.passed()).count();
    text += &format!("{} of {} suites passed\n", outcomes.len() - failed, outcomes.len());
    emit(&text, out)?;
    if failed > 0 {
        Err(Failure::Run(format!("{failed} suite(s) failed")))
    } else {
        Ok(())
    }
}

fn bench(seed: u64, out: Option<&Path>, filter: Option<&str>, calls: usize) -> Result<(), Failure> {
    let engines = engine_filter(&EngineKind::ALL, filter);
    if engines.is_empty() {
        return Err(Failure::Input(format!(
            "no engine matches `{}`",
            filter.unwrap_or_default()
        )));
    }
    let report = run_bench(calls, seed, &engines);
    emit(&report.to_string(), out)
}
