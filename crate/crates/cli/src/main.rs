//! `qconcept`: batch classification and modelling of membership data.

mod selftest;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use qconcept::data::{analyze, embedded_samples, parse_dataset, write_report, Dataset, ModelKind, ReportConfig};

#[derive(Parser, Debug)]
#[command(name = "qconcept", version, about = "Classify and model concept-combination membership weights")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify every item as classical, Δ-type or k-type.
    Classify(Common),
    /// Build the model chosen by `--kind` for every item.
    Model(Common),
    /// Fit (θ, φ) on a grid for each pair, then solve every item in ℝ⁸.
    FitAngles(FitArgs),
    /// Classification plus models; pairs needing ℝ⁸ without known angles are
    /// fitted first.
    Report(Common),
    /// Replay the worked examples of the reference corpus.
    Selftest(SelftestArgs),
}

#[derive(Args, Debug)]
struct Common {
    /// CSV file with header `pair_id,item,connective,mu_a,mu_b,mu_combo`.
    #[arg(long, value_name = "PATH", conflicts_with = "embedded", required_unless_present = "embedded")]
    input: Option<PathBuf>,
    /// Use the embedded reference corpus.
    #[arg(long)]
    embedded: bool,
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Model to build.
    #[arg(long, default_value = "auto", value_parser = parse_kind)]
    kind: ModelKind,
    /// Classification tolerance.
    #[arg(long, value_name = "FLOAT", value_parser = parse_tolerance)]
    tolerance: Option<f64>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
}

#[derive(Args, Debug)]
struct FitArgs {
    #[command(flatten)]
    common: Common,
    /// Grid step for θ in degrees.
    #[arg(long, default_value_t = 1.0, value_parser = parse_step)]
    theta_step: f64,
    /// Grid step for φ in degrees.
    #[arg(long, default_value_t = 1.0, value_parser = parse_step)]
    phi_step: f64,
}

#[derive(Args, Debug)]
struct SelftestArgs {
    /// Write to this file instead of standard output.
    #[arg(long, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Worker threads (defaults to the number of cores).
    #[arg(long, value_name = "N", value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
}

fn parse_kind(s: &str) -> Result<ModelKind, String> {
    s.parse()
}

fn parse_tolerance(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v >= 0.0 => Ok(v),
        _ => Err(format!("`{s}` is not a nonnegative number")),
    }
}

fn parse_step(s: &str) -> Result<f64, String> {
    match s.parse::<f64>() {
        Ok(v) if v.is_finite() && v > 0.0 && v < 90.0 => Ok(v),
        _ => Err(format!("`{s}` is not a step in (0, 90) degrees")),
    }
}

/// Failure classes mapped to exit codes.
enum Failure {
    Items(usize),
    Config(anyhow::Error),
    Data(anyhow::Error),
}

fn configure_threads(jobs: Option<u16>) -> Result<(), Failure> {
    if let Some(n) = jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(usize::from(n))
            .build_global()
            .context("configuring the worker pool")
            .map_err(Failure::Config)?;
    }
    Ok(())
}

fn load(common: &Common) -> Result<Dataset, Failure> {
    match &common.input {
        None => Ok(embedded_samples()),
        Some(path) => {
            let text = fs::read_to_string(path)
                .with_context(|| format!("reading {}", path.display()))
                .map_err(Failure::Config)?;
            parse_dataset(&text)
                .with_context(|| format!("parsing {}", path.display()))
                .map_err(Failure::Data)
        }
    }
}

fn emit(output: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match output {
        Some(path) => fs::write(path, text)
            .with_context(|| format!("writing {}", path.display()))
            .map_err(Failure::Config),
        None => {
            let mut out = io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|()| out.flush()).context("writing output").map_err(Failure::Data)
        }
    }
}

fn run_report(common: &Common, cfg: ReportConfig) -> Result<(), Failure> {
    configure_threads(common.jobs)?;
    let dataset = load(common)?;
    let mut cfg = cfg;
    if let Some(eps) = common.tolerance {
        cfg.eps = eps;
    }
    let report = analyze(&dataset, &cfg);
    emit(common.output.as_ref(), &(write_report(&report) + "\n"))?;
    match report.error_count() {
        0 => Ok(()),
        n => Err(Failure::Items(n)),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Classify(c) => run_report(&c, ReportConfig::default()),
        Command::Model(c) => {
            let cfg = ReportConfig { kind: Some(c.kind), ..ReportConfig::default() };
            run_report(&c, cfg)
        }
        Command::Report(c) => {
            let cfg = ReportConfig { kind: Some(c.kind), fit_missing_angles: true, ..ReportConfig::default() };
            run_report(&c, cfg)
        }
        Command::FitAngles(f) => {
            let cfg = ReportConfig {
                kind: Some(ModelKind::R8),
                fit_angles: true,
                theta_step: f.theta_step,
                phi_step: f.phi_step,
                ..ReportConfig::default()
            };
            run_report(&f.common, cfg)
        }
        Command::Selftest(s) => {
            configure_threads(s.jobs)?;
            let outcome = selftest::run();
            emit(s.output.as_ref(), &outcome.render())?;
            match outcome.failures() {
                0 => Ok(()),
                n => Err(Failure::Items(n)),
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Items(n)) => {
            eprintln!("qconcept: {n} item(s) failed");
            ExitCode::from(1)
        }
        Err(Failure::Data(e)) => {
            eprintln!("qconcept: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Config(e)) => {
            eprintln!("qconcept: {e:#}");
            ExitCode::from(2)
        }
    }
}
