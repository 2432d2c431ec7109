//! Command-line entry point: verification suites, convergence studies and
//! profile exports.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};

use emdirac_cli::config::{
    apply_file, parse_config_file, parse_grid_sizes, parse_tolerance, OutputFormat, RunConfig,
    UnitsMode,
};
use emdirac_cli::converge::convergence_study;
use emdirac_cli::suites::{run_suites, Suite};

use emdirac_core::algebra::DiracForm;
use emdirac_core::born_infeld::{write_radial_profile, BIParams};
use emdirac_core::evolution::evolve;
use emdirac_core::plane_waves::{plane_wave, PlaneWaveSpec};
use emdirac_core::FieldGrid1D;

#[derive(Parser)]
#[command(
    name = "emdirac",
    version,
    about = "verification suites for the electromagnetic Dirac toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite and emit a report
    Verify {
        /// algebra | field-map | plane-waves | massive-em | evolution | nonlinear | born-infeld | all
        suite: String,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Run one named check across the configured grid sizes
    Converge {
        /// Check id, e.g. evolution.advect-m0 (see --help for the list)
        check: String,
        /// Use the deliberately first-order stepper (order self-test)
        #[arg(long)]
        first_order: bool,
        #[command(flatten)]
        common: CommonArgs,
    },
    /// Export an analytic profile as CSV
    Profile {
        /// Only `born-infeld` is available
        target: String,
        /// Number of radii, log-spaced over r/r0 in [0.01, 100]
        #[arg(long, default_value_t = 200)]
        points: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Export a grid state as CSV
    Export {
        /// Only `grid` is available
        what: String,
        /// Grid points
        #[arg(long, default_value_t = 256)]
        n: usize,
        /// Steps to advance before exporting
        #[arg(long, default_value_t = 0)]
        steps: usize,
        /// Mode number of the initial wave
        #[arg(long, default_value_t = 1)]
        mode: u32,
        /// Courant ratio c dt / dy
        #[arg(long, default_value_t = 0.5)]
        cfl: f64,
        #[arg(long, value_enum, default_value_t = UnitsMode::Natural)]
        units: UnitsMode,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CommonArgs {
    /// Flat key=value config file; flags override it
    #[arg(long)]
    config: Option<PathBuf>,
    /// Comma-separated grid sizes, e.g. 128,256,512
    #[arg(long)]
    n: Option<String>,
    /// Per-check tolerance override, repeatable: check-id=value
    #[arg(long = "tol")]
    tol: Vec<String>,
    /// Seed for all random sweeps
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum)]
    units: Option<UnitsMode>,
    #[arg(long, value_enum)]
    format: Option<OutputFormat>,
    /// Output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include printed-table reproductions that violate dispersion
    #[arg(long)]
    paper_literal: bool,
    /// Omit timestamps so identical runs are byte-identical
    #[arg(long)]
    fixed_clock: bool,
}

fn build_config(common: &CommonArgs) -> Result<RunConfig, String> {
    let mut cfg = RunConfig::default();
    if let Some(path) = &common.config {
        let text = fs::read_to_string(path)
            .map_err(|e| format!("cannot read config {}: {e}", path.display()))?;
        let map = parse_config_file(&text)?;
        apply_file(&mut cfg, &map)?;
    }
    if let Some(n) = &common.n {
        cfg.grid_sizes = parse_grid_sizes(n)?;
    }
    for tol in &common.tol {
        let (id, value) = parse_tolerance(tol)?;
        cfg.tolerances.insert(id, value);
    }
    if let Some(seed) = common.seed {
        cfg.seed = seed;
    }
    if let Some(units) = common.units {
        cfg.units = units;
    }
    if let Some(format) = common.format {
        cfg.format = format;
    }
    if let Some(out) = &common.out {
        cfg.out = Some(out.clone());
    }
    if common.paper_literal {
        cfg.paper_literal = true;
    }
    if common.fixed_clock {
        cfg.fixed_clock = true;
    }
    cfg.validate()?;
    Ok(cfg)
}

fn emit(cfg: &RunConfig, rendered: String) -> Result<(), String> {
    match &cfg.out {
        Some(path) => {
            fs::write(path, rendered).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn cmd_verify(suite_name: &str, common: &CommonArgs) -> Result<ExitCode, String> {
    // validate everything before any output file is touched
    let suite = Suite::from_str(suite_name)?;
    let cfg = build_config(common)?;
    let report = run_suites(&cfg, suite);
    for s in &report.suites {
        for check in &s.checks {
            eprintln!(
                "[{}] {} ({})",
                check.status.label(),
                check.id,
                check.equation
            );
        }
    }
    let rendered = match cfg.format {
        OutputFormat::Json => report.to_json(),
        OutputFormat::Csv => report.to_csv(),
    };
    emit(&cfg, rendered)?;
    Ok(if report.any_failed() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn cmd_converge(check: &str, first_order: bool, common: &CommonArgs) -> Result<ExitCode, String> {
    let cfg = build_config(common)?;
    let table = convergence_study(&cfg, check, first_order)?;
    eprint!("{}", table.to_text());
    let rendered = match cfg.format {
        OutputFormat::Json => table.to_json(),
        OutputFormat::Csv => table.to_csv(),
    };
    emit(&cfg, rendered)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_profile(target: &str, points: usize, out: Option<&PathBuf>) -> Result<ExitCode, String> {
    if target != "born-infeld" {
        return Err(format!(
            "unknown profile target '{target}', expected 'born-infeld'"
        ));
    }
    if points < 2 {
        return Err("need at least 2 profile points".into());
    }
    let params = BIParams::new(1.0, 1.0, 1.0).expect("defaults are valid");
    let (lo, hi) = (0.01f64, 100.0f64);
    let radii: Vec<f64> = (0..points)
        .map(|i| {
            let t = i as f64 / (points - 1) as f64;
            lo * (hi / lo).powf(t)
        })
        .collect();
    let mut buf = Vec::new();
    write_radial_profile(&mut buf, &params, &radii).map_err(|e| e.to_string())?;
    match out {
        Some(path) => {
            fs::write(path, buf).map_err(|e| format!("cannot write {}: {e}", path.display()))?
        }
        None => print!("{}", String::from_utf8_lossy(&buf)),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_export(
    what: &str,
    n: usize,
    steps: usize,
    mode: u32,
    cfl: f64,
    units: UnitsMode,
    out: Option<&PathBuf>,
) -> Result<ExitCode, String> {
    if what != "grid" {
        return Err(format!("unknown export target '{what}', expected 'grid'"));
    }
    let ph = units.params();
    let length = 2.0 * std::f64::consts::PI * ph.compton_length();
    let p_y = mode as f64 * ph.mass * ph.c;
    let spec = PlaneWaveSpec::consistent(1, [0.0, p_y, 0.0], ph.mass, 0.0, &ph)
        .map_err(|e| e.to_string())?;
    let grid = FieldGrid1D::from_fn(n, length, 0.0, |y| {
        plane_wave(&spec, &ph, y, 0.0).expect("valid spec")
    })
    .map_err(|e| e.to_string())?;
    let dt = cfl * grid.dy() / ph.c;
    let evolved =
        evolve(&grid, ph.mass, &ph, dt, steps, DiracForm::Plus).map_err(|e| e.to_string())?;
    let mut buf = Vec::new();
    evolved.write_csv(&mut buf).map_err(|e| e.to_string())?;
    match out {
        Some(path) => {
            fs::write(path, buf).map_err(|e| format!("cannot write {}: {e}", path.display()))?
        }
        None => print!("{}", String::from_utf8_lossy(&buf)),
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify { suite, common } => cmd_verify(suite, common),
        Command::Converge {
            check,
            first_order,
            common,
        } => cmd_converge(check, *first_order, common),
        Command::Profile {
            target,
            points,
            out,
        } => cmd_profile(target, *points, out.as_ref()),
        Command::Export {
            what,
            n,
            steps,
            mode,
            cfl,
            units,
            out,
        } => cmd_export(what, *n, *steps, *mode, *cfl, *units, out.as_ref()),
    };
    match result {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
