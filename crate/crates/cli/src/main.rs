mod config;
mod report;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use hybrid_aee::experiments::{
    benchmark_gains, jam_curves, rate_curves, run_sweep, threshold_table, SweepParameter, JAM_CASES, RATE_CASES,
    THRESHOLD_CASES,
};
use hybrid_aee::{solve_joint, Execution};
use thiserror::Error;

use crate::config::RunConfig;

/// Range of ρ_d (dBm per bps/Hz) searched for mode-switch thresholds.
const THRESHOLD_SEARCH_DBM: (f64, f64) = (-30.0, 10.0);
const JAM_CURVE_POINTS: usize = 400;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("usage error: {0}")]
    Usage(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("output error: {0}")]
    Output(String),
}

impl CliError {
    fn from_config(e: hybrid_aee::Error) -> Self {
        CliError::Config(e.to_string())
    }

    fn from_solver(e: hybrid_aee::Error) -> Self {
        use hybrid_aee::Error as E;
        match e {
            E::Infeasible { .. } | E::NoCrossing { .. } | E::NoFeasibleRows(_) => CliError::Infeasible(e.to_string()),
            other => CliError::Config(other.to_string()),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Infeasible(_) => 3,
            _ => 2,
        }
    }
}

impl From<csv::Error> for CliError {
    fn from(e: csv::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Output(e.to_string())
    }
}

#[derive(Debug, Parser)]
#[command(name = "hybrid-aee", version, about = "Energy-efficient hybrid eavesdrop/jam attack optimizer")]
struct Cli {
    /// Golden-section tolerance on the jamming power, in watts.
    #[arg(long, global = true, value_name = "W")]
    epsilon: Option<f64>,

    /// Write CSV here instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve one instance for the jointly optimal mode, rate and power.
    Solve { config: PathBuf },
    /// Sweep one parameter against the fixed benchmark.
    Sweep {
        config: PathBuf,
        /// nu | rho_d | p_m | ratio_su_sa | ratio_su_au
        parameter: String,
    },
    /// Produce the dataset behind one figure.
    Figure { config: PathBuf, id: FigureId },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FigureId {
    #[value(name = "2a")]
    RateRegimes,
    #[value(name = "2b")]
    JamCurves,
    #[value(name = "3")]
    Thresholds,
    #[value(name = "4")]
    BenchmarkGains,
}

fn output(path: Option<&Path>) -> Result<Box<dyn Write>, CliError> {
    match path {
        Some(p) => {
            let f = File::create(p).map_err(|e| CliError::Output(format!("cannot create {}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(io::stdout().lock())),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let exec = Execution::default();
    let out = cli.out.as_deref();
    match cli.command {
        Command::Solve { config } => {
            let cfg = RunConfig::load(&config)?;
            let scenario = cfg.scenario()?;
            let gs = cfg.gs_config(cli.epsilon)?;
            let r = solve_joint(&scenario, &gs).map_err(CliError::from_solver)?;
            report::write_solve(output(out)?, &r, gs.epsilon)?;
            eprintln!(
                "mode {}: (alpha, r_a, p_j) = ({}, {}, {}); AEE eavesdrop {:.4}, jam {:.4}, joint {:.4}; GS {} iterations",
                r.mode, r.decision.alpha, r.decision.r_a, r.decision.p_j, r.aee_eaves_opt, r.aee_jam_opt, r.aee_joint,
                r.jam_diag.iterations
            );
        }
        Command::Sweep { config, parameter } => {
            let param: SweepParameter = parameter.parse().map_err(|e: hybrid_aee::Error| CliError::Usage(e.to_string()))?;
            let cfg = RunConfig::load(&config)?;
            let scenario = cfg.scenario()?;
            let gs = cfg.gs_config(cli.epsilon)?;
            let spec = cfg.sweep_spec(param)?;
            let rows = run_sweep(&scenario, &spec, &gs, exec).map_err(CliError::from_solver)?;
            report::write_sweep(output(out)?, param, &rows)?;
            match hybrid_aee::experiments::average_gains(&[(param, rows)]) {
                Ok(g) => eprintln!(
                    "average gains over {param}: eavesdrop {:.2}%, jam {:.2}%, joint {:.2}%",
                    g.gain_eaves_pct, g.gain_jam_pct, g.gain_joint_pct
                ),
                Err(e) => eprintln!("no average for {param}: {e}"),
            }
        }
        Command::Figure { config, id } => {
            let cfg = RunConfig::load(&config)?;
            let scenario = cfg.scenario()?;
            let gs = cfg.gs_config(cli.epsilon)?;
            match id {
                FigureId::RateRegimes => {
                    let xs: Vec<f64> = (0..=100).map(f64::from).collect();
                    report::write_rate_curves(output(out)?, &rate_curves(&scenario, &RATE_CASES, &xs))?;
                }
                FigureId::JamCurves => {
                    let curves = jam_curves(&scenario, &JAM_CASES, JAM_CURVE_POINTS, &gs, exec).map_err(CliError::from_solver)?;
                    report::write_jam_curves(output(out)?, &curves)?;
                }
                FigureId::Thresholds => {
                    let (lo, hi) = THRESHOLD_SEARCH_DBM;
                    let rows = threshold_table(&scenario, &THRESHOLD_CASES, lo, hi, &gs, exec).map_err(CliError::from_solver)?;
                    report::write_thresholds(output(out)?, &rows)?;
                }
                FigureId::BenchmarkGains => {
                    let (_, g) = benchmark_gains(&scenario, &gs, exec).map_err(CliError::from_solver)?;
                    report::write_gain_summary(output(out)?, &g)?;
                    eprintln!(
                        "average gain over benchmark: eavesdrop {:.2}%, jam {:.2}%, joint {:.2}%",
                        g.gain_eaves_pct, g.gain_jam_pct, g.gain_joint_pct
                    );
                }
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
