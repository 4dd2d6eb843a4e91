//! `fano`: evaluate, compare and fit overlapping-resonance line shapes.
//!
//! Exit codes: 0 success, 1 invalid input or arguments, 2 I/O failure.

use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use fano_core::io::{contour_to_csv, qscan_to_csv, read_trace_csv, trace_to_csv, write_atomic, IoError};
use fano_core::scan::{figure1_default_grid, figure2_default_grid, FIGURE1_DELTAS};
use fano_core::{
    compare_representations, contour, fano_complex_params, fano_static_params, figure1, figure2, fit_fano, qscan,
    trace, ComplexFanoParams, EnergyGrid, FanoError, FanoStaticParams, FitOptions, Representation, ScatteringModel,
};

#[derive(Parser, Debug)]
#[command(name = "fano", version, about = "Line shapes of overlapping Fano resonances")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct GridArgs {
    #[arg(long, allow_hyphen_values = true)]
    emin: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    emax: Option<f64>,
    #[arg(long)]
    n: Option<usize>,
}

impl GridArgs {
    fn resolve(&self, default: EnergyGrid) -> Result<EnergyGrid, CliError> {
        Ok(EnergyGrid::new(
            self.emin.unwrap_or(default.e_min()),
            self.emax.unwrap_or(default.e_max()),
            self.n.unwrap_or(default.n_points()),
        )?)
    }
}

fn generic_grid() -> EnergyGrid {
    EnergyGrid::new(-5.0, 5.0, 1001).expect("valid default grid")
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cross section over an energy grid.
    Trace {
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long, default_value = "product")]
        repr: Representation,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Energy-dependent Fano parameter q~_k(E) over an energy grid.
    Qscan {
        #[arg(long)]
        model: PathBuf,
        /// 1-based resonance index.
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Static and complex Fano parameters of a two-resonance model as JSON.
    Params {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Cross section over (delta, E) with the resonances held fixed.
    Contour {
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long = "delta-min", default_value_t = 0.0, allow_hyphen_values = true)]
        delta_min: f64,
        #[arg(long = "delta-max", default_value_t = PI, allow_hyphen_values = true)]
        delta_max: f64,
        #[arg(long, default_value_t = 181)]
        ndelta: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Double-pole line shapes at four background phases (8 CSV files).
    Fig1 {
        #[arg(long, default_value_t = 1.0)]
        gamma: f64,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Narrow resonance overlapped by a broad one: window and Breit-Wigner variants plus contour.
    Fig2 {
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Fit a single Fano profile to an `energy,sigma` CSV.
    Fit {
        #[arg(long)]
        data: PathBuf,
        #[arg(long = "max-iter")]
        max_iter: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Pairwise deviations between S-matrix representations as JSON.
    Compare {
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        grid: GridArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug)]
enum CliError {
    Invalid(String),
    Io(String),
}

impl From<FanoError> for CliError {
    fn from(e: FanoError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        match e {
            IoError::Io { .. } => CliError::Io(e.to_string()),
            IoError::Format(_) => CliError::Invalid(e.to_string()),
        }
    }
}

fn read_model(path: &Path) -> Result<ScatteringModel, CliError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    ScatteringModel::from_json(&text).map_err(|e| CliError::Invalid(format!("invalid model {}: {e}", path.display())))
}

fn emit(out: Option<&Path>, contents: &str) -> Result<(), CliError> {
    match out {
        Some(p) => Ok(write_atomic(p, contents.as_bytes())?),
        None => {
            print!("{contents}");
            Ok(())
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

/// Writes every file or none: all contents are rendered before the first write.
fn emit_dir(dir: &Path, files: Vec<(String, String)>) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Io(format!("cannot create {}: {e}", dir.display())))?;
    for (name, contents) in files {
        write_atomic(&dir.join(name), contents.as_bytes())?;
    }
    Ok(())
}

#[derive(Serialize)]
struct ParamsReport {
    model: ScatteringModel,
    #[serde(rename = "static")]
    static_params: FanoStaticParams,
    sum_rule_residual: f64,
    complex: Option<ComplexFanoParams>,
    complex_error: Option<String>,
}

const PANELS: [char; 4] = ['a', 'b', 'c', 'd'];

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Trace { model, grid, repr, out } => {
            let m = read_model(&model)?;
            let t = trace(&m, &grid.resolve(generic_grid())?, repr)?;
            emit(out.as_deref(), &trace_to_csv(&t))
        }
        Command::Qscan { model, k, grid, out } => {
            let m = read_model(&model)?;
            if k == 0 {
                return Err(CliError::Invalid("--k is 1-based".into()));
            }
            let s = qscan(&m, k - 1, &grid.resolve(generic_grid())?)?;
            emit(out.as_deref(), &qscan_to_csv(&s))
        }
        Command::Params { model, out } => {
            let m = read_model(&model)?;
            let p = fano_static_params(&m)?;
            let (complex, complex_error) = match fano_complex_params(&p) {
                Ok(c) => (Some(c), None),
                Err(e) => (None, Some(e.to_string())),
            };
            let report = ParamsReport {
                model: m,
                static_params: p,
                sum_rule_residual: p.sum_rule_residual(),
                complex,
                complex_error,
            };
            emit(out.as_deref(), &to_json(&report))
        }
        Command::Contour {
            model,
            grid,
            delta_min,
            delta_max,
            ndelta,
            out,
        } => {
            let m = read_model(&model)?;
            let c = contour(&m, &grid.resolve(generic_grid())?, delta_min, delta_max, ndelta)?;
            emit(out.as_deref(), &contour_to_csv(&c))
        }
        Command::Fig1 { gamma, grid, out } => {
            let g = grid.resolve(figure1_default_grid(gamma)?)?;
            let panels = figure1(gamma, &g)?;
            debug_assert_eq!(panels.len(), FIGURE1_DELTAS.len());
            let mut files = Vec::new();
            for (p, tag) in panels.iter().zip(PANELS) {
                files.push((format!("fig1{tag}_full.csv"), trace_to_csv(&p.full)));
                files.push((format!("fig1{tag}_dashed.csv"), trace_to_csv(&p.dashed)));
            }
            emit_dir(&out, files)
        }
        Command::Fig2 { grid, out } => {
            let f = figure2(&grid.resolve(figure2_default_grid()?)?)?;
            let mut files = Vec::new();
            for (tag, v) in [('a', &f.window), ('b', &f.breit_wigner)] {
                files.push((format!("fig2{tag}_full.csv"), trace_to_csv(&v.full)));
                files.push((format!("fig2{tag}_dashed.csv"), trace_to_csv(&v.dashed)));
                files.push((format!("fig2{tag}_dotted.csv"), trace_to_csv(&v.dotted)));
            }
            files.push(("fig2_contour.csv".into(), contour_to_csv(&f.contour)));
            emit_dir(&out, files)
        }
        Command::Fit { data, max_iter, out } => {
            let file =
                std::fs::File::open(&data).map_err(|e| CliError::Io(format!("cannot read {}: {e}", data.display())))?;
            let t = read_trace_csv(file)?;
            let mut opts = FitOptions::default();
            if let Some(n) = max_iter {
                opts.max_iter = n;
            }
            let r = fit_fano(&t, None, &opts)?;
            emit(out.as_deref(), &to_json(&r))
        }
        Command::Compare { model, grid, out } => {
            let m = read_model(&model)?;
            let r = compare_representations(&m, &grid.resolve(generic_grid())?)?;
            emit(out.as_deref(), &to_json(&r))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Invalid(msg)) => {
            eprintln!("error: {}", msg.replace('\n', " "));
            ExitCode::from(1)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {}", msg.replace('\n', " "));
            ExitCode::from(2)
        }
    }
}
