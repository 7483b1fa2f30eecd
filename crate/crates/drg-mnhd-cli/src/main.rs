//! Command-line front end: certify parameter families, analyze concrete
//! graphs, and sweep parameter grids, with optional JSON reports.
//!
//! Exit codes: 0 success/certified, 2 infeasible input, 3 not certified or
//! scan violation, 64 usage error, 65 malformed input file.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;

use drg_mnhd::analysis::ClassicalSweepSpec;
use drg_mnhd::antipodal::AntipodalParams;
use drg_mnhd::classical::ClassicalParams;
use drg_mnhd::graph;
use drg_mnhd::report::{self, exit, Report};
use drg_mnhd::spectra::GridSpec;

#[derive(Parser)]
#[command(
    name = "drg-mnhd",
    version,
    about = "Certify monotone heat-kernel ratios on distance-regular graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Certify classical parameters (diameter 3): b, alpha, beta
    Certify {
        /// Integer base b, any value except 0 and -1
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        /// Rational alpha, "p/q" or integer
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        alpha: BigRational,
        /// Rational beta, "p/q" or integer
        #[arg(long, value_parser = parse_rational, allow_hyphen_values = true)]
        beta: BigRational,
        /// Write the JSON report here
        #[arg(long, value_name = "PATH")]
        emit_json: Option<PathBuf>,
    },
    /// Certify an antipodal diameter-3 family: d, gamma, m
    Antipodal {
        /// Degree d
        #[arg(long)]
        d: u64,
        /// Intersection number c_2
        #[arg(long)]
        gamma: u64,
        /// Antipodal class size parameter m
        #[arg(long)]
        m: u64,
        /// Write the JSON report here
        #[arg(long, value_name = "PATH")]
        emit_json: Option<PathBuf>,
    },
    /// Analyze a graph given as an edge-list file
    Analyze {
        /// Edge list: first line "n m", then m lines "u v" (0-based)
        path: PathBuf,
        /// Scan only this vertex pair instead of every distance class
        #[arg(long, num_args = 2, value_names = ["U", "V"])]
        pair: Option<Vec<usize>>,
        /// Scan grid as "tmin,tmax,points"
        #[arg(long, value_parser = parse_grid)]
        grid: Option<GridSpec>,
        /// Violation tolerance on h
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
        /// Write the JSON report here
        #[arg(long, value_name = "PATH")]
        emit_json: Option<PathBuf>,
    },
    /// Certify every feasible point of a classical parameter grid
    Sweep {
        #[arg(long, default_value_t = -6, allow_hyphen_values = true)]
        b_min: i64,
        #[arg(long, default_value_t = 6)]
        b_max: i64,
        /// Lower bound on the integer (1+b)*alpha
        #[arg(long, default_value_t = -12, allow_hyphen_values = true)]
        scaled_alpha_min: i64,
        /// Upper bound on the integer (1+b)*alpha
        #[arg(long, default_value_t = 12)]
        scaled_alpha_max: i64,
        /// Upper bound on beta (numerators run over denominator |1+b|)
        #[arg(long, default_value_t = 12)]
        beta_max: i64,
        /// Worker threads; 0 picks the default
        #[arg(long, default_value_t = 0)]
        parallelism: usize,
        /// Write the JSON report here
        #[arg(long, value_name = "PATH")]
        emit_json: Option<PathBuf>,
    },
}

/// Parses "p/q" or a bare integer; rejects zero denominators.
fn parse_rational(s: &str) -> Result<BigRational, String> {
    let parse_int = |t: &str| t.trim().parse::<BigInt>().map_err(|e| format!("{t:?}: {e}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p = parse_int(p)?;
            let q = parse_int(q)?;
            if q == BigInt::from(0) {
                return Err("denominator must be nonzero".to_string());
            }
            Ok(BigRational::new(p, q))
        }
        None => Ok(BigRational::from(parse_int(s)?)),
    }
}

/// Parses "tmin,tmax,points" into a grid.
fn parse_grid(s: &str) -> Result<GridSpec, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err("expected \"tmin,tmax,points\"".to_string());
    }
    let t_min: f64 = parts[0].trim().parse().map_err(|e| format!("tmin: {e}"))?;
    let t_max: f64 = parts[1].trim().parse().map_err(|e| format!("tmax: {e}"))?;
    let points: usize = parts[2].trim().parse().map_err(|e| format!("points: {e}"))?;
    if !(t_min > 0.0 && t_max > t_min) {
        return Err("need 0 < tmin < tmax".to_string());
    }
    if points < 2 {
        return Err("need at least 2 points".to_string());
    }
    Ok(GridSpec { t_min, t_max, points })
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(exit::USAGE as u8)
}

fn emit(report: &Report, emit_json: Option<&PathBuf>, code: i32) -> ExitCode {
    print!("{}", report::render_text(report));
    if let Some(path) = emit_json {
        let json = serde_json::to_string_pretty(report).expect("reports serialize");
        if let Err(e) = fs::write(path, json) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::FAILURE;
        }
    }
    ExitCode::from(code as u8)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::SUCCESS
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(exit::USAGE as u8)
                }
            };
        }
    };

    match cli.command {
        Command::Certify { b, alpha, beta, emit_json } => {
            let params = ClassicalParams::new(3, b, alpha, beta);
            let (report, code) = report::run_certify(&params);
            emit(&report, emit_json.as_ref(), code)
        }
        Command::Antipodal { d, gamma, m, emit_json } => {
            let params = AntipodalParams::new(d, gamma, m);
            let (report, code) = report::run_antipodal(&params);
            emit(&report, emit_json.as_ref(), code)
        }
        Command::Analyze { path, pair, grid, tol, emit_json } => {
            if tol.is_nan() || tol <= 0.0 {
                return usage_error("--tol must be positive");
            }
            let text = match fs::read_to_string(&path) {
                Ok(text) => text,
                Err(e) => {
                    eprintln!("error: cannot read {}: {e}", path.display());
                    return ExitCode::from(exit::MALFORMED as u8);
                }
            };
            let g = match graph::parse_edge_list(&text) {
                Ok(g) => g,
                Err(e) => {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(exit::MALFORMED as u8);
                }
            };
            let pair = match pair {
                None => None,
                Some(uv) => {
                    let (u, v) = (uv[0], uv[1]);
                    if u == v {
                        return usage_error("--pair vertices must be distinct");
                    }
                    if u >= g.vertex_count() || v >= g.vertex_count() {
                        return usage_error(&format!(
                            "--pair out of range for {} vertices",
                            g.vertex_count()
                        ));
                    }
                    Some((u, v))
                }
            };
            let grid = grid.unwrap_or_default();
            let source = path.display().to_string();
            let (report, code) = report::run_analyze(&g, &source, pair, &grid, tol);
            emit(&report, emit_json.as_ref(), code)
        }
        Command::Sweep {
            b_min,
            b_max,
            scaled_alpha_min,
            scaled_alpha_max,
            beta_max,
            parallelism,
            emit_json,
        } => {
            if b_min > b_max || scaled_alpha_min > scaled_alpha_max {
                return usage_error("empty parameter range");
            }
            let spec = ClassicalSweepSpec {
                b_min,
                b_max,
                scaled_alpha_min,
                scaled_alpha_max,
                beta_max,
            };
            let (report, code) = report::run_sweep(&spec, parallelism);
            emit(&report, emit_json.as_ref(), code)
        }
    }
}
