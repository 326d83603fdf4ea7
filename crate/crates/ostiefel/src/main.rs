//! Command-line front end: JSON ingestion of points and systems, the named
//! verification suites, and machine-readable reports.
//!
//! Exit codes: 0 success, 1 verification failure or domain error, 2 usage or
//! parse error.

use clap::{Args, Parser, Subcommand, ValueEnum};
use ostiefel::clifford::{build_system, delta, Family};
use ostiefel::extgeom::{
    austere_test, certified_xi14_spectrum, mean_curvature_scaled, normal_frame,
};
use ostiefel::frames::OctFrame;
use ostiefel::octonion::Octonion;
use ostiefel::omega::{
    self, deformation_curve, frame_to_point, is_member, pi_lift, CurveBase, CurveKind, OmegaPoint,
};
use ostiefel::report::{run_suite, SuiteName};
use ostiefel::scalar::{QSqrt2, Tol};
use serde::{Deserialize, Serialize};
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "ostiefel",
    version,
    about = "exact checks on octonion frame spaces and Clifford triple spaces"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Args, Clone, Copy)]
struct ModeArgs {
    /// Scalar backend: exact Q(√2) strings or float numbers.
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    mode: Mode,
    /// Residual tolerance for float mode.
    #[arg(long, default_value_t = 1e-9)]
    eps: f64,
}

impl ModeArgs {
    fn tol(&self) -> Tol {
        Tol::from_eps(self.eps)
    }
}

#[derive(Args, Clone, Copy)]
struct SystemArgs {
    /// Ambient dimension l = n·δ(m).
    #[arg(long)]
    l: usize,
    /// Clifford parameter m (number of generators plus one).
    #[arg(long)]
    m: usize,
    /// Family: definite | indefinite:q | none.
    #[arg(long, default_value = "none")]
    family: Family,
}

impl SystemArgs {
    fn blocks(&self) -> Result<usize, String> {
        let d = delta(self.m) as usize;
        if self.l == 0 || self.l % d != 0 {
            return Err(format!(
                "l = {} is not a positive multiple of δ({}) = {d}",
                self.l, self.m
            ));
        }
        Ok(self.l / d)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite: all | octonion | frames | omega | geometry.
    Verify {
        suite: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Classify a frame file {k, n, entries} as regular or critical.
    Classify {
        file: PathBuf,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Check membership of a triple file {a, b, c} in the space of the given system.
    Member {
        file: PathBuf,
        #[command(flatten)]
        sys: SystemArgs,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Lift a unit vector file {c: [octonion, …]} to a 3-frame.
    Lift {
        file: PathBuf,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Sample a member of the given space (float mode).
    Sample {
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1e-9)]
        eps: f64,
    },
    /// Minimality report and the certified shape-operator spectrum (n = 3).
    Spectrum {
        #[arg(long, default_value_t = 3)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Kernel dimension of the octonion-orthogonality system of a frame file.
    Fiber {
        file: PathBuf,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Evaluate a deformation curve at parameter t (float mode).
    Curve {
        file: PathBuf,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        t: f64,
        #[command(flatten)]
        sys: SystemArgs,
    },
}

#[derive(Serialize, Deserialize)]
struct TripleFile<S> {
    #[serde(default)]
    l: Option<usize>,
    a: Vec<S>,
    b: Vec<S>,
    c: Vec<S>,
}

#[derive(Serialize, Deserialize)]
struct LiftFile<S> {
    c: Vec<Octonion<S>>,
}

enum CliError {
    Parse(String),
    Domain(String),
}

impl CliError {
    fn exit(self) -> ExitCode {
        match self {
            CliError::Parse(msg) => {
                eprintln!("parse error: {msg}");
                ExitCode::from(2)
            }
            CliError::Domain(msg) => {
                eprintln!("error: {msg}");
                ExitCode::from(1)
            }
        }
    }
}

fn read_json<T: for<'de> Deserialize<'de>>(path: &PathBuf) -> Result<T, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn emit(value: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => e.exit(),
    }
}

fn dispatch(command: Command) -> Result<ExitCode, CliError> {
    match command {
        Command::Verify { suite, format } => {
            let name: SuiteName = suite.parse().map_err(|e| CliError::Parse(format!("{e}")))?;
            let report = run_suite(name);
            match format {
                Format::Json => emit(&serde_json::to_value(&report).expect("serializable")),
                Format::Markdown => print!("{}", report.to_markdown()),
            }
            Ok(if report.failures() == 0 {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Classify { file, mode } => {
            let value = match mode.mode {
                Mode::Exact => {
                    let frame: OctFrame<QSqrt2> = read_json(&file)?;
                    let report = frame
                        .classify()
                        .map_err(|e| CliError::Domain(e.to_string()))?;
                    let mut v = serde_json::to_value(&report).expect("serializable");
                    v["advisory"] = json!(false);
                    v
                }
                Mode::Float => {
                    let frame: OctFrame<f64> = read_json(&file)?;
                    let report = frame
                        .classify_advisory(mode.tol())
                        .map_err(|e| CliError::Domain(e.to_string()))?;
                    let mut v = serde_json::to_value(&report).expect("serializable");
                    v["advisory"] = json!(true);
                    v
                }
            };
            emit(&value);
            Ok(ExitCode::SUCCESS)
        }
        Command::Member { file, sys, mode } => {
            let n = sys.blocks().map_err(CliError::Parse)?;
            let member = match mode.mode {
                Mode::Exact => {
                    let f: TripleFile<QSqrt2> = read_json(&file)?;
                    let system = build_system::<QSqrt2>(sys.m, n, sys.family)
                        .map_err(|e| CliError::Domain(e.to_string()))?;
                    let p = OmegaPoint::new(f.a, f.b, f.c);
                    is_member(&system, &p, mode.tol())
                        .map_err(|e| CliError::Domain(e.to_string()))?
                }
                Mode::Float => {
                    let f: TripleFile<f64> = read_json(&file)?;
                    let system = build_system::<f64>(sys.m, n, sys.family)
                        .map_err(|e| CliError::Domain(e.to_string()))?;
                    let p = OmegaPoint::new(f.a, f.b, f.c);
                    is_member(&system, &p, mode.tol())
                        .map_err(|e| CliError::Domain(e.to_string()))?
                }
            };
            emit(&json!({
                "l": sys.l,
                "m": sys.m,
                "family": sys.family.to_string(),
                "member": member,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Lift { file, mode } => {
            let value = match mode.mode {
                Mode::Exact => {
                    let f: LiftFile<QSqrt2> = read_json(&file)?;
                    let frame =
                        pi_lift(&f.c, mode.tol()).map_err(|e| CliError::Domain(e.to_string()))?;
                    serde_json::to_value(frame_to_point(&frame)).expect("serializable")
                }
                Mode::Float => {
                    let f: LiftFile<f64> = read_json(&file)?;
                    let frame =
                        pi_lift(&f.c, mode.tol()).map_err(|e| CliError::Domain(e.to_string()))?;
                    serde_json::to_value(frame_to_point(&frame)).expect("serializable")
                }
            };
            emit(&value);
            Ok(ExitCode::SUCCESS)
        }
        Command::Sample { sys, seed, eps } => {
            let n = sys.blocks().map_err(CliError::Parse)?;
            let system = build_system::<f64>(sys.m, n, sys.family)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let p = omega::sample(&system, seed, Tol::from_eps(eps))
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let mut v = serde_json::to_value(&p).expect("serializable");
            v["l"] = json!(sys.l);
            v["m"] = json!(sys.m);
            v["family"] = json!(sys.family.to_string());
            emit(&v);
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { n, format } => {
            if n < 3 {
                return Err(CliError::Domain("the triple space needs n ≥ 3".into()));
            }
            let frame = normal_frame::<QSqrt2>(n).map_err(|e| CliError::Domain(e.to_string()))?;
            let x0 = ostiefel::witness::x0_quaternionic(n);
            let tol = Tol::default();
            let minimality: Vec<serde_json::Value> = (1..=14)
                .map(|beta| {
                    let v = mean_curvature_scaled(&frame, &x0, beta, tol).expect("x0 is a member");
                    json!({"normal": beta, "scaled_component": v.to_string(), "zero": v.is_zero()})
                })
                .collect();
            let spectrum = if n == 3 {
                let s = certified_xi14_spectrum().map_err(|e| CliError::Domain(e.to_string()))?;
                let austere = austere_test(&s);
                Some((s, austere))
            } else {
                None
            };
            match format {
                Format::Json => {
                    let mut v = json!({"n": n, "minimality": minimality});
                    if let Some((s, austere)) = &spectrum {
                        v["spectrum"] = serde_json::to_value(s).expect("serializable");
                        v["austere"] = json!(austere);
                    }
                    emit(&v);
                }
                Format::Markdown => {
                    println!("# minimality at the standard basis point (n = {n})\n");
                    println!("| normal | scaled component | zero |");
                    println!("|--------|------------------|------|");
                    for item in &minimality {
                        println!(
                            "| {} | {} | {} |",
                            item["normal"], item["scaled_component"], item["zero"]
                        );
                    }
                    if let Some((s, austere)) = &spectrum {
                        println!("\n# certified shape-operator spectrum (ξ_14)\n");
                        println!("| eigenvalue | multiplicity |");
                        println!("|------------|--------------|");
                        for (c, m) in &s.entries {
                            println!("| {} | {m} |", ostiefel::extgeom::eigenvalue_string(c));
                        }
                        println!("\naustere: {austere}");
                    }
                }
            }
            let all_zero = minimality.iter().all(|i| i["zero"] == json!(true));
            Ok(if all_zero {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Fiber { file, mode } => {
            let dim = match mode.mode {
                Mode::Exact => {
                    let frame: OctFrame<QSqrt2> = read_json(&file)?;
                    frame
                        .fiber_kernel_dim(mode.tol())
                        .map_err(|e| CliError::Domain(e.to_string()))?
                }
                Mode::Float => {
                    let frame: OctFrame<f64> = read_json(&file)?;
                    frame
                        .fiber_kernel_dim(mode.tol())
                        .map_err(|e| CliError::Domain(e.to_string()))?
                }
            };
            emit(&json!({
                "kernel_dim": dim,
                "fiber_sphere_dim": dim as i64 - 1,
            }));
            Ok(ExitCode::SUCCESS)
        }
        Command::Curve { file, kind, t, sys } => {
            let n = sys.blocks().map_err(CliError::Parse)?;
            let kind: CurveKind = match kind.as_str() {
                "pair-interior" => CurveKind::PairInterior,
                "pair-boundary" => CurveKind::PairBoundary,
                "path-step" => CurveKind::PathStep,
                other => {
                    return Err(CliError::Parse(format!(
                        "unknown curve kind `{other}` (expected pair-interior | pair-boundary | path-step)"
                    )))
                }
            };
            let base: CurveBase = read_json(&file)?;
            let system = build_system::<f64>(sys.m, n, sys.family)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            let point = deformation_curve(&system, kind, &base, t)
                .map_err(|e| CliError::Domain(e.to_string()))?;
            emit(&serde_json::to_value(&point).expect("serializable"));
            Ok(ExitCode::SUCCESS)
        }
    }
}
