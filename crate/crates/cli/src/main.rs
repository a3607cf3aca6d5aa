//! Command-line front end: decide escape instances, simulate trajectories,
//! dump eigenstructure, and re-check witnesses.
//!
//! Exit codes are part of the contract: 0 for a decided verdict (either
//! answer), 2 for parse or validation failures, 3 when the branch budget or
//! timeout is exhausted. `check-witness` exits 1 on rejection.

use std::io::Write;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Args, Parser, Subcommand};

use polyescape_core::algnum::AlgebraicNumber;
use polyescape_core::escape::{
    decide_escape, homogenize, verify_witness, EscapeError, Limits, Outcome, WitnessCheck,
};
use polyescape_core::format::{AlgNumDoc, InstanceDocument, TimingsDoc, VerdictDocument};
use polyescape_core::num::{parse_rational, rational_to_f64};
use polyescape_core::oracle::simulate;
use polyescape_core::spectral::{coefficient_table, eigen_structure};

#[derive(Parser)]
#[command(
    name = "polyescape",
    about = "Exact decision engine for the polytope escape problem of linear dynamical systems"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a trapped initial point exists
    Decide(DecideArgs),
    /// Sample a trajectory and emit CSV (t, x1..xd per line)
    Simulate(SimulateArgs),
    /// Dump eigenvalues, indices, realness and optional coefficient vectors
    Spectrum(SpectrumArgs),
    /// Re-run the symbolic witness check against an instance
    CheckWitness(CheckWitnessArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Instance file (JSON)
    #[arg(long)]
    input: String,
    /// Suppress the human-readable summary on stderr
    #[arg(long)]
    quiet: bool,
}

#[derive(Args)]
struct DecideArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Also print the witness coordinates on stderr
    #[arg(long)]
    witness: bool,
    /// Include the full zeroed-pair lists in the certificate
    #[arg(long)]
    certificate: bool,
    /// Branch budget, counted in feasibility calls
    #[arg(long, default_value_t = 1_000_000)]
    max_branches: u64,
    /// Wall-clock limit in seconds
    #[arg(long, default_value_t = 300)]
    timeout: u64,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Initial point, comma-separated rationals ("1,1/2")
    #[arg(long)]
    x0: String,
    /// Simulation horizon
    #[arg(long, default_value_t = 10.0)]
    horizon: f64,
    /// Number of samples (including t = 0)
    #[arg(long, default_value_t = 101)]
    samples: usize,
}

#[derive(Args)]
struct SpectrumArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Include the coefficient vectors of every polytope row
    #[arg(long = "u-vectors")]
    u_vectors: bool,
}

#[derive(Args)]
struct CheckWitnessArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Witness point, comma-separated rationals
    #[arg(long, conflicts_with = "witness_file")]
    point: Option<String>,
    /// Verdict document whose witness should be re-checked
    #[arg(long)]
    witness_file: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Decide(args) => run_decide(args),
        Command::Simulate(args) => run_simulate(args),
        Command::Spectrum(args) => run_spectrum(args),
        Command::CheckWitness(args) => run_check_witness(args),
    }
}

fn fail(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn load_instance(path: &str) -> Result<polyescape_core::escape::EscapeInstance, String> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("cannot read {path}: {e}"))?;
    let doc: InstanceDocument =
        serde_json::from_str(&text).map_err(|e| format!("invalid JSON in {path}: {e}"))?;
    doc.to_instance().map_err(|e| e.to_string())
}

fn run_decide(args: DecideArgs) -> ExitCode {
    let started = Instant::now();
    let inst = match load_instance(&args.common.input) {
        Ok(i) => i,
        Err(e) => return fail(&e),
    };
    let parse_ms = started.elapsed().as_millis();
    let limits = Limits {
        max_feasibility_calls: args.max_branches,
        timeout: Duration::from_secs(args.timeout),
    };
    let decide_started = Instant::now();
    let verdict = decide_escape(&inst, &limits);
    let decide_ms = decide_started.elapsed().as_millis();
    let timings = TimingsDoc {
        parse_ms,
        decide_ms,
        total_ms: started.elapsed().as_millis(),
    };
    match verdict {
        Ok(v) => {
            let doc = VerdictDocument::from_verdict(&v, args.certificate, timings);
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            if !args.common.quiet {
                match v.outcome {
                    Outcome::TrappedExists => eprintln!("verdict: trapped point exists"),
                    Outcome::AllEscape => eprintln!("verdict: every initial point escapes"),
                }
                if args.witness {
                    if let Some(w) = &v.witness {
                        let rendered: Vec<String> =
                            w.point.iter().map(|x| x.decimal_string(12)).collect();
                        eprintln!("witness: ({})", rendered.join(", "));
                    }
                }
            }
            ExitCode::SUCCESS
        }
        Err(EscapeError::ResourceLimit { calls, elapsed }) => {
            let doc = VerdictDocument::resource_limit(timings);
            println!("{}", serde_json::to_string_pretty(&doc).unwrap());
            if !args.common.quiet {
                eprintln!("resource limit exceeded: {calls} feasibility calls in {elapsed:?}");
            }
            ExitCode::from(3)
        }
        Err(e) => fail(&e.to_string()),
    }
}

fn parse_point(s: &str) -> Result<Vec<AlgebraicNumber>, String> {
    s.split(',')
        .map(|tok| parse_rational(tok).map(AlgebraicNumber::from_rational))
        .collect()
}

fn run_simulate(args: SimulateArgs) -> ExitCode {
    let inst = match load_instance(&args.common.input) {
        Ok(i) => i,
        Err(e) => return fail(&e),
    };
    let x0 = match parse_point(&args.x0) {
        Ok(p) => p,
        Err(e) => return fail(&e),
    };
    if x0.len() != inst.dim {
        return fail(&format!(
            "x0 has {} coordinates, instance dimension is {}",
            x0.len(),
            inst.dim
        ));
    }
    // affine flows simulate through the homogenized linear system
    let hom = homogenize(&inst);
    let mut start: Vec<f64> = x0.iter().map(|x| x.to_f64()).collect();
    start.push(1.0);
    let traj = match simulate(&hom.a_mat, &start, args.horizon, args.samples) {
        Ok(t) => t,
        Err(e) => return fail(&e.to_string()),
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for (t, p) in traj.times.iter().zip(&traj.points) {
        let coords: Vec<String> = p[..inst.dim].iter().map(|v| format!("{v:.12e}")).collect();
        writeln!(out, "{t:.6},{}", coords.join(",")).unwrap();
    }
    if !args.common.quiet {
        eprintln!(
            "simulated {} samples up to t = {}",
            traj.times.len(),
            args.horizon
        );
    }
    ExitCode::SUCCESS
}

fn run_spectrum(args: SpectrumArgs) -> ExitCode {
    let inst = match load_instance(&args.common.input) {
        Ok(i) => i,
        Err(e) => return fail(&e),
    };
    let spec = match eigen_structure(&inst.a_mat) {
        Ok(s) => s,
        Err(e) => return fail(&e.to_string()),
    };
    let mut eigs = Vec::new();
    for rec in spec.eigenvalues() {
        eigs.push(serde_json::json!({
            "value": AlgNumDoc::from_number(&rec.value),
            "index": rec.index,
            "real": rec.real,
            "factor": rec.factor_id,
        }));
    }
    let mut doc = serde_json::json!({
        "dimension": inst.dim,
        "minimal_polynomial": spec.minpoly().coeffs().iter()
            .map(polyescape_core::num::format_rational).collect::<Vec<_>>(),
        "nu_max": spec.nu_max(),
        "eigenvalues": eigs,
    });
    if args.u_vectors {
        let mut rows_out = Vec::new();
        for (coeffs, rel, _rhs) in inst.constraint_rows() {
            let table = match coefficient_table(&coeffs, &spec) {
                Ok(t) => t,
                Err(e) => return fail(&e.to_string()),
            };
            let mut pairs = Vec::new();
            for rec in spec.eigenvalues() {
                for j in 0..rec.index {
                    if let Some(u) = table.u_vector(rec, j) {
                        pairs.push(serde_json::json!({
                            "eta": AlgNumDoc::from_number(&rec.value),
                            "j": j,
                            "u": u.iter().map(AlgNumDoc::from_number).collect::<Vec<_>>(),
                        }));
                    }
                }
            }
            rows_out.push(serde_json::json!({
                "relation": match rel {
                    polyescape_core::lpalg::Relation::Gt => ">",
                    _ => ">=",
                },
                "pairs": pairs,
            }));
        }
        doc["u_vectors"] = serde_json::Value::Array(rows_out);
    }
    println!("{}", serde_json::to_string_pretty(&doc).unwrap());
    if !args.common.quiet {
        eprintln!(
            "{} eigenvalues, maximal index {}",
            spec.eigenvalues().len(),
            spec.nu_max()
        );
    }
    ExitCode::SUCCESS
}

fn run_check_witness(args: CheckWitnessArgs) -> ExitCode {
    let inst = match load_instance(&args.common.input) {
        Ok(i) => i,
        Err(e) => return fail(&e),
    };
    let point: Vec<AlgebraicNumber> = if let Some(p) = &args.point {
        match parse_point(p) {
            Ok(p) => p,
            Err(e) => return fail(&e),
        }
    } else if let Some(path) = &args.witness_file {
        let text = match std::fs::read_to_string(path) {
            Ok(t) => t,
            Err(e) => return fail(&format!("cannot read {path}: {e}")),
        };
        let doc: VerdictDocument = match serde_json::from_str(&text) {
            Ok(d) => d,
            Err(e) => return fail(&format!("invalid verdict JSON: {e}")),
        };
        let Some(w) = doc.witness else {
            return fail("verdict document carries no witness");
        };
        let mut coords = Vec::new();
        for c in &w.coordinates {
            match c.to_number() {
                Ok(x) => coords.push(x),
                Err(e) => return fail(&e.to_string()),
            }
        }
        coords
    } else {
        return fail("provide --point or --witness-file");
    };
    match verify_witness(&point, &inst) {
        Ok(WitnessCheck::Accepted) => {
            if !args.common.quiet {
                eprintln!("witness accepted");
            }
            println!("{{\"witness\":\"accepted\"}}");
            ExitCode::SUCCESS
        }
        Ok(WitnessCheck::Rejected(reason)) => {
            if !args.common.quiet {
                eprintln!("witness rejected: {reason}");
            }
            println!("{}", serde_json::json!({"witness":"rejected","reason":reason}));
            ExitCode::from(1)
        }
        Err(e) => fail(&e.to_string()),
    }
}
