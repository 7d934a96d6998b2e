//! `socle-lab`: socle diagrams, tensor decompositions, finite-rank checks
//! and Littlewood–Richardson coefficients from the command line.
//!
//! Exit codes: 0 pass, 1 mismatch, 2 parse error, 3 invalid combination,
//! 4 capacity exceeded.

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use socle_lab::finite::{counts_agree, verify_with_capacity, Capacity, VerificationReport};
use socle_lab::lr::oracle_agrees;
use socle_lab::render::render_side_by_side;
use socle_lab::{
    decompose_tensor, lr_coefficient, render_structure, render_tower, schur_product_expand, socle_layers,
    AlgebraKind, BoxStyle, Error, Partition,
};

const MAX_DIM_VAR: &str = "SOCLE_LAB_MAX_DIM";

#[derive(Parser)]
#[command(name = "socle-lab", version, about = "Socle filtrations of tensor modules over gl, sl, sp and so")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Socle diagram of the indecomposable Γ_λ⊗Γ_μ (or Γ_λ for sp, so).
    Socle {
        #[command(flatten)]
        shape: ShapeArgs,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// All towers of V^{⊗(p,q)} (gl, sl) or V^{⊗d} (sp, so).
    Decompose {
        #[arg(long)]
        algebra: AlgebraKind,
        #[arg(short, long)]
        p: Option<usize>,
        #[arg(short, long)]
        q: Option<usize>,
        #[arg(long, conflicts_with_all = ["p", "q"])]
        d: Option<usize>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Check a predicted diagram against a finite-rank model.
    ///
    /// The model size is capped; set SOCLE_LAB_MAX_DIM to allow any model
    /// up to that total dimension, at your own risk.
    Verify {
        #[command(flatten)]
        shape: ShapeArgs,
        /// A rank `5` or an inclusive range `5..6`.
        #[arg(long)]
        n: RankRange,
        /// Write the JSON reports here; `-` for stdout.
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Littlewood–Richardson coefficient N^ν_{λ,μ}, or the full product s_λ s_μ.
    Lr {
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Option<Partition>,
        /// Cross-check against Schur polynomial multiplication.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long)]
    algebra: AlgebraKind,
    /// Covariant partition, e.g. `2,1`; `0` for the empty one.
    #[arg(long)]
    lambda: Partition,
    /// Contravariant partition (gl and sl only).
    #[arg(long)]
    mu: Option<Partition>,
}

#[derive(Args)]
struct OutputArgs {
    /// Also write the diagram as JSON to this file; `-` for stdout.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Draw boxes with Unicode line characters.
    #[arg(long)]
    unicode: bool,
}

impl OutputArgs {
    fn style(&self) -> BoxStyle {
        if self.unicode {
            BoxStyle::Unicode
        } else {
            BoxStyle::Ascii
        }
    }
}

#[derive(Clone, Debug)]
struct RankRange(Vec<usize>);

impl FromStr for RankRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
        let ranks: Vec<usize> = match s.split_once("..") {
            Some((a, b)) => {
                let b = b.strip_prefix('=').unwrap_or(b);
                (num(a)?..=num(b)?).collect()
            }
            None => vec![num(s)?],
        };
        if ranks.is_empty() || ranks.contains(&0) {
            return Err(format!("`{s}` is not a range of positive ranks"));
        }
        Ok(Self(ranks))
    }
}

enum Failure {
    Mismatch,
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ParsePartition { .. } | Error::ParseAlgebra(_) => 2,
        Error::Capacity(_) => 4,
        Error::NonInvariant(_) => 1,
        _ => 3,
    }
}

fn write_json<T: Serialize>(path: &PathBuf, value: &T) -> Result<(), Failure> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    if path.as_os_str() == "-" {
        io::stdout().write_all(text.as_bytes())?;
    } else {
        fs::write(path, text)?;
    }
    Ok(())
}

fn capacity_from_env() -> Result<Capacity, Failure> {
    match std::env::var(MAX_DIM_VAR) {
        Ok(v) => v.trim().parse().map(Capacity::with_max_dim).map_err(|_| {
            Failure::Lib(Error::Capacity(format!("{MAX_DIM_VAR}=`{v}` is not a dimension")))
        }),
        Err(_) => Ok(Capacity::default()),
    }
}

fn cmd_socle(shape: &ShapeArgs, out: &OutputArgs) -> Result<(), Failure> {
    let mu = shape.mu.clone().unwrap_or_default();
    let diagram = socle_layers(shape.algebra, &shape.lambda, &mu)?;
    let tower = render_tower(&diagram, 1, out.style());
    print!("{}", render_side_by_side(&[tower]));
    if let Some(path) = &out.json {
        write_json(path, &diagram)?;
    }
    Ok(())
}

fn cmd_decompose(
    algebra: AlgebraKind,
    p: Option<usize>,
    q: Option<usize>,
    d: Option<usize>,
    out: &OutputArgs,
) -> Result<(), Failure> {
    let (p, q) = match (d, p) {
        (Some(d), _) => (d, 0),
        (None, Some(p)) => (p, q.unwrap_or(0)),
        (None, None) => (0, q.unwrap_or(0)),
    };
    let structure = decompose_tensor(algebra, p, q)?.structure();
    print!("{}", render_structure(&structure, out.style()));
    if let Some(path) = &out.json {
        write_json(path, &structure)?;
    }
    Ok(())
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    reports: &'a [VerificationReport],
    /// Whether all stable ranks observed the same multiplicities.
    stable_counts_agree: bool,
    pass: bool,
}

fn cmd_verify(shape: &ShapeArgs, ranks: &RankRange, json: Option<&PathBuf>) -> Result<(), Failure> {
    let mu = shape.mu.clone().unwrap_or_default();
    let capacity = capacity_from_env()?;
    // Reject bad shapes before spawning anything.
    socle_layers(shape.algebra, &shape.lambda, &mu)?;
    for &n in &ranks.0 {
        capacity.check(shape.algebra, n, shape.lambda.weight(), mu.weight())?;
    }

    let mu = &mu;
    let results: Vec<_> = std::thread::scope(|s| {
        let jobs: Vec<_> = ranks
            .0
            .iter()
            .map(|&n| s.spawn(move || verify_with_capacity(shape.algebra, n, &shape.lambda, mu, &capacity)))
            .collect();
        jobs.into_iter()
            .map(|j| j.join().expect("verification thread panicked"))
            .collect()
    });
    let reports = results.into_iter().collect::<Result<Vec<_>, _>>()?;

    let stable: Vec<VerificationReport> = reports.iter().filter(|r| r.stable).cloned().collect();
    let agree = counts_agree(&stable);
    let pass = agree && reports.iter().all(|r| r.pass);
    for r in &reports {
        println!("{}{}", r.summary(), if r.stable { "" } else { " (below stable range)" });
    }
    if stable.len() > 1 {
        println!(
            "stability across n={}: {}",
            stable.iter().map(|r| r.n.to_string()).collect::<Vec<_>>().join(","),
            if agree { "confirmed" } else { "MISMATCH" }
        );
    }
    println!("{}", if pass { "PASS" } else { "FAIL" });
    if let Some(path) = json {
        write_json(
            path,
            &VerifyOutput {
                reports: &reports,
                stable_counts_agree: agree,
                pass,
            },
        )?;
    }
    if pass {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn cmd_lr(lambda: &Partition, mu: &Partition, nu: Option<&Partition>, check: bool) -> Result<(), Failure> {
    match nu {
        Some(nu) => println!("{}", lr_coefficient(lambda, mu, nu)),
        None => println!("{}", schur_product_expand(lambda, mu)),
    }
    if check {
        let ok = oracle_agrees(lambda, mu);
        println!("oracle: {}", if ok { "agrees" } else { "DISAGREES" });
        if !ok {
            return Err(Failure::Mismatch);
        }
    }
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Socle { shape, out } => cmd_socle(shape, out),
        Command::Decompose { algebra, p, q, d, out } => cmd_decompose(*algebra, *p, *q, *d, out),
        Command::Verify { shape, n, json } => cmd_verify(shape, n, json.as_ref()),
        Command::Lr { lambda, mu, nu, check } => cmd_lr(lambda, mu, nu.as_ref(), *check),
    }
}

fn main() -> ExitCode {
    // clap exits with status 2 on its own parse errors.
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
