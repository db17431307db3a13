//! Command-line front end: build group data, run the verification suites,
//! enumerate affine Weyl elements, and export moment point clouds.

use std::fs;
use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use afflag::affweyl::aw_enumerate;
use afflag::arrangement::component_sign;
use afflag::groupoid::LineBundleClass;
use afflag::moment::{moment_cloud, paraboloid_residual};
use afflag::rat_to_string;
use afflag::rootsys::{build_from_name, RootSystem};
use afflag::verify::{run_all, SuiteStatus, VerifyConfig, RNG_ALGORITHM};

#[derive(Parser)]
#[command(
    name = "afflag",
    version,
    about = "Exact computations with affine Weyl groups, fixed-point arrangements and moment images"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run all verification suites and report one PASS/FAIL line per suite
    Verify(CommonArgs),
    /// Export the moment images of fixed points with paraboloid residuals
    Moment(MomentArgs),
    /// Enumerate group elements by length with component signs
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Group selector, e.g. A1, B2, G2
    #[arg(long)]
    group: String,
    /// Length bound for enumerated elements
    #[arg(long, default_value_t = 6)]
    maxlen: u32,
    /// Number of random samples per randomized suite
    #[arg(long, default_value_t = 200)]
    trials: u32,
    /// Seed for the named random generator
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

#[derive(Args)]
struct MomentArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 6)]
    maxlen: u32,
    /// Weight in fundamental-weight coordinates, comma-separated (e.g. 1,0)
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        required = true
    )]
    chi: Vec<i64>,
    /// Level (coefficient of the determinant class); must be nonzero
    #[arg(long, allow_hyphen_values = true)]
    kappa: i64,
    /// Output file; stdout when omitted
    #[arg(long)]
    out: Option<String>,
    #[arg(long, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = 6)]
    maxlen: u32,
    #[arg(long)]
    out: Option<String>,
    #[arg(long, default_value = "json")]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct MomentFile {
    group: String,
    chi: Vec<i64>,
    kappa: i64,
    points: Vec<MomentRow>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct MomentRow {
    length: u32,
    lambda: Vec<i64>,
    w: Vec<Vec<i64>>,
    m0: String,
    m1: Vec<String>,
    residual: String,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct EnumerateFile {
    group: String,
    maxlen: u32,
    elements: Vec<EnumerateRow>,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
struct EnumerateRow {
    length: u32,
    lambda: Vec<i64>,
    w: Vec<Vec<i64>>,
    sign: i64,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Moment(args) => cmd_moment(args),
        Command::Enumerate(args) => cmd_enumerate(args),
    };
    match result {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn load_group(name: &str) -> anyhow::Result<RootSystem> {
    build_from_name(name).with_context(|| format!("cannot build group {name:?}"))
}

fn cmd_verify(args: CommonArgs) -> anyhow::Result<ExitCode> {
    let rs = load_group(&args.group)?;
    let cfg = VerifyConfig {
        maxlen: args.maxlen,
        trials: args.trials.max(1),
        seed: args.seed,
    };
    println!(
        "afflag verify: group={} maxlen={} trials={} seed={} rng={}",
        rs.name(),
        cfg.maxlen,
        cfg.trials,
        cfg.seed,
        RNG_ALGORITHM
    );
    let reports = run_all(&rs, &cfg);
    let mut all_pass = true;
    for r in &reports {
        let mut line = format!(
            "{:<16} {:<7} ({} checks)",
            r.name,
            r.status.as_str(),
            r.checks
        );
        if !r.detail.is_empty() {
            line.push_str(&format!(" -- {}", r.detail));
        }
        println!("{line}");
        if r.status == SuiteStatus::Fail {
            all_pass = false;
        }
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn weyl_rows(entries: &[i64], n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| entries[i * n..(i + 1) * n].to_vec())
        .collect()
}

fn cmd_moment(args: MomentArgs) -> anyhow::Result<ExitCode> {
    let rs = load_group(&args.group)?;
    let chi = args.chi.clone();
    if chi.len() != rs.rank() {
        bail!("chi must have {} coordinates for {}", rs.rank(), rs.name());
    }
    if args.kappa == 0 {
        bail!("residuals are undefined at kappa = 0");
    }
    let l = LineBundleClass::new(chi.clone(), args.kappa);
    let rows: Vec<MomentRow> = moment_cloud(&rs, &l, args.maxlen)
        .into_iter()
        .map(|row| {
            let residual = paraboloid_residual(&rs, &row.point, &l).expect("kappa nonzero");
            MomentRow {
                length: row.length,
                lambda: row.element.lambda.clone(),
                w: weyl_rows(row.element.w.entries(), rs.rank()),
                m0: rat_to_string(&row.point.m0),
                m1: row.point.m1.iter().map(rat_to_string).collect(),
                residual: rat_to_string(&residual),
            }
        })
        .collect();
    let file = MomentFile {
        group: rs.name(),
        chi,
        kappa: args.kappa,
        points: rows,
    };
    let bytes = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&file)?;
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let mut wtr = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            wtr.write_record(["length", "lambda", "w", "m0", "m1", "residual"])?;
            for row in &file.points {
                wtr.write_record([
                    row.length.to_string(),
                    join_ints(&row.lambda),
                    join_matrix(&row.w),
                    row.m0.clone(),
                    row.m1.join(" "),
                    row.residual.clone(),
                ])?;
            }
            wtr.into_inner()?
        }
    };
    emit(args.out.as_deref(), &bytes)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_enumerate(args: EnumerateArgs) -> anyhow::Result<ExitCode> {
    let rs = load_group(&args.group)?;
    let elements: Vec<EnumerateRow> = aw_enumerate(&rs, args.maxlen)
        .into_iter()
        .map(|(elem, length)| EnumerateRow {
            length,
            lambda: elem.lambda.clone(),
            w: weyl_rows(elem.w.entries(), rs.rank()),
            sign: component_sign(&elem),
        })
        .collect();
    let file = EnumerateFile {
        group: rs.name(),
        maxlen: args.maxlen,
        elements,
    };
    let bytes = match args.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&file)?;
            s.push('\n');
            s.into_bytes()
        }
        Format::Csv => {
            let mut wtr = csv::WriterBuilder::new()
                .terminator(csv::Terminator::Any(b'\n'))
                .from_writer(Vec::new());
            wtr.write_record(["length", "lambda", "w", "sign"])?;
            for row in &file.elements {
                wtr.write_record([
                    row.length.to_string(),
                    join_ints(&row.lambda),
                    join_matrix(&row.w),
                    row.sign.to_string(),
                ])?;
            }
            wtr.into_inner()?
        }
    };
    emit(args.out.as_deref(), &bytes)?;
    Ok(ExitCode::SUCCESS)
}

fn join_ints(v: &[i64]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn join_matrix(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|row| join_ints(row))
        .collect::<Vec<_>>()
        .join(";")
}

fn emit(out: Option<&str>, bytes: &[u8]) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, bytes).with_context(|| format!("cannot write {path}")),
        None => {
            std::io::stdout().write_all(bytes)?;
            Ok(())
        }
    }
}
