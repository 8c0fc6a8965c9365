//! `ceva`: generate, check and render cevian-family instances.
//!
//! Exit codes: 0 success, 2 input or flag error, 10 when the global and the
//! per-face concurrence decisions disagree on some instance.

mod verify;

use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use ceva_core::format::{InstanceFile, MultipedeDoc, Provenance};
use ceva_core::generate::{generate, trial_rng, Mode, DEFAULT_DENOMINATOR_BOUND};
use ceva_core::{
    check_condition_2_via_order, intersect_family, intersect_family_detailed, svg, verify_equivalence, BaryPoint,
    ConcurrenceReport, Error, Face, Intersection, Multipede,
};
use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub const EXIT_INPUT: u8 = 2;
pub const EXIT_FALSIFIED: u8 = 10;

#[derive(Debug, Parser)]
#[command(name = "ceva", version, about = "Concurrence of k-cevian families in an n-simplex, in exact arithmetic")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct OutputArg {
    /// Write to this file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a seeded instance file.
    Gen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value = "concurrent", value_parser = parse_mode)]
        mode: Mode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_DENOMINATOR_BOUND)]
        denominator_bound: u64,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Decide concurrence both globally and face by face and report.
    Check {
        /// Instance file, or "-" for standard input.
        file: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Print the common interior point of a family, if any.
    Intersect {
        file: String,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Print the multipede induced by a point, e.g. "1/2,1/4,1/8,1/8".
    Induce {
        point: String,
        /// Face to induce on (comma separated); defaults to the point's support.
        #[arg(long)]
        face: Option<String>,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Run a seeded campaign: half concurrent, half perturbed instances per (n, k) cell.
    Verify {
        /// Dimension or inclusive range, e.g. "3" or "2..4".
        #[arg(long)]
        n: String,
        /// "all" or one cevian dimension.
        #[arg(long, default_value = "all")]
        k: String,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_DENOMINATOR_BOUND)]
        denominator_bound: u64,
        #[command(flatten)]
        out: OutputArg,
    },
    /// Draw a family on one triangular face as SVG.
    Render {
        file: String,
        /// Three vertex indices, comma separated; defaults to 0,1,2.
        #[arg(long)]
        face: Option<String>,
        #[command(flatten)]
        out: OutputArg,
    },
}

fn parse_mode(s: &str) -> Result<Mode, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn read_input(file: &str) -> anyhow::Result<String> {
    if file == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading standard input")?;
        Ok(s)
    } else {
        fs::read_to_string(file).with_context(|| format!("reading {file}"))
    }
}

fn load_instance(file: &str) -> anyhow::Result<InstanceFile> {
    let text = read_input(file)?;
    InstanceFile::parse(&text).with_context(|| format!("parsing {file}"))
}

fn emit(out: &OutputArg, text: &str) -> anyhow::Result<()> {
    match &out.output {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

pub fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("plain data serializes");
    s.push('\n');
    s
}

fn parse_indices(s: &str, n: usize) -> anyhow::Result<Face> {
    let ix = s
        .split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| anyhow!("bad vertex index {t:?}")))
        .collect::<anyhow::Result<Vec<_>>>()?;
    Ok(Face::new(ix, n)?)
}

fn cmd_gen(n: usize, k: usize, mode: Mode, seed: u64, bound: u64, out: &OutputArg) -> anyhow::Result<u8> {
    if n < 2 || k == 0 || k >= n {
        bail!("need n >= 2 and 1 <= k < n, got n={n} k={k}");
    }
    let inst = generate(&mut trial_rng(seed, n, k, mode, 0), n, k, mode, bound)?;
    let provenance = Provenance {
        mode: mode.to_string(),
        seed,
        denominator_bound: bound,
        witness: inst.witness.map(BaryPoint::into_coords),
    };
    emit(out, &InstanceFile::new(&inst.family, Some(provenance)).to_json())?;
    Ok(0)
}

fn cmd_check(file: &str, out: &OutputArg) -> anyhow::Result<u8> {
    let inst = load_instance(file)?;
    let fam = inst.family()?;
    if fam.uniform_k().is_none() {
        emit(out, &to_json(&ConcurrenceReport::intersection_only(&fam)))?;
        return Ok(0);
    }
    match verify_equivalence(&fam) {
        Ok(report) => {
            let by_order: Vec<Face> = check_condition_2_via_order(&fam)?;
            emit(out, &to_json(&report))?;
            if by_order != report.failing_faces {
                eprintln!(
                    "per-face criterion disagrees with its order-based form: {:?} vs {:?}",
                    report.failing_faces, by_order
                );
                return Ok(EXIT_FALSIFIED);
            }
            Ok(0)
        }
        Err(e @ Error::TheoremViolation { .. }) => {
            eprintln!("{e}");
            Ok(EXIT_FALSIFIED)
        }
        Err(e) => Err(e.into()),
    }
}

#[derive(Serialize)]
struct IntersectOutput {
    intersects: bool,
    witness: Option<BaryPoint>,
    boundary_only: bool,
}

fn cmd_intersect(file: &str, out: &OutputArg) -> anyhow::Result<u8> {
    let fam = load_instance(file)?.family()?;
    let inter = intersect_family_detailed(&fam);
    let boundary_only = matches!(inter, Intersection::BoundaryOnly(_));
    let witness = inter.interior();
    let doc = IntersectOutput {
        intersects: witness.is_some(),
        witness,
        boundary_only,
    };
    emit(out, &to_json(&doc))?;
    Ok(0)
}

fn cmd_induce(point: &str, face: Option<&str>, out: &OutputArg) -> anyhow::Result<u8> {
    let coords: Vec<&str> = point.split(',').map(str::trim).collect();
    let p = BaryPoint::parse(&coords)?;
    let face = match face {
        Some(s) => parse_indices(s, p.ambient_n())?,
        None => p.support(),
    };
    let m = Multipede::induce(&face, &p)?;
    emit(out, &to_json(&MultipedeDoc::from_multipede(&m)))?;
    Ok(0)
}

fn cmd_render(file: &str, face: Option<&str>, out: &OutputArg) -> anyhow::Result<u8> {
    let inst = load_instance(file)?;
    let fam = inst.family()?;
    let face = parse_indices(face.unwrap_or("0,1,2"), fam.ambient_n())?;
    let witness = match inst.witness()? {
        Some(w) => Some(w),
        None => intersect_family(&fam),
    };
    emit(out, &svg::render(&fam, &face, witness.as_ref())?)?;
    Ok(0)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Gen {
            n,
            k,
            mode,
            seed,
            denominator_bound,
            out,
        } => cmd_gen(n, k, mode, seed, denominator_bound, &out),
        Command::Check { file, out } => cmd_check(&file, &out),
        Command::Intersect { file, out } => cmd_intersect(&file, &out),
        Command::Induce { point, face, out } => cmd_induce(&point, face.as_deref(), &out),
        Command::Verify {
            n,
            k,
            trials,
            seed,
            denominator_bound,
            out,
        } => {
            let plan = verify::Plan::parse(&n, &k, trials, seed, denominator_bound)?;
            let summary = verify::run(&plan);
            emit(&out, &to_json(&summary))?;
            Ok(summary.exit_code())
        }
        Command::Render { file, face, out } => cmd_render(&file, face.as_deref(), &out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}
