//! Command-line front end: generate complexes and maps, compute Reeb
//! graphs and nerves, classify boundary folds, and run the verifier suite.
//!
//! Exit codes: 0 = success / all verifications pass, 1 = a verification
//! failed, 2 = usage or input error.

use clap::{Args, Parser, Subcommand};
use plreeb::complex::{generate, GeneratorKind};
use plreeb::json;
use plreeb::num::parse_q;
use plreeb::plmaps::canonical::{canonical_map, matches_generator, CanonicalKind, SummandKind};
use plreeb::plmaps::{classify_boundary_vertices, is_boundary_special_generic};
use plreeb::reeb::{reeb_graph, reeb_nerve};
use plreeb::verify::{run_suite, statement_report, VerificationReport};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "plreeb",
    about = "PL topology engine: triangulated manifolds with boundary, fold \
             classification, Reeb spaces, exact homology",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a triangulated manifold and write it as JSON.
    Generate(GenerateArgs),
    /// Build a canonical map over a generated complex.
    Map(MapArgs),
    /// Compute the Reeb graph (scalar maps, JSON or DOT) or cover nerve
    /// (planar maps, JSON) of a map.
    Reeb(ReebArgs),
    /// Classify the boundary vertices of a map and report the fold set.
    Classify(ClassifyArgs),
    /// Run one statement verifier and write its report.
    Verify(VerifyArgs),
    /// Run the full verifier suite.
    Suite(SuiteArgs),
}

#[derive(Args)]
struct GenerateArgs {
    /// disk | sphere | solid-torus | twisted-solid-torus
    kind: String,
    /// dimension for disk/sphere
    #[arg(long)]
    dim: Option<usize>,
    /// circle-direction resolution for the torus generators
    #[arg(long)]
    res: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct MapArgs {
    /// height-disk | product-solid-torus | twisted-map | sum-map
    kind: String,
    #[arg(long)]
    dim: Option<usize>,
    #[arg(long)]
    res: Option<usize>,
    /// summand list for sum-map, e.g. "o,o,t" (o = solid torus, t = twisted)
    #[arg(long)]
    summands: Option<String>,
    /// complex the map must live on (checked against the generator)
    #[arg(long)]
    complex: Option<PathBuf>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ReebArgs {
    #[arg(long)]
    map: PathBuf,
    #[arg(long, default_value_t = 8)]
    grid: usize,
    /// overlap fraction, a rational in (0, 1/2)
    #[arg(long, default_value = "1/3")]
    overlap: String,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    map: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// prop2.5 | lemma2.6 | prop2.7 | prop2.9 | thm2.10 | thm3.1
    statement: String,
    #[arg(long, default_value_t = 1)]
    r: usize,
    #[arg(long, default_value_t = 0)]
    rp: usize,
    #[arg(long, default_value_t = 8)]
    res: usize,
    #[arg(long, default_value_t = 8)]
    grid: usize,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SuiteArgs {
    /// run every statement verifier
    #[arg(long, default_value_t = true)]
    all: bool,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, default_value_t = 8)]
    res: usize,
    #[arg(long, default_value_t = 8)]
    grid: usize,
    /// directory for the per-statement report JSON files
    #[arg(long)]
    out: Option<PathBuf>,
}

fn env_seed() -> u64 {
    std::env::var("REEB_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0)
}

enum CliError {
    Usage(String),
    Failed,
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("io error: {e}"))
    }
}

fn emit(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)?,
        None => println!("{content}"),
    }
    Ok(())
}

fn generator_kind(args: &GenerateArgs) -> Result<GeneratorKind, CliError> {
    match args.kind.as_str() {
        "disk" => Ok(GeneratorKind::Disk(args.dim.unwrap_or(2))),
        "sphere" => Ok(GeneratorKind::Sphere(args.dim.unwrap_or(2))),
        "solid-torus" => Ok(GeneratorKind::SolidTorus(args.res.unwrap_or(8))),
        "twisted-solid-torus" => Ok(GeneratorKind::TwistedSolidTorus(args.res.unwrap_or(8))),
        other => Err(CliError::Usage(format!("unknown generator kind {other:?}"))),
    }
}

fn parse_summands(spec: &str) -> Result<Vec<SummandKind>, CliError> {
    spec.split(',')
        .map(|tok| match tok.trim() {
            "o" | "orientable" | "solid-torus" => Ok(SummandKind::Orientable),
            "t" | "twisted" => Ok(SummandKind::Twisted),
            other => Err(CliError::Usage(format!("unknown summand {other:?}"))),
        })
        .collect()
}

fn canonical_kind(args: &MapArgs) -> Result<CanonicalKind, CliError> {
    let res = args.res.unwrap_or(8);
    match args.kind.as_str() {
        "height-disk" => Ok(CanonicalKind::HeightDisk(args.dim.unwrap_or(2))),
        "product-solid-torus" => Ok(CanonicalKind::ProductSolidTorus { res }),
        "twisted-map" => Ok(CanonicalKind::TwistedMap { res }),
        "sum-map" => {
            let spec = args
                .summands
                .as_deref()
                .ok_or_else(|| CliError::Usage("sum-map needs --summands".into()))?;
            Ok(CanonicalKind::SumMap {
                summands: parse_summands(spec)?,
                res,
            })
        }
        other => Err(CliError::Usage(format!("unknown map kind {other:?}"))),
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Generate(args) => {
            let kind = generator_kind(&args)?;
            let k = generate(kind).map_err(|e| CliError::Usage(e.to_string()))?;
            emit(&args.out, &json::complex_to_json(&k))
        }
        Command::Map(args) => {
            let kind = canonical_kind(&args)?;
            let f = canonical_map(&kind).map_err(|e| CliError::Usage(e.to_string()))?;
            if let Some(path) = &args.complex {
                let text = std::fs::read_to_string(path)?;
                let k = json::complex_from_json(&text)
                    .map_err(|e| CliError::Usage(e.to_string()))?;
                if !matches_generator(&kind, &k) {
                    return Err(CliError::Usage(
                        "supplied complex does not match the map kind".into(),
                    ));
                }
            }
            emit(&args.out, &json::map_to_json(&f))
        }
        Command::Reeb(args) => {
            let text = std::fs::read_to_string(&args.map)?;
            let f = json::map_from_json(&text).map_err(|e| CliError::Usage(e.to_string()))?;
            let dot = args
                .out
                .as_ref()
                .map_or(false, |p| p.extension().is_some_and(|e| e == "dot"));
            match f.target_dim() {
                1 => {
                    let g = reeb_graph(&f).map_err(|e| CliError::Usage(e.to_string()))?;
                    if dot {
                        emit(&args.out, &g.to_dot())
                    } else {
                        emit(&args.out, &json::graph_to_json(&g))
                    }
                }
                _ => {
                    let overlap = parse_q(&args.overlap)
                        .ok_or_else(|| CliError::Usage("bad overlap".into()))?;
                    let nerve = reeb_nerve(&f, args.grid, &overlap)
                        .map_err(|e| CliError::Usage(e.to_string()))?;
                    emit(&args.out, &json::nerve_to_json(&nerve))
                }
            }
        }
        Command::Classify(args) => {
            let text = std::fs::read_to_string(&args.map)?;
            let f = json::map_from_json(&text).map_err(|e| CliError::Usage(e.to_string()))?;
            let cls =
                classify_boundary_vertices(&f).map_err(|e| CliError::Usage(e.to_string()))?;
            let bsg =
                is_boundary_special_generic(&f).map_err(|e| CliError::Usage(e.to_string()))?;
            let value = serde_json_value(&cls, bsg.pass);
            println!("{value}");
            Ok(())
        }
        Command::Verify(args) => {
            let seed = args.seed.unwrap_or_else(env_seed);
            let report = statement_report(
                &args.statement,
                seed,
                args.r,
                args.rp,
                args.res,
                args.grid,
            )
            .map_err(|e| CliError::Usage(e.to_string()))?;
            emit(&args.out, &json::report_to_json(&report))?;
            print_summary(&report);
            if report.pass {
                Ok(())
            } else {
                Err(CliError::Failed)
            }
        }
        Command::Suite(args) => {
            let seed = args.seed.unwrap_or_else(env_seed);
            let reports = run_suite(seed, args.res, args.grid)
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let mut all_pass = true;
            for report in &reports {
                print_summary(report);
                all_pass &= report.pass;
                if let Some(dir) = &args.out {
                    std::fs::create_dir_all(dir)?;
                    let path = dir.join(format!("{}.json", report.statement));
                    std::fs::write(path, json::report_to_json(report))?;
                }
            }
            if all_pass {
                Ok(())
            } else {
                Err(CliError::Failed)
            }
        }
    }
}

fn print_summary(report: &VerificationReport) {
    let status = if report.pass { "pass" } else { "FAIL" };
    println!(
        "{:9} {} ({} checks, {} notes)",
        report.statement,
        status,
        report.details.len(),
        report.unverified_notes.len()
    );
    for check in &report.details {
        if !check.pass {
            println!("    FAIL {}: {} != {}", check.name, check.lhs, check.rhs);
        }
    }
}

fn serde_json_value(
    cls: &plreeb::plmaps::VertexClassification,
    bsg_pass: bool,
) -> String {
    use std::fmt::Write;
    let mut out = String::from("{\n  \"labels\": {\n");
    let mut first = true;
    for (v, label) in &cls.labels {
        if !first {
            out.push_str(",\n");
        }
        first = false;
        write!(out, "    \"{v}\": \"{label:?}\"").unwrap();
    }
    write!(
        out,
        "\n  }},\n  \"boundary_special_generic\": {bsg_pass}\n}}"
    )
    .unwrap();
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
