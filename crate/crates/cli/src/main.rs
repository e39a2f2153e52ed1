//! `renitent`: generate point multisets over GF(q), classify their uniform
//! directions, build dual envelopes of the renitent lines and check the
//! bounds that come with them.
//!
//! Exit codes: 0 pass, 2 input error, 3 hypothesis rejected, 4 verification
//! failure.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use renitent_core::generators::{generate, random_distinct_points, GenSpec};
use renitent_core::pipeline::{self, parse_field, Bound, CChoice, Failure, FailureKind, Outcome, Theorem};
use renitent_core::plane::ProjLine;
use renitent_core::uniformity::PointMultiset;
use renitent_core::{Elem, Field};

const EXIT_INPUT: u8 = 2;
const EXIT_HYPOTHESIS: u8 = 3;
const EXIT_VERIFY: u8 = 4;

#[derive(Parser)]
#[command(name = "renitent", version, about = "Renitent lines and their envelopes in PG(2,q)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a point multiset and a `<out>.truth.json` sidecar.
    Gen(GenArgs),
    /// Classify every direction and list the renitent lines.
    Analyze(AnalyzeArgs),
    /// Build and verify a dual envelope of the renitent lines.
    Envelope(EnvelopeArgs),
    /// Evaluate one of the bounds on renitent lines.
    Check(CheckArgs),
}

#[derive(Args)]
struct Common {
    /// `q`, `p^e` or `p^e:m=c0,...,ce`.
    #[arg(long)]
    field: String,
    /// Point-set file, one `a b [m]` per line.
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long)]
    lambda: usize,
    /// Also write the JSON report here.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Print JSON instead of a summary.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Planted,
    Conic,
    Random,
    Lines,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    field: String,
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    out: PathBuf,
    /// Planted points `a,b;a,b;...`; drawn at random when absent.
    #[arg(long)]
    points: Option<String>,
    /// Planted weights `w1,w2,...`; all 1 when absent.
    #[arg(long)]
    weights: Option<String>,
    /// Number of random planted points.
    #[arg(long, default_value_t = 1)]
    lambda: usize,
    /// Lines `[A:B:C];...` for the union-of-lines kind.
    #[arg(long)]
    lines: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.5)]
    density: f64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    common: Common,
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Regular,
    Weighted,
    General,
}

#[derive(Args)]
struct EnvelopeArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum, default_value = "regular")]
    theorem: TheoremArg,
    /// Residue `c` for the weighted envelope, or `scan`.
    #[arg(long, default_value = "1")]
    c: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum BoundArg {
    Deficiency,
    Szw,
    Renitent,
    Dichotomy,
}

#[derive(Args)]
struct CheckArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, value_enum)]
    bound: BoundArg,
}

fn exit_code(f: &Failure) -> u8 {
    match f.kind {
        FailureKind::Input => EXIT_INPUT,
        FailureKind::Hypothesis => EXIT_HYPOTHESIS,
    }
}

fn elem(field: &Field, s: &str) -> Result<Elem, Failure> {
    s.trim()
        .parse::<u32>()
        .ok()
        .and_then(|i| field.elem(i).ok())
        .ok_or_else(|| Failure::input(format!("{s:?} is not an element of GF({})", field.q())))
}

fn load(common: &Common) -> Result<PointMultiset, Failure> {
    let field = parse_field(&common.field)?;
    let text = fs::read_to_string(&common.input)
        .map_err(|e| Failure::input(format!("{}: {e}", common.input.display())))?;
    PointMultiset::parse(&field, &text).map_err(|e| Failure::input(format!("{}: {e}", common.input.display())))
}

/// Writes through a sibling temporary file so readers never see a partial file.
fn write_atomic(path: &Path, contents: &str) -> Result<(), Failure> {
    let mut tmp = path.as_os_str().to_owned();
    tmp.push(".tmp");
    let tmp = PathBuf::from(tmp);
    fs::write(&tmp, contents)
        .and_then(|_| fs::rename(&tmp, path))
        .map_err(|e| Failure::input(format!("{}: {e}", path.display())))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn emit(common: &Common, outcome: Outcome) -> Result<ExitCode, Failure> {
    if let Some(path) = &common.out {
        write_atomic(path, &pretty(&outcome.report))?;
    }
    if common.json {
        print!("{}", pretty(&outcome.report));
    } else {
        print!("{}", outcome.summary);
    }
    Ok(if outcome.pass { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VERIFY) })
}

fn parse_points(field: &Field, s: &str) -> Result<Vec<(Elem, Elem)>, Failure> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let (a, b) = p.split_once(',').ok_or_else(|| Failure::input(format!("expected `a,b`, got {p:?}")))?;
            Ok((elem(field, a)?, elem(field, b)?))
        })
        .collect()
}

fn cmd_gen(args: &GenArgs) -> Result<ExitCode, Failure> {
    let field = parse_field(&args.field)?;
    let spec = match args.kind {
        Kind::Planted => {
            let points = match &args.points {
                Some(s) => parse_points(&field, s)?,
                None => random_distinct_points(&field, args.lambda, args.seed),
            };
            let weights = match &args.weights {
                Some(s) => s
                    .split(',')
                    .map(|w| w.trim().parse::<u64>().map_err(|_| Failure::input(format!("bad weight {w:?}"))))
                    .collect::<Result<_, _>>()?,
                None => vec![1; points.len()],
            };
            GenSpec::Planted { points, weights }
        }
        Kind::Conic => GenSpec::NormConic,
        Kind::Random => GenSpec::Random { seed: args.seed, density: args.density },
        Kind::Lines => {
            let s = args.lines.as_deref().ok_or_else(|| Failure::input("--kind lines needs --lines"))?;
            let lines = s
                .split(';')
                .filter(|l| !l.trim().is_empty())
                .map(|l| ProjLine::parse(&field, l).map_err(|e| Failure::input(e.to_string())))
                .collect::<Result<_, _>>()?;
            GenSpec::UnionLines { lines }
        }
    };
    let generated = generate(&field, &spec)?;
    let mut text = format!("# {} over GF({}) |T|={}\n", spec.kind(), field.q(), generated.multiset.size());
    text.push_str(&generated.multiset.to_text());
    write_atomic(&args.out, &text)?;
    let mut truth_path = args.out.as_os_str().to_owned();
    truth_path.push(".truth.json");
    write_atomic(Path::new(&truth_path), &pretty(&generated.truth))?;
    if args.json {
        print!("{}", pretty(&generated.truth));
    } else {
        println!("wrote {} ({} points, |T|={})", args.out.display(), generated.multiset.iter().count(), generated.multiset.size());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_analyze(args: &AnalyzeArgs) -> Result<ExitCode, Failure> {
    let t = load(&args.common)?;
    emit(&args.common, pipeline::analyze(&t, args.common.lambda)?)
}

fn cmd_envelope(args: &EnvelopeArgs) -> Result<ExitCode, Failure> {
    let t = load(&args.common)?;
    let theorem = match args.theorem {
        TheoremArg::Regular => Theorem::Regular,
        TheoremArg::Weighted => Theorem::Weighted,
        TheoremArg::General => Theorem::General,
    };
    let c = match args.c.trim() {
        "scan" => CChoice::Scan,
        s => CChoice::Fixed(
            s.parse().map_err(|_| Failure::input(format!("--c expects an integer or `scan`, got {:?}", args.c)))?,
        ),
    };
    emit(&args.common, pipeline::envelope(&t, args.common.lambda, theorem, c)?)
}

fn cmd_check(args: &CheckArgs) -> Result<ExitCode, Failure> {
    let t = load(&args.common)?;
    let bound = match args.bound {
        BoundArg::Deficiency => Bound::Deficiency,
        BoundArg::Szw => Bound::Szw,
        BoundArg::Renitent => Bound::Renitent,
        BoundArg::Dichotomy => Bound::Dichotomy,
    };
    emit(&args.common, pipeline::check(&t, args.common.lambda, bound)?)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_INPUT) } else { ExitCode::SUCCESS };
        }
    };
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Envelope(a) => cmd_envelope(a),
        Command::Check(a) => cmd_check(a),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(exit_code(&f))
        }
    }
}
