//! The `hyperarena` command line, callable in-process through [`run`].

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperarena::competition::{competition_graph, competition_graph_12_fast, competition_witness};
use hyperarena::constructions::{enumerate_all, GeneratorKind, GeneratorSpec, DEFAULT_BUDGET};
use hyperarena::graphs::classify_shape;
use hyperarena::io::{
    graph_to_dot, graph_to_json, instance_to_json, parse_graph_any, parse_instance_doc,
    parse_seed_range, parse_vertex_pair, shape_to_json, witness_to_json,
};
use hyperarena::verify::{sweep, Check, GraphBuilder, SweepConfig, SweepSource};
use hyperarena::{BuildOptions, FigureVariant, HyperError, Hypertournament, SimpleGraph};

pub const EXIT_INVALID: u8 = 1;
pub const EXIT_CHECK_FAILED: u8 = 2;
pub const EXIT_BUDGET: u8 = 3;
pub const BUDGET_VAR: &str = "HYPERARENA_BUDGET";

#[derive(Parser)]
#[command(
    name = "hyperarena",
    version = concat!(env!("CARGO_PKG_VERSION"), " (format 1)"),
    about = "Generate k-hypertournaments, build their competition graphs, and check shape results"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit an instance as JSON.
    Gen(GenArgs),
    /// Build C_{i,j} of an instance and emit it as graph JSON or DOT.
    Compete(CompeteArgs),
    /// Classify a graph (JSON or DOT) into the named shapes.
    Classify(ClassifyArgs),
    /// Run checks over an enumeration, a seeded sample, or instance files.
    Verify(VerifyArgs),
    /// Convert a graph between JSON and DOT.
    Export(ExportArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Transitive,
    T1,
    T2,
    T3,
    Random,
    Enumerate,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Text,
    Figure,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    /// Seed for --kind random.
    #[arg(long)]
    seed: Option<u64>,
    /// Enumeration index for --kind enumerate.
    #[arg(long)]
    index: Option<u64>,
    /// Orientation of the replaced arcs of t1/t2.
    #[arg(long, value_enum, default_value = "text")]
    figure_variant: Variant,
    /// Admit k = 2.
    #[arg(long)]
    tournament_mode: bool,
}

#[derive(Args)]
struct CompeteArgs {
    /// Instance JSON; stdin when absent or `-`.
    file: Option<PathBuf>,
    #[arg(long)]
    i: usize,
    #[arg(long)]
    j: usize,
    /// Use the missing-edge characterization (only for i=1, j=2).
    #[arg(long)]
    fast: bool,
    /// Print the certificate for the pair `x,y` instead of the graph.
    #[arg(long, value_name = "X,Y", conflicts_with_all = ["fast", "dot"])]
    witness: Option<String>,
    /// Emit DOT instead of JSON.
    #[arg(long)]
    dot: bool,
    /// Admit k = 2 instances.
    #[arg(long)]
    tournament_mode: bool,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Graph JSON or DOT; stdin when absent or `-`.
    file: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Source {
    All,
    Random,
    File,
}

#[derive(Clone, Copy, ValueEnum)]
enum Builder {
    Definition,
    Lemma,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    source: Source,
    /// Instance files for --source file.
    files: Vec<PathBuf>,
    #[arg(long, required_if_eq_any = [("source", "all"), ("source", "random")])]
    n: Option<usize>,
    #[arg(long, required_if_eq_any = [("source", "all"), ("source", "random")])]
    k: Option<usize>,
    /// Seed range `A..B` for --source random.
    #[arg(long, default_value = "0..100000")]
    seeds: String,
    /// Comma-separated subset of: missing-edge, complement, shape, collapse, sink, strongness.
    #[arg(long, value_delimiter = ',')]
    checks: Option<Vec<String>>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// First enumeration index for --source all.
    #[arg(long, default_value_t = 0)]
    resume: u64,
    /// Which C_{1,2} the shape checks use.
    #[arg(long, value_enum, default_value = "definition")]
    builder: Builder,
    /// Include wall-clock time in the JSON report.
    #[arg(long)]
    timing: bool,
}

#[derive(Args)]
struct ExportArgs {
    /// Graph JSON or DOT; stdin when absent or `-`.
    file: Option<PathBuf>,
    #[arg(long, conflicts_with = "json", required_unless_present = "json")]
    dot: bool,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Invalid(Vec<String>),
    Budget(String),
}

impl From<HyperError> for Failure {
    fn from(e: HyperError) -> Self {
        match e {
            HyperError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            e => Failure::Invalid(vec![e.to_string()]),
        }
    }
}

fn invalid(msg: impl Into<String>) -> Failure {
    Failure::Invalid(vec![msg.into()])
}

type Outcome = Result<(String, bool), Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stderr: &'a mut dyn Write,
}

impl Io<'_> {
    fn read_input(&mut self, file: &Option<PathBuf>) -> Result<String, Failure> {
        match file {
            Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
                .map_err(|e| invalid(format!("cannot read {}: {e}", p.display()))),
            _ => {
                let mut s = String::new();
                self.stdin
                    .read_to_string(&mut s)
                    .map_err(|e| invalid(format!("cannot read stdin: {e}")))?;
                Ok(s)
            }
        }
    }
}

/// Parses and validates an instance, reporting every problem found.
fn load_instance(text: &str, options: BuildOptions) -> Result<Hypertournament, Failure> {
    let doc = parse_instance_doc(text)?;
    doc.build(options).map_err(|first| {
        let all = doc.diagnose(options);
        if all.is_empty() {
            first.into()
        } else {
            Failure::Invalid(all.iter().map(|e| e.to_string()).collect())
        }
    })
}

fn budget() -> Result<u128, Failure> {
    match std::env::var(BUDGET_VAR) {
        Ok(s) => s.trim().parse().map_err(|_| {
            invalid(format!(
                "{BUDGET_VAR} must be a non-negative integer, got {s:?}"
            ))
        }),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn gen(a: GenArgs) -> Outcome {
    let variant = match a.figure_variant {
        Variant::Text => FigureVariant::Text,
        Variant::Figure => FigureVariant::Figure,
    };
    if a.k == 2 && !a.tournament_mode {
        return Err(invalid("k=2 needs --tournament-mode"));
    }
    if a.seed.is_some() && !matches!(a.kind, Kind::Random) {
        return Err(invalid("--seed only applies to --kind random"));
    }
    if a.index.is_some() && !matches!(a.kind, Kind::Enumerate) {
        return Err(invalid("--index only applies to --kind enumerate"));
    }
    let t = match a.kind {
        Kind::Enumerate => {
            let index = a
                .index
                .ok_or_else(|| invalid("--kind enumerate needs --index"))?;
            enumerate_all(a.n, a.k, budget()?)?.instance(index)?
        }
        kind => {
            let kind = match kind {
                Kind::Transitive => GeneratorKind::Transitive,
                Kind::T1 => GeneratorKind::T1(variant),
                Kind::T2 => GeneratorKind::T2(variant),
                Kind::T3 => GeneratorKind::T3,
                Kind::Random => GeneratorKind::Random(
                    a.seed
                        .ok_or_else(|| invalid("--kind random needs --seed"))?,
                ),
                Kind::Enumerate => unreachable!(),
            };
            GeneratorSpec {
                kind,
                n: a.n,
                k: a.k,
            }
            .generate()?
        }
    };
    Ok((instance_to_json(&t) + "\n", true))
}

fn compete(a: CompeteArgs, io: &mut Io) -> Outcome {
    if a.fast && (a.i, a.j) != (1, 2) {
        return Err(invalid("--fast is only available for --i 1 --j 2"));
    }
    if a.i < 1 || a.j < 1 {
        return Err(invalid("--i and --j must be at least 1"));
    }
    let pair = a.witness.as_deref().map(parse_vertex_pair).transpose()?;
    let t = load_instance(
        &io.read_input(&a.file)?,
        BuildOptions {
            tournament_mode: a.tournament_mode,
        },
    )?;
    if let Some((x, y)) = pair {
        let w = competition_witness(&t, x, y, a.i, a.j)?;
        return Ok((
            witness_to_json(&t, (x, y), (a.i, a.j), w.as_ref()) + "\n",
            true,
        ));
    }
    let g = if a.fast {
        competition_graph_12_fast(&t)?
    } else {
        competition_graph(&t, a.i, a.j)?
    };
    Ok((emit_graph(&g, a.dot), true))
}

fn emit_graph(g: &SimpleGraph, dot: bool) -> String {
    if dot {
        graph_to_dot(g)
    } else {
        graph_to_json(g) + "\n"
    }
}

fn classify(a: ClassifyArgs, io: &mut Io) -> Outcome {
    let g = parse_graph_any(&io.read_input(&a.file)?)?;
    let shape = classify_shape(&g);
    let line = if a.json {
        shape_to_json(&shape)
    } else {
        shape.to_string()
    };
    Ok((line + "\n", true))
}

fn export(a: ExportArgs, io: &mut Io) -> Outcome {
    let g = parse_graph_any(&io.read_input(&a.file)?)?;
    Ok((emit_graph(&g, a.dot), true))
}

fn verify(a: VerifyArgs, io: &mut Io) -> Outcome {
    let checks = match &a.checks {
        None => Check::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|s| s.trim().parse())
            .collect::<Result<Vec<Check>, _>>()?,
    };
    if a.jobs == 0 {
        return Err(invalid("--jobs must be at least 1"));
    }
    if !a.files.is_empty() && !matches!(a.source, Source::File) {
        return Err(invalid("instance files are only read with --source file"));
    }
    let source = match a.source {
        Source::All => SweepSource::all(a.n.unwrap_or(0), a.k.unwrap_or(0), a.resume, budget()?),
        Source::Random => SweepSource::Random {
            n: a.n.unwrap_or(0),
            k: a.k.unwrap_or(0),
            seeds: parse_seed_range(&a.seeds)?,
        },
        Source::File => {
            if a.files.is_empty() {
                return Err(invalid("--source file needs at least one instance file"));
            }
            let mut list = Vec::new();
            for f in &a.files {
                let t = load_instance(&io.read_input(&Some(f.clone()))?, BuildOptions::default())?;
                if a.n.is_some_and(|n| n != t.n()) || a.k.is_some_and(|k| k != t.k()) {
                    return Err(invalid(format!("{} does not match --n/--k", f.display())));
                }
                list.push(t);
            }
            SweepSource::Instances(list)
        }
    };
    let cfg = SweepConfig {
        checks,
        jobs: a.jobs,
        builder: match a.builder {
            Builder::Definition => GraphBuilder::Definition,
            Builder::Lemma => GraphBuilder::Lemma,
        },
        ..SweepConfig::default()
    };
    let mut report = sweep(&source, &cfg)?;
    let _ = io.stderr.write_all(report.table().as_bytes());
    if !a.timing {
        report.elapsed_seconds = None;
    }
    Ok((report.to_json() + "\n", report.passed()))
}

fn dispatch(cli: Cli, io: &mut Io) -> Outcome {
    match cli.command {
        Command::Gen(a) => gen(a),
        Command::Compete(a) => compete(a, io),
        Command::Classify(a) => classify(a, io),
        Command::Verify(a) => verify(a, io),
        Command::Export(a) => export(a, io),
    }
}

/// Runs one command line (`args[0]` is the program name) and returns the exit
/// code: 0 success, 1 invalid input or usage, 2 a check failed, 3 budget exceeded.
pub fn run<I, T>(
    args: I,
    stdin: &mut dyn Read,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(stderr, "{}", e.render());
                return EXIT_INVALID;
            }
            let _ = write!(stdout, "{}", e.render());
            return 0;
        }
    };
    let result = dispatch(
        cli,
        &mut Io {
            stdin,
            stderr: &mut *stderr,
        },
    );
    match result {
        Ok((out, passed)) => {
            if stdout
                .write_all(out.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return EXIT_INVALID;
            }
            if passed {
                0
            } else {
                EXIT_CHECK_FAILED
            }
        }
        Err(Failure::Invalid(msgs)) => {
            for m in msgs {
                let _ = writeln!(stderr, "error: {m}");
            }
            EXIT_INVALID
        }
        Err(Failure::Budget(msg)) => {
            let _ = writeln!(stderr, "error: {msg} (raise it with {BUDGET_VAR})");
            EXIT_BUDGET
        }
    }
}
