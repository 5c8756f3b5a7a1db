use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spectral_extremal::formats::{parse_graph6_lines, to_graph6};
use spectral_extremal::generators::{complete, complete_bipartite, cycle, path, petersen, star};
use spectral_extremal::verdict::TheoremId;
use spectral_extremal::verify::{
    fuzz, sweep, Dedup, Distribution, FuzzConfig, SweepConfig, SweepReport,
};
use spectral_extremal::Graph;

mod analyze;

const EXIT_VIOLATED: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_CONFIG: u8 = 3;

#[derive(Parser)]
#[command(
    name = "spectool",
    version,
    about = "Spectral radius bounds and extremal checks for small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report statistics, spectrum, bounds and cycle data for graph6 input.
    Analyze(AnalyzeArgs),
    /// Check theorems on every graph up to a given order.
    Verify(VerifyArgs),
    /// Check theorems on seeded random graphs.
    Fuzz(FuzzArgs),
    /// Print a named graph in graph6.
    Gen(GenArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// graph6 file, one graph per line; standard input when absent.
    file: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    /// Count walks up to this length.
    #[arg(long, value_name = "K")]
    walks: Option<usize>,
    /// Search cycles up to this length.
    #[arg(long, value_name = "L")]
    cycles: Option<usize>,
}

#[derive(Args)]
struct RunArgs {
    /// Theorem ids, comma separated, or "all".
    #[arg(long, default_value = "all", value_delimiter = ',')]
    theorem: Vec<String>,
    #[arg(long, env = "SPECTOOL_JOBS", default_value_t = 1)]
    jobs: usize,
    #[arg(long)]
    json: bool,
    /// Report runtime_ms as 0 so repeated runs are byte-identical.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 6)]
    max_n: usize,
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long)]
    connected: bool,
    #[arg(long, value_enum, default_value_t = DedupArg::Labeled)]
    dedup: DedupArg,
    /// Allow order 8 (2^28 labeled graphs).
    #[arg(long)]
    long_run: bool,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum DedupArg {
    Labeled,
    Canonical,
}

#[derive(Args)]
struct FuzzArgs {
    /// gnp:N,P | bipartite:A,B,P | regular:N,K | bipartite-plus:N,Q; N and P accept ranges like 10-62.
    #[arg(long)]
    dist: String,
    #[arg(long, default_value_t = 1000)]
    count: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[command(flatten)]
    run: RunArgs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    Complete,
    Bipartite,
    Cycle,
    Path,
    Star,
    Petersen,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Comma separated sizes, e.g. "5" or "2,3".
    #[arg(long, default_value = "")]
    params: String,
}

#[derive(Debug)]
enum Failure {
    Parse(String),
    Config(String),
}

impl Failure {
    fn exit(self) -> ExitCode {
        let (code, msg) = match self {
            Failure::Parse(m) => (EXIT_PARSE, m),
            Failure::Config(m) => (EXIT_CONFIG, m),
        };
        eprintln!("spectool: {msg}");
        ExitCode::from(code)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_CONFIG)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => cmd_analyze(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Fuzz(a) => cmd_fuzz(a),
        Command::Gen(a) => cmd_gen(a),
    };
    result.unwrap_or_else(Failure::exit)
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<ExitCode, Failure> {
    let mut text = String::new();
    match &args.file {
        Some(p) => {
            text = std::fs::read_to_string(p)
                .map_err(|e| Failure::Parse(format!("{}: {e}", p.display())))?;
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Parse(format!("stdin: {e}")))?;
        }
    }
    let graphs = parse_graph6_lines(&text)
        .map_err(|(line, e)| Failure::Parse(format!("line {line}: {e}")))?;
    let mut reports = Vec::with_capacity(graphs.len());
    for (i, g) in graphs.iter().enumerate() {
        let r = analyze::analyze(i + 1, g, args.walks, args.cycles)
            .map_err(|e| Failure::Config(format!("graph {}: {e}", i + 1)))?;
        if !args.json {
            print!("{}", analyze::render_table(&r));
        }
        reports.push(r);
    }
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&reports).expect("report serializes")
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn parse_theorems(ids: &[String]) -> Result<Vec<TheoremId>, Failure> {
    if ids.iter().any(|s| s == "all") {
        return Ok(Vec::new());
    }
    ids.iter()
        .map(|s| s.parse().map_err(Failure::Config))
        .collect()
}

fn finish(mut report: SweepReport, run: &RunArgs) -> ExitCode {
    if run.no_timing {
        report.runtime_ms = 0;
    }
    if run.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serializes")
        );
    } else {
        print_summary(&report);
    }
    if report.violated() > 0 {
        ExitCode::from(EXIT_VIOLATED)
    } else {
        ExitCode::SUCCESS
    }
}

fn print_summary(r: &SweepReport) {
    println!("{} graphs in {} ms", r.graphs, r.runtime_ms);
    println!(
        "{:<24} {:>10} {:>10} {:>10} {:>12}",
        "theorem", "holds", "vacuous", "violated", "inconclusive"
    );
    for (id, t) in &r.totals {
        println!(
            "{:<24} {:>10} {:>10} {:>10} {:>12}",
            id.id(),
            t.holds,
            t.vacuous,
            t.violated,
            t.inconclusive
        );
    }
    for (bound, count) in &r.tight_counts {
        let sample = r.tight.get(bound).map(|v| v.join(" ")).unwrap_or_default();
        println!("tight {bound}: {count} graphs, first: {sample}");
    }
    for c in &r.counterexamples {
        let graph = c.graph6.as_deref().unwrap_or("(edge list)");
        println!("violated {} on {graph}: {}", c.theorem, c.detail);
    }
}

fn cmd_verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let config = SweepConfig {
        min_n: args.min_n,
        max_n: args.max_n,
        connected_only: args.connected,
        dedup: match args.dedup {
            DedupArg::Labeled => Dedup::Labeled,
            DedupArg::Canonical => Dedup::Canonical,
        },
        theorems: parse_theorems(&args.run.theorem)?,
        jobs: args.run.jobs,
        long_run: args.long_run,
        ..SweepConfig::default()
    };
    let report = sweep(&config).map_err(|e| Failure::Config(e.to_string()))?;
    Ok(finish(report, &args.run))
}

fn cmd_fuzz(args: FuzzArgs) -> Result<ExitCode, Failure> {
    let dist: Distribution = args
        .dist
        .parse()
        .map_err(|e: spectral_extremal::verify::VerifyError| Failure::Config(e.to_string()))?;
    let mut config = FuzzConfig::new(dist, args.count, args.seed);
    config.theorems = parse_theorems(&args.run.theorem)?;
    config.jobs = args.run.jobs;
    let report = fuzz(&config).map_err(|e| Failure::Config(e.to_string()))?;
    Ok(finish(report, &args.run))
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, Failure> {
    let params: Vec<usize> = args
        .params
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse()
                .map_err(|_| Failure::Config(format!("bad parameter {s:?}")))
        })
        .collect::<Result<_, _>>()?;
    let bad = |expected: &str| Failure::Config(format!("expected --params {expected}"));
    let g: Graph = match (args.family, params.as_slice()) {
        (Family::Complete, &[n]) => complete(n),
        (Family::Bipartite, &[a, b]) => complete_bipartite(a, b),
        (Family::Cycle, &[n]) => cycle(n).map_err(|e| Failure::Config(e.to_string()))?,
        (Family::Path, &[n]) => path(n),
        (Family::Star, &[n]) => star(n),
        (Family::Petersen, &[]) => petersen(),
        (Family::Bipartite, _) => return Err(bad("A,B")),
        (Family::Petersen, _) => return Err(bad("\"\" (none)")),
        _ => return Err(bad("N")),
    };
    let line = to_graph6(&g).map_err(|e| Failure::Config(e.to_string()))?;
    println!("{line}");
    Ok(ExitCode::SUCCESS)
}
