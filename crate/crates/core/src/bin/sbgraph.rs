use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use sbgraph::io::{
    self as sio, bench, generate::GenerateError, ParseError, ReportOptions, SweepError,
};
use sbgraph::{blocks, resilience, sbc, AnalysisError, BlockFamily, Digraph, Execution};

const EXIT_ANALYSIS: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_GUARD: u8 = 3;

#[derive(Parser)]
#[command(
    name = "sbgraph",
    version,
    about = "Strong biconnectivity analysis of directed graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Region size limit for exponential enumerations.
    #[arg(long, global = true, default_value_t = sbgraph::DEFAULT_ENUMERATION_GUARD)]
    guard: usize,
    #[arg(long, global = true, value_enum, default_value_t = Switch::Off)]
    parallel: Switch,
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a graph and report basic connectivity.
    Check { input: PathBuf },
    /// Full JSON report.
    Analyze { input: PathBuf },
    /// One decomposition.
    Blocks {
        input: PathBuf,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Compare fast paths with brute-force oracles, on a file or a seeded sweep.
    Oracle {
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 3)]
        min_n: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
    /// Print a seeded strongly biconnected graph as an edge list.
    Gen {
        #[arg(long)]
        n: usize,
        /// Arc probability for rejection sampling.
        #[arg(long, default_value_t = 0.5)]
        p: f64,
        /// Exact arc count; switches to the Hamiltonian-cycle generator.
        #[arg(long)]
        m: Option<usize>,
    },
    /// Time 2-edge-biconnected blocks on generated graphs.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [50, 100, 200])]
        sizes: Vec<usize>,
        /// Arcs per vertex.
        #[arg(long, default_value_t = 4)]
        density: usize,
        #[arg(long, default_value_t = 3)]
        reps: usize,
    },
    /// Graphviz output, optionally colored by a block family.
    ExportDot {
        input: PathBuf,
        #[arg(long, value_enum)]
        highlight: Option<Kind>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Switch {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    #[value(name = "2eb")]
    TwoEdgeBiconnected,
    #[value(name = "2sb")]
    TwoStrongBiconnected,
    #[value(name = "2e")]
    TwoEdge,
    #[value(name = "2s")]
    TwoStrong,
    Sbc,
    #[value(name = "2esb")]
    Components2esb,
    #[value(name = "2vsb")]
    Components2vsb,
    Bbridges,
    Bap,
}

enum Failure {
    Parse(String),
    Analysis(String),
    Guard(String),
    Io(io::Error),
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::Parse(e.to_string())
    }
}

impl From<AnalysisError> for Failure {
    fn from(e: AnalysisError) -> Self {
        match e {
            AnalysisError::GuardExceeded { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Analysis(e.to_string()),
        }
    }
}

impl From<GenerateError> for Failure {
    fn from(e: GenerateError) -> Self {
        match e {
            GenerateError::InvalidParameters(_) => Failure::Parse(e.to_string()),
            GenerateError::RetryBudgetExhausted { .. } => Failure::Guard(e.to_string()),
        }
    }
}

impl From<SweepError> for Failure {
    fn from(e: SweepError) -> Self {
        match e {
            SweepError::Generate(e) => e.into(),
            SweepError::Analysis(e) => e.into(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn load(path: &PathBuf) -> Result<Digraph, Failure> {
    if path.as_os_str() == "-" {
        return Ok(sio::read_edge_list(io::stdin().lock())?);
    }
    let file = File::open(path).map_err(|e| Failure::Parse(format!("{}: {e}", path.display())))?;
    Ok(sio::read_edge_list(file)?)
}

fn family_of(g: &Digraph, kind: Kind, cli: &Cli) -> Result<BlockFamily, Failure> {
    let exec = execution(cli);
    Ok(match kind {
        Kind::TwoEdgeBiconnected => blocks::two_edge_biconnected_blocks_with(g, exec)?,
        Kind::TwoStrongBiconnected => blocks::two_strong_biconnected_blocks_with(g, exec)?,
        Kind::TwoEdge => blocks::two_edge_blocks_with(g, exec)?,
        Kind::TwoStrong => blocks::two_strong_blocks_with(g, exec)?,
        Kind::Sbc => sbc::strongly_biconnected_components(g)
            .components()
            .iter()
            .cloned()
            .collect(),
        Kind::Components2esb => resilience::components_2esb(g, cli.guard)?,
        Kind::Components2vsb => resilience::components_2vsb(g, cli.guard)?,
        Kind::Bbridges | Kind::Bap => {
            return Err(Failure::Analysis("not a block family".into()));
        }
    })
}

fn execution(cli: &Cli) -> Execution {
    Execution::from_flag(matches!(cli.parallel, Switch::On))
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    let json = matches!(cli.format, Format::Json);
    match &cli.command {
        Command::Check { input } => {
            let g = load(input)?;
            let sc = sbgraph::connectivity::is_strongly_connected(&g);
            let sb = sbgraph::connectivity::is_strongly_biconnected(&g);
            if json {
                let value = serde_json::json!({
                    "n": g.vertex_count(),
                    "m": g.edge_count(),
                    "strongly_connected": sc,
                    "strongly_biconnected": sb,
                });
                writeln!(out, "{value}")?;
            } else {
                writeln!(
                    out,
                    "n: {}\nm: {}\nstrongly_connected: {sc}\nstrongly_biconnected: {sb}",
                    g.vertex_count(),
                    g.edge_count()
                )?;
            }
        }
        Command::Analyze { input } => {
            let g = load(input)?;
            let options = ReportOptions {
                guard: cli.guard,
                execution: execution(cli),
            };
            let report = sio::analyze(&g, &options);
            if json {
                out.write_all(report.to_json().expect("report serializes").as_bytes())?;
            } else {
                out.write_all(report.to_text().as_bytes())?;
            }
        }
        Command::Blocks { input, kind } => {
            let g = load(input)?;
            match kind {
                Kind::Bbridges => {
                    let bb = resilience::b_bridges_with(&g, execution(cli))?;
                    if json {
                        let pairs: Vec<[usize; 2]> = bb.iter().map(|e| [e.tail, e.head]).collect();
                        writeln!(
                            out,
                            "{}",
                            serde_json::to_string(&pairs).expect("serializable")
                        )?;
                    } else {
                        for e in bb {
                            writeln!(out, "{} {}", e.tail, e.head)?;
                        }
                    }
                }
                Kind::Bap => {
                    let bap = resilience::b_articulation_points_with(&g, execution(cli))?;
                    if json {
                        writeln!(
                            out,
                            "{}",
                            serde_json::to_string(&bap).expect("serializable")
                        )?;
                    } else {
                        writeln!(out, "{bap}")?;
                    }
                }
                _ => {
                    let family = family_of(&g, *kind, cli)?;
                    if json {
                        writeln!(
                            out,
                            "{}",
                            serde_json::to_string(&family).expect("serializable")
                        )?;
                    } else {
                        for b in &family {
                            writeln!(out, "{b}")?;
                        }
                    }
                }
            }
        }
        Command::Oracle {
            input: Some(input), ..
        } => {
            let g = load(input)?;
            let outcome = sio::oracle_check(&g)?;
            match outcome.mismatch {
                None => writeln!(
                    out,
                    "pass (sbc checked: {}, blocks checked: {})",
                    outcome.sbc_checked, outcome.blocks_checked
                )?,
                Some(m) => {
                    report_mismatch(out, &m)?;
                    return Err(Failure::Analysis("oracle mismatch".into()));
                }
            }
        }
        Command::Oracle {
            input: None,
            count,
            min_n,
            max_n,
        } => {
            if min_n < &3 || min_n > max_n {
                return Err(Failure::Parse(format!(
                    "invalid size range [{min_n}, {max_n}]"
                )));
            }
            let summary = sio::oracle_sweep(*count, cli.seed, *min_n, *max_n)?;
            writeln!(
                out,
                "checked {} graphs, {} mismatches",
                summary.graphs,
                summary.mismatches.len()
            )?;
            if let Some((seed, m)) = summary.mismatches.first() {
                writeln!(out, "first mismatch at seed {seed}")?;
                report_mismatch(out, m)?;
                return Err(Failure::Analysis("oracle mismatch".into()));
            }
        }
        Command::Gen { n, p, m } => {
            let g = match m {
                Some(m) => sio::gen_hamiltonian_sb(*n, *m, cli.seed)?,
                None => sio::gen_random_sb(*n, *p, cli.seed)?,
            };
            out.write_all(sio::write_edge_list(&g).as_bytes())?;
        }
        Command::Bench {
            sizes,
            density,
            reps,
        } => {
            let points = bench::scaling(sizes, *density, cli.seed, *reps, execution(cli))?;
            writeln!(
                out,
                "{:>8} {:>8} {:>8} {:>12}",
                "n", "m", "blocks", "best_ms"
            )?;
            for p in &points {
                writeln!(
                    out,
                    "{:>8} {:>8} {:>8} {:>12.3}",
                    p.n,
                    p.m,
                    p.blocks,
                    p.best.as_secs_f64() * 1e3
                )?;
            }
            for (w, r) in points.windows(2).zip(bench::cubic_growth_ratios(&points)) {
                writeln!(out, "growth {} -> {}: {:.3} x cubic", w[0].n, w[1].n, r)?;
            }
        }
        Command::ExportDot { input, highlight } => {
            let g = load(input)?;
            let family = highlight.map(|k| family_of(&g, k, cli)).transpose()?;
            out.write_all(sio::export_dot(&g, family.as_ref()).as_bytes())?;
        }
    }
    Ok(())
}

fn report_mismatch(out: &mut impl Write, m: &sio::Mismatch) -> io::Result<()> {
    writeln!(out, "mismatch in {:?}", m.kind)?;
    writeln!(
        out,
        "fast:   {}",
        serde_json::to_string(&m.fast).expect("serializable")
    )?;
    writeln!(
        out,
        "oracle: {}",
        serde_json::to_string(&m.oracle).expect("serializable")
    )?;
    writeln!(out, "witness:")?;
    out.write_all(sio::write_edge_list(&m.witness).as_bytes())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(&cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            let _ = out.flush();
            let (code, msg) = match failure {
                Failure::Parse(m) => (EXIT_PARSE, m),
                Failure::Analysis(m) => (EXIT_ANALYSIS, m),
                Failure::Guard(m) => (EXIT_GUARD, m),
                Failure::Io(e) => (EXIT_PARSE, e.to_string()),
            };
            eprintln!("sbgraph: {msg}");
            ExitCode::from(code)
        }
    }
}
