//! `chibound`: exhaustive checks of linear χ-bounds on small graphs.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{ArgGroup, Args, Parser, Subcommand};

use chibound::enumerate::{all_graphs, GraphSource};
use chibound::graph6::read_graph6;
use chibound::lemma::{check_all, critical_chair_free, critical_chair_free_stream, LemmaOrder};
use chibound::report::{write_records, Format};
use chibound::verify::{class_by_id, tight_records, verify_source, GraphClass, REGISTRY};
use chibound::witnesses::{report_for, WitnessName};
use chibound::Graph;

#[derive(Parser, Debug)]
#[command(
    name = "chibound",
    version,
    about = "Exhaustive checks of linear chi-bounds for forbidden-subgraph classes"
)]
struct Cli {
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true, env = "CHI_THREADS")]
    threads: Option<usize>,

    /// Report format.
    #[arg(long, global = true, default_value = "jsonl")]
    format: Format,

    /// Write the report here instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one graph6 line per isomorphism class on `n` vertices.
    Gen { n: usize },
    /// Check a class's bound on every member of the input.
    Verify(ClassArgs),
    /// List class members whose chromatic number meets the bound.
    Tight {
        #[arg(long)]
        class: String,
        #[arg(long)]
        max_n: usize,
    },
    /// Check the extremal-coloring lemma on vertex-critical Chair-free graphs.
    Lemma {
        #[command(flatten)]
        source: SourceArgs,
        #[arg(long, default_value = "sorted")]
        lemma_order: LemmaOrder,
    },
    /// Recompute a necessity witness and compare it with its claims.
    Witness {
        /// c5_join_2, c5_join_3 or grotzsch; all three when omitted.
        name: Option<WitnessName>,
    },
    /// List the class registry.
    Classes,
}

#[derive(Args, Debug)]
struct ClassArgs {
    #[arg(long)]
    class: String,
    #[command(flatten)]
    source: SourceArgs,
}

#[derive(Args, Debug)]
#[command(group(ArgGroup::new("source").required(true).args(["max_n", "input"])))]
struct SourceArgs {
    /// Generate every graph on 1..=max_n vertices.
    #[arg(long)]
    max_n: Option<usize>,
    /// Read graph6 lines from a file, or `-` for stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

impl SourceArgs {
    fn load(&self) -> Result<GraphSource> {
        match (&self.max_n, &self.input) {
            (Some(n), None) => Ok(GraphSource::Generated { max_n: *n }),
            (None, Some(path)) => Ok(GraphSource::Graphs(read_graphs(path)?)),
            _ => bail!("exactly one of --max-n and --input is required"),
        }
    }
}

fn read_graphs(path: &PathBuf) -> Result<Vec<Graph>> {
    let reader: Box<dyn BufRead> = if path.as_os_str() == "-" {
        Box::new(io::stdin().lock())
    } else {
        Box::new(BufReader::new(
            File::open(path).with_context(|| format!("cannot open {}", path.display()))?,
        ))
    };
    read_graph6(reader)
        .collect::<Result<Vec<_>, _>>()
        .with_context(|| format!("reading {}", path.display()))
}

fn lookup(id: &str) -> Result<&'static GraphClass> {
    class_by_id(id).ok_or_else(|| {
        let known: Vec<&str> = REGISTRY.iter().map(|c| c.id).collect();
        anyhow!("unknown class `{id}` (known: {})", known.join(", "))
    })
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).with_context(|| format!("cannot create {}", p.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

/// Runs the command; `Ok(false)` means violations or mismatches were found.
fn run(cli: Cli) -> Result<bool> {
    match cli.threads {
        Some(0) => bail!("--threads must be at least 1"),
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()?,
        None => {}
    }
    let format = cli.format;
    match cli.command {
        Command::Gen { n } => {
            let stream = all_graphs(n)?;
            let mut out = open_output(&cli.output)?;
            for g in stream {
                writeln!(out, "{}", chibound::to_graph6(&g))?;
            }
            out.flush()?;
            Ok(true)
        }
        Command::Verify(args) => {
            let class = lookup(&args.class)?;
            let source = args.source.load()?;
            let report = verify_source(class, &source)?;
            write_records(open_output(&cli.output)?, format, &report.records)?;
            eprintln!("{}", report.summary_line());
            Ok(report.violations.is_empty())
        }
        Command::Tight { class, max_n } => {
            let class = lookup(&class)?;
            let records = tight_records(class, max_n)?;
            write_records(open_output(&cli.output)?, format, &records)?;
            eprintln!("class={} max_n={max_n} tight={}", class.id, records.len());
            Ok(true)
        }
        Command::Lemma {
            source,
            lemma_order,
        } => {
            let (graphs, skipped) = match source.load()? {
                GraphSource::Generated { max_n } => (critical_chair_free_stream(max_n)?, 0),
                GraphSource::Graphs(all) => {
                    let kept = critical_chair_free(&all);
                    let skipped = all.len() - kept.len();
                    (kept, skipped)
                }
            };
            let reports = check_all(&graphs, lemma_order)?;
            write_records(open_output(&cli.output)?, format, &reports)?;
            let bad = reports.iter().filter(|r| !r.ok()).count();
            eprintln!(
                "lemma order={lemma_order} checked={} skipped={skipped} violations={bad}",
                reports.len()
            );
            Ok(bad == 0)
        }
        Command::Witness { name } => {
            let names = name.map_or_else(|| WitnessName::ALL.to_vec(), |n| vec![n]);
            let reports: Vec<_> = names.into_iter().map(report_for).collect();
            write_records(open_output(&cli.output)?, format, &reports)?;
            for r in &reports {
                eprintln!("{}", r.summary_line());
                for m in &r.mismatches {
                    eprintln!("  mismatch: {m}");
                }
            }
            Ok(reports.iter().all(|r| r.claims_ok))
        }
        Command::Classes => {
            let mut out = open_output(&cli.output)?;
            for c in REGISTRY.iter() {
                let forbidden: Vec<String> = c.forbidden.iter().map(|p| p.to_string()).collect();
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    c.index,
                    c.id,
                    forbidden.join(","),
                    c.bound
                )?;
            }
            out.flush()?;
            Ok(true)
        }
    }
}

fn is_broken_pipe(e: &anyhow::Error) -> bool {
    e.chain()
        .filter_map(|c| c.downcast_ref::<io::Error>())
        .any(|io| io.kind() == io::ErrorKind::BrokenPipe)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) if is_broken_pipe(&e) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
