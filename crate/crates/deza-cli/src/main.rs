//! `deza` — analyze, construct, enumerate, and verify Deza graphs.
//!
//! Exit codes: 0 = ran to completion (regardless of verdict polarity),
//! 1 = usage or parse error, 2 = infeasible construction.

mod report;

use std::collections::BTreeMap;
use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use deza::{
    census_to_graph6, census_to_jsonl, deza_family, enumerate_strictly_deza, from_parameters,
    ConstructError, DezaParameters, EnumerationError, Graph, Graph6LineError, ResourceLimits,
};
use thiserror::Error;

const MAX_N_ENV: &str = "DEZA_MAX_N";

#[derive(Parser)]
#[command(name = "deza", version, about = "Deza graph toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report parameters, regularity verdicts, vertex types, and class
    /// structure for each input graph
    Analyze(AnalyzeArgs),
    /// Build a family member from indices (s, t) or a parameter quadruple
    Construct(ConstructArgs),
    /// Enumerate all strictly Deza graphs on n vertices into census files
    Enumerate(EnumerateArgs),
    /// Verify the clique-extension characterization and its property suite
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphFormat {
    Graph6,
    Json,
}

#[derive(Args)]
struct InputArgs {
    /// Inline graph6 record
    #[arg(value_name = "GRAPH6", conflicts_with = "input")]
    graph6: Option<String>,
    /// File of graph6 records, one per line ('-' reads standard input)
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    /// Write the report here instead of standard output
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads for batch inputs (0 = all cores)
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Args)]
struct ConstructArgs {
    /// Number of parts of the multipartite base (requires --t)
    #[arg(long, requires = "t", conflicts_with = "params")]
    s: Option<usize>,
    /// Part size of the multipartite base (requires --s)
    #[arg(long, requires = "s", conflicts_with = "params")]
    t: Option<usize>,
    /// Parameter quadruple n,k,b,a
    #[arg(long, value_delimiter = ',', value_name = "N,K,B,A")]
    params: Option<Vec<usize>>,
    #[arg(long, value_enum, default_value_t = GraphFormat::Graph6)]
    format: GraphFormat,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct EnumerateArgs {
    /// Vertex count to enumerate
    #[arg(long)]
    n: usize,
    /// Restrict the census to one degree
    #[arg(long)]
    k: Option<usize>,
    /// Base path for the census files BASE.jsonl and BASE.g6
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads (0 = all cores); output is identical for any count
    #[arg(long, default_value_t = 0)]
    workers: usize,
    /// Enumeration ceiling (defaults to DEZA_MAX_N or 12, hard maximum 16)
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    input: InputArgs,
    #[arg(long, value_enum, default_value_t = ReportFormat::Json)]
    format: ReportFormat,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Worker threads for batch inputs (0 = all cores)
    #[arg(long, default_value_t = 0)]
    workers: usize,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] Graph6LineError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("{0}")]
    Refused(EnumerationError),
}

impl From<ConstructError> for CliError {
    fn from(e: ConstructError) -> Self {
        CliError::Infeasible(e.to_string())
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Infeasible(_) => 2,
            _ => 1,
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Analyze(args) => cmd_analyze(args),
        Command::Construct(args) => cmd_construct(args),
        Command::Enumerate(args) => cmd_enumerate(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

impl InputArgs {
    fn load(&self) -> Result<Vec<Graph>, CliError> {
        let text = match (&self.graph6, &self.input) {
            (Some(record), None) => record.clone(),
            (None, Some(path)) if path == Path::new("-") => {
                let mut buffer = String::new();
                std::io::stdin().read_to_string(&mut buffer)?;
                buffer
            }
            (None, Some(path)) => fs::read_to_string(path)?,
            (None, None) => {
                return Err(CliError::Usage(
                    "provide an inline graph6 record or --input <FILE>".to_string(),
                ))
            }
            (Some(_), Some(_)) => unreachable!("clap enforces a single input source"),
        };
        Ok(deza::graph6::decode_lines(&text)?)
    }
}

fn write_out(output: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match output {
        Some(path) => fs::write(path, content)?,
        None => print!("{content}"),
    }
    Ok(())
}

fn in_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T, CliError> {
    if workers == 0 {
        Ok(f())
    } else {
        Ok(rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|e| CliError::Internal(e.to_string()))?
            .install(f))
    }
}

fn render_reports(reports: &[serde_json::Value], format: ReportFormat) -> String {
    let mut out = String::new();
    for report in reports {
        match format {
            ReportFormat::Json => {
                out.push_str(&serde_json::to_string(report).expect("reports serialize"));
                out.push('\n');
            }
            ReportFormat::Table => {
                out.push_str(&report::table(report));
                out.push('\n');
            }
        }
    }
    out
}

fn cmd_analyze(args: AnalyzeArgs) -> Result<(), CliError> {
    use rayon::prelude::*;
    let graphs = args.input.load()?;
    let reports: Vec<serde_json::Value> = in_pool(args.workers, || {
        graphs.par_iter().map(report::analyze_json).collect()
    })?;
    write_out(&args.output, &render_reports(&reports, args.format))
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    use rayon::prelude::*;
    let graphs = args.input.load()?;
    let reports: Vec<serde_json::Value> = in_pool(args.workers, || {
        graphs
            .par_iter()
            .map(report::verify_json)
            .collect::<Result<_, _>>()
    })?
    .map_err(|e| CliError::Internal(e.to_string()))?;
    write_out(&args.output, &render_reports(&reports, args.format))
}

fn cmd_construct(args: ConstructArgs) -> Result<(), CliError> {
    let graph = match (&args.s, &args.t, &args.params) {
        (Some(s), Some(t), None) => deza_family(*s, *t)?,
        (None, None, Some(values)) => {
            let [n, k, b, a] = values[..] else {
                return Err(CliError::Usage(
                    "--params needs exactly four values n,k,b,a".into(),
                ));
            };
            let params =
                DezaParameters::new(n, k, b, a).map_err(|e| CliError::Infeasible(e.to_string()))?;
            from_parameters(&params)?
        }
        _ => {
            return Err(CliError::Usage(
                "provide either --s and --t, or --params n,k,b,a".to_string(),
            ))
        }
    };
    let content = match args.format {
        GraphFormat::Graph6 => format!("{}\n", graph.to_graph6()),
        GraphFormat::Json => format!(
            "{}\n",
            serde_json::json!({
                "graph6": graph.to_graph6(),
                "parameters": deza::deza_parameters(&graph),
            })
        ),
    };
    write_out(&args.output, &content)
}

fn cmd_enumerate(args: EnumerateArgs) -> Result<(), CliError> {
    let max_order = args
        .max_n
        .or_else(|| std::env::var(MAX_N_ENV).ok().and_then(|v| v.parse().ok()))
        .unwrap_or_else(|| ResourceLimits::default().max_order);
    let limits = ResourceLimits {
        max_order,
        workers: args.workers,
    };

    let mut records = enumerate_strictly_deza(args.n, &limits).map_err(CliError::Refused)?;
    if let Some(k) = args.k {
        records.retain(|r| r.parameters.k == k);
    }

    let base = args
        .output
        .clone()
        .unwrap_or_else(|| PathBuf::from(format!("deza-census-n{}", args.n)));
    let jsonl_path = base.with_extension("jsonl");
    let graph6_path = base.with_extension("g6");
    fs::write(&jsonl_path, census_to_jsonl(&records))?;
    fs::write(&graph6_path, census_to_graph6(&records))?;

    let mut per_quadruple: BTreeMap<String, usize> = BTreeMap::new();
    for record in &records {
        *per_quadruple
            .entry(record.parameters.to_string())
            .or_insert(0) += 1;
    }
    let mut summary = String::new();
    summary.push_str("parameters      count\n");
    for (quadruple, count) in &per_quadruple {
        summary.push_str(&format!("{quadruple:<15} {count}\n"));
    }
    summary.push_str(&format!(
        "{} strictly Deza graphs on {} vertices\n",
        records.len(),
        args.n
    ));
    summary.push_str(&format!(
        "census: {}, {}\n",
        jsonl_path.display(),
        graph6_path.display()
    ));
    print!("{summary}");
    Ok(())
}
