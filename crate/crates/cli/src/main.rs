//! `planex` — enumerate triangulations, count fixed patterns, generate the
//! extremal families, and run the extremal census with its verification
//! suite. Graphs travel as edge-list text or graph6.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use planex_core::census::{run_census_on, verify_all, with_pool, CensusRecord};
use planex_core::counting::PatternSpec;
use planex_core::enumerate::enumerate_triangulations;
use planex_core::families::{
    make_apollonian, make_apollonian_default, make_fig1b, make_fig1c, make_fn, make_octahedron,
};
use planex_core::graph::Graph;
use planex_core::io::{from_graph6, parse_edge_list, to_graph6, write_edge_list};

#[derive(Parser)]
#[command(
    name = "planex",
    version,
    about = "extremal subgraph counts in planar triangulations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count copies of a pattern in one graph.
    Count(CountArgs),
    /// Emit a member of one of the built-in graph families.
    Gen(GenArgs),
    /// Stream all triangulations of an order as graph6, sorted by canonical code.
    Enum(EnumArgs),
    /// Maximize a pattern over all triangulations for a range of orders.
    Census(CensusArgs),
    /// Run the full verification suite; exit code 0 means every check passed.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edgelist,
    Graph6,
}

#[derive(Args)]
struct CountArgs {
    /// One of p2, p3, p4, c3, c4, star:K, k2:K.
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
    /// Re-count with the brute-force enumerator and fail on any mismatch.
    #[arg(long)]
    oracle: bool,
}

#[derive(Args)]
struct GenArgs {
    /// One of fn, apollonian, fig1b, fig1c, octahedron.
    #[arg(long)]
    family: String,
    /// Vertex count; required for fn and apollonian.
    #[arg(long)]
    n: Option<usize>,
    /// Face indices for apollonian stacking, comma separated.
    #[arg(long)]
    stacking: Option<String>,
    #[arg(long, value_enum, default_value = "edgelist")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct EnumArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct CensusArgs {
    #[arg(long)]
    pattern: String,
    #[arg(long)]
    n_min: usize,
    #[arg(long)]
    n_max: usize,
    /// Write one JSON object per census row to this file.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write CSV rows to this file.
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n_max: usize,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Box<dyn std::error::Error>> {
    match cli.command {
        Command::Count(args) => {
            let pattern: PatternSpec = args.pattern.parse()?;
            let text = fs::read_to_string(&args.input)?;
            let graph = match args.format {
                Format::Edgelist => parse_edge_list(&text)?,
                Format::Graph6 => from_graph6(text.trim())?,
            };
            let fast = pattern.count(&graph)?;
            if args.oracle {
                let slow = pattern.count_brute(&graph)?;
                if fast != slow {
                    return Err(format!(
                        "oracle mismatch for {pattern}: identity {fast}, enumeration {slow}"
                    )
                    .into());
                }
            }
            println!("{fast}");
            Ok(ExitCode::SUCCESS)
        }
        Command::Gen(args) => {
            let graph = generate(&args)?;
            let rendered = match args.format {
                Format::Edgelist => write_edge_list(&graph),
                Format::Graph6 => format!("{}\n", to_graph6(&graph)),
            };
            emit(args.out.as_deref(), &rendered)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enum(args) => {
            let set = enumerate_triangulations(args.n)?;
            let mut out = String::new();
            for code in set.codes() {
                out.push_str(&to_graph6(&code.to_graph()));
                out.push('\n');
            }
            emit(args.out.as_deref(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Census(args) => {
            let pattern: PatternSpec = args.pattern.parse()?;
            if args.n_min > args.n_max {
                return Err("--n-min exceeds --n-max".into());
            }
            let records: Vec<CensusRecord> = with_pool(|| {
                (args.n_min..=args.n_max)
                    .map(|n| {
                        let set = enumerate_triangulations(n)?;
                        run_census_on(&set, &pattern)
                    })
                    .collect::<planex_core::Result<Vec<_>>>()
            })??;
            println!("{}", CensusRecord::text_header());
            for record in &records {
                println!("{}", record.to_text_row());
            }
            if let Some(path) = &args.json {
                let mut body = String::new();
                for record in &records {
                    body.push_str(&record.to_json());
                    body.push('\n');
                }
                fs::write(path, body)?;
            }
            if let Some(path) = &args.csv {
                let mut body = format!("{}\n", CensusRecord::csv_header());
                for record in &records {
                    body.push_str(&record.to_csv());
                    body.push('\n');
                }
                fs::write(path, body)?;
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => {
            let report = verify_all(args.n_max)?;
            print!("{}", report.render_text());
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
    }
}

fn generate(args: &GenArgs) -> Result<Graph, Box<dyn std::error::Error>> {
    let need_n = || {
        args.n
            .ok_or(format!("--family {} requires --n", args.family))
    };
    if args.stacking.is_some() && args.family != "apollonian" {
        return Err("--stacking only applies to --family apollonian".into());
    }
    match args.family.as_str() {
        "fn" => Ok(make_fn(need_n()?)?),
        "apollonian" => {
            let n = need_n()?;
            let emb = match &args.stacking {
                Some(csv) => {
                    let stacking: Vec<usize> = csv
                        .split(',')
                        .map(|s| s.trim().parse::<usize>())
                        .collect::<Result<_, _>>()
                        .map_err(|_| format!("bad --stacking `{csv}`"))?;
                    make_apollonian(n, &stacking)?
                }
                None => make_apollonian_default(n)?,
            };
            Ok(emb.into_graph())
        }
        "fig1b" => fixed_order(args.n, 7, make_fig1b()),
        "fig1c" => fixed_order(args.n, 8, make_fig1c()),
        "octahedron" => fixed_order(args.n, 6, make_octahedron()),
        other => Err(format!("unknown family `{other}`").into()),
    }
}

fn fixed_order(
    requested: Option<usize>,
    actual: usize,
    graph: Graph,
) -> Result<Graph, Box<dyn std::error::Error>> {
    match requested {
        Some(n) if n != actual => Err(format!("this family has exactly {actual} vertices").into()),
        _ => Ok(graph),
    }
}

fn emit(path: Option<&std::path::Path>, body: &str) -> std::io::Result<()> {
    match path {
        Some(path) => fs::write(path, body),
        None => std::io::stdout().write_all(body.as_bytes()),
    }
}
