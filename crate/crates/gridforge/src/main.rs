use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use gridforge::grid::RenderFormat;
use gridforge::invariants::DEFAULT_JONES_THRESHOLD;
use gridforge::pipeline::{self, Options};
use gridforge::Error;

/// Grid diagrams for knots: realize DT codes in the plane, build arc
/// presentations, emit tidy grids, and verify the drawing still shows the
/// same knot.
#[derive(Parser)]
#[command(name = "gridforge", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline over a knot table.
    Run(RunArgs),
}

#[derive(Args)]
struct RunArgs {
    /// Knot table: one `name entries...` line per knot, `#` starts a comment.
    table: PathBuf,
    /// Directory for per-knot artifacts and report.json.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Comma-separated render formats (default: all four).
    #[arg(long, value_delimiter = ',')]
    formats: Option<Vec<String>>,
    /// Root crossing for the spanning-tree search.
    #[arg(long)]
    root: Option<usize>,
    /// Signed dart sequence replaying a tree growth; single-knot tables only.
    #[arg(long, allow_hyphen_values = true)]
    tree: Option<String>,
    /// Skip the Jones state sum above this many crossings.
    #[arg(long, default_value_t = DEFAULT_JONES_THRESHOLD)]
    jones_threshold: usize,
    /// Keep the raw grid instead of searching the move orbit.
    #[arg(long)]
    no_shape: bool,
    /// Write into an output directory that already exists.
    #[arg(long)]
    force: bool,
    /// Worker threads (1 runs serially; default picks one per core).
    #[arg(long)]
    jobs: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Run(args) => run_command(args),
    }
}

fn run_command(args: RunArgs) -> ExitCode {
    let options = match build_options(&args) {
        Ok(options) => options,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let report = match pipeline::run(&args.table, &options) {
        Ok(report) => report,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    for r in &report.records {
        match &r.error {
            Some(e) => println!("{}: error: {e}", r.name),
            None => println!(
                "{}: c={} n={} {} ({} ms)",
                r.name, r.crossings, r.n, r.verdict, r.millis
            ),
        }
    }
    let total: u128 = report.records.iter().map(|r| r.millis).sum();
    println!(
        "{} knots: {} consistent, {} consistent-weak, {} distinguished, {} errors ({} ms)",
        report.records.len(),
        report.consistent,
        report.consistent_weak,
        report.distinguished,
        report.errors,
        total
    );
    if report.success() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn build_options(args: &RunArgs) -> gridforge::Result<Options> {
    let formats = match &args.formats {
        None => RenderFormat::ALL.to_vec(),
        Some(names) => names
            .iter()
            .map(|name| name.parse())
            .collect::<gridforge::Result<Vec<_>>>()?,
    };
    let tree = args
        .tree
        .as_deref()
        .map(pipeline::parse_dart_sequence)
        .transpose()?;
    if args.jobs == Some(0) {
        return Err(Error::Usage("--jobs needs at least one worker".into()));
    }
    Ok(Options {
        out: args.out.clone(),
        formats,
        root: args.root,
        tree,
        jones_threshold: args.jones_threshold,
        shape: !args.no_shape,
        force: args.force,
        jobs: args.jobs.unwrap_or(0),
    })
}
