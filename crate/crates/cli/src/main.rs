//! `liecalc`: slopes, lifts, law suites, convergence tables and anchor
//! splitting from the command line.

mod commands;
mod fail;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use fail::CliError;

#[derive(Debug, Parser)]
#[command(name = "liecalc", version, about = "Exact slope calculus over cubic scalar-extension rings")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Global {
    /// Base ring: rational, float or fp:<p>.
    #[arg(long, global = true, env = "LIECALC_BACKEND")]
    backend: Option<String>,
    /// Comparison tolerance of the float backend.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Samples per law for `check`.
    #[arg(long, global = true, default_value_t = 500)]
    samples: usize,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate a first- or second-order slope.
    Slope(SlopeArgs),
    /// Lift an expression map to a cubic ring.
    Lift(LiftArgs),
    /// Run a law suite and print one report per law.
    Check(CheckArgs),
    /// Tabulate slopes at t0·2^-k with a Richardson limit (float only).
    Converge(ConvergeArgs),
    /// Print the character values of a cubic scalar.
    Split(SplitArgs),
}

#[derive(Debug, Args)]
struct SlopeArgs {
    /// Expression vector, components separated by `;`.
    #[arg(short, long)]
    expr: String,
    /// Base point, coordinates separated by commas.
    #[arg(short = 'x', long, allow_hyphen_values = true)]
    x: String,
    /// First direction.
    #[arg(short = 'v', long = "v1", visible_alias = "v", allow_hyphen_values = true)]
    v1: String,
    /// Second direction (order 2).
    #[arg(long, allow_hyphen_values = true)]
    v2: Option<String>,
    /// Mixed direction (order 2); zero when omitted.
    #[arg(long, allow_hyphen_values = true)]
    v12: Option<String>,
    /// Parameters: t, or t1 t2 [t12] for order 2.
    #[arg(short = 't', long = "t", allow_hyphen_values = true, required = true)]
    t: Vec<String>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    order: u8,
    /// Symmetric second-order slope instead of the full one.
    #[arg(long)]
    sym: bool,
    /// Points removed from the domain (repeatable).
    #[arg(long, allow_hyphen_values = true)]
    exclude: Vec<String>,
}

#[derive(Debug, Args)]
struct LiftArgs {
    #[arg(short, long)]
    expr: String,
    /// Cubic scalar JSON (an object, or an array with one object per
    /// variable), `@path` to read a file, or `-` for stdin.
    #[arg(long)]
    input: String,
}

#[derive(Debug, Args)]
struct CheckArgs {
    /// groupoid, chain, interchange, schwarz, torsor, ring or all.
    suite: String,
    /// Adds a corrupted pair-groupoid law; the run must then fail.
    #[arg(long, hide = true)]
    inject_fault: bool,
}

#[derive(Debug, Args)]
struct ConvergeArgs {
    #[arg(short, long)]
    expr: String,
    #[arg(short = 'x', long, allow_hyphen_values = true)]
    x: String,
    #[arg(short = 'v', long, allow_hyphen_values = true)]
    v: String,
    #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
    t0: f64,
    #[arg(long, default_value_t = 10)]
    halvings: usize,
}

#[derive(Debug, Args)]
struct SplitArgs {
    /// Cubic scalar JSON, `@path` or `-`.
    #[arg(long)]
    input: String,
    /// Print only `ok` once unsplit(split(x)) = x is confirmed.
    #[arg(long)]
    roundtrip: bool,
}

fn run(cli: Cli) -> Result<String, CliError> {
    let g = &cli.global;
    match cli.command {
        Command::Slope(a) => commands::slope(g, &a),
        Command::Lift(a) => commands::lift(g, &a),
        Command::Check(a) => commands::check(g, &a),
        Command::Converge(a) => commands::converge(g, &a),
        Command::Split(a) => commands::split(g, &a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            // --help and --version
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail::report(&CliError::Usage(e.render().to_string().trim().to_string())),
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(CliError::LawFailures { output, failures }) => {
            print!("{output}");
            fail::report(&CliError::LawFailures { output: String::new(), failures })
        }
        Err(e) => fail::report(&e),
    }
}
