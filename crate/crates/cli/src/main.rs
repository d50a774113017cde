use std::io::{self, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use polymetric::BasisTag;
use polymetric_cli::{load_config, parse_basis, run_bench, run_repl, run_script, BenchParams, Format, Session};

const EXIT_EVAL: u8 = 1;
const EXIT_USAGE: u8 = 2;

/// Exact arithmetic in exterior algebras with several Clifford products.
#[derive(Parser)]
#[command(name = "polymetric", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression or a script and print the results.
    Eval(EvalArgs),
    /// Start an interactive session.
    Repl {
        #[arg(long)]
        config: PathBuf,
    },
    /// Time exterior and Clifford products on seeded random inputs.
    Bench(BenchArgs),
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    config: PathBuf,
    #[arg(long, conflicts_with = "script", required_unless_present = "script")]
    eval: Option<String>,
    #[arg(long)]
    script: Option<PathBuf>,
    #[arg(long, default_value = "grassmann", value_parser = parse_basis)]
    output_basis: BasisTag,
    #[arg(long, default_value_t = 1)]
    metric_for_basis: usize,
    #[arg(long, default_value = "text")]
    format: Format,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, default_value_t = 8)]
    n: usize,
    #[arg(long, default_value_t = 0.1)]
    density: f64,
    #[arg(long, default_value_t = 100)]
    iters: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Take g1 from this config instead of a random metric.
    #[arg(long)]
    config: Option<PathBuf>,
}

fn fail(code: u8, message: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(code)
}

fn eval(args: EvalArgs) -> ExitCode {
    let config = match load_config(&args.config) {
        Ok(c) => c,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let mut session = Session::new(&config);
    if let Err(e) = session.set_basis(args.output_basis, args.metric_for_basis) {
        return fail(EXIT_USAGE, format!("--metric-for-basis: {e}"));
    }
    session.set_format(args.format);
    let source = match (&args.eval, &args.script) {
        (Some(src), _) => src.clone(),
        (None, Some(path)) => match std::fs::read_to_string(path) {
            Ok(s) => s,
            Err(e) => return fail(EXIT_USAGE, format!("cannot read {}: {e}", path.display())),
        },
        (None, None) => unreachable!("clap requires one of --eval or --script"),
    };
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run_script(&mut session, &source, &mut out);
    let _ = out.flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(EXIT_EVAL, e),
    }
}

fn repl(config: PathBuf) -> ExitCode {
    let config = match load_config(&config) {
        Ok(c) => c,
        Err(e) => return fail(EXIT_USAGE, e),
    };
    let mut session = Session::new(&config);
    let stdin = io::stdin();
    let prompt = stdin.is_terminal();
    match run_repl(&mut session, stdin.lock(), io::stdout().lock(), io::stderr().lock(), prompt) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(EXIT_USAGE, e),
    }
}

fn bench(args: BenchArgs) -> ExitCode {
    let metric = match &args.config {
        None => None,
        Some(path) => match load_config(path) {
            Ok(c) => match c.metrics.into_iter().next() {
                Some(g) => Some(g),
                None => return fail(EXIT_USAGE, "bench config needs at least one metric"),
            },
            Err(e) => return fail(EXIT_USAGE, e),
        },
    };
    let params = BenchParams {
        n: args.n,
        density: args.density,
        iters: args.iters,
        seed: args.seed,
        metric,
    };
    match run_bench(&params) {
        Ok(report) => {
            print!("{report}");
            ExitCode::SUCCESS
        }
        Err(e) => fail(EXIT_USAGE, e),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Eval(args) => eval(args),
        Command::Repl { config } => repl(config),
        Command::Bench(args) => bench(args),
    }
}
