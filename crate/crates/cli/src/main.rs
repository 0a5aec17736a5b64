use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hesselink_cli::{
    analysis_exit_code, analyze, batch, parse_points, render_analysis, render_theorem1, theorem1, AnalyzeOptions,
    Failure, DEFAULT_BUDGET, DEFAULT_CAP, EXIT_OK,
};

#[derive(Parser)]
#[command(name = "hesselink", version, about = "Instability data of projective hypersurfaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Stratum label, multiplicity bounds and maximal multiplicity.
    Analyze(AnalyzeArgs),
    /// Compare the instability data in degrees d and d + shift.
    VerifyTheorem1(Theorem1Args),
    /// Analyze one polynomial per line, printing one JSON object per line.
    Batch(BatchArgs),
}

#[derive(Args)]
struct SearchArgs {
    /// Projective dimension r; variables are x0..xr.
    #[arg(long = "dim")]
    r: usize,
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Extra candidate points, one per line as comma-separated rationals.
    #[arg(long)]
    points: Option<PathBuf>,
    /// Also run the degree comparison with this shift.
    #[arg(long)]
    theorem1_shift: Option<u32>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u128,
    /// Leave wall-clock data out of the report.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct AnalyzeArgs {
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long, conflicts_with = "file", required_unless_present = "file")]
    poly: Option<String>,
    /// File holding the polynomial.
    #[arg(long)]
    file: Option<PathBuf>,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct Theorem1Args {
    #[arg(long = "dim")]
    r: usize,
    #[arg(long)]
    poly: String,
    #[arg(long, default_value_t = 1)]
    shift: u32,
    /// Largest number of column tuples to enumerate.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u128,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    no_timing: bool,
}

#[derive(Args)]
struct BatchArgs {
    #[command(flatten)]
    search: SearchArgs,
    #[arg(long)]
    file: PathBuf,
}

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::input("Io", format!("{}: {e}", path.display())))
}

fn options(args: &SearchArgs) -> Result<AnalyzeOptions, Failure> {
    let points = match &args.points {
        Some(path) => parse_points(&read(path)?, args.r)?,
        None => Vec::new(),
    };
    Ok(AnalyzeOptions {
        r: args.r,
        budget: args.budget,
        seed: args.seed,
        points,
        theorem1: args.theorem1_shift.map(|s| (s, args.cap)),
        timing: !args.no_timing,
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Analyze(args) => {
            let opts = options(&args.search)?;
            let text = match (&args.poly, &args.file) {
                (Some(p), _) => p.clone(),
                (None, Some(path)) => read(path)?.trim().to_string(),
                (None, None) => unreachable!("clap requires one of --poly and --file"),
            };
            let report = analyze(&text, &opts)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
            } else {
                print!("{}", render_analysis(&report));
            }
            Ok(analysis_exit_code(&report))
        }
        Command::VerifyTheorem1(args) => {
            let outcome = theorem1(&args.poly, args.r, args.shift, args.cap, !args.no_timing)?;
            if args.json {
                println!("{}", serde_json::to_string_pretty(&outcome).expect("report serializes"));
            } else {
                print!("{}", render_theorem1(&outcome));
            }
            Ok(if outcome.theorem1.holds { EXIT_OK } else { hesselink_cli::EXIT_FAILED })
        }
        Command::Batch(args) => {
            let opts = options(&args.search)?;
            let (lines, code) = batch(&read(&args.file)?, &opts);
            for line in lines {
                println!("{line}");
            }
            Ok(code)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code)
        }
    }
}
