use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use monozeta::batch::run_batch;
use monozeta::input::{read_curve, read_surface};
use monozeta::report::{curve_report, surface_report};
use monozeta::verify::{describe_point, verify_grid};
use monozeta::{Axis, CliError, ReportOptions};

/// Exact invariants of plane-curve and quasi-ordinary surface germs:
/// degree, Euler characteristic, and horizontal/vertical monodromy zeta
/// functions, computed from Puiseux-series supports.
#[derive(Parser)]
#[command(name = "monozeta", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a plane-curve germ given by a Puiseux series
    Curve(AnalyzeArgs),
    /// Analyze a quasi-ordinary surface germ given by its series
    Surface(SurfaceArgs),
    /// Check the truncation formulas against the bigraph model
    VerifyTruncation(VerifyArgs),
    /// Process a JSON-lines file, one series object per line
    Batch(BatchArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Series expression, e.g. "y^(3/2)+y^(7/4)", or a JSON object
    expr: Option<String>,
    /// Read the input from a file instead
    #[arg(long, short = 'f', conflicts_with = "expr")]
    file: Option<PathBuf>,
    /// Emit the report as JSON
    #[arg(long)]
    json: bool,
    /// Include the per-level truncation parameters
    #[arg(long)]
    trace: bool,
    /// Include cyclotomic normal forms
    #[arg(long)]
    cyclotomic: bool,
}

#[derive(Args)]
struct SurfaceArgs {
    #[command(flatten)]
    common: AnalyzeArgs,
    /// Transverse-slice axis; `y` swaps the exponent pairs first
    #[arg(long, value_enum, default_value_t = Axis::X)]
    axis: Axis,
}

#[derive(Args)]
struct VerifyArgs {
    /// Upper bound for m
    #[arg(long, default_value_t = 6)]
    m_max: u64,
    /// Upper bound for n
    #[arg(long, default_value_t = 6)]
    n_max: u64,
    /// Upper bound for a
    #[arg(long, default_value_t = 6)]
    a_max: u64,
    /// Upper bound for b
    #[arg(long, default_value_t = 4)]
    b_max: u64,
    /// Check a single parameter point instead of the grid
    #[arg(long, value_name = "M,N,A,B")]
    point: Option<String>,
}

#[derive(Args)]
struct BatchArgs {
    /// JSON-lines input file
    file: PathBuf,
    /// Include the per-level truncation parameters
    #[arg(long)]
    trace: bool,
    /// Include cyclotomic normal forms
    #[arg(long)]
    cyclotomic: bool,
}

impl AnalyzeArgs {
    fn options(&self) -> ReportOptions {
        ReportOptions {
            trace: self.trace,
            cyclotomic: self.cyclotomic,
        }
    }

    fn input_text(&self) -> Result<String, CliError> {
        match (&self.expr, &self.file) {
            (Some(expr), None) => Ok(expr.clone()),
            (None, Some(path)) => Ok(std::fs::read_to_string(path)?.trim().to_owned()),
            (None, None) => Err(CliError::Validation(
                "provide a series expression or --file".into(),
            )),
            (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Curve(args) => {
            let text = args.input_text()?;
            let series = read_curve(&text)?;
            let report = curve_report(&text, &series, &args.options())?;
            if args.json {
                println!("{}", report.to_json()?);
            } else {
                print!("{}", report.to_text());
            }
            Ok(())
        }
        Command::Surface(args) => {
            let text = args.common.input_text()?;
            let series = read_surface(&text)?;
            let report = surface_report(&text, &series, args.axis, &args.common.options())?;
            if args.common.json {
                println!("{}", report.to_json()?);
            } else {
                print!("{}", report.to_text());
            }
            Ok(())
        }
        Command::VerifyTruncation(args) => {
            if let Some(point) = &args.point {
                let (m, n, a, b) = parse_point(point)?;
                let (text, ok) = describe_point(m, n, a, b);
                print!("{text}");
                if ok {
                    Ok(())
                } else {
                    Err(CliError::Mismatch(1))
                }
            } else {
                let outcome = verify_grid(args.m_max, args.n_max, args.a_max, args.b_max);
                println!(
                    "grid: m<={} n<={} a<={} b<={}",
                    args.m_max, args.n_max, args.a_max, args.b_max
                );
                for mismatch in &outcome.mismatches {
                    println!("{mismatch}");
                }
                println!(
                    "checked {} parameter points ({} skipped): {} mismatches",
                    outcome.checked,
                    outcome.skipped,
                    outcome.mismatches.len()
                );
                if outcome.mismatches.is_empty() {
                    Ok(())
                } else {
                    Err(CliError::Mismatch(outcome.mismatches.len()))
                }
            }
        }
        Command::Batch(args) => {
            let text = std::fs::read_to_string(&args.file)?;
            let opts = ReportOptions {
                trace: args.trace,
                cyclotomic: args.cyclotomic,
            };
            print!("{}", run_batch(&text, &opts));
            Ok(())
        }
    }
}

fn parse_point(text: &str) -> Result<(u64, u64, u64, u64), CliError> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(CliError::Validation(
            "expected --point M,N,A,B with four integers".into(),
        ));
    }
    let mut values = [0u64; 4];
    for (slot, part) in values.iter_mut().zip(&parts) {
        *slot = part
            .parse()
            .map_err(|_| CliError::Validation(format!("invalid integer in --point: {part:?}")))?;
    }
    Ok((values[0], values[1], values[2], values[3]))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
