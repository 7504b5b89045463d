//! Argument parsing and the three subcommands.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fnnn_core::{lambda_sweep, run_pipeline, Lambda, Metric, Operator, PipelineConfig};

use crate::error::{exit, CliError};
use crate::input::{self, InputFormat, WeightChoice};
use crate::report::{self, RankDoc, SweepDoc};

/// Environment variable holding the number of decimals in tables.
pub const PRECISION_VAR: &str = "FNN_MADM_PRECISION";
pub const DEFAULT_PRECISION: usize = 4;

const EXIT_CODES: &str = "Exit codes:\n  0  success\n  1  usage error\n  2  invalid data or file\n  3  degenerate computation";

#[derive(Debug, Parser)]
#[command(name = "fnn-madm", version, about = "Rank alternatives rated with Fermatean neutrosophic normal numbers")]
#[command(after_help = EXIT_CODES)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run the ranking pipeline once and print every intermediate table.
    Rank(RankArgs),
    /// Rank for each Λ in a range and report where the ordering changes.
    Sweep(SweepArgs),
    /// Check every cell of a problem file.
    Validate(InputArgs),
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Problem file (.csv or .json).
    input: PathBuf,
    /// Override the format implied by the file extension.
    #[arg(long, value_enum)]
    input_format: Option<InputFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Args)]
struct ModelArgs {
    #[arg(long, default_value = "fnnwa", value_parser = parse_operator)]
    operator: Operator,
    #[arg(long, default_value = "hamming", value_parser = parse_metric)]
    metric: Metric,
    /// Attribute weights, overriding any in the file.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
    weights: Option<Vec<f64>>,
    /// Rescale weights to sum to 1 instead of rejecting them.
    #[arg(long)]
    renormalize_weights: bool,
    #[arg(long, value_enum, default_value = "table")]
    format: OutputFormat,
}

#[derive(Debug, Args)]
struct RankArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    model: ModelArgs,
    /// Λ ≥ 1.
    #[arg(long, default_value = "1", value_parser = parse_lambda)]
    lambda: Lambda,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    model: ModelArgs,
    /// `a..b` with 1 ≤ a ≤ b; Λ steps by 1 from a.
    #[arg(long, value_parser = parse_range)]
    lambda_range: LambdaRange,
    /// Write `lambda,D1,…,Dn` plot data to this file.
    #[arg(long)]
    plot_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
struct LambdaRange {
    start: f64,
    end: f64,
}

const MAX_SWEEP_ROWS: f64 = 100_000.0;

impl FromStr for LambdaRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (a, b) = s.split_once("..").ok_or("expected `a..b`")?;
        let start: f64 = a.trim().parse().map_err(|_| format!("`{a}` is not a number"))?;
        let end: f64 = b.trim().parse().map_err(|_| format!("`{b}` is not a number"))?;
        if !(start.is_finite() && end.is_finite() && start >= 1.0 && start <= end) {
            return Err("need 1 ≤ a ≤ b".into());
        }
        if end - start >= MAX_SWEEP_ROWS {
            return Err(format!("at most {MAX_SWEEP_ROWS} steps"));
        }
        Ok(LambdaRange { start, end })
    }
}

fn parse_operator(s: &str) -> Result<Operator, String> {
    s.parse().map_err(|_| "expected one of fnnwa, fnnwg, gfnnwa, gfnnwg".into())
}

fn parse_metric(s: &str) -> Result<Metric, String> {
    s.parse().map_err(|_| "expected hamming or euclidean".into())
}

fn parse_lambda(s: &str) -> Result<Lambda, String> {
    let v: f64 = s.parse().map_err(|_| format!("`{s}` is not a number"))?;
    Lambda::new(v).map_err(|e| e.to_string())
}

fn parse_range(s: &str) -> Result<LambdaRange, String> {
    s.parse()
}

/// Process environment the commands depend on.
#[derive(Debug, Clone, Default)]
pub struct Env {
    /// Raw value of [`PRECISION_VAR`].
    pub precision: Option<String>,
}

impl Env {
    pub fn from_process() -> Self {
        Env { precision: std::env::var(PRECISION_VAR).ok() }
    }

    fn digits(&self) -> Result<usize, CliError> {
        match &self.precision {
            None => Ok(DEFAULT_PRECISION),
            Some(s) => match s.trim().parse::<usize>() {
                Ok(d) if d <= 17 => Ok(d),
                _ => Err(CliError::Usage(format!("{PRECISION_VAR} must be an integer from 0 to 17, got `{s}`"))),
            },
        }
    }
}

fn weight_choice(m: &ModelArgs) -> WeightChoice {
    WeightChoice { explicit: m.weights.clone(), renormalize: m.renormalize_weights }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn rank(args: &RankArgs, env: &Env, out: &mut dyn Write) -> Result<(), CliError> {
    let digits = env.digits()?;
    let dm = input::parse_problem(&args.input.input, args.input.input_format, &weight_choice(&args.model))?;
    let config = PipelineConfig { operator: args.model.operator, metric: args.model.metric, lambda: args.lambda };
    let doc = RankDoc::from_report(&run_pipeline(&dm, config)?);
    let text = match args.model.format {
        OutputFormat::Table => report::rank_table(&doc, digits),
        OutputFormat::Json => json(&doc),
        OutputFormat::Csv => report::rank_csv(&doc),
    };
    emit(out, &text)
}

fn sweep(args: &SweepArgs, env: &Env, out: &mut dyn Write) -> Result<(), CliError> {
    let digits = env.digits()?;
    let dm = input::parse_problem(&args.input.input, args.input.input_format, &weight_choice(&args.model))?;
    let lambdas = report::lambda_steps(args.lambda_range.start, args.lambda_range.end);
    let config = PipelineConfig { operator: args.model.operator, metric: args.model.metric, ..PipelineConfig::default() };
    let result = lambda_sweep(&dm, config, &lambdas)?;
    let doc = SweepDoc::new(&result, config.operator, config.metric, dm.alternatives());
    if let Some(path) = &args.plot_out {
        std::fs::write(path, report::plot_csv(&doc)).map_err(|source| CliError::Write { path: path.clone(), source })?;
    }
    let text = match args.model.format {
        OutputFormat::Table => report::sweep_table(&doc, digits),
        OutputFormat::Json => json(&doc),
        OutputFormat::Csv => report::sweep_csv(&doc),
    };
    emit(out, &text)
}

fn validate(args: &InputArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let raw = input::read_problem(&args.input, args.input_format)?;
    let bad = input::diagnose(&raw);
    if !bad.is_empty() {
        return Err(CliError::InvalidCells(bad));
    }
    let count = raw.cells.len();
    let mut text = format!("{count} cells valid\n");
    if let Some(w) = raw.weights {
        if let Err(e) = fnnn_core::WeightVector::new(w) {
            return Err(CliError::Data(format!("weights in file: {e}")));
        }
    } else {
        text.push_str("note: no weights row; pass --weights when ranking\n");
    }
    emit(out, &text)
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes())
        .map_err(|source| CliError::Write { path: PathBuf::from("<stdout>"), source })
}

fn report_error(e: &CliError, err: &mut dyn Write) {
    let _ = writeln!(err, "error: {e}");
    if let CliError::InvalidCells(cells) = e {
        for c in cells {
            let _ = writeln!(err, "  {c}");
        }
    }
}

/// Runs one command line and returns the process exit code.
pub fn run<I, T>(args: I, env: &Env, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { exit::USAGE } else { exit::SUCCESS };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Rank(a) => rank(a, env, out),
        Command::Sweep(a) => sweep(a, env, out),
        Command::Validate(a) => validate(a, out),
    };
    match result {
        Ok(()) => exit::SUCCESS,
        Err(e) => {
            report_error(&e, err);
            e.exit_code()
        }
    }
}
