use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand as ClapSubcommand};

use hidden_correlations::partition::Factorization;
use hidden_correlations::report::{self, AnalysisRequest, Report, Subcommand};
use hidden_correlations::{Error, Result};

#[derive(Parser)]
#[command(name = "hidcor", version, about = "Hidden correlations of single qudits and distributions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(ClapSubcommand)]
enum Command {
    /// Probability vector (CSV or JSON array) read as a joint distribution
    AnalyzeProb(Common),
    /// Density matrix JSON read as a multi-qudit state
    AnalyzeDm(Common),
    /// Spin tomograms over a direction grid, one JSON line per direction
    TomogramSweep(Common),
    /// Four-level atom / spin-3/2 worked example
    DemoFourLevel(OutOnly),
    /// Randomized verification of every inequality
    Fuzz(Common),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    input: Option<PathBuf>,
    /// Comma-separated factor dimensions, e.g. 2,2
    #[arg(long)]
    dims: Option<String>,
    /// Number of leading factors in the first block
    #[arg(long)]
    split: Option<usize>,
    /// Tsallis index; repeatable
    #[arg(long = "q")]
    q: Vec<f64>,
    /// Conditioning event AXIS=VALUE (1-based); repeatable
    #[arg(long)]
    given: Vec<String>,
    /// Direction grid JSON
    #[arg(long)]
    grid: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 10_000)]
    count: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct OutOnly {
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_given(items: &[String]) -> Result<Vec<(usize, usize)>> {
    items
        .iter()
        .map(|s| {
            let (a, v) = s
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("--given expects AXIS=VALUE, got '{s}'")))?;
            let num = |t: &str| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad number in --given '{s}'")))
            };
            Ok((num(a)?, num(v)?))
        })
        .collect()
}

fn request(subcommand: Subcommand, c: &Common) -> Result<AnalysisRequest> {
    let mut r = AnalysisRequest::new(subcommand);
    r.input = c.input.clone();
    r.dims = c.dims.as_deref().map(Factorization::parse).transpose()?;
    r.split = c.split;
    r.q = c.q.clone();
    r.given = parse_given(&c.given)?;
    r.grid = c.grid.clone();
    r.seed = c.seed;
    r.count = c.count;
    Ok(r)
}

fn emit(text: &str, out: Option<&PathBuf>) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)?,
        None => std::io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn emit_report(report: &Report, out: Option<&PathBuf>) -> Result<bool> {
    emit(&report.to_json(), out)?;
    Ok(report.all_hold())
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::AnalyzeProb(c) => {
            let rep = report::analyze_prob(&request(Subcommand::AnalyzeProb, &c)?)?;
            emit_report(&rep, c.out.as_ref())
        }
        Command::AnalyzeDm(c) => {
            let rep = report::analyze_dm(&request(Subcommand::AnalyzeDm, &c)?)?;
            emit_report(&rep, c.out.as_ref())
        }
        Command::TomogramSweep(c) => {
            let (records, rep) = report::tomogram_sweep(&request(Subcommand::TomogramSweep, &c)?)?;
            let mut lines = String::new();
            for r in &records {
                lines.push_str(&serde_json::to_string(r)?);
                lines.push('\n');
            }
            emit(&lines, c.out.as_ref())?;
            eprintln!("{}", serde_json::to_string(&rep.checks)?);
            Ok(rep.all_hold())
        }
        Command::DemoFourLevel(o) => emit_report(&report::demo_four_level()?, o.out.as_ref()),
        Command::Fuzz(c) => {
            let rep = report::fuzz(&request(Subcommand::Fuzz, &c)?)?;
            emit_report(&rep, c.out.as_ref())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
