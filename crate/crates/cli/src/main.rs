use std::io::{self, BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use braided_suq2::oracle::{self, ORACLE_DIR_ENV};
use braided_suq2::report::{ReportRecord, Summary};
use braided_suq2::suites::{self, SuiteConfig, SUITES};
use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

#[derive(Parser, Debug)]
#[command(name = "bsuq2", version, about = "Exact verification suites for braided SU_q(2) and its spheres")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest monomial size |n|+k+l for per-monomial suites.
    #[arg(long, global = true, default_value_t = 3)]
    max_size: u32,

    /// Sample point q0 with 0 < |q0| < 1, e.g. 0.3+0.4i (repeatable).
    #[arg(long = "q", global = true, value_parser = parse_q)]
    q: Vec<Complex64>,

    /// Sample value for lambda (repeatable).
    #[arg(long, global = true, allow_negative_numbers = true)]
    lambda: Vec<f64>,

    /// Sample value for rho (repeatable).
    #[arg(long, global = true, allow_negative_numbers = true)]
    rho: Vec<f64>,

    /// Truncation level N of the Hilbert-space window.
    #[arg(long, global = true, default_value_t = 10)]
    levels: usize,

    /// Half-width K of the Hilbert-space window.
    #[arg(long, global = true, default_value_t = 8)]
    window: usize,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Directory holding appendix_a.txt and appendix_b.txt.
    #[arg(long, global = true, env = ORACLE_DIR_ENV)]
    oracle_dir: Option<PathBuf>,

    /// Include wall times in the output (makes it non-reproducible).
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run one suite, or `all`.
    Verify {
        #[arg(value_parser = suite_name)]
        suite: String,
    },
    /// Rank of the nine vectors pi(v_ij) e_{2,0} at each --q.
    CheckRank,
    /// Summarize a JSON-lines report produced by `verify --format json`.
    Report { file: PathBuf },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn parse_q(s: &str) -> Result<Complex64, String> {
    let z: Complex64 = s.replace(' ', "").parse().map_err(|_| format!("not a complex number: {s}"))?;
    if !(z.norm() > 0.0 && z.norm() < 1.0) {
        return Err(format!("q0 = {s} must satisfy 0 < |q0| < 1"));
    }
    Ok(z)
}

fn suite_name(s: &str) -> Result<String, String> {
    if s == "all" || SUITES.contains(&s) {
        Ok(s.to_string())
    } else {
        Err(format!("unknown suite; expected `all` or one of: {}", SUITES.join(", ")))
    }
}

fn config(cli: &Cli) -> SuiteConfig {
    let mut cfg =
        SuiteConfig { max_size: cli.max_size, levels: cli.levels, width: cli.window, ..SuiteConfig::default() };
    if !cli.q.is_empty() {
        cfg.q_samples = cli.q.clone();
        cfg.rank_q = cli.q.clone();
    }
    if !cli.lambda.is_empty() {
        cfg.lambda = cli.lambda.clone();
    }
    if !cli.rho.is_empty() {
        cfg.rho = cli.rho.clone();
    }
    cfg.oracle_dir = cli.oracle_dir.clone().unwrap_or_else(oracle::default_dir);
    cfg
}

fn emit(records: Vec<ReportRecord>, cli: &Cli) -> ExitCode {
    let summary = Summary::of(&records);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for r in records {
        let r = if cli.timing { r } else { r.without_timing() };
        let line = match cli.format {
            Format::Text => r.to_string(),
            Format::Json => r.to_json_line(),
        };
        if writeln!(out, "{line}").is_err() {
            return ExitCode::from(2);
        }
    }
    match cli.format {
        Format::Text => {
            let _ = writeln!(out, "summary: {summary}");
        }
        Format::Json => eprintln!("summary: {summary}"),
    }
    if summary.fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn report(file: &PathBuf) -> Result<Vec<ReportRecord>, String> {
    let f = std::fs::File::open(file).map_err(|e| format!("{}: {e}", file.display()))?;
    let mut out = Vec::new();
    for (i, line) in io::BufReader::new(f).lines().enumerate() {
        let line = line.map_err(|e| format!("{}: {e}", file.display()))?;
        if line.trim().is_empty() {
            continue;
        }
        let r: ReportRecord = serde_json::from_str(&line).map_err(|e| format!("{}:{}: {e}", file.display(), i + 1))?;
        out.push(r);
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = config(&cli);
    if let Err(e) = cfg.validate() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    let records = match &cli.command {
        Command::Verify { suite } if suite == "all" => suites::run_all(&cfg),
        Command::Verify { suite } => suites::run_suite(suite, &cfg),
        Command::CheckRank => Ok(cfg.rank_q.iter().map(|&q| suites::rank_record(q, cfg.levels, cfg.width)).collect()),
        Command::Report { file } => match report(file) {
            Ok(rs) => Ok(rs),
            Err(e) => {
                eprintln!("error: {e}");
                return ExitCode::from(2);
            }
        },
    };
    match records {
        Ok(rs) => emit(rs, &cli),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
