use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hookforge::{all_passed, render_json, render_text, run, Format, RunConfig, Selector, THREADS_ENV};

#[derive(Parser)]
#[command(name = "hookforge", version)]
#[command(about = "Exact verification of hook-length identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a family of checks and report each result
    Verify {
        /// Checks to run
        #[arg(value_enum)]
        check: Selector,

        /// Largest n (partition size, vector length) to sweep
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        max_n: u64,

        /// Series truncation order
        #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
        order: u64,

        /// Random samples per n for sampled checks
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,

        /// Seed for all sampled checks
        #[arg(long, default_value_t = 0)]
        seed: u64,

        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,

        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,

        /// Record per-check wall-clock time (makes output run-dependent)
        #[arg(long)]
        timings: bool,

        /// No progress lines on stderr
        #[arg(long, short)]
        quiet: bool,
    },
}

fn threads_from_env() -> Result<Option<usize>, String> {
    match std::env::var(THREADS_ENV) {
        Err(_) => Ok(None),
        Ok(v) => match v.trim().parse::<usize>() {
            Ok(t) if t >= 1 => Ok(Some(t)),
            _ => Err(format!("{THREADS_ENV} must be a positive integer, got {v:?}")),
        },
    }
}

fn main() -> ExitCode {
    let Command::Verify { check, max_n, order, trials, seed, format, out, timings, quiet } = Cli::parse().command;
    let cfg = RunConfig {
        selector: check,
        max_n: max_n as usize,
        order: order as usize,
        trials: trials as usize,
        seed,
        format,
        out,
        timings,
    };
    let threads = match threads_from_env() {
        Ok(t) => t,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    let progress = |k: usize, total: usize, job: &hookforge::Job| {
        if !quiet {
            eprintln!("[{k}/{total}] {job}");
        }
    };
    let reports = match run(&cfg, threads, progress) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: cannot start worker pool: {e}");
            return ExitCode::from(2);
        }
    };
    let text = match cfg.format {
        Format::Json => render_json(&reports, cfg.timings),
        Format::Text => render_text(&reports, cfg.timings),
    };
    let written = match &cfg.out {
        Some(path) => std::fs::write(path, &text).map_err(|e| format!("{}: {e}", path.display())),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    if let Err(msg) = written {
        eprintln!("error: cannot write report: {msg}");
        return ExitCode::from(2);
    }
    if all_passed(&reports) {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
