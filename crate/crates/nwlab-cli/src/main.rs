//! `nwlab`: command-line driver for the localization experiments.
//!
//! `nwlab list` prints the experiment registry; `nwlab run <config>`
//! executes one experiment described by a flat `key = value` file and
//! writes a CSV table plus a plain-text summary. Exit codes: 0 on pass,
//! 1 for usage or configuration problems, 2 when the run completed but an
//! assertion failed (or a warning fired under `--strict`).

mod config;
mod experiments;
mod output;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::config::Config;

#[derive(Parser)]
#[command(
    name = "nwlab",
    version,
    about = "localization experiments for the free scalar field"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the experiment described by a config file.
    Run {
        /// Path to a flat `key = value` config naming the experiment.
        config: PathBuf,
        /// Directory for the CSV and summary artifacts.
        #[arg(long, default_value = ".")]
        out_dir: PathBuf,
        /// Treat warnings as failures.
        #[arg(long)]
        strict: bool,
    },
    /// List the available experiments.
    List,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // clap exits 2 on usage errors by default; the contract here
            // reserves 2 for failed checks, so usage problems map to 1
            // while --help/--version stay 0.
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::List => {
            for info in experiments::EXPERIMENTS {
                println!("{:<16} {}", info.name, info.summary);
                println!("{:<16}   topic: {}", "", info.topic);
            }
            ExitCode::SUCCESS
        }
        Command::Run {
            config,
            out_dir,
            strict,
        } => run(&config, &out_dir, strict),
    }
}

fn run(config_path: &Path, out_dir: &Path, strict: bool) -> ExitCode {
    let cfg = match Config::load(config_path) {
        Ok(cfg) => cfg,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let name = match cfg.require_str("experiment") {
        Ok(name) => name.to_string(),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };
    let Some(info) = experiments::find(&name) else {
        let e = cfg.error_at(
            "experiment",
            format!("unknown experiment `{name}`; run `nwlab list` for the registry"),
        );
        eprintln!("error: {e}");
        return ExitCode::from(1);
    };
    let outcome = match (info.run)(&cfg) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    };

    if let Err(e) = std::fs::create_dir_all(out_dir) {
        eprintln!("error: cannot create {}: {e}", out_dir.display());
        return ExitCode::from(1);
    }
    let csv_path = match output::write_csv(out_dir, &outcome) {
        Ok(path) => path,
        Err(e) => {
            eprintln!("error: cannot write CSV: {e}");
            return ExitCode::from(1);
        }
    };
    let summary = output::render_summary(info.name, &cfg.pairs(), &outcome, strict);
    let summary_path = match output::write_summary(out_dir, &outcome.csv_name, &summary) {
        Ok(path) => path,
        Err(e) => {
            eprintln!("error: cannot write summary: {e}");
            return ExitCode::from(1);
        }
    };

    print!("{summary}");
    println!("wrote {}", csv_path.display());
    println!("wrote {}", summary_path.display());

    if output::failed(&outcome, strict) {
        ExitCode::from(2)
    } else {
        ExitCode::SUCCESS
    }
}
