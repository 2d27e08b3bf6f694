mod args;
mod commands;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Format};
use commands::Status;

fn configure_threads() {
    let Ok(value) = std::env::var("PVB_THREADS") else {
        return;
    };
    match value.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            if let Err(err) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
                log::warn!("could not size the thread pool: {err}");
            }
        }
        _ => log::warn!("ignoring PVB_THREADS={value:?}"),
    }
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return ExitCode::from(if err.use_stderr() { 2 } else { 0 });
        }
    };
    configure_threads();

    let outcome = match commands::run(&cli) {
        Ok(outcome) => outcome,
        Err(err) => {
            eprintln!("error: {}", err.0);
            return ExitCode::from(2);
        }
    };

    let text = match cli.format {
        Format::Human => outcome.human,
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.json).expect("json values serialize");
            s.push('\n');
            s
        }
        Format::Csv => outcome.csv,
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, text.as_bytes()),
        None => std::io::stdout().lock().write_all(text.as_bytes()),
    };
    if let Err(err) = written {
        eprintln!("error: cannot write report: {err}");
        return ExitCode::from(2);
    }

    match outcome.status {
        Status::Ok => ExitCode::SUCCESS,
        Status::Violation => ExitCode::from(1),
    }
}
