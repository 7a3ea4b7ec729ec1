//! Command-line front end for `removal-core`.
//!
//! [`dispatch`] parses a token list, runs one experiment and writes an
//! [`ExperimentReport`] as JSON (or flattened CSV) to `--out` or standard
//! output. Exit codes: 0 for pass or inconclusive, 1 for a failing verdict or
//! counterexample, 2 for usage and input errors.

mod args;
mod commands;
mod report;
mod witness;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::Context;
use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command, Format};
pub use report::{ExperimentReport, Verdict};
pub use witness::WitnessFile;

use commands::{Ctx, Outcome};

/// Exit code and report of one invocation.
#[derive(Debug)]
pub struct Dispatch {
    pub code: i32,
    pub report: Option<ExperimentReport>,
}

/// Runs the command named by `argv` (without the program name), writing the
/// report to `--out` or standard output.
pub fn dispatch<I, T>(argv: I) -> Dispatch
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    dispatch_to(argv, &mut std::io::stdout().lock())
}

/// As [`dispatch`], with `stdout` standing in for standard output.
pub fn dispatch_to<I, T>(argv: I, stdout: &mut dyn Write) -> Dispatch
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let tokens: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(std::iter::once("removal".to_string()).chain(tokens.iter().cloned())) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    0
                }
                _ => {
                    let _ = e.print();
                    2
                }
            };
            return Dispatch { code, report: None };
        }
    };
    match execute(&cli, tokens, stdout) {
        Ok(report) => Dispatch { code: report.verdict.exit_code(), report: Some(report) },
        Err(e) => {
            eprintln!("error: {e:#}");
            Dispatch { code: 2, report: None }
        }
    }
}

fn produces_artifact(c: &Command) -> bool {
    matches!(
        c,
        Command::Rs(_) | Command::Eqs(args::EqsCommand::Extract { .. }) | Command::Graph(args::GraphCommand::Gen { .. })
    )
}

fn sidecar(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn execute(cli: &Cli, tokens: Vec<String>, stdout: &mut dyn Write) -> anyhow::Result<ExperimentReport> {
    let g = &cli.global;
    if let Some(t) = g.threads {
        anyhow::ensure!(t > 0, "--threads must be positive");
        removal_core::par::set_threads(t);
    }
    let ctx = Ctx {
        seed: g.seed,
        exec: if g.threads == Some(1) {
            removal_core::par::Exec::Sequential
        } else {
            removal_core::par::Exec::default()
        },
    };
    let start = Instant::now();
    let Outcome { parameters, verdict, summary, mut result, witnesses, artifact } = commands::run(&cli.command, &ctx)?;
    let artifact_mode = produces_artifact(&cli.command);
    let report_path = match (&g.out, artifact_mode) {
        (Some(out), true) => Some(sidecar(out)),
        (out, _) => out.clone(),
    };
    if let Some(text) = &artifact {
        match &g.out {
            Some(out) => write_file(out, text)?,
            None => result["artifact"] = serde_json::Value::String(text.clone()),
        }
    }
    let witness_dir = g
        .witness_dir
        .clone()
        .or_else(|| g.out.as_ref().map(|o| o.parent().map(Path::to_path_buf).unwrap_or_default()));
    let mut witness_files = Vec::new();
    if let Some(dir) = witness_dir {
        let stem = g
            .out
            .as_ref()
            .and_then(|o| o.file_name())
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "report".into());
        if !witnesses.is_empty() {
            std::fs::create_dir_all(&dir).with_context(|| format!("creating {}", dir.display()))?;
        }
        for (i, w) in witnesses.iter().enumerate() {
            let path = dir.join(format!("{stem}.witness-{i}.json"));
            write_file(&path, &serde_json::to_string_pretty(w)?)?;
            witness_files.push(path.display().to_string());
        }
    }
    let report = ExperimentReport {
        command: tokens,
        version: env!("CARGO_PKG_VERSION").to_string(),
        seed: g.seed,
        threads: g.threads,
        parameters,
        verdict,
        summary,
        result,
        witnesses,
        witness_files,
        duration_ms: start.elapsed().as_millis() as u64,
    };
    let text = match g.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv()?,
    };
    match report_path {
        Some(p) => write_file(&p, &text)?,
        None => stdout.write_all(text.as_bytes())?,
    }
    Ok(report)
}
