use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use partial_duality::exactla::Field;
use partial_duality::report::{emit_report, ReportFormat};
use partial_duality::scenario::{load_scenario, run, run_scenario, RunOptions, Suite, BUNDLED};

#[derive(Parser)]
#[command(name = "pdual", version, about = "Verify partial group actions and their duality over exact fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Run the verification suites of a scenario file
    Verify {
        scenario: PathBuf,
        /// Restrict to the given suite (repeatable)
        #[arg(long = "suite", value_parser = parse_suite)]
        suites: Vec<Suite>,
        /// Override the scenario field: `q` or `fp:<p>`
        #[arg(long, value_parser = parse_field)]
        field: Option<Field>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Write the report here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        /// Record wall time per check (makes output run-dependent)
        #[arg(long)]
        timings: bool,
    },
    /// List the available suites
    ListSuites,
    /// Run the bundled scenario corpus
    Selftest,
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse()
}

fn parse_field(s: &str) -> Result<Field, String> {
    Field::parse(s).map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify { scenario, suites, field, format, out, timings } => {
            let opts = RunOptions { suites, timings };
            let report = match run_scenario(&scenario, field, &opts) {
                Ok(r) => r,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let format = match format {
                Format::Text => ReportFormat::Text,
                Format::Structured => ReportFormat::Structured,
            };
            let bytes = emit_report(&report, format);
            let written = match &out {
                Some(path) => std::fs::write(path, &bytes),
                None => std::io::stdout().write_all(&bytes),
            };
            if let Err(e) = written {
                eprintln!("error: cannot write report: {e}");
                return ExitCode::from(2);
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Command::ListSuites => {
            for s in Suite::ALL {
                println!("{:<13} {}", s.name(), s.description());
            }
            ExitCode::SUCCESS
        }
        Command::Selftest => selftest(),
    }
}

fn selftest() -> ExitCode {
    let mut ok = true;
    for b in BUNDLED {
        let outcome = match (load_scenario(b.text, None), b.rejects) {
            (Ok(s), None) => {
                let report = run(&s, &RunOptions::default());
                let failed: Vec<&str> = report.failures().map(|c| c.name.as_str()).collect();
                if failed.is_empty() {
                    Ok(format!("{} checks pass", report.checks.len()))
                } else {
                    Err(format!("failing checks: {}", failed.join(", ")))
                }
            }
            (Ok(_), Some(axiom)) => Err(format!("accepted, expected rejection by {axiom}")),
            (Err(e), Some(axiom)) if e.axiom() == Some(axiom) => Ok(format!("rejected by {axiom}")),
            (Err(e), _) => Err(e.to_string()),
        };
        match outcome {
            Ok(msg) => println!("pass  {:<32} {msg}", b.file),
            Err(msg) => {
                ok = false;
                println!("FAIL  {:<32} {msg}", b.file);
            }
        }
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
