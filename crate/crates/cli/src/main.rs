use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use serde_json::json;

use hfknot::algebra::variable_names;
use hfknot::corpus::{self, EntryOutcome};
use hfknot::cylinders::compose;
use hfknot::format::{parse_presentation, serialize_presentation};
use hfknot::homology::{homological_monodromy, homology_classes};
use hfknot::invariants::{alexander_polynomial, compute_report, fiberedness_report};
use hfknot::report::{alexander_json, report_json, report_text, verdict_json, verdict_text};
use hfknot::AdmissiblePresentation;

#[derive(Parser)]
#[command(
    name = "hfknot",
    version,
    about = "Invariants of homologically fibered knots from admissible presentations"
)]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Full invariant report for a presentation file.
    Compute { file: PathBuf },
    /// Check embedded presentations against their published values.
    Corpus {
        #[arg(long)]
        name: Option<String>,
    },
    /// Fibering obstructions only.
    Fiberedness { file: PathBuf },
    /// Alexander polynomial det(I - tσ).
    Alexander { file: PathBuf },
    /// Stack the first cylinder on top of the second.
    Compose {
        first: PathBuf,
        second: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

enum Failure {
    Computation(anyhow::Error),
    Mismatch,
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Computation(e)
    }
}

impl From<hfknot::Error> for Failure {
    fn from(e: hfknot::Error) -> Self {
        Failure::Computation(e.into())
    }
}

fn load(path: &Path) -> anyhow::Result<AdmissiblePresentation> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_presentation(&text).with_context(|| format!("parsing {}", path.display()))
}

fn print_json(v: &serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(v).expect("values serialize")
    );
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Compute { file } => {
            let r = compute_report(&load(&file)?)?;
            if cli.json {
                print_json(&report_json(&r));
            } else {
                print!("{}", report_text(&r));
            }
        }
        Command::Fiberedness { file } => {
            let f = fiberedness_report(&load(&file)?)?;
            if cli.json {
                print_json(&verdict_json(&f));
            } else {
                print!("{}", verdict_text(&f));
            }
        }
        Command::Alexander { file } => {
            let sigma = homological_monodromy(&homology_classes(&load(&file)?)?)?;
            let a = alexander_polynomial(&sigma);
            if cli.json {
                print_json(&alexander_json(&a));
            } else {
                println!("{a}");
            }
        }
        Command::Compose {
            first,
            second,
            output,
        } => {
            let c = compose(&load(&first)?, &load(&second)?)?;
            fs::write(&output, serialize_presentation(&c))
                .with_context(|| format!("writing {}", output.display()))?;
            if cli.json {
                print_json(&json!({
                    "output": output.display().to_string(),
                    "genus": c.genus(),
                    "z_count": c.internal_count(),
                    "relations": c.relations().len(),
                }));
            } else {
                println!(
                    "wrote {} (genus {}, {} internal generators, {} relations)",
                    output.display(),
                    c.genus(),
                    c.internal_count(),
                    c.relations().len()
                );
            }
        }
        Command::Corpus { name } => {
            let entries: Vec<_> = match name {
                Some(n) => {
                    vec![corpus::entry(&n).ok_or_else(|| anyhow!("no corpus entry named {n}"))?]
                }
                None => corpus::CORPUS.iter().collect(),
            };
            let outcomes = corpus::check_entries(&entries);
            if cli.json {
                print_json(&serde_json::Value::Array(
                    outcomes.iter().map(outcome_json).collect(),
                ));
            } else {
                for o in &outcomes {
                    print!("{}", outcome_text(o));
                }
            }
            if let Some(o) = outcomes.iter().find(|o| o.report.is_err()) {
                let e = o.report.as_ref().unwrap_err().clone();
                return Err(Failure::Computation(anyhow!(e).context(o.name)));
            }
            if outcomes.iter().any(|o| !o.passed()) {
                return Err(Failure::Mismatch);
            }
        }
    }
    Ok(())
}

fn outcome_json(o: &EntryOutcome) -> serde_json::Value {
    json!({
        "name": o.name,
        "pass": o.passed(),
        "error": o.report.as_ref().err().map(|e| e.to_string()),
        "mismatches": o.mismatches,
        "report": o.report.as_ref().ok().map(report_json),
    })
}

fn outcome_text(o: &EntryOutcome) -> String {
    match &o.report {
        Err(e) => format!("FAIL {}: {e}\n", o.name),
        Ok(r) => {
            let names = variable_names(2 * r.genus);
            let mut s = format!(
                "{} {}: torsion ~ {}, alexander {}, {}\n",
                if o.passed() { "PASS" } else { "FAIL" },
                o.name,
                r.torsion.raw().to_text(&names),
                r.alexander,
                r.fiberedness.verdict
            );
            for m in &o.mismatches {
                s.push_str(&format!("  mismatch: {m}\n"));
            }
            s
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Computation(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Mismatch) => {
            eprintln!("golden value mismatch");
            ExitCode::from(2)
        }
    }
}
