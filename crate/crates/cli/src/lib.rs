//! Batch front end: declaration files and manifests in, JSON reports out.

pub mod error;
pub mod format;
pub mod jobs;
pub mod manifest;
pub mod report;

use std::time::Instant;

use cocontra::budget::Budget;
use cocontra::exactlin::Field;
use rayon::prelude::*;
use serde_json::{Map, Value};

pub use error::CliError;
pub use manifest::{Job, Manifest};
pub use report::{JobReport, RunReport, Status};

use format::{Decl, Env};
use jobs::{Ctx, Outcome};

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub budget: Option<u64>,
    pub seed: Option<u64>,
    pub field: Option<Field>,
    pub oracle: bool,
    pub parallel: bool,
    pub timing: bool,
}

/// Validates the manifest, builds its declarations and runs every job.
/// Parse and validation problems are returned as errors; everything that
/// goes wrong inside a job is recorded in its report entry.
pub fn run_manifest(m: &Manifest, opts: &RunOptions) -> Result<RunReport, CliError> {
    m.validate(opts.budget, opts.seed)?;
    let field = match (opts.field, &m.field) {
        (Some(f), _) => f,
        (None, Some(text)) => Field::parse(text).map_err(|e| CliError::Validation(e.to_string()))?,
        (None, None) => Field::Rational,
    };
    let env_budget = opts.budget.map(Budget::new).unwrap_or_default();
    let mut env = Env::new(field, env_budget);
    for d in &m.declarations {
        env.declare(d).map_err(|e| match e {
            CliError::Core(e) => CliError::Validation(format!("declaration `{}`: {e}", d.name())),
            other => other,
        })?;
    }
    let run = |job: &Job| run_job(job, &env, opts);
    let reports: Vec<JobReport> = if opts.parallel {
        m.jobs.par_iter().map(run).collect()
    } else {
        m.jobs.iter().map(run).collect()
    };
    Ok(RunReport::new(field.to_string(), opts.oracle, opts.seed, reports))
}

fn run_job(job: &Job, env: &Env, opts: &RunOptions) -> JobReport {
    let budget = job.budget.or(opts.budget);
    let seed = job.seed.or(opts.seed);
    let ctx = Ctx {
        budget: budget.map(Budget::new).unwrap_or_default(),
        seed,
        oracle: opts.oracle,
    };
    let started = Instant::now();
    let outcome = jobs::execute(&job.command, &job.args, env, &ctx);
    let timing_ms = opts.timing.then(|| started.elapsed().as_millis() as u64);
    let mut report = JobReport {
        id: job.id.clone(),
        command: job.command.clone(),
        status: Status::Pass,
        counts: Default::default(),
        witness: None,
        notes: Vec::new(),
        seed: if jobs::is_randomized(job) { seed } else { None },
        budget,
        result: None,
        error: None,
        timing_ms,
    };
    match outcome {
        Ok(Outcome {
            passed,
            counts,
            witness,
            notes,
            result,
        }) => {
            report.status = if passed { Status::Pass } else { Status::Fail };
            report.counts = counts;
            report.notes = notes;
            report.result = result;
            report.witness = if passed {
                None
            } else {
                Some(witness.unwrap_or_else(|| "unspecified failure".into()))
            };
        }
        Err(CliError::Invalid(w)) => {
            report.status = Status::Fail;
            report.witness = Some(w);
        }
        Err(e) => {
            report.status = Status::Error;
            report.error = Some(e.to_string());
        }
    }
    report
}

/// Reads a declaration document: one declaration or an array of them.
pub fn parse_declarations(text: &str) -> Result<Vec<Decl>, CliError> {
    if text.trim_start().starts_with('[') {
        manifest::parse_json::<Vec<Decl>>(text)
    } else {
        Ok(vec![manifest::parse_json::<Decl>(text)?])
    }
}

/// Wraps a single subcommand invocation as a one-job manifest. Each
/// document's last declaration is its primary object and fills the next
/// positional argument of `command`; unnamed primaries are named after that
/// argument. Declarations repeated identically across documents are merged.
pub fn command_manifest(
    command: &str,
    docs: &[Vec<Decl>],
    extra: Map<String, Value>,
    budget: Option<u64>,
    seed: Option<u64>,
) -> Result<Manifest, CliError> {
    let keys = jobs::positional_keys(command);
    let mut declarations: Vec<Decl> = Vec::new();
    let mut args = Map::new();
    for (i, doc) in docs.iter().enumerate() {
        let Some(last) = doc.len().checked_sub(1) else {
            return Err(CliError::Validation(format!("document {} is empty", i + 1)));
        };
        let key = match (command, keys.get(i)) {
            (_, Some(k)) => *k,
            ("bridge", None) => match &doc[last] {
                Decl::Comodule { .. } => "comodules",
                Decl::PolyFamily { structure, .. } if structure == "comodule" => "comodules",
                _ => "contramodules",
            },
            _ => {
                return Err(CliError::Validation(format!(
                    "`{command}` takes at most {} declaration files",
                    keys.len()
                )))
            }
        };
        for (j, decl) in doc.iter().enumerate() {
            let mut decl = decl.clone();
            if decl.name().is_empty() {
                if j != last {
                    return Err(CliError::Validation(format!(
                        "document {}: only the last declaration may be unnamed",
                        i + 1
                    )));
                }
                let name = if keys.contains(&key) { key.to_string() } else { format!("{key}{i}") };
                decl.set_name(name);
            }
            if j == last {
                let name = Value::String(decl.name().to_string());
                if keys.contains(&key) {
                    args.insert(key.into(), name);
                } else if let Value::Array(list) =
                    args.entry(key).or_insert_with(|| Value::Array(Vec::new()))
                {
                    list.push(name);
                }
            }
            match declarations.iter().find(|d| d.name() == decl.name()) {
                Some(existing) if *existing == decl => {}
                Some(_) => {
                    return Err(CliError::Validation(format!(
                        "conflicting declarations named `{}`",
                        decl.name()
                    )))
                }
                None => declarations.push(decl),
            }
        }
    }
    args.extend(extra);
    Ok(Manifest {
        version: manifest::MANIFEST_VERSION.into(),
        field: None,
        declarations,
        jobs: vec![Job {
            id: command.into(),
            command: command.into(),
            args,
            budget,
            seed,
        }],
    })
}
