use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cocontra::budget::Budget;
use cocontra::exactlin::Field;
use cocontra_cli::manifest::canonical;
use cocontra_cli::{command_manifest, parse_declarations, run_manifest, CliError, Manifest, RunOptions};
use serde_json::{Map, Value};

#[derive(Parser)]
#[command(name = "cocontra", version, about = "Comodules, contramodules and their correspondence, checked exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Cap on the number of objects an enumeration may visit.
    #[arg(long)]
    budget: Option<u64>,
    /// Default field for declarations: `Q` or `Fp:p` (also `F2`, `F3`, ...).
    #[arg(long)]
    field: Option<String>,
    /// Cross-check results against independent computations.
    #[arg(long)]
    oracle: bool,
    /// Seed for randomized instance generation; recorded in the report.
    #[arg(long)]
    seed: Option<u64>,
    /// Record per-job wall-clock time (the report is then not reproducible).
    #[arg(long)]
    timing: bool,
}

#[derive(Args, Clone)]
struct Single {
    /// Declaration files; each file's last declaration fills the next
    /// argument of the command.
    files: Vec<PathBuf>,
    /// Extra job argument as `key=value`; the value is read as JSON when it
    /// parses, as a string otherwise.
    #[arg(long = "arg", value_name = "KEY=VALUE")]
    args: Vec<String>,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand)]
enum Command {
    /// Run every job of a manifest.
    Run {
        manifest: PathBuf,
        /// Run independent jobs concurrently; the report order is unchanged.
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Validate a declaration, or run a named certificate.
    Check {
        #[arg(long)]
        certificate: Option<String>,
        #[command(flatten)]
        single: Single,
    },
    /// Comodule to contramodule of sections.
    R(Single),
    /// Contramodule to comodule.
    L(Single),
    /// L(R(M)) and the counit back to M.
    Lr(Single),
    /// Certify the adjunction for a contramodule and a comodule.
    Adjoint(Single),
    /// Decompose a set contramodule as a product at a base point.
    Decompose {
        #[arg(long)]
        base_point: String,
        #[command(flatten)]
        single: Single,
    },
    /// Every contramodule structure on a carrier over a base.
    Enumerate {
        #[arg(long)]
        carrier_size: Option<usize>,
        #[command(flatten)]
        single: Single,
    },
    /// Hom set or hom object between two objects.
    Hom(Single),
    Cotensor(Single),
    Cohom(Single),
    /// Induction along a map or coalgebra morphism.
    Induce(Single),
    /// Restriction along a map or coalgebra morphism.
    Restrict(Single),
    /// Certify the free contramodule against R of the cofree comodule.
    Kleisli(Single),
    /// Certify the passage through modules over the dual algebra.
    Bridge(Single),
    /// Compare the cotensor-hom with the cohom of a hom contramodule.
    Probe(Single),
    /// Show that the free contramodule functor does not preserve a
    /// coequaliser.
    DemoNoncocontinuous {
        #[arg(long)]
        c_size: usize,
        #[command(flatten)]
        common: Common,
    },
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn parse_arg(text: &str) -> Result<(String, Value), CliError> {
    let (k, v) = text
        .split_once('=')
        .ok_or_else(|| CliError::Validation(format!("`--arg {text}` is not KEY=VALUE")))?;
    let value = serde_json::from_str(v).unwrap_or_else(|_| Value::String(v.to_string()));
    Ok((k.to_string(), value))
}

fn options(common: &Common, parallel: bool) -> Result<RunOptions, CliError> {
    Ok(RunOptions {
        budget: common.budget,
        seed: common.seed,
        field: common
            .field
            .as_deref()
            .map(Field::parse)
            .transpose()
            .map_err(|e| CliError::Validation(e.to_string()))?,
        oracle: common.oracle,
        parallel,
        timing: common.timing,
    })
}

fn single(
    command: &str,
    s: &Single,
    mut extra: Map<String, Value>,
) -> Result<(Manifest, RunOptions), CliError> {
    let docs = s
        .files
        .iter()
        .map(|p| parse_declarations(&read(p)?))
        .collect::<Result<Vec<_>, _>>()?;
    for a in &s.args {
        let (k, v) = parse_arg(a)?;
        extra.insert(k, v);
    }
    // A single invocation is explicit about its inputs, so it falls back on
    // the library's default cap instead of demanding `--budget`.
    let budget = s.common.budget.unwrap_or(Budget::default().max_count);
    let m = command_manifest(command, &docs, extra, Some(budget), s.common.seed)?;
    Ok((m, options(&s.common, false)?))
}

fn plan(cli: &Cli) -> Result<(Manifest, RunOptions, Option<PathBuf>), CliError> {
    let mut extra = Map::new();
    let (name, s) = match &cli.command {
        Command::Run {
            manifest,
            parallel,
            common,
        } => {
            let m = Manifest::parse(&read(manifest)?)?;
            return Ok((m, options(common, *parallel)?, common.out.clone()));
        }
        Command::DemoNoncocontinuous { c_size, common } => {
            extra.insert("c_size".into(), (*c_size).into());
            let s = Single {
                files: Vec::new(),
                args: Vec::new(),
                common: common.clone(),
            };
            let (m, o) = single("demo-noncocontinuous", &s, extra)?;
            return Ok((m, o, common.out.clone()));
        }
        Command::Check { certificate, single } => {
            if let Some(c) = certificate {
                extra.insert("certificate".into(), c.clone().into());
            }
            ("check", single)
        }
        Command::Decompose { base_point, single } => {
            extra.insert("base_point".into(), base_point.clone().into());
            ("decompose", single)
        }
        Command::Enumerate { carrier_size, single } => {
            if let Some(n) = carrier_size {
                extra.insert("carrier_size".into(), (*n).into());
            }
            ("enumerate", single)
        }
        Command::R(s) => ("r", s),
        Command::L(s) => ("l", s),
        Command::Lr(s) => ("lr", s),
        Command::Adjoint(s) => ("adjoint", s),
        Command::Hom(s) => ("hom", s),
        Command::Cotensor(s) => ("cotensor", s),
        Command::Cohom(s) => ("cohom", s),
        Command::Induce(s) => ("induce", s),
        Command::Restrict(s) => ("restrict", s),
        Command::Kleisli(s) => ("kleisli", s),
        Command::Bridge(s) => ("bridge", s),
        Command::Probe(s) => ("probe", s),
    };
    let (m, o) = single(name, s, extra)?;
    Ok((m, o, s.common.out.clone()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = plan(&cli).and_then(|(m, opts, out)| {
        let report = run_manifest(&m, &opts)?;
        let text = canonical(&report);
        match &out {
            Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?,
            None => print!("{text}"),
        }
        Ok(report.exit_code())
    });
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
