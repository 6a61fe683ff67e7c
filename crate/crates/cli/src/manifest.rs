//! Manifests: declarations plus an ordered job list.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::CliError;
use crate::format::Decl;
use crate::jobs;

pub const MANIFEST_VERSION: &str = "cocontra-manifest/1";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub version: String,
    /// Default field for declarations that do not name one.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<String>,
    #[serde(default)]
    pub declarations: Vec<Decl>,
    #[serde(default)]
    pub jobs: Vec<Job>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Job {
    pub id: String,
    pub command: String,
    #[serde(default, skip_serializing_if = "Map::is_empty")]
    pub args: Map<String, Value>,
    /// Enumeration cap; overrides `--budget`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<u64>,
    /// Seed for randomized jobs; overrides `--seed`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

/// Parses a JSON document, reporting the position of syntax and shape errors.
pub fn parse_json<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::parse(&e))
}

impl Manifest {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        parse_json(text)
    }

    /// Canonical text: pretty-printed with sorted object keys and a final
    /// newline.
    pub fn to_canonical(&self) -> String {
        canonical(self)
    }

    /// Checks everything that can be checked before running: version, unique
    /// names and ids, resolvable references, known commands, and that
    /// enumerative jobs have a budget and randomized jobs a seed.
    pub fn validate(&self, global_budget: Option<u64>, global_seed: Option<u64>) -> Result<(), CliError> {
        if self.version != MANIFEST_VERSION {
            return Err(CliError::Validation(format!(
                "unsupported version `{}`, expected `{MANIFEST_VERSION}`",
                self.version
            )));
        }
        if let Some(f) = &self.field {
            cocontra::exactlin::Field::parse(f)?;
        }
        let mut names = BTreeSet::new();
        for d in &self.declarations {
            let name = d.name();
            if name.is_empty() {
                return Err(CliError::Validation("declaration without a name".into()));
            }
            for r in d.references() {
                if !names.contains(r.as_str()) {
                    return Err(CliError::Validation(format!(
                        "`{name}` refers to `{r}`, which is not declared before it"
                    )));
                }
            }
            if !names.insert(name) {
                return Err(CliError::Validation(format!("duplicate declaration `{name}`")));
            }
        }
        let mut ids = BTreeSet::new();
        for job in &self.jobs {
            if job.id.is_empty() {
                return Err(CliError::Validation("job without an id".into()));
            }
            if !ids.insert(job.id.as_str()) {
                return Err(CliError::Validation(format!("duplicate job id `{}`", job.id)));
            }
            jobs::validate_job(job, &names, &self.declarations, global_budget, global_seed)?;
        }
        Ok(())
    }
}

pub fn canonical<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}
