//! Input loading, error classification and the report envelope.

use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use davis_core::complex::catalog;
use davis_core::coxeter::CoxeterError;
use davis_core::davis::DavisError;
use davis_core::{validate_complex, RawComplex, SimplicialComplex};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::InputArgs;

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Guard(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Guard(m) => write!(f, "resource guard: {m}"),
        }
    }
}

impl From<CoxeterError> for CliError {
    fn from(e: CoxeterError) -> Self {
        match e {
            CoxeterError::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<DavisError> for CliError {
    fn from(e: DavisError) -> Self {
        match e {
            DavisError::GuardExceeded { .. } => CliError::Guard(e.to_string()),
            DavisError::Coxeter(c) => c.into(),
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// A loaded input and its provenance for the report.
pub struct Loaded<T> {
    pub value: T,
    pub source: Value,
}

pub fn read_file(path: &Path) -> Result<(Vec<u8>, Value), CliError> {
    let bytes = fs::read(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let source = json!({ "path": path.display().to_string(), "sha256": hex::encode(Sha256::digest(&bytes)) });
    Ok((bytes, source))
}

pub fn load_complex(args: &InputArgs) -> Result<Loaded<SimplicialComplex>, CliError> {
    if let Some(name) = &args.builtin {
        let k = catalog::by_name(name).ok_or_else(|| CliError::Input(format!("unknown built-in complex {name:?}")))?;
        // Built-ins are hashed through their canonical JSON form.
        let bytes = serde_json::to_vec(&k.to_raw()).expect("serializable");
        let source = json!({ "builtin": name, "sha256": hex::encode(Sha256::digest(&bytes)) });
        return Ok(Loaded { value: k, source });
    }
    let path = args.input.as_deref().ok_or_else(|| CliError::Input("no input given".into()))?;
    let (bytes, source) = read_file(path)?;
    let raw: RawComplex = serde_json::from_slice(&bytes).map_err(|e| CliError::Input(format!("bad complex JSON: {e}")))?;
    let value = validate_complex(&raw).map_err(|e| CliError::Input(format!("invalid complex: {e}")))?;
    Ok(Loaded { value, source })
}

/// What a command produced: the report body and whether every certificate held.
pub struct Outcome {
    pub body: String,
    pub certified: bool,
}

impl Outcome {
    pub fn text(body: String, certified: bool) -> Self {
        Outcome { body, certified }
    }

    /// Wraps `result` with tool version, command, config, seed and input provenance.
    pub fn report(command: &str, config: Value, seed: u64, input: Value, result: Value, certified: bool) -> Self {
        let doc = json!({
            "tool": { "name": env!("CARGO_BIN_NAME"), "version": env!("CARGO_PKG_VERSION") },
            "command": command,
            "config": config,
            "seed": seed,
            "input": input,
            "certified": certified,
            "result": result,
        });
        let mut body = serde_json::to_string_pretty(&doc).expect("serializable");
        body.push('\n');
        Outcome { body, certified }
    }
}

pub fn emit(path: Option<&Path>, body: &str) -> std::io::Result<()> {
    match path {
        Some(p) => fs::write(p, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}
