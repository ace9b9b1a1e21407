//! Append-only results ledger: one self-contained JSON object per line.
//!
//! Each record carries the command and the parameters needed to re-run it,
//! so a seeded search can be reproduced from its record alone.

use std::fs::OpenOptions;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Environment variable naming the default ledger file.
pub const LEDGER_ENV: &str = "TURAN_LEDGER";

/// Version of the record layout; bumped on incompatible changes.
pub const SCHEMA_VERSION: u32 = 1;

pub const ARTIFACT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LedgerRecord {
    pub schema: u32,
    /// RFC 3339, UTC.
    pub timestamp: String,
    pub command: String,
    pub parameters: Value,
    pub outcome: Value,
    pub version: String,
    pub seed: Option<u64>,
}

impl LedgerRecord {
    pub fn new(command: &str, parameters: Value, outcome: Value, seed: Option<u64>) -> Self {
        LedgerRecord {
            schema: SCHEMA_VERSION,
            timestamp: chrono::Utc::now().to_rfc3339(),
            command: command.to_string(),
            parameters,
            outcome,
            version: ARTIFACT_VERSION.to_string(),
            seed,
        }
    }
}

/// Appends one record as a single line.
pub fn append(path: &Path, record: &LedgerRecord) -> io::Result<()> {
    let mut line = serde_json::to_string(record)?;
    line.push('\n');
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    file.write_all(line.as_bytes())?;
    file.flush()
}

/// Reads every record in a ledger file.
pub fn read_all(path: &Path) -> io::Result<Vec<LedgerRecord>> {
    std::fs::read_to_string(path)?
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| serde_json::from_str(l).map_err(io::Error::from))
        .collect()
}

/// The explicit path if given, else the environment default, else none.
pub fn resolve_path(explicit: Option<&Path>) -> Option<PathBuf> {
    explicit
        .map(Path::to_path_buf)
        .or_else(|| std::env::var_os(LEDGER_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
}
