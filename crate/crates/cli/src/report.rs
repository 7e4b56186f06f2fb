use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::input::InputLog;

pub const SCHEMA_VERSION: u32 = 1;

/// The job as parsed from the command line.
#[derive(Clone, Debug, Default, Serialize)]
pub struct JobConfig {
    pub command: String,
    pub inputs: Vec<String>,
    pub complex: Option<String>,
    pub group: Option<Vec<u64>>,
    pub order_n: Option<u64>,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub extra: Vec<(String, String)>,
}

#[derive(Debug, Serialize)]
pub struct Provenance {
    pub tool_version: &'static str,
    pub inputs_sha256: String,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub complex: Option<String>,
    pub group: Option<Vec<u64>>,
    pub order_n: Option<u64>,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub provenance: Provenance,
    /// Excluded from determinism comparisons.
    pub generated_at_unix: u64,
    pub result: Value,
}

/// SHA-256 over the normalized configuration and the bytes of every input file.
pub fn inputs_hash(config: &JobConfig, log: &InputLog) -> String {
    let mut h = Sha256::new();
    h.update(serde_json::to_vec(config).expect("config serializes"));
    for (name, bytes) in &log.entries {
        h.update((name.len() as u64).to_le_bytes());
        h.update(name.as_bytes());
        h.update((bytes.len() as u64).to_le_bytes());
        h.update(bytes);
    }
    hex::encode(h.finalize())
}

impl Report {
    pub fn new(config: &JobConfig, log: &InputLog, result: Value) -> Report {
        Report {
            schema_version: SCHEMA_VERSION,
            command: config.command.clone(),
            provenance: Provenance {
                tool_version: env!("CARGO_PKG_VERSION"),
                inputs_sha256: inputs_hash(config, log),
                seed: config.seed,
                trials: config.trials,
                complex: config.complex.clone(),
                group: config.group.clone(),
                order_n: config.order_n,
            },
            generated_at_unix: SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0),
            result,
        }
    }

    pub fn to_pretty(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}
