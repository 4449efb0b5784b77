use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

/// Everything needed to reproduce one output file.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub input: String,
    pub input_sha256: String,
    pub parameters: Value,
}

impl RunManifest {
    pub fn new(command: &str, input: &str, input_bytes: &[u8], parameters: Value) -> RunManifest {
        RunManifest {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command: command.to_owned(),
            input: input.to_owned(),
            input_sha256: hex::encode(Sha256::digest(input_bytes)),
            parameters,
        }
    }
}
