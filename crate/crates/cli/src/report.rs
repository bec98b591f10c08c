use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Envelope for every command's standard output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub version: String,
}

impl ReportDocument {
    pub fn new(command: &str, inputs: Value, result: Value) -> Self {
        ReportDocument {
            command: command.to_string(),
            inputs,
            result,
            version: concat!("polygcd ", env!("CARGO_PKG_VERSION")).to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report is serializable")
    }
}
