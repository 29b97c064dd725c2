//! Verification results in the report format shared by the checks and the CLI.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub params: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

impl CheckReport {
    pub fn new(check: &str, params: Value, pass: bool, witness: Option<String>) -> Self {
        Self { check: check.to_string(), params, pass, witness }
    }

    pub fn passed(check: &str, params: Value) -> Self {
        Self::new(check, params, true, None)
    }

    pub fn failed(check: &str, params: Value, witness: impl Into<String>) -> Self {
        Self::new(check, params, false, Some(witness.into()))
    }

    /// Pass unless `witness` is present.
    pub fn from_witness(check: &str, params: Value, witness: Option<String>) -> Self {
        Self::new(check, params, witness.is_none(), witness)
    }

    /// One line for text output.
    pub fn line(&self) -> String {
        let status = if self.pass { "PASS" } else { "FAIL" };
        match &self.witness {
            Some(w) => format!("{status} {} {} :: {w}", self.check, self.params),
            None => format!("{status} {} {}", self.check, self.params),
        }
    }
}
