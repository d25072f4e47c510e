//! The deterministic report format shared by every driver command:
//! {config, claims: [{id, reference, status, value, expected}], artifacts}.
//! Field order is fixed by the struct layout, maps are sorted, and no
//! timestamps appear, so identical runs serialize byte-identically.

use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Debug, Clone, Serialize, PartialEq, Eq)]
pub struct RunConfig {
    pub subcommand: String,
    pub args: BTreeMap<String, String>,
    pub seed: u64,
    pub budget_steps: u64,
    pub jet_cap: u32,
    pub primes: Vec<u64>,
    pub variant: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum ClaimStatus {
    Pass,
    Fail,
    Budget,
    Info,
}

/// One verifiable statement: what was computed, what was expected, how it
/// went. `reference` describes the mathematical claim being checked.
#[derive(Debug, Clone, Serialize)]
pub struct Claim {
    pub id: String,
    pub reference: String,
    pub status: ClaimStatus,
    pub value: serde_json::Value,
    pub expected: serde_json::Value,
}

impl Claim {
    pub fn checked<T: Serialize + PartialEq>(
        id: &str,
        reference: &str,
        value: T,
        expected: T,
    ) -> Claim {
        let status = if value == expected { ClaimStatus::Pass } else { ClaimStatus::Fail };
        Claim {
            id: id.to_string(),
            reference: reference.to_string(),
            status,
            value: serde_json::to_value(value).expect("serializable"),
            expected: serde_json::to_value(expected).expect("serializable"),
        }
    }

    pub fn info<T: Serialize>(id: &str, reference: &str, value: T) -> Claim {
        Claim {
            id: id.to_string(),
            reference: reference.to_string(),
            status: ClaimStatus::Info,
            value: serde_json::to_value(value).expect("serializable"),
            expected: serde_json::Value::Null,
        }
    }

    pub fn budget<T: Serialize>(id: &str, reference: &str, value: T) -> Claim {
        Claim {
            id: id.to_string(),
            reference: reference.to_string(),
            status: ClaimStatus::Budget,
            value: serde_json::to_value(value).expect("serializable"),
            expected: serde_json::Value::Null,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub config: RunConfig,
    pub versions: BTreeMap<String, String>,
    pub claims: Vec<Claim>,
    pub artifacts: serde_json::Value,
}

impl Report {
    pub fn new(config: RunConfig) -> Report {
        let mut versions = BTreeMap::new();
        versions.insert("cuboids-core".to_string(), env!("CARGO_PKG_VERSION").to_string());
        Report { config, versions, claims: Vec::new(), artifacts: serde_json::Value::Null }
    }

    pub fn push(&mut self, claim: Claim) {
        self.claims.push(claim);
    }

    pub fn any_failed(&self) -> bool {
        self.claims.iter().any(|c| c.status == ClaimStatus::Fail)
    }

    pub fn any_budget(&self) -> bool {
        self.claims.iter().any(|c| c.status == ClaimStatus::Budget)
    }

    /// Deterministic pretty JSON (stable field order, sorted maps, newline
    /// terminated).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable report");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config() -> RunConfig {
        RunConfig {
            subcommand: "test".into(),
            args: BTreeMap::new(),
            seed: 42,
            budget_steps: 1000,
            jet_cap: 40,
            primes: vec![13, 17],
            variant: "as-printed".into(),
        }
    }

    #[test]
    fn byte_identical_serialization() {
        let mk = || {
            let mut r = Report::new(config());
            r.push(Claim::checked("a", "two equals two", 2u32, 2u32));
            r.push(Claim::info("b", "context", vec![1, 2, 3]));
            r.to_json()
        };
        assert_eq!(mk(), mk());
    }

    #[test]
    fn statuses() {
        let mut r = Report::new(config());
        r.push(Claim::checked("x", "mismatch", 1u32, 2u32));
        assert!(r.any_failed());
        assert!(!r.any_budget());
    }
}
