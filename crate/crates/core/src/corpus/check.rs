use serde::{Deserialize, Serialize};
use serde_json::Value;
use std::collections::BTreeMap;

use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", content = "reason", rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped(String),
}

/// Outcome of one property check on one semigroup.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PropertyCheckResult {
    pub property_id: String,
    pub generators: Vec<i64>,
    #[serde(flatten)]
    pub status: CheckStatus,
    pub payload: BTreeMap<String, Value>,
}

impl PropertyCheckResult {
    pub fn is_pass(&self) -> bool {
        self.status == CheckStatus::Pass
    }

    pub fn is_fail(&self) -> bool {
        self.status == CheckStatus::Fail
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, CheckStatus::Skipped(_))
    }
}

/// Accumulates the quantities a check looks at and the clauses it violated.
/// A fail payload always carries every recorded quantity plus a
/// `violations` list naming the broken clauses.
pub struct CheckBuilder {
    property_id: String,
    generators: Vec<i64>,
    payload: BTreeMap<String, Value>,
    violations: Vec<String>,
}

impl CheckBuilder {
    pub fn new(property_id: &str, s: &NumericalSemigroup) -> Self {
        CheckBuilder {
            property_id: property_id.to_string(),
            generators: s.generators().to_vec(),
            payload: BTreeMap::new(),
            violations: Vec::new(),
        }
    }

    pub fn record(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        let v = serde_json::to_value(value).expect("payload values serialize");
        self.payload.insert(key.to_string(), v);
        self
    }

    pub fn expect(&mut self, holds: bool, clause: impl Into<String>) -> &mut Self {
        if !holds {
            self.violations.push(clause.into());
        }
        self
    }

    pub fn skip(self, reason: impl Into<String>) -> PropertyCheckResult {
        PropertyCheckResult {
            property_id: self.property_id,
            generators: self.generators,
            status: CheckStatus::Skipped(reason.into()),
            payload: self.payload,
        }
    }

    pub fn finish(mut self) -> PropertyCheckResult {
        let status = if self.violations.is_empty() {
            CheckStatus::Pass
        } else {
            self.payload
                .insert("violations".into(), Value::from(self.violations.clone()));
            CheckStatus::Fail
        };
        PropertyCheckResult {
            property_id: self.property_id,
            generators: self.generators,
            status,
            payload: self.payload,
        }
    }
}
