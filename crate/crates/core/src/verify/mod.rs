//! Mechanical checks of the structural claims about power-graph spectra,
//! each producing a [`ClaimReport`] with a concrete witness on failure.

mod catalog;
mod claims;
mod scan;

use std::time::{Duration, Instant};

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::{Map, Value};

pub use catalog::{abelian_p_groups, partitions, pgroup_catalog};
pub use claims::{
    check_cyclic_algcon, check_cyclic_kappa_eq_mu, check_cyclic_radius_mult,
    check_cyclic_structure, check_dicyclic_bundle, check_pgroup_bundle,
};
pub use scan::{conjecture_report, scan_conjecture, ConjectureRow, ConjectureScan};

use crate::error::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail { witness: String },
    Inapplicable { reason: String },
}

impl Verdict {
    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail { .. } => "fail",
            Verdict::Inapplicable { .. } => "inapplicable",
        }
    }
}

/// Outcome of one claim at one parameter point.
#[derive(Debug, Clone)]
pub struct ClaimReport {
    pub claim: String,
    pub params: Map<String, Value>,
    pub verdict: Verdict,
    pub evidence: Map<String, Value>,
    /// Wall time; not serialized so reports stay byte-stable.
    pub elapsed: Duration,
}

impl Serialize for ClaimReport {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let witness = match &self.verdict {
            Verdict::Pass => None,
            Verdict::Fail { witness } => Some(witness.as_str()),
            Verdict::Inapplicable { reason } => Some(reason.as_str()),
        };
        let mut m = serializer.serialize_map(Some(5))?;
        m.serialize_entry("claim", &self.claim)?;
        m.serialize_entry("params", &self.params)?;
        m.serialize_entry("verdict", self.verdict.name())?;
        m.serialize_entry("witness", &witness)?;
        m.serialize_entry("evidence", &self.evidence)?;
        m.end()
    }
}

/// Accumulates requirements and evidence while a check runs.
pub(crate) struct Ledger {
    failures: Vec<String>,
    inapplicable: Option<String>,
    evidence: Map<String, Value>,
}

impl Ledger {
    fn new() -> Self {
        Ledger {
            failures: Vec::new(),
            inapplicable: None,
            evidence: Map::new(),
        }
    }

    pub(crate) fn require(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(witness());
        }
    }

    pub(crate) fn record(&mut self, key: &str, value: impl Serialize) {
        let v = serde_json::to_value(value).unwrap_or(Value::Null);
        self.evidence.insert(key.to_string(), v);
    }

    pub(crate) fn inapplicable(&mut self, reason: impl Into<String>) {
        self.inapplicable = Some(reason.into());
    }
}

/// Runs `body`, turning errors into failures with the error as witness.
pub(crate) fn run_claim(
    claim: &str,
    params: Value,
    body: impl FnOnce(&mut Ledger) -> Result<()>,
) -> ClaimReport {
    let start = Instant::now();
    let mut ledger = Ledger::new();
    if let Err(e) = body(&mut ledger) {
        ledger.failures.push(format!("error: {e}"));
    }
    let verdict = if !ledger.failures.is_empty() {
        Verdict::Fail {
            witness: ledger.failures.join("; "),
        }
    } else if let Some(reason) = ledger.inapplicable {
        Verdict::Inapplicable { reason }
    } else {
        Verdict::Pass
    };
    ClaimReport {
        claim: claim.to_string(),
        params: match params {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("value".into(), other);
                m
            }
        },
        verdict,
        evidence: ledger.evidence,
        elapsed: start.elapsed(),
    }
}

/// Identifiers accepted by [`run_suite`].
pub const CLAIM_IDS: &[&str] = &[
    "cyclic-algcon",
    "cyclic-radius-mult",
    "cyclic-kappa-mu",
    "cyclic-structure",
    "dicyclic",
    "pgroup",
    "conjecture",
];

/// Parameter ranges for a suite run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub cyclic_max: usize,
    pub dicyclic_max: usize,
    pub pgroup_max: usize,
    pub scan_max: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            cyclic_max: 300,
            dicyclic_max: 32,
            pgroup_max: 256,
            scan_max: 200,
        }
    }
}

/// Runs one claim family over its configured range, in parameter order.
pub fn run_claim_family(id: &str, config: &SuiteConfig) -> Option<Vec<ClaimReport>> {
    let cyclic = 2..=config.cyclic_max;
    let reports = match id {
        "cyclic-algcon" => cyclic.map(check_cyclic_algcon).collect(),
        "cyclic-radius-mult" => cyclic.map(check_cyclic_radius_mult).collect(),
        "cyclic-kappa-mu" => cyclic.map(check_cyclic_kappa_eq_mu).collect(),
        "cyclic-structure" => cyclic.map(check_cyclic_structure).collect(),
        "dicyclic" => (2..=config.dicyclic_max)
            .map(check_dicyclic_bundle)
            .collect(),
        "pgroup" => pgroup_catalog(config.pgroup_max)
            .iter()
            .map(check_pgroup_bundle)
            .collect(),
        "conjecture" => vec![conjecture_report(config.scan_max)],
        _ => return None,
    };
    Some(reports)
}

/// Every claim family in [`CLAIM_IDS`] order.
pub fn run_suite(config: &SuiteConfig) -> Vec<ClaimReport> {
    CLAIM_IDS
        .iter()
        .flat_map(|id| run_claim_family(id, config).expect("registered id"))
        .collect()
}
