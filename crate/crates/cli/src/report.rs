//! The JSON document written by every reporting subcommand.
//!
//! Field order is fixed by struct declaration order, so identical runs give
//! byte-identical output once timing fields are suppressed.

use std::collections::BTreeMap;
use std::time::{Instant, SystemTime, UNIX_EPOCH};

use serde::Serialize;
use sylowfact_core::{
    FactorizationSummary, GroupTable, NilpotencyReport, Permutation, PropertyAReport,
    TheoremVerdict, TupleReport,
};

pub const TOOL: &str = "sylowfact";

#[derive(Debug, Serialize)]
pub struct RunReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timestamp_unix: Option<u64>,
    pub groups: Vec<GroupReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub summary: Option<CatalogSummary>,
}

impl RunReport {
    pub fn new(command: impl Into<String>, timed: bool) -> Self {
        RunReport {
            tool: TOOL,
            version: env!("CARGO_PKG_VERSION"),
            command: command.into(),
            timestamp_unix: timed.then(|| {
                SystemTime::now()
                    .duration_since(UNIX_EPOCH)
                    .map_or(0, |d| d.as_secs())
            }),
            groups: Vec::new(),
            summary: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Serialize)]
pub struct SubgroupListing {
    pub order: usize,
    pub generators: Vec<Permutation>,
}

#[derive(Debug, Serialize)]
pub struct SylowReport {
    pub prime: u64,
    pub order: usize,
    /// Number of Sylow subgroups; present with `--all`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub count: Option<usize>,
    pub subgroups: Vec<SubgroupListing>,
}

#[derive(Debug, Serialize)]
pub struct GroupReport {
    pub name: String,
    pub degree: usize,
    pub order: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub property_a: Option<PropertyAReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub property_a_tuples: Option<TupleReport>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub nilpotency: Vec<NilpotencyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub verdict: Option<TheoremVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sylow: Option<SylowReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub factorization: Option<FactorizationSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<BTreeMap<&'static str, f64>>,
}

impl GroupReport {
    pub fn new(name: &str, g: &GroupTable, timed: bool) -> Self {
        GroupReport {
            name: name.to_string(),
            degree: g.degree(),
            order: g.order(),
            property_a: None,
            property_a_tuples: None,
            nilpotency: Vec::new(),
            verdict: None,
            sylow: None,
            factorization: None,
            wall_time_ms: timed.then(BTreeMap::new),
        }
    }

    /// Runs `f`, recording its wall time under `label` when timing is on.
    pub fn timed<T>(&mut self, label: &'static str, f: impl FnOnce() -> T) -> T {
        let start = Instant::now();
        let out = f();
        if let Some(times) = &mut self.wall_time_ms {
            let ms = start.elapsed().as_secs_f64() * 1e3;
            times.insert(label, (ms * 1e3).round() / 1e3);
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct CatalogSummary {
    pub groups: usize,
    pub consistent: usize,
    pub property_a_holds: usize,
    pub nilpotent: usize,
    pub inconsistent: Vec<String>,
    pub all_consistent: bool,
}
