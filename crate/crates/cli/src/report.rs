use std::fmt;
use std::time::Duration;

use serde::Serialize;
use treecount_core::{BigCount, GraphSummary, Method};

/// What `family` and `count` print.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountReport {
    pub vertices: usize,
    pub support_edges: usize,
    pub total_multiplicity: String,
    pub method: String,
    pub count: String,
    pub elapsed_ms: u128,
}

impl CountReport {
    pub fn new(summary: &GraphSummary, method: Method, count: &BigCount, elapsed: Duration) -> Self {
        CountReport {
            vertices: summary.vertices,
            support_edges: summary.support_edges,
            total_multiplicity: summary.total_multiplicity.to_string(),
            method: method.name().to_string(),
            count: count.to_string(),
            elapsed_ms: elapsed.as_millis(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for CountReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices: {}", self.vertices)?;
        writeln!(f, "support edges: {}", self.support_edges)?;
        writeln!(f, "total multiplicity: {}", self.total_multiplicity)?;
        writeln!(f, "method: {}", self.method)?;
        writeln!(f, "count: {}", self.count)?;
        write!(f, "elapsed: {} ms", self.elapsed_ms)
    }
}
