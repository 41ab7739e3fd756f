use std::fmt::Write;

use serde::Serialize;
use serde_json::Value;

use crate::latgeom::SaturationReport;
use crate::rootsys::RootDatum;
use crate::weylgroup::Group;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Self::Pass
        } else {
            Self::Fail
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Pass => "pass",
            Self::Fail => "fail",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub parameters: Value,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Value>,
}

impl CheckResult {
    pub fn pass(name: impl Into<String>, parameters: Value, certificate: Option<Value>) -> Self {
        Self { name: name.into(), parameters, verdict: Verdict::Pass, certificate, counterexample: None }
    }

    pub fn fail(name: impl Into<String>, parameters: Value, counterexample: Value) -> Self {
        Self { name: name.into(), parameters, verdict: Verdict::Fail, certificate: None, counterexample: Some(counterexample) }
    }

    /// Pass with `certificate`, or fail with `counterexample`.
    pub fn decide(name: impl Into<String>, parameters: Value, counterexample: Option<Value>, certificate: Option<Value>) -> Self {
        match counterexample {
            None => Self::pass(name, parameters, certificate),
            Some(c) => Self::fail(name, parameters, c),
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupSummary {
    pub label: Option<String>,
    pub rank: usize,
    pub dim: usize,
    pub order: usize,
}

impl GroupSummary {
    pub fn new(datum: &RootDatum, group: &Group) -> Self {
        Self { label: datum.label().map(str::to_string), rank: datum.rank(), dim: datum.dim(), order: group.order() }
    }
}

/// One row of a graded-dimension table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedCount {
    pub t: u64,
    pub total_points: usize,
    pub orbit_count: usize,
    pub domain_slice_count: usize,
    pub invariant_span: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub scenario: String,
    pub group: Option<GroupSummary>,
    pub object: String,
    pub seed: Option<u64>,
    pub checks: Vec<CheckResult>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub graded_counts: Vec<GradedCount>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub saturation: Option<SaturationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub full_dimensional: Option<bool>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn new(scenario: impl Into<String>, object: impl Into<String>) -> Self {
        Self {
            scenario: scenario.into(),
            group: None,
            object: object.into(),
            seed: None,
            checks: Vec::new(),
            graded_counts: Vec::new(),
            saturation: None,
            full_dimensional: None,
            elapsed_ms: 0,
        }
    }

    pub fn push(&mut self, check: CheckResult) {
        self.checks.push(check);
    }

    pub fn extend(&mut self, checks: impl IntoIterator<Item = CheckResult>) {
        self.checks.extend(checks);
    }

    /// Sorts checks by name (stable, so equal names keep insertion order).
    pub fn finalize(mut self, started: std::time::Instant) -> Self {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
        self.elapsed_ms = started.elapsed().as_millis();
        self
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.passed())
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scenario: {}", self.scenario);
        if let Some(g) = &self.group {
            let _ = writeln!(
                out,
                "group: {} (rank {}, dim {}, |W| = {})",
                g.label.as_deref().unwrap_or("custom"),
                g.rank,
                g.dim,
                g.order
            );
        }
        let _ = writeln!(out, "object: {}", self.object);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "seed: {seed}");
        }
        if let Some(s) = &self.saturation {
            let _ = writeln!(
                out,
                "saturation: {} (bound {}, {} points{})",
                if s.saturated { "ok" } else { "FAILED" },
                s.bound,
                s.points_checked,
                if s.by_construction { ", by construction" } else { "" }
            );
        }
        if let Some(f) = self.full_dimensional {
            let _ = writeln!(out, "full-dimensional: {f}");
        }
        let width = self.checks.iter().map(|c| c.name.chars().count()).max().unwrap_or(5).max(5);
        let _ = writeln!(out, "{:<width$}  verdict  detail", "check");
        for c in &self.checks {
            let detail = match (&c.counterexample, &c.certificate) {
                (Some(x), _) => format!("counterexample: {x}"),
                (None, Some(x)) => compact(x),
                (None, None) => String::new(),
            };
            let _ = writeln!(out, "{:<width$}  {:<7}  {}", c.name, c.verdict.as_str(), detail);
        }
        if !self.graded_counts.is_empty() {
            let _ = writeln!(out);
            out.push_str(&self.graded_counts_csv());
        }
        let passed = self.checks.iter().filter(|c| c.passed()).count();
        let _ = writeln!(out, "{passed}/{} checks passed in {} ms", self.checks.len(), self.elapsed_ms);
        out
    }

    pub fn graded_counts_csv(&self) -> String {
        let mut out = String::from("t,total_points,orbit_count,domain_slice_count\n");
        for r in &self.graded_counts {
            let _ = writeln!(out, "{},{},{},{}", r.t, r.total_points, r.orbit_count, r.domain_slice_count);
        }
        out
    }
}

fn compact(v: &Value) -> String {
    let s = v.to_string();
    if s.chars().count() > 100 {
        let cut: String = s.chars().take(97).collect();
        format!("{cut}...")
    } else {
        s
    }
}
