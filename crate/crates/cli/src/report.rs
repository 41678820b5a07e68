use std::fmt::Write as _;

use curvecount::counts::{validate_dimensions, CheckStatus, CountError, CountProblem, DimensionReport};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Serialize, Serializer};

use crate::scenario::{ResolvedComponent, Scenario};

/// An exact integer in JSON output: a number when it fits in 64 bits,
/// otherwise its decimal string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Int(pub BigInt);

impl Serialize for Int {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self.0.to_i64() {
            Some(v) => s.serialize_i64(v),
            None => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int(BigInt::from(v))
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct RunOptions {
    /// Treat dimension-check failures as errors.
    pub strict: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentReport {
    pub label: String,
    pub copies: u64,
    pub multiplicity: u64,
    pub support_dim: u32,
    pub node_divisors: usize,
    /// Contribution of a single copy.
    pub each: Int,
    /// `copies · each`.
    pub contribution: Int,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub label: String,
    pub support_dim: u32,
    pub fiber_dim: Option<u32>,
    pub status: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub rank_v: Option<u32>,
    pub passed: bool,
    pub strict: bool,
    pub checks: Vec<CheckReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VariantReport {
    pub label: String,
    pub total: Int,
    pub expected: Option<Int>,
    pub pass: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub name: String,
    pub description: String,
    pub total: Int,
    pub components: Vec<ComponentReport>,
    pub validation: ValidationReport,
    pub expected: Option<Int>,
    /// `None` when the scenario records no expected value.
    pub pass: Option<bool>,
    pub golden: bool,
    pub variants: Vec<VariantReport>,
}

impl Report {
    /// Validation failed and the run was strict.
    pub fn strict_failure(&self) -> bool {
        self.validation.strict && !self.validation.passed
    }

    /// A golden scenario whose total disagrees with its expected value.
    pub fn golden_mismatch(&self) -> bool {
        self.golden && self.pass == Some(false)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scenario: {}", self.name);
        if !self.description.is_empty() {
            let _ = writeln!(out, "  {}", self.description);
        }
        let width = self
            .components
            .iter()
            .map(|c| c.label.chars().count())
            .chain([9])
            .max()
            .unwrap_or(9);
        let _ = writeln!(
            out,
            "  {:<width$}  {:>6}  {:>4}  {:>3}  {:>8}  {:>14}",
            "component", "copies", "mult", "dim", "divisors", "contribution"
        );
        for c in &self.components {
            let _ = writeln!(
                out,
                "  {:<width$}  {:>6}  {:>4}  {:>3}  {:>8}  {:>14}",
                c.label, c.copies, c.multiplicity, c.support_dim, c.node_divisors, c.contribution.0
            );
        }
        let _ = writeln!(out, "  {:<width$}  {:>43}", "total", self.total.0);
        if let (Some(e), Some(p)) = (&self.expected, self.pass) {
            let verdict = match (p, self.golden) {
                (true, _) => "pass",
                (false, true) => "FAIL",
                (false, false) => "differs (informational)",
            };
            let _ = writeln!(out, "  expected {}: {verdict}", e.0);
        }
        for v in &self.variants {
            let _ = write!(out, "  variant `{}`: total {}", v.label, v.total.0);
            if let (Some(e), Some(p)) = (&v.expected, v.pass) {
                let _ = write!(out, " (expected {}: {})", e.0, if p { "pass" } else { "differs" });
            }
            out.push('\n');
        }
        let _ = writeln!(out, "  {}", self.validation.summary());
        out
    }
}

impl ValidationReport {
    /// One line, e.g. `dimensions (rank V = 6): pass`.
    pub fn summary(&self) -> String {
        let status = match self.rank_v {
            None => "unchecked".to_string(),
            Some(_) if self.passed => "pass".to_string(),
            Some(_) => {
                let failed: Vec<&str> = self
                    .checks
                    .iter()
                    .filter(|c| c.status == "fail")
                    .map(|c| c.label.as_str())
                    .collect();
                format!("FAIL ({})", failed.join(", "))
            }
        };
        let rank = self.rank_v.map_or_else(|| "unknown".to_string(), |r| r.to_string());
        format!("dimensions (rank V = {rank}): {status}")
    }
}

fn check_reports(report: &DimensionReport) -> Vec<CheckReport> {
    report
        .checks
        .iter()
        .map(|c| CheckReport {
            label: c.label.clone(),
            support_dim: c.support_dim,
            fiber_dim: c.fiber_dim,
            status: c.status.to_string(),
        })
        .collect()
}

fn component_reports(records: &[ResolvedComponent]) -> Result<Vec<ComponentReport>, CountError> {
    records
        .iter()
        .map(|r| {
            let each = r.component.contribution()?;
            Ok(ComponentReport {
                label: r.component.label.clone(),
                copies: r.copies,
                multiplicity: r.component.multiplicity(),
                support_dim: r.component.support().dim(),
                node_divisors: r.component.node_divisors().len(),
                contribution: Int(&each * BigInt::from(r.copies)),
                each: Int(each),
            })
        })
        .collect()
}

fn total_of(components: &[ComponentReport]) -> BigInt {
    components.iter().map(|c| &c.contribution.0).sum()
}

/// Dimension checks, one per component record.
pub fn validate(scenario: &Scenario, options: RunOptions) -> ValidationReport {
    let per_record = CountProblem {
        components: scenario.components().iter().map(|r| r.component.clone()).collect(),
        rank_v: scenario.file().rank_v,
    };
    let dims = validate_dimensions(&per_record);
    ValidationReport {
        rank_v: dims.rank_v,
        passed: dims.checks.iter().all(|c| c.status != CheckStatus::Fail),
        strict: options.strict,
        checks: check_reports(&dims),
    }
}

/// Evaluates a scenario: per-record contributions, the total, dimension
/// checks (one per record), variants, and the comparison against the
/// expected value.
pub fn run(scenario: &Scenario, options: RunOptions) -> Result<Report, CountError> {
    let file = scenario.file();
    let components = component_reports(scenario.components())?;
    let total = total_of(&components);

    let validation = validate(scenario, options);

    let variants = scenario
        .variants()
        .iter()
        .zip(&file.variants)
        .map(|((label, records), record)| {
            let total = total_of(&component_reports(records)?);
            let expected = record.expected.map(BigInt::from);
            Ok(VariantReport {
                label: label.clone(),
                pass: expected.as_ref().map(|e| *e == total),
                expected: expected.map(Int),
                total: Int(total),
            })
        })
        .collect::<Result<Vec<_>, CountError>>()?;

    let expected = file.expected.map(BigInt::from);
    Ok(Report {
        name: file.name.clone(),
        description: file.description.clone(),
        pass: expected.as_ref().map(|e| *e == total),
        expected: expected.map(Int),
        total: Int(total),
        components,
        validation,
        golden: file.golden,
        variants,
    })
}
