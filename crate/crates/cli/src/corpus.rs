//! The bundled scenario corpus and batch evaluation.

use std::fmt::Write as _;
use std::path::Path;
use std::{fs, io, thread};

use serde::Serialize;

use crate::report::{run, Report, RunOptions};
use crate::scenario::parse_scenario;
use crate::ExitCode;

/// `(file name, JSON text)` for every scenario shipped with the binary.
pub const BUNDLED: &[(&str, &str)] = &[
    (
        "fermat_sym_cube.json",
        include_str!("../scenarios/fermat_sym_cube.json"),
    ),
    (
        "quintic_32_cubics.json",
        include_str!("../scenarios/quintic_32_cubics.json"),
    ),
    (
        "quintic_32_hyperplane.json",
        include_str!("../scenarios/quintic_32_hyperplane.json"),
    ),
    (
        "quintic_41_conics.json",
        include_str!("../scenarios/quintic_41_conics.json"),
    ),
    (
        "quintic_41_cubics.json",
        include_str!("../scenarios/quintic_41_cubics.json"),
    ),
    (
        "quintic_41_lines.json",
        include_str!("../scenarios/quintic_41_lines.json"),
    ),
    ("quintic_lines.json", include_str!("../scenarios/quintic_lines.json")),
];

pub fn bundled() -> Vec<(String, String)> {
    BUNDLED
        .iter()
        .map(|(name, text)| (name.to_string(), text.to_string()))
        .collect()
}

/// Bundled scenario text by file name, with or without the `.json` suffix.
pub fn bundled_scenario(name: &str) -> Option<&'static str> {
    BUNDLED
        .iter()
        .find(|(file, _)| *file == name || file.strip_suffix(".json") == Some(name))
        .map(|(_, text)| *text)
}

/// Every `*.json` file directly inside `dir`.
pub fn load_dir(dir: &Path) -> io::Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for entry in fs::read_dir(dir)? {
        let path = entry?.path();
        if path.extension().is_some_and(|e| e == "json") {
            let name = path.file_name().unwrap_or_default().to_string_lossy().into_owned();
            out.push((name, fs::read_to_string(&path)?));
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusEntry {
    pub file: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub report: Option<Report>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusOutcome {
    pub entries: Vec<CorpusEntry>,
}

impl CorpusOutcome {
    /// 3 on any golden mismatch, otherwise 1 for unreadable scenarios, then 2
    /// for strict validation failures.
    pub fn exit_code(&self) -> ExitCode {
        let reports = || self.entries.iter().filter_map(|e| e.report.as_ref());
        if reports().any(Report::golden_mismatch) {
            ExitCode::GoldenMismatch
        } else if self.entries.iter().any(|e| e.error.is_some()) {
            ExitCode::ParseError
        } else if reports().any(Report::strict_failure) {
            ExitCode::ValidationFailure
        } else {
            ExitCode::Success
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("corpus serializes")
    }

    pub fn to_table(&self) -> String {
        let width = self
            .entries
            .iter()
            .map(|e| e.report.as_ref().map_or(e.file.len(), |r| r.name.len()))
            .chain([8])
            .max()
            .unwrap_or(8);
        let mut out = String::new();
        let _ = writeln!(
            out,
            "{:<width$}  {:>10}  {:>10}  {:<7}  {:<10}  notes",
            "scenario", "total", "expected", "dims", "status"
        );
        for e in &self.entries {
            let Some(r) = &e.report else {
                let _ = writeln!(
                    out,
                    "{:<width$}  {:>10}  {:>10}  {:<7}  {:<10}  {}",
                    e.file,
                    "-",
                    "-",
                    "-",
                    "ERROR",
                    e.error.as_deref().unwrap_or_default()
                );
                continue;
            };
            let expected = r.expected.as_ref().map_or_else(|| "-".to_string(), |x| x.0.to_string());
            let status = match (r.pass, r.golden) {
                (None, _) => "no golden",
                (Some(true), true) => "pass",
                (Some(false), true) => "FAIL",
                (Some(_), false) => "info",
            };
            let dims = match (r.validation.rank_v, r.validation.passed) {
                (None, _) => "-",
                (Some(_), true) => "pass",
                (Some(_), false) => "FAIL",
            };
            let notes: Vec<String> = r
                .variants
                .iter()
                .map(|v| format!("{}: {}", v.label, v.total.0))
                .collect();
            let _ = writeln!(
                out,
                "{:<width$}  {:>10}  {:>10}  {:<7}  {:<10}  {}",
                r.name,
                r.total.0,
                expected,
                dims,
                status,
                notes.join("; ")
            );
        }
        out
    }
}

/// Parses and runs each scenario on its own thread; entries come back
/// sorted by scenario name.
pub fn run_corpus(scenarios: Vec<(String, String)>, options: RunOptions) -> CorpusOutcome {
    let mut entries: Vec<CorpusEntry> = thread::scope(|s| {
        let handles: Vec<_> = scenarios
            .iter()
            .map(|(file, text)| {
                s.spawn(move || {
                    let result = parse_scenario(text)
                        .map_err(|e| e.to_string())
                        .and_then(|sc| run(&sc, options).map_err(|e| e.to_string()));
                    match result {
                        Ok(report) => CorpusEntry {
                            file: file.clone(),
                            report: Some(report),
                            error: None,
                        },
                        Err(error) => CorpusEntry {
                            file: file.clone(),
                            report: None,
                            error: Some(error),
                        },
                    }
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("scenario evaluation panicked"))
            .collect()
    });
    entries.sort_by(|a, b| {
        let key = |e: &CorpusEntry| e.report.as_ref().map_or_else(|| e.file.clone(), |r| r.name.clone());
        key(a).cmp(&key(b)).then_with(|| a.file.cmp(&b.file))
    });
    CorpusOutcome { entries }
}
