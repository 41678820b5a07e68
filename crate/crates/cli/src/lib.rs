//! Scenario files, reports and the bundled corpus behind the `curvecount`
//! command.

pub mod corpus;
pub mod expr;
pub mod report;
pub mod scenario;

pub use corpus::{bundled, bundled_scenario, run_corpus, CorpusOutcome};
pub use report::{run, Report, RunOptions};
pub use scenario::{parse_scenario, render_scenario, Scenario, ScenarioError, ScenarioFile};

/// Process exit status of the command-line driver.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Success = 0,
    ParseError = 1,
    ValidationFailure = 2,
    GoldenMismatch = 3,
}

impl From<ExitCode> for std::process::ExitCode {
    fn from(code: ExitCode) -> Self {
        std::process::ExitCode::from(code as u8)
    }
}
