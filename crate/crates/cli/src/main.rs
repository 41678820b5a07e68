use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::{fs, io};

use clap::{Args, Parser, Subcommand};
use curvecount::MonomialIdeal2;
use curvecount_cli::expr::parse_ideal;
use curvecount_cli::{bundled, bundled_scenario, parse_scenario, run, run_corpus, ExitCode, RunOptions, Scenario};
use serde_json::json;

/// Virtual curve counts from normal-cone data.
#[derive(Parser)]
#[command(name = "curvecount", version)]
struct Cli {
    #[command(flatten)]
    flags: Flags,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct Flags {
    /// Fail (exit 2) when a dimension check fails.
    #[arg(long, global = true)]
    strict: bool,
    /// Emit a machine-readable JSON report.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing on success; only the exit status matters.
    #[arg(long, short, global = true)]
    quiet: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one scenario file (`-` reads standard input; a bundled
    /// scenario name also works).
    Eval { file: String },
    /// Evaluate every bundled scenario, or every `*.json` in a directory.
    Corpus {
        #[arg(long)]
        dir: Option<PathBuf>,
    },
    /// Parse and validate a scenario without evaluating it.
    Check {
        file: String,
        /// Print the canonical form of the scenario.
        #[arg(long)]
        canonical: bool,
    },
    /// Monomial ideals in x, y.
    #[command(subcommand)]
    Ideal(IdealCommand),
}

#[derive(Subcommand)]
enum IdealCommand {
    /// Irreducible decomposition.
    Decompose { expr: String },
    /// Intersection of all given ideals.
    Intersect {
        #[arg(required = true)]
        exprs: Vec<String>,
    },
    /// Number of standard monomials.
    Colength { expr: String },
    /// Whether two expressions define the same ideal.
    Equal { left: String, right: String },
}

fn main() -> std::process::ExitCode {
    let cli = Cli::parse();
    let flags = cli.flags;
    let code = match cli.command {
        Command::Eval { file } => eval(&file, flags),
        Command::Corpus { dir } => corpus(dir.as_deref(), flags),
        Command::Check { file, canonical } => check(&file, canonical, flags),
        Command::Ideal(cmd) => ideal(cmd, flags),
    };
    code.into()
}

fn read_source(file: &str) -> io::Result<String> {
    if file == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text)?;
        return Ok(text);
    }
    let path = Path::new(file);
    match fs::read_to_string(path) {
        Err(e) if e.kind() == io::ErrorKind::NotFound => bundled_scenario(file).map(str::to_string).ok_or(e),
        other => other,
    }
}

fn load(file: &str) -> Result<Scenario, ExitCode> {
    let text = read_source(file).map_err(|e| {
        eprintln!("error: cannot read {file}: {e}");
        ExitCode::ParseError
    })?;
    parse_scenario(&text).map_err(|e| {
        eprintln!("error: {file}: {e}");
        ExitCode::ParseError
    })
}

fn eval(file: &str, flags: Flags) -> ExitCode {
    let scenario = match load(file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let report = match run(&scenario, RunOptions { strict: flags.strict }) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {file}: {e}");
            return ExitCode::ParseError;
        }
    };
    if !flags.quiet {
        if flags.json {
            println!("{}", report.to_json());
        } else {
            print!("{}", report.to_table());
        }
    }
    if report.strict_failure() {
        ExitCode::ValidationFailure
    } else {
        ExitCode::Success
    }
}

fn corpus(dir: Option<&Path>, flags: Flags) -> ExitCode {
    let scenarios = match dir {
        None => bundled(),
        Some(d) => match curvecount_cli::corpus::load_dir(d) {
            Ok(s) => s,
            Err(e) => {
                eprintln!("error: cannot read {}: {e}", d.display());
                return ExitCode::ParseError;
            }
        },
    };
    let outcome = run_corpus(scenarios, RunOptions { strict: flags.strict });
    if !flags.quiet {
        if flags.json {
            println!("{}", outcome.to_json());
        } else {
            print!("{}", outcome.to_table());
        }
    }
    for e in &outcome.entries {
        if let Some(err) = &e.error {
            eprintln!("error: {}: {err}", e.file);
        }
    }
    outcome.exit_code()
}

fn check(file: &str, canonical: bool, flags: Flags) -> ExitCode {
    let scenario = match load(file) {
        Ok(s) => s,
        Err(code) => return code,
    };
    let summary = curvecount_cli::report::validate(&scenario, RunOptions { strict: flags.strict });
    if !flags.quiet {
        if canonical {
            print!("{}", scenario.render());
        } else if flags.json {
            println!(
                "{}",
                serde_json::to_string_pretty(&summary).expect("summary serializes")
            );
        } else {
            println!(
                "ok: {} ({} component records, {} components)",
                scenario.name(),
                scenario.components().len(),
                scenario.problem().components.len()
            );
            println!("{}", summary.summary());
        }
    }
    if flags.strict && !summary.passed {
        ExitCode::ValidationFailure
    } else {
        ExitCode::Success
    }
}

fn parse_or_report(text: &str) -> Result<MonomialIdeal2, ExitCode> {
    parse_ideal(text).map_err(|e| {
        eprintln!("error: cannot parse ideal `{text}`: {e}");
        ExitCode::ParseError
    })
}

fn ideal(cmd: IdealCommand, flags: Flags) -> ExitCode {
    let result = match cmd {
        IdealCommand::Decompose { expr } => parse_or_report(&expr).and_then(|i| match i.irreducible_decomposition() {
            Ok(parts) => {
                let rendered: Vec<String> = parts.iter().map(ToString::to_string).collect();
                let text = format!("{i} = {}", rendered.join(" & "));
                Ok((json!({"ideal": i.to_string(), "components": rendered}), text))
            }
            Err(e) => {
                eprintln!("error: {e}");
                Err(ExitCode::ParseError)
            }
        }),
        IdealCommand::Intersect { exprs } => exprs
            .iter()
            .map(|e| parse_or_report(e))
            .collect::<Result<Vec<_>, _>>()
            .map(|ideals| {
                let meet = ideals.iter().fold(MonomialIdeal2::unit(), |acc, i| acc.intersect(i));
                (json!({"ideal": meet.to_string()}), meet.to_string())
            }),
        IdealCommand::Colength { expr } => parse_or_report(&expr).map(|i| {
            let c = i.colength();
            let value = match c {
                curvecount::Colength::Finite(n) => json!(n),
                curvecount::Colength::Infinite => json!("infinite"),
            };
            (json!({"ideal": i.to_string(), "colength": value}), c.to_string())
        }),
        IdealCommand::Equal { left, right } => parse_or_report(&left).and_then(|l| {
            parse_or_report(&right).map(|r| {
                let eq = l == r;
                (
                    json!({"left": l.to_string(), "right": r.to_string(), "equal": eq}),
                    eq.to_string(),
                )
            })
        }),
    };
    match result {
        Ok((value, text)) => {
            if !flags.quiet {
                if flags.json {
                    println!("{}", serde_json::to_string_pretty(&value).expect("json serializes"));
                } else {
                    println!("{text}");
                }
            }
            ExitCode::Success
        }
        Err(code) => code,
    }
}
