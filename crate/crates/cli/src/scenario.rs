//! JSON scenario files.
//!
//! A scenario describes the cone components over one family of curves. The
//! on-disk form is [`ScenarioFile`]; [`parse_scenario`] checks it against the
//! schema and resolves every class into a validated [`Scenario`].

use std::collections::BTreeMap;

use curvecount::chow::{ChowClass, ChowContext, Generator, Monomial};
use curvecount::counts::{ConeComponent, CountProblem, Support};
use curvecount::ChernPolynomial;
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const SCHEMA_VERSION: &str = "v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScenarioError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error at `{path}`: {message}")]
    Schema { path: String, message: String },
    #[error("invalid value at `{path}`: {message}")]
    Validation { path: String, message: String },
}

fn invalid(path: impl Into<String>, message: impl ToString) -> ScenarioError {
    ScenarioError::Validation {
        path: path.into(),
        message: message.to_string(),
    }
}

/// Monomial (`"1"`, `"h^2"`, `"a*b"`) to integer coefficient.
pub type ClassRecord = BTreeMap<String, i64>;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScenarioFile {
    pub version: String,
    pub name: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rank_v: Option<u32>,
    pub components: Vec<ComponentRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<i64>,
    /// Informational scenarios are reported but never fail a corpus run.
    #[serde(default = "default_true", skip_serializing_if = "is_true")]
    pub golden: bool,
    /// Alternative component lists evaluated side by side with the main one.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub variants: Vec<VariantRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VariantRecord {
    pub label: String,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub description: String,
    pub components: Vec<ComponentRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub expected: Option<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComponentRecord {
    pub label: String,
    pub support: SupportRecord,
    pub multiplicity: u64,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub canonical_twist: ClassRecord,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub node_divisors: Vec<DivisorRecord>,
    /// Number of identical components this record stands for.
    #[serde(default = "default_one", skip_serializing_if = "is_one")]
    pub count: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum SupportRecord {
    ProjectiveSpace {
        n: u32,
    },
    Abstract {
        dim: u32,
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        generators: Vec<GeneratorRecord>,
        integration_table: ClassRecord,
        /// `c_1, …, c_dim` of the cotangent bundle; missing tail entries are zero.
        #[serde(default, skip_serializing_if = "Vec::is_empty")]
        cotangent_chern: Vec<ClassRecord>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GeneratorRecord {
    pub name: String,
    pub degree: u32,
}

/// A divisor class, or one class repeated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum DivisorRecord {
    Repeated { class: ClassRecord, repeat: u32 },
    Single(ClassRecord),
}

fn default_true() -> bool {
    true
}

fn is_true(b: &bool) -> bool {
    *b
}

fn default_one() -> u64 {
    1
}

fn is_one(n: &u64) -> bool {
    *n == 1
}

/// A component together with how many identical copies it stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedComponent {
    pub component: ConeComponent,
    pub copies: u64,
}

/// A parsed, schema-checked scenario with every class resolved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Scenario {
    file: ScenarioFile,
    components: Vec<ResolvedComponent>,
    variants: Vec<(String, Vec<ResolvedComponent>)>,
}

impl Scenario {
    pub fn from_file(file: ScenarioFile) -> Result<Self, ScenarioError> {
        if file.version != SCHEMA_VERSION {
            return Err(invalid(
                "version",
                format!(
                    "unsupported schema version `{}`, expected `{SCHEMA_VERSION}`",
                    file.version
                ),
            ));
        }
        if file.name.trim().is_empty() {
            return Err(invalid("name", "scenario name must not be empty"));
        }
        let components = resolve_components(&file.components, "components")?;
        let variants = file
            .variants
            .iter()
            .enumerate()
            .map(|(i, v)| {
                let comps = resolve_components(&v.components, &format!("variants[{i}].components"))?;
                Ok((v.label.clone(), comps))
            })
            .collect::<Result<_, ScenarioError>>()?;
        Ok(Scenario {
            file,
            components,
            variants,
        })
    }

    pub fn file(&self) -> &ScenarioFile {
        &self.file
    }

    pub fn name(&self) -> &str {
        &self.file.name
    }

    pub fn components(&self) -> &[ResolvedComponent] {
        &self.components
    }

    pub fn variants(&self) -> &[(String, Vec<ResolvedComponent>)] {
        &self.variants
    }

    /// The count problem with every replicated record expanded.
    pub fn problem(&self) -> CountProblem {
        expand(&self.components, self.file.rank_v)
    }

    pub fn variant_problem(&self, index: usize) -> CountProblem {
        expand(&self.variants[index].1, self.file.rank_v)
    }

    /// Canonical JSON text: see [`canonicalize`].
    pub fn render(&self) -> String {
        render_scenario(&self.file)
    }
}

fn expand(components: &[ResolvedComponent], rank_v: Option<u32>) -> CountProblem {
    let comps = components
        .iter()
        .flat_map(|r| std::iter::repeat_n(r.component.clone(), r.copies as usize))
        .collect();
    CountProblem {
        components: comps,
        rank_v,
    }
}

fn resolve_components(records: &[ComponentRecord], path: &str) -> Result<Vec<ResolvedComponent>, ScenarioError> {
    records
        .iter()
        .enumerate()
        .map(|(i, r)| resolve_component(r, &format!("{path}[{i}]")))
        .collect()
}

fn resolve_component(record: &ComponentRecord, path: &str) -> Result<ResolvedComponent, ScenarioError> {
    if record.multiplicity == 0 {
        return Err(invalid(
            format!("{path}.multiplicity"),
            "multiplicity must be at least 1",
        ));
    }
    if record.count == 0 {
        return Err(invalid(format!("{path}.count"), "replication count must be at least 1"));
    }
    let support = resolve_support(&record.support, &format!("{path}.support"))?;
    let ctx = support.context().clone();
    let twist = divisor_class(&ctx, &record.canonical_twist, &format!("{path}.canonical_twist"))?;
    let mut divisors = Vec::new();
    for (i, d) in record.node_divisors.iter().enumerate() {
        let dpath = format!("{path}.node_divisors[{i}]");
        let (class, repeat) = match d {
            DivisorRecord::Single(c) => (c, 1),
            DivisorRecord::Repeated { class, repeat } => (class, *repeat),
        };
        if repeat == 0 {
            return Err(invalid(format!("{dpath}.repeat"), "repeat must be at least 1"));
        }
        let class = divisor_class(&ctx, class, &dpath)?;
        divisors.extend(std::iter::repeat_n(class, repeat as usize));
    }
    let component = ConeComponent::new(record.label.clone(), support, record.multiplicity)
        .and_then(|c| c.with_canonical_twist(twist))
        .and_then(|c| c.with_node_divisors(divisors))
        .map_err(|e| invalid(path, e))?;
    Ok(ResolvedComponent {
        component,
        copies: record.count,
    })
}

fn resolve_support(record: &SupportRecord, path: &str) -> Result<Support, ScenarioError> {
    match record {
        SupportRecord::ProjectiveSpace { n } => Ok(Support::projective_space(*n)),
        SupportRecord::Abstract {
            dim,
            generators,
            integration_table,
            cotangent_chern,
        } => {
            let gens: Vec<Generator> = generators.iter().map(|g| Generator::new(&g.name, g.degree)).collect();
            // resolve table keys against a scratch context with an empty table
            let names = ChowContext::abstract_variety(0, gens.clone(), [(Monomial::one(gens.len()), BigInt::from(1))])
                .map_err(|e| invalid(format!("{path}.generators"), e))?;
            let mut table = Vec::new();
            for (key, value) in integration_table {
                let m = parse_monomial(&names, key)
                    .map_err(|msg| invalid(format!("{path}.integration_table.{key}"), msg))?;
                table.push((m, BigInt::from(*value)));
            }
            let ctx = ChowContext::abstract_variety(*dim, gens, table)
                .map_err(|e| invalid(format!("{path}.integration_table"), e))?;
            if cotangent_chern.len() > *dim as usize {
                return Err(invalid(
                    format!("{path}.cotangent_chern"),
                    format!(
                        "{} Chern classes given for a {dim}-dimensional support",
                        cotangent_chern.len()
                    ),
                ));
            }
            if cotangent_chern.is_empty() {
                return Ok(Support::new(ctx));
            }
            let mut total = ctx.one();
            for (i, c) in cotangent_chern.iter().enumerate() {
                let cpath = format!("{path}.cotangent_chern[{i}]");
                let class = class_from_record(&ctx, c, &cpath)?;
                let degree = i as u32 + 1;
                if !class.is_homogeneous(degree) {
                    return Err(invalid(
                        cpath,
                        format!("c_{degree} must be homogeneous of degree {degree}"),
                    ));
                }
                total = total.add(&class).expect("same context");
            }
            let cotangent =
                ChernPolynomial::new(*dim, total).map_err(|e| invalid(format!("{path}.cotangent_chern"), e))?;
            Support::with_cotangent(ctx, cotangent).map_err(|e| invalid(format!("{path}.cotangent_chern"), e))
        }
    }
}

fn divisor_class(ctx: &ChowContext, record: &ClassRecord, path: &str) -> Result<ChowClass, ScenarioError> {
    let class = class_from_record(ctx, record, path)?;
    if !class.is_homogeneous(1) {
        return Err(invalid(path, format!("`{class}` is not a divisor class (degree 1)")));
    }
    Ok(class)
}

pub fn class_from_record(ctx: &ChowContext, record: &ClassRecord, path: &str) -> Result<ChowClass, ScenarioError> {
    let mut terms = Vec::with_capacity(record.len());
    for (key, coeff) in record {
        let m = parse_monomial(ctx, key).map_err(|msg| invalid(format!("{path}.{key}"), msg))?;
        if ctx.monomial_degree(&m) > ctx.dim() {
            return Err(invalid(
                format!("{path}.{key}"),
                format!("monomial degree exceeds dimension {}", ctx.dim()),
            ));
        }
        terms.push((m, BigInt::from(*coeff)));
    }
    Ok(ctx.class_from_terms(terms).expect("monomials built in this context"))
}

/// Parses `1`, `h`, `a^2*b` against the generators of `ctx`.
pub fn parse_monomial(ctx: &ChowContext, text: &str) -> Result<Monomial, String> {
    let text = text.trim();
    if text == "1" {
        return Ok(Monomial::one(ctx.generators().len()));
    }
    let mut powers = Vec::new();
    for factor in text.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((n, e)) => {
                let e: u32 = e.trim().parse().map_err(|_| format!("bad exponent in `{factor}`"))?;
                (n.trim(), e)
            }
            None => (factor, 1),
        };
        if name.is_empty() {
            return Err(format!("empty factor in monomial `{text}`"));
        }
        powers.push((name, exp));
    }
    ctx.monomial_from_powers(powers).map_err(|e| e.to_string())
}

/// Parses and validates scenario JSON.
pub fn parse_scenario(text: &str) -> Result<Scenario, ScenarioError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let file: ScenarioFile = match serde_path_to_error::deserialize(&mut de) {
        Ok(f) => f,
        Err(e) => {
            let path = e.path().to_string();
            let inner = e.into_inner();
            return Err(classify(inner, path));
        }
    };
    if let Err(e) = de.end() {
        return Err(classify(e, String::new()));
    }
    Scenario::from_file(file)
}

fn classify(e: serde_json::Error, path: String) -> ScenarioError {
    use serde_json::error::Category;
    match e.classify() {
        Category::Data => ScenarioError::Schema {
            path,
            message: e.to_string(),
        },
        Category::Syntax | Category::Eof | Category::Io => ScenarioError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        },
    }
}

/// Canonical form: zero coefficients dropped, runs of equal node divisors
/// merged into one repeated entry, single-entry repeats unwrapped.
pub fn canonicalize(file: &ScenarioFile) -> ScenarioFile {
    let mut out = file.clone();
    for c in out
        .components
        .iter_mut()
        .chain(out.variants.iter_mut().flat_map(|v| v.components.iter_mut()))
    {
        canonicalize_component(c);
    }
    out
}

fn strip_zeros(record: &ClassRecord) -> ClassRecord {
    record
        .iter()
        .filter(|(_, c)| **c != 0)
        .map(|(k, c)| (k.clone(), *c))
        .collect()
}

fn canonicalize_component(c: &mut ComponentRecord) {
    c.canonical_twist = strip_zeros(&c.canonical_twist);
    if let SupportRecord::Abstract {
        integration_table,
        cotangent_chern,
        ..
    } = &mut c.support
    {
        *integration_table = strip_zeros(integration_table);
        *cotangent_chern = cotangent_chern.iter().map(strip_zeros).collect();
        while cotangent_chern.last().is_some_and(BTreeMap::is_empty) {
            cotangent_chern.pop();
        }
    }
    let mut runs: Vec<(ClassRecord, u32)> = Vec::new();
    for d in &c.node_divisors {
        let (class, repeat) = match d {
            DivisorRecord::Single(cl) => (strip_zeros(cl), 1),
            DivisorRecord::Repeated { class, repeat } => (strip_zeros(class), *repeat),
        };
        match runs.last_mut() {
            Some((last, n)) if *last == class => *n += repeat,
            _ => runs.push((class, repeat)),
        }
    }
    c.node_divisors = runs
        .into_iter()
        .map(|(class, repeat)| {
            if repeat == 1 {
                DivisorRecord::Single(class)
            } else {
                DivisorRecord::Repeated { class, repeat }
            }
        })
        .collect();
}

pub fn render_scenario(file: &ScenarioFile) -> String {
    let mut text = serde_json::to_string_pretty(&canonicalize(file)).expect("scenario serializes");
    text.push('\n');
    text
}
