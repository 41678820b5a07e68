//! Truncated graded rings with an integration map.
//!
//! A [`ChowContext`] presents the Chow ring of a smooth base variety: either
//! projective space `P^n`, whose ring is `Z[h]/(h^{n+1})`, or an abstract
//! variety described by a set of graded generators and an integration table
//! on the top-degree monomials. A [`ChowClass`] is an exact integer linear
//! combination of monomials in one context. Every product is truncated above
//! the context dimension, so all classes are finite.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChowError {
    #[error("integration table has no entry for top-degree monomial {0}")]
    MissingTableEntry(String),
    #[error("integration table entry {monomial} has degree {degree}, expected {dim}")]
    InvalidTableEntry { monomial: String, degree: u32, dim: u32 },
    #[error("invalid generator `{name}`: {reason}")]
    InvalidGenerator { name: String, reason: &'static str },
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("exponent vector has {got} entries, context has {expected} generators")]
    ArityMismatch { expected: usize, got: usize },
    #[error("classes live in different Chow contexts")]
    ContextMismatch,
    #[error("class is not a unit: its degree-0 part is {0}, expected 1")]
    NotAUnit(BigInt),
}

/// A graded generator of an abstract Chow ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

impl Generator {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        Generator {
            name: name.into(),
            degree,
        }
    }
}

/// Exponent vector over the generators of a context.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(arity: usize) -> Self {
        Monomial(vec![0; arity])
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ContextKind {
    ProjectiveSpace,
    Abstract,
}

#[derive(Debug, PartialEq, Eq)]
struct ContextData {
    kind: ContextKind,
    dim: u32,
    generators: Vec<Generator>,
    table: BTreeMap<Monomial, BigInt>,
}

/// The Chow ring of a base variety, truncated above its dimension.
///
/// Cloning is cheap; all clones refer to the same presentation.
#[derive(Debug, Clone)]
pub struct ChowContext(Arc<ContextData>);

impl PartialEq for ChowContext {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for ChowContext {}

impl ChowContext {
    /// `Z[h]/(h^{n+1})` with `∫ h^n = 1`.
    pub fn projective_space(n: u32) -> Self {
        let mut table = BTreeMap::new();
        table.insert(Monomial(vec![n]), BigInt::one());
        ChowContext(Arc::new(ContextData {
            kind: ContextKind::ProjectiveSpace,
            dim: n,
            generators: vec![Generator::new("h", 1)],
            table,
        }))
    }

    /// A point: no generators, `∫ 1 = 1`.
    pub fn point() -> Self {
        Self::abstract_variety(0, Vec::new(), [(Monomial::one(0), BigInt::one())])
            .expect("point presentation is well formed")
    }

    /// An abstract variety of dimension `dim` given by graded generators and
    /// the degrees of all top-degree monomials.
    pub fn abstract_variety<I>(dim: u32, generators: Vec<Generator>, table: I) -> Result<Self, ChowError>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        for (i, g) in generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(ChowError::InvalidGenerator {
                    name: g.name.clone(),
                    reason: "degree must be positive",
                });
            }
            if !is_identifier(&g.name) {
                return Err(ChowError::InvalidGenerator {
                    name: g.name.clone(),
                    reason: "name must be an identifier",
                });
            }
            if generators[..i].iter().any(|h| h.name == g.name) {
                return Err(ChowError::InvalidGenerator {
                    name: g.name.clone(),
                    reason: "duplicate name",
                });
            }
        }
        let mut data = ContextData {
            kind: ContextKind::Abstract,
            dim,
            generators,
            table: BTreeMap::new(),
        };
        for (m, value) in table {
            if m.0.len() != data.generators.len() {
                return Err(ChowError::ArityMismatch {
                    expected: data.generators.len(),
                    got: m.0.len(),
                });
            }
            let degree = data.degree_of(&m);
            if degree != dim {
                return Err(ChowError::InvalidTableEntry {
                    monomial: data.render_monomial(&m),
                    degree,
                    dim,
                });
            }
            data.table.insert(m, value);
        }
        for m in data.top_monomials() {
            if !data.table.contains_key(&m) {
                return Err(ChowError::MissingTableEntry(data.render_monomial(&m)));
            }
        }
        Ok(ChowContext(Arc::new(data)))
    }

    pub fn kind(&self) -> ContextKind {
        self.0.kind
    }

    pub fn dim(&self) -> u32 {
        self.0.dim
    }

    pub fn generators(&self) -> &[Generator] {
        &self.0.generators
    }

    pub fn generator_index(&self, name: &str) -> Option<usize> {
        self.0.generators.iter().position(|g| g.name == name)
    }

    pub fn integration_table(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.0.table
    }

    pub fn monomial_degree(&self, m: &Monomial) -> u32 {
        self.0.degree_of(m)
    }

    /// All monomials of degree exactly `dim`.
    pub fn top_monomials(&self) -> Vec<Monomial> {
        self.0.top_monomials()
    }

    pub fn render_monomial(&self, m: &Monomial) -> String {
        self.0.render_monomial(m)
    }

    /// Builds a monomial from `(generator name, exponent)` pairs.
    pub fn monomial_from_powers<'a, I>(&self, powers: I) -> Result<Monomial, ChowError>
    where
        I: IntoIterator<Item = (&'a str, u32)>,
    {
        let mut m = Monomial::one(self.0.generators.len());
        for (name, e) in powers {
            let i = self
                .generator_index(name)
                .ok_or_else(|| ChowError::UnknownGenerator(name.to_string()))?;
            m.0[i] += e;
        }
        Ok(m)
    }

    pub fn zero(&self) -> ChowClass {
        ChowClass {
            ctx: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> ChowClass {
        self.constant(1)
    }

    pub fn constant(&self, k: impl Into<BigInt>) -> ChowClass {
        self.term(Monomial::one(self.0.generators.len()), k)
            .expect("constant monomial has the right arity")
    }

    /// The generator with index `i` as a class (zero if its degree exceeds `dim`).
    pub fn generator(&self, i: usize) -> ChowClass {
        let mut m = Monomial::one(self.0.generators.len());
        m.0[i] = 1;
        self.term(m, 1).expect("generator monomial has the right arity")
    }

    /// The hyperplane class of a projective space.
    pub fn hyperplane(&self) -> Option<ChowClass> {
        match self.0.kind {
            ContextKind::ProjectiveSpace => Some(self.generator(0)),
            ContextKind::Abstract => None,
        }
    }

    /// `coeff · m`, truncated.
    pub fn term(&self, m: Monomial, coeff: impl Into<BigInt>) -> Result<ChowClass, ChowError> {
        self.class_from_terms([(m, coeff.into())])
    }

    pub fn class_from_terms<I>(&self, terms: I) -> Result<ChowClass, ChowError>
    where
        I: IntoIterator<Item = (Monomial, BigInt)>,
    {
        let mut class = self.zero();
        for (m, c) in terms {
            if m.0.len() != self.0.generators.len() {
                return Err(ChowError::ArityMismatch {
                    expected: self.0.generators.len(),
                    got: m.0.len(),
                });
            }
            class.accumulate(m, c);
        }
        Ok(class)
    }
}

impl ContextData {
    fn degree_of(&self, m: &Monomial) -> u32 {
        m.0.iter().zip(&self.generators).map(|(e, g)| e * g.degree).sum()
    }

    fn top_monomials(&self) -> Vec<Monomial> {
        fn walk(gens: &[Generator], remaining: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            match gens.split_first() {
                None => {
                    if remaining == 0 {
                        out.push(Monomial(prefix.clone()));
                    }
                }
                Some((g, rest)) => {
                    for e in 0..=remaining / g.degree {
                        prefix.push(e);
                        walk(rest, remaining - e * g.degree, prefix, out);
                        prefix.pop();
                    }
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.generators, self.dim, &mut Vec::new(), &mut out);
        out
    }

    fn render_monomial(&self, m: &Monomial) -> String {
        let factors: Vec<String> =
            m.0.iter()
                .zip(&self.generators)
                .filter(|(e, _)| **e > 0)
                .map(|(e, g)| {
                    if *e == 1 {
                        g.name.clone()
                    } else {
                        format!("{}^{}", g.name, e)
                    }
                })
                .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An element of a [`ChowContext`] with exact integer coefficients.
///
/// Terms with zero coefficient or degree above the context dimension are
/// never stored, so equality of classes is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChowClass {
    ctx: ChowContext,
    terms: BTreeMap<Monomial, BigInt>,
}

impl ChowClass {
    pub fn context(&self) -> &ChowContext {
        &self.ctx
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The homogeneous part of degree `d`.
    pub fn part(&self, d: u32) -> ChowClass {
        ChowClass {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ctx.monomial_degree(m) == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::one(self.ctx.generators().len()))
    }

    /// Graded degrees that carry a nonzero term, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut ds: Vec<u32> = self.terms.keys().map(|m| self.ctx.monomial_degree(m)).collect();
        ds.sort_unstable();
        ds.dedup();
        ds
    }

    /// True if every term has degree `d` (the zero class is homogeneous of any degree).
    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.terms.keys().all(|m| self.ctx.monomial_degree(m) == d)
    }

    fn same_context(&self, other: &ChowClass) -> Result<(), ChowError> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(ChowError::ContextMismatch)
        }
    }

    fn accumulate(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() || self.ctx.monomial_degree(&m) > self.ctx.dim() {
            return;
        }
        let slot = self.terms.entry(m).or_default();
        *slot += c;
        if slot.is_zero() {
            self.terms.retain(|_, c| !c.is_zero());
        }
    }

    pub fn add(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.same_context(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ChowClass {
        self.scale(&BigInt::from(-1))
    }

    pub fn scale(&self, k: &BigInt) -> ChowClass {
        if k.is_zero() {
            return self.ctx.zero();
        }
        ChowClass {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul(&self, other: &ChowClass) -> Result<ChowClass, ChowError> {
        self.same_context(other)?;
        let mut out = self.ctx.zero();
        for (m, a) in &self.terms {
            for (n, b) in &other.terms {
                out.accumulate(m.times(n), a * b);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> ChowClass {
        let mut out = self.ctx.one();
        for _ in 0..k {
            out = out.mul(self).expect("same context");
        }
        out
    }

    /// Degree of the 0-cycle part: the top-degree terms paired against the
    /// integration table. Lower-degree terms contribute nothing.
    pub fn integrate(&self) -> BigInt {
        let dim = self.ctx.dim();
        self.terms
            .iter()
            .filter(|(m, _)| self.ctx.monomial_degree(m) == dim)
            .map(|(m, c)| {
                // every top monomial has a table entry, checked at construction
                c * &self.ctx.integration_table()[m]
            })
            .sum()
    }

    /// Multiplicative inverse of a class with constant term `±1`. For
    /// constant term 1 this is the finite series `Σ_k (1 - a)^k`.
    pub fn inverse(&self) -> Result<ChowClass, ChowError> {
        let constant = self.constant_term();
        if constant == -BigInt::one() {
            return Ok(self.neg().inverse()?.neg());
        }
        if !constant.is_one() {
            return Err(ChowError::NotAUnit(constant));
        }
        let nilpotent = self.ctx.one().sub(self)?;
        let mut out = self.ctx.one();
        let mut power = self.ctx.one();
        for _ in 0..self.ctx.dim() {
            power = power.mul(&nilpotent)?;
            if power.is_zero() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out)
    }
}

impl fmt::Display for ChowClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // lowest degree first, then by monomial order
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| (self.ctx.monomial_degree(m), std::cmp::Reverse((*m).clone())));
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let mono = self.ctx.render_monomial(m);
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        Ok(())
    }
}
