//! Monomial ideals in `k[x, y]`.
//!
//! An ideal is stored as its minimal generating set, a staircase of
//! exponent pairs `(a, b)` meaning `x^a y^b`. Sorted by `a`, the `b`
//! exponents strictly decrease, which makes intersection, irreducible
//! decomposition and colength short computations on the staircase corners.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("the unit ideal has no irreducible decomposition")]
    UnitIdeal,
    #[error("the zero ideal has no irreducible decomposition")]
    ZeroIdeal,
}

/// `x^a y^b`.
pub type Exponents = (u32, u32);

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonomialIdeal2 {
    gens: Vec<Exponents>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Colength {
    Finite(u64),
    Infinite,
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(n) => write!(f, "{n}"),
            Colength::Infinite => f.write_str("infinite"),
        }
    }
}

impl MonomialIdeal2 {
    /// The ideal generated by the given monomials.
    pub fn new<I: IntoIterator<Item = Exponents>>(gens: I) -> Self {
        let mut all: Vec<Exponents> = gens.into_iter().collect();
        all.sort_unstable();
        all.dedup();
        // after sorting by (a, b), keep a generator only if its b is smaller
        // than every b seen so far
        let mut minimal = Vec::with_capacity(all.len());
        let mut min_b = u32::MAX;
        for (a, b) in all {
            if b < min_b {
                minimal.push((a, b));
                min_b = b;
            }
        }
        MonomialIdeal2 { gens: minimal }
    }

    pub fn zero() -> Self {
        MonomialIdeal2 { gens: Vec::new() }
    }

    pub fn unit() -> Self {
        MonomialIdeal2 { gens: vec![(0, 0)] }
    }

    /// `(x, y)^k`: all monomials of degree `k`.
    pub fn power_of_maximal(k: u32) -> Self {
        Self::new((0..=k).map(|a| (a, k - a)))
    }

    /// Minimal generators, sorted by increasing `x` exponent.
    pub fn generators(&self) -> &[Exponents] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens == [(0, 0)]
    }

    pub fn contains(&self, (a, b): Exponents) -> bool {
        self.gens.iter().any(|&(ga, gb)| ga <= a && gb <= b)
    }

    pub fn intersect(&self, other: &Self) -> Self {
        Self::new(
            self.gens
                .iter()
                .flat_map(|&(a, b)| other.gens.iter().map(move |&(c, d)| (a.max(c), b.max(d)))),
        )
    }

    pub fn sum(&self, other: &Self) -> Self {
        Self::new(self.gens.iter().chain(&other.gens).copied())
    }

    pub fn product(&self, other: &Self) -> Self {
        Self::new(
            self.gens
                .iter()
                .flat_map(|&(a, b)| other.gens.iter().map(move |&(c, d)| (a + c, b + d))),
        )
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::unit(), |acc, _| acc.product(self))
    }

    /// Irreducible ideals are `(x^a)`, `(y^b)` and `(x^a, y^b)`.
    pub fn is_irreducible(&self) -> bool {
        match self.gens.as_slice() {
            [(a, b)] => (*a == 0) != (*b == 0),
            [(0, _), (_, 0)] => true,
            _ => false,
        }
    }

    /// The irredundant decomposition into irreducible monomial ideals, one
    /// per inner corner of the staircase plus the pure powers cutting off
    /// each unbounded direction.
    pub fn irreducible_decomposition(&self) -> Result<Vec<Self>, IdealError> {
        if self.is_zero() {
            return Err(IdealError::ZeroIdeal);
        }
        if self.is_unit() {
            return Err(IdealError::UnitIdeal);
        }
        let gens = &self.gens;
        let mut parts = Vec::with_capacity(gens.len() + 1);
        let (first_a, _) = gens[0];
        if first_a > 0 {
            parts.push(Self::new([(first_a, 0)]));
        }
        for pair in gens.windows(2) {
            let (_, b) = pair[0];
            let (a, _) = pair[1];
            parts.push(Self::new([(a, 0), (0, b)]));
        }
        let (_, last_b) = gens[gens.len() - 1];
        if last_b > 0 {
            parts.push(Self::new([(0, last_b)]));
        }
        let back = parts.iter().fold(Self::unit(), |acc, p| acc.intersect(p));
        assert_eq!(&back, self, "irreducible decomposition does not reassemble");
        Ok(parts)
    }

    /// Number of standard monomials, i.e. `dim k[x,y]/I`.
    pub fn colength(&self) -> Colength {
        match (self.gens.first(), self.gens.last()) {
            (Some(&(0, _)), Some(&(_, 0))) => Colength::Finite(
                self.gens
                    .windows(2)
                    .map(|w| u64::from(w[1].0 - w[0].0) * u64::from(w[0].1))
                    .sum(),
            ),
            _ => Colength::Infinite,
        }
    }
}

impl fmt::Display for MonomialIdeal2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.gens.is_empty() {
            return f.write_str("(0)");
        }
        // leading term first in lex order with x > y
        let rendered: Vec<String> = self.gens.iter().rev().map(|&g| render_monomial(g)).collect();
        write!(f, "({})", rendered.join(", "))
    }
}

fn render_monomial((a, b): Exponents) -> String {
    let power = |v: &str, e: u32| match e {
        0 => None,
        1 => Some(v.to_string()),
        _ => Some(format!("{v}^{e}")),
    };
    let factors: Vec<String> = [power("x", a), power("y", b)].into_iter().flatten().collect();
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}
