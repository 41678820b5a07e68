//! Virtual curve counts from normal-cone data.
//!
//! Each component `C` of the normal cone is described by its smooth support
//! `S'`, its geometric multiplicity `m(C)`, the first Chern class of the
//! canonical twist `K` on `S'`, and the classes of the node divisors
//! `D^i ⊂ S'` (curves through a node of the threefold). Its contribution is
//!
//! ```text
//! m(C) · ∫_{S'} c_top(K⁻¹ ⊗ Ω¹_{S'}[log D])
//! ```
//!
//! and the virtual count is the sum over components. With no node divisors
//! this is the smooth-threefold formula `m(C)·∫ c_top(K⁻¹ ⊗ Ω¹_{S'})`.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::chern::{cotangent_of_projective_space, ChernError, ChernPolynomial};
use crate::chow::{ChowClass, ChowContext, ChowError, ContextKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CountError {
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error("component `{0}`: abstract support of positive dimension needs cotangent Chern data")]
    MissingCotangentData(String),
    #[error("cotangent data has rank {rank} but the support has dimension {dim}")]
    CotangentRankMismatch { rank: u32, dim: u32 },
    #[error("component `{0}`: multiplicity must be at least 1")]
    InvalidMultiplicity(String),
    #[error("component `{0}`: class does not live on the support")]
    ContextMismatch(String),
    #[error("component `{label}`: support of dimension {support_dim} exceeds rank V = {rank_v}")]
    DimensionMismatch {
        label: String,
        support_dim: u32,
        rank_v: u32,
    },
}

impl From<ChowError> for CountError {
    fn from(e: ChowError) -> Self {
        CountError::Chern(e.into())
    }
}

/// The smooth support `S'(C)` of a cone component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    context: ChowContext,
    cotangent: Option<ChernPolynomial>,
}

impl Support {
    /// Support with no attached cotangent data. Fine for projective spaces
    /// and points, whose cotangent classes are known.
    pub fn new(context: ChowContext) -> Self {
        Support {
            context,
            cotangent: None,
        }
    }

    pub fn projective_space(n: u32) -> Self {
        Self::new(ChowContext::projective_space(n))
    }

    pub fn point() -> Self {
        Self::new(ChowContext::point())
    }

    /// Support with a user-supplied `c(Ω¹_{S'})`.
    pub fn with_cotangent(context: ChowContext, cotangent: ChernPolynomial) -> Result<Self, CountError> {
        if cotangent.context() != &context {
            return Err(ChowError::ContextMismatch.into());
        }
        if cotangent.rank() != context.dim() {
            return Err(CountError::CotangentRankMismatch {
                rank: cotangent.rank(),
                dim: context.dim(),
            });
        }
        Ok(Support {
            context,
            cotangent: Some(cotangent),
        })
    }

    pub fn context(&self) -> &ChowContext {
        &self.context
    }

    pub fn dim(&self) -> u32 {
        self.context.dim()
    }

    pub fn cotangent_data(&self) -> Option<&ChernPolynomial> {
        self.cotangent.as_ref()
    }

    fn cotangent(&self, label: &str) -> Result<ChernPolynomial, CountError> {
        if let Some(c) = &self.cotangent {
            return Ok(c.clone());
        }
        match self.context.kind() {
            ContextKind::ProjectiveSpace => Ok(cotangent_of_projective_space(&self.context)?),
            ContextKind::Abstract if self.context.dim() == 0 => Ok(ChernPolynomial::trivial(&self.context, 0)),
            ContextKind::Abstract => Err(CountError::MissingCotangentData(label.to_string())),
        }
    }
}

/// One component `C` of the normal cone.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeComponent {
    pub label: String,
    support: Support,
    multiplicity: u64,
    canonical_twist: ChowClass,
    node_divisors: Vec<ChowClass>,
}

impl ConeComponent {
    /// A component with trivial canonical twist and no node divisors.
    pub fn new(label: impl Into<String>, support: Support, multiplicity: u64) -> Result<Self, CountError> {
        let label = label.into();
        if multiplicity == 0 {
            return Err(CountError::InvalidMultiplicity(label));
        }
        let canonical_twist = support.context().zero();
        Ok(ConeComponent {
            label,
            support,
            multiplicity,
            canonical_twist,
            node_divisors: Vec::new(),
        })
    }

    /// Sets `c_1(K_{S'})`.
    pub fn with_canonical_twist(mut self, twist: ChowClass) -> Result<Self, CountError> {
        self.check_divisor(&twist)?;
        self.canonical_twist = twist;
        Ok(self)
    }

    pub fn with_node_divisors<I>(mut self, divisors: I) -> Result<Self, CountError>
    where
        I: IntoIterator<Item = ChowClass>,
    {
        for d in divisors {
            self.check_divisor(&d)?;
            self.node_divisors.push(d);
        }
        Ok(self)
    }

    fn check_divisor(&self, class: &ChowClass) -> Result<(), CountError> {
        if class.context() != self.support.context() {
            return Err(CountError::ContextMismatch(self.label.clone()));
        }
        if !class.is_homogeneous(1) {
            return Err(ChernError::NotADivisorClass(class.to_string()).into());
        }
        Ok(())
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn multiplicity(&self) -> u64 {
        self.multiplicity
    }

    pub fn canonical_twist(&self) -> &ChowClass {
        &self.canonical_twist
    }

    pub fn node_divisors(&self) -> &[ChowClass] {
        &self.node_divisors
    }

    /// `c(Q_{S'}) = c(K⁻¹ ⊗ Ω¹_{S'}) · Π (1 - D_i)⁻¹`, of rank `dim S'`.
    pub fn bundle(&self) -> Result<ChernPolynomial, CountError> {
        let cotangent = self.support.cotangent(&self.label)?;
        let twisted = cotangent.tensor_with_line_bundle(&self.canonical_twist.neg())?;
        Ok(twisted.log_cotangent(&self.node_divisors)?)
    }

    /// `m(C) · ∫ c_top(Q_{S'})`.
    pub fn contribution(&self) -> Result<BigInt, CountError> {
        let top = self.bundle()?.top_chern();
        Ok(BigInt::from(self.multiplicity) * top.integrate())
    }
}

/// The cone components over a connected component `I'` of the Hilbert
/// scheme, plus the rank of the obstruction bundle when known.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountProblem {
    pub components: Vec<ConeComponent>,
    pub rank_v: Option<u32>,
}

impl CountProblem {
    pub fn new(components: Vec<ConeComponent>) -> Self {
        CountProblem {
            components,
            rank_v: None,
        }
    }

    pub fn with_rank_v(mut self, rank_v: u32) -> Self {
        self.rank_v = Some(rank_v);
        self
    }

    pub fn virtual_count(&self) -> Result<BigInt, CountError> {
        virtual_count(self)
    }
}

pub fn component_bundle(c: &ConeComponent) -> Result<ChernPolynomial, CountError> {
    c.bundle()
}

pub fn component_contribution(c: &ConeComponent) -> Result<BigInt, CountError> {
    c.contribution()
}

/// `γ(I') = Σ_C m(C)·∫ c_top(Q_{S'(C)})`. Dimension checks are not applied;
/// see [`virtual_count_strict`].
pub fn virtual_count(p: &CountProblem) -> Result<BigInt, CountError> {
    p.components.iter().map(ConeComponent::contribution).sum()
}

/// Like [`virtual_count`], but fails on the first component whose support
/// is too large for the recorded rank of `V`.
pub fn virtual_count_strict(p: &CountProblem) -> Result<BigInt, CountError> {
    if let Some(failure) = validate_dimensions(p).failures().next() {
        return Err(CountError::DimensionMismatch {
            label: failure.label.clone(),
            support_dim: failure.support_dim,
            rank_v: p.rank_v.unwrap_or_default(),
        });
    }
    virtual_count(p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    /// No rank of `V` was recorded.
    Unchecked,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Unchecked => "unchecked",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionCheck {
    pub label: String,
    pub support_dim: u32,
    /// `rank V - dim S'`, the dimension of the cone fibers.
    pub fiber_dim: Option<u32>,
    pub status: CheckStatus,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionReport {
    pub rank_v: Option<u32>,
    pub checks: Vec<DimensionCheck>,
}

impl DimensionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &DimensionCheck> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }
}

/// Each cone component sits over its support with fibers of dimension
/// `rank V - dim S'`, so a support larger than `rank V` is impossible.
pub fn validate_dimensions(p: &CountProblem) -> DimensionReport {
    let checks = p
        .components
        .iter()
        .map(|c| {
            let support_dim = c.support.dim();
            let (fiber_dim, status) = match p.rank_v {
                None => (None, CheckStatus::Unchecked),
                Some(r) => match r.checked_sub(support_dim) {
                    Some(f) => (Some(f), CheckStatus::Pass),
                    None => (None, CheckStatus::Fail),
                },
            };
            DimensionCheck {
                label: c.label.clone(),
                support_dim,
                fiber_dim,
                status,
            }
        })
        .collect();
    DimensionReport {
        rank_v: p.rank_v,
        checks,
    }
}
