//! Total Chern classes of locally free sheaves on a base variety.
//!
//! A [`ChernPolynomial`] pairs a rank with a total Chern class
//! `1 + c_1 + c_2 + …` in some [`ChowContext`]. The operations here are the
//! ones needed to build `c(K⁻¹ ⊗ Ω¹[log D])`: cotangent bundles of
//! projective spaces, Whitney sums and quotients, twisting by a line bundle,
//! and the logarithmic modification along divisors.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::chow::{ChowClass, ChowContext, ChowError, ContextKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChernError {
    #[error(transparent)]
    Chow(#[from] ChowError),
    #[error("expected a divisor class (homogeneous of degree 1), got {0}")]
    NotADivisorClass(String),
    #[error("operation requires a projective space context")]
    WrongContextKind,
    #[error("total Chern class must have constant term 1, got {0}")]
    NotNormalized(String),
    #[error("rank {sub} subbundle does not fit in rank {total} bundle")]
    NegativeRank { total: u32, sub: u32 },
    #[error("log modification needs a cotangent-type bundle: rank {rank} on a {dim}-dimensional base")]
    NotCotangentType { rank: u32, dim: u32 },
}

/// Rank and total Chern class of a (possibly virtual) locally free sheaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernPolynomial {
    rank: u32,
    total: ChowClass,
}

impl ChernPolynomial {
    pub fn new(rank: u32, total: ChowClass) -> Result<Self, ChernError> {
        if !total.constant_term().is_one() {
            return Err(ChernError::NotNormalized(total.to_string()));
        }
        Ok(ChernPolynomial { rank, total })
    }

    /// The trivial bundle `O^rank`.
    pub fn trivial(ctx: &ChowContext, rank: u32) -> Self {
        ChernPolynomial { rank, total: ctx.one() }
    }

    /// The line bundle with first Chern class `c1`.
    pub fn line_bundle(c1: &ChowClass) -> Result<Self, ChernError> {
        require_divisor(c1)?;
        Ok(ChernPolynomial {
            rank: 1,
            total: c1.context().one().add(c1)?,
        })
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    pub fn total(&self) -> &ChowClass {
        &self.total
    }

    pub fn context(&self) -> &ChowContext {
        self.total.context()
    }

    /// `c_k`.
    pub fn chern_class(&self, k: u32) -> ChowClass {
        self.total.part(k)
    }

    /// `c_rank`, the top Chern class. Zero when the rank exceeds the base
    /// dimension.
    pub fn top_chern(&self) -> ChowClass {
        self.total.part(self.rank)
    }

    /// `c(E ⊕ F) = c(E)·c(F)`.
    pub fn whitney_product(&self, other: &ChernPolynomial) -> Result<Self, ChernError> {
        Ok(ChernPolynomial {
            rank: self.rank + other.rank,
            total: self.total.mul(&other.total)?,
        })
    }

    /// `c(E/F) = c(E)·c(F)⁻¹` for a subbundle `F ⊂ E`.
    pub fn whitney_quotient(&self, sub: &ChernPolynomial) -> Result<Self, ChernError> {
        let rank = self.rank.checked_sub(sub.rank).ok_or(ChernError::NegativeRank {
            total: self.rank,
            sub: sub.rank,
        })?;
        Ok(ChernPolynomial {
            rank,
            total: self.total.mul(&sub.total.inverse()?)?,
        })
    }

    /// `c(E ⊗ L)` for a line bundle `L` with `c_1(L) = λ`.
    ///
    /// Splitting principle: `c_k(E ⊗ L) = Σ_i C(r - i, k - i)·c_i(E)·λ^{k-i}`,
    /// where the binomial is the generalized one so that classes with terms
    /// above their rank (virtual bundles) twist correctly too.
    pub fn tensor_with_line_bundle(&self, lambda: &ChowClass) -> Result<Self, ChernError> {
        require_divisor(lambda)?;
        if lambda.is_zero() {
            return Ok(self.clone());
        }
        let ctx = self.context();
        let dim = ctx.dim();
        let parts: Vec<ChowClass> = (0..=dim).map(|i| self.total.part(i)).collect();
        let lambda_powers: Vec<ChowClass> = (0..=dim).map(|j| lambda.pow(j)).collect();
        let mut total = ctx.zero();
        for k in 0..=dim {
            for i in 0..=k {
                let coeff = binomial(i64::from(self.rank) - i64::from(i), k - i);
                if coeff.is_zero() || parts[i as usize].is_zero() {
                    continue;
                }
                let term = parts[i as usize].mul(&lambda_powers[(k - i) as usize])?;
                total = total.add(&term.scale(&coeff))?;
            }
        }
        Ok(ChernPolynomial { rank: self.rank, total })
    }

    /// `c(Ω[log D])`: multiplies by `c(O_{D_i}) = (1 - D_i)⁻¹` for each divisor.
    ///
    /// The residue sequence `0 → Ω → Ω[log D] → ⊕ O_{D_i} → 0` leaves the
    /// rank unchanged.
    pub fn log_cotangent(&self, divisors: &[ChowClass]) -> Result<Self, ChernError> {
        let dim = self.context().dim();
        if self.rank != dim {
            return Err(ChernError::NotCotangentType { rank: self.rank, dim });
        }
        let mut out = self.clone();
        for d in divisors {
            out = out.whitney_product(&structure_sheaf_of_divisor(d)?)?;
        }
        Ok(out)
    }
}

/// `Ω¹` of projective space: rank `n`, total class `(1 - h)^{n+1}` by the
/// Euler sequence.
pub fn cotangent_of_projective_space(ctx: &ChowContext) -> Result<ChernPolynomial, ChernError> {
    if ctx.kind() != ContextKind::ProjectiveSpace {
        return Err(ChernError::WrongContextKind);
    }
    let h = ctx.hyperplane().expect("projective space has a hyperplane class");
    Ok(ChernPolynomial {
        rank: ctx.dim(),
        total: ctx.one().sub(&h)?.pow(ctx.dim() + 1),
    })
}

/// `O_D` for an effective divisor `D`, from `0 → O(-D) → O → O_D → 0`:
/// rank 0 and total class `(1 - D)⁻¹`.
pub fn structure_sheaf_of_divisor(divisor: &ChowClass) -> Result<ChernPolynomial, ChernError> {
    require_divisor(divisor)?;
    let ctx = divisor.context();
    Ok(ChernPolynomial {
        rank: 0,
        total: ctx.one().sub(divisor)?.inverse()?,
    })
}

fn require_divisor(class: &ChowClass) -> Result<(), ChernError> {
    if class.is_homogeneous(1) {
        Ok(())
    } else {
        Err(ChernError::NotADivisorClass(class.to_string()))
    }
}

/// `C(m, j) = m(m-1)…(m-j+1)/j!` for any integer `m`.
pub fn binomial(m: i64, j: u32) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..j {
        num *= BigInt::from(m) - BigInt::from(t);
        den *= BigInt::from(t + 1);
    }
    num / den
}
