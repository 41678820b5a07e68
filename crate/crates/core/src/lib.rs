//! Exact intersection-theoretic evaluation of virtual curve counts.
//!
//! Curves on a K-trivial threefold often come in continuous families. Each
//! family contributes a virtual number of curves, computed as a localized top
//! Chern class supported on the family. When the family's normal cone has
//! components with smooth supports `S'`, the contribution of a component with
//! multiplicity `m` is `m·∫_{S'} c_top(K⁻¹ ⊗ Ω¹_{S'}[log D])`, where `K` is
//! the canonical twist and `D` the divisors of curves through nodes of the
//! threefold.
//!
//! The crate is organized bottom-up:
//!
//! - [`chow`]: truncated graded rings with integration,
//! - [`chern`]: total Chern classes and the log-cotangent construction,
//! - [`counts`]: cone components and the virtual count,
//! - [`monomial`]: monomial ideals in two variables, used for the local
//!   analysis at crossings of families.
//!
//! ```
//! use curvecount::counts::{ConeComponent, CountProblem, Support};
//!
//! // lines in a plane through 16 nodes of a quintic threefold
//! let plane = Support::projective_space(2);
//! let h = plane.context().hyperplane().unwrap();
//! let lines = ConeComponent::new("lines", plane, 1)?
//!     .with_node_divisors(vec![h; 16])?;
//! let total = CountProblem::new(vec![lines]).virtual_count()?;
//! assert_eq!(total, 91.into());
//! # Ok::<(), curvecount::counts::CountError>(())
//! ```

pub mod chern;
pub mod chow;
pub mod counts;
pub mod monomial;

pub use chern::{ChernError, ChernPolynomial};
pub use chow::{ChowClass, ChowContext, ChowError, Generator, Monomial};
pub use counts::{ConeComponent, CountError, CountProblem, Support};
pub use monomial::{Colength, IdealError, MonomialIdeal2};
