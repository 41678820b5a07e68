//! Every chapter of the book in `book/src`, and the README, is attached to a
//! module below, so `cargo test -p curvecount-guide` runs each Rust listing
//! against the current crates. mdbook itself cannot resolve workspace
//! dependencies when testing listings.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/chow.md")]
pub mod chow {}
#[doc = include_str!("../../../book/src/chern.md")]
pub mod chern {}
#[doc = include_str!("../../../book/src/log.md")]
pub mod log {}
#[doc = include_str!("../../../book/src/counts.md")]
pub mod counts {}
#[doc = include_str!("../../../book/src/monomial.md")]
pub mod monomial {}
#[doc = include_str!("../../../book/src/scenarios.md")]
pub mod scenarios {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
#[doc = include_str!("../../../README.md")]
pub mod readme {}
