//! Weighted refinements of the Rogers-Ramanujan identities.
//!
//! The crate expands both sides of each weighted identity as exact truncated
//! q-series, enumerates the partition classes behind their combinatorial
//! readings, reproduces the small bijection tables, and solves for unknown
//! sum-side numerators from a target product.
//!
//! Batch entry points take an [`Execution`] mode. With the default `parallel`
//! feature the parallel mode uses rayon; without it both modes run
//! sequentially.

pub mod combinatorics;
pub mod discovery;
mod error;
pub mod exec;
pub mod identities;
pub mod partitions;
pub mod series;

pub use error::{Error, Result};
pub use exec::Execution;
