//! Coherent states of a charged particle in a uniform magnetic field.
//!
//! - [`series`]: log-domain summation of the Gaussian-damped series behind
//!   every expectation value.
//! - [`circle`]: coherent states on a circle, their overlaps and the
//!   expectation values of `J` and `U`.
//! - [`fock`]: the circular-motion algebra on a truncated two-mode Fock space.
//! - [`magnetic`]: the magnetic coherent states `|zeta, z0>`.
//! - [`malkin_manko`]: the Malkin–Man'ko baseline states.
//! - [`comparison`]: phase-space closeness distances.
//! - [`cli`], [`output`]: the `lcs` command-line tool.

pub mod circle;
pub mod cli;
pub mod comparison;
pub mod error;
pub mod fock;
pub mod magnetic;
pub mod malkin_manko;
pub mod output;
pub mod series;

pub use error::{Error, Result};
pub use fock::{FockTruncation, Generator, OperatorMatrix, PhysicalParams};
pub use series::{LogTerm, SeriesConfig, SeriesSum};
