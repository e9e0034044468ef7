//! Exact eigenstates of four particles on a line with harmonic confinement,
//! Wolfes-type three-body and centre-of-mass inverse-square interactions,
//! and a hypercentral inverse-square term, plus the D-dimensional variant.
//!
//! The crate covers special polynomials, coordinate maps, domain validation,
//! the closed-form spectrum, eigenfunction evaluation and normalization, and
//! an independent finite-difference oracle.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod coordinates;
pub mod error;
pub mod linalg;
pub mod model;
pub mod oracle;
pub mod polynomials;
pub mod quadrature;
pub mod spectrum;
pub mod wavefunction;

pub use error::{Error, Result};
