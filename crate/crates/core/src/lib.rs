//! Exact computer algebra for the monopole-branch contributions to rank-2
//! Vafa-Witten invariants of surfaces with positive canonical bundle.
//!
//! The crate computes, from first principles and by independent routes:
//!
//! - [`tautcalc`]: horizontal terms, integrals of tautological classes over
//!   symmetric products `C^[n]` of the canonical curve;
//! - [`closedform`]: the algebraic closed form of the horizontal series, its
//!   bivariate diagonal and the residue evaluation at the small root;
//! - [`surfring`]: vertical and mixed terms in small intersection-ring models
//!   of `S` and of the blow-up of `S x S` along the diagonal;
//! - [`qseries`]: eta/theta products, the modular prediction and nested
//!   partition counts;
//! - [`assemble`]: surface presets and the comparison of the assembled
//!   monopole series with the prediction through `q^3`.
//!
//! All arithmetic is exact. Constants with symbolic exponents live in a
//! [`NormalizationRecord`] so that series coefficients stay polynomial.

pub mod acceptance;
pub mod assemble;
pub mod cli;
pub mod closedform;
pub mod error;
pub mod exactnum;
pub mod normalization;
pub mod qseries;
pub mod surfring;
pub mod tautcalc;

pub use error::{Error, Result};
pub use exactnum::{ChernPoly, Coeff, ParamPoly, Rational, TruncSeries};
pub use normalization::NormalizationRecord;

/// Truncation order used when none is given.
pub const DEFAULT_ORDER: usize = 12;
