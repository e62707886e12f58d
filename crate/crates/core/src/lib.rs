//! Exact arithmetic and decision procedures for positivity questions about
//! polynomials arising in enumerative combinatorics: real-rootedness,
//! interlacing, log-concavity, unimodality and gamma-nonnegativity, together
//! with generators for the polynomial families those questions are asked
//! about.
//!
//! Every verdict is computed over the rationals. Nothing here touches floating
//! point, the filesystem or threads, so the crate builds as `no_std` with
//! `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

mod error;

pub mod corpus;
pub mod families;
pub mod graphs;
pub mod linalg;
pub mod measures;
pub mod multipoly;
pub mod perm;
pub mod permactions;
pub mod poly;
pub mod posets;
pub mod positivity;
pub mod random;
pub mod rat;
pub mod realroot;
pub mod signed;
pub mod subdivision;

pub use error::{Error, Result};
pub use multipoly::MultiPoly;
pub use poly::ExactPoly;
pub use rat::Rat;

/// Default cap on the number of objects an exhaustive enumeration may visit.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

/// Default number of trials for sampled (non-exact) certificates.
pub const DEFAULT_TRIALS: usize = 64;
