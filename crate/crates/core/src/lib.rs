//! Bound states of the radial Schrödinger equation with the generalized
//! inverted hyperbolic potential.
//!
//! The crate pairs a closed-form Nikiforov–Uvarov pipeline ([`analytic`],
//! built on the generic engine in [`nu`]) with independent numerical
//! eigensolvers ([`oracle`]) that check and quantify it.

// Domain guards are written `!(x > 0.0)` on purpose so that NaN is rejected.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod error;
pub mod exec;
pub mod nu;
pub mod oracle;
pub mod potential;
pub mod special;

pub use error::{Error, Result};
pub use exec::Execution;
pub use potential::{PhysicalConstants, PotentialParams, QuantumState};
