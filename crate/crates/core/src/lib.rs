//! Verification engine for constant-term identities of spherical Eisenstein
//! series on `U(n,n)`.
//!
//! The layers, bottom up:
//!
//! * [`algebra`]: exact rational functions in formal completed-zeta data.
//! * [`laurent`]: truncated Laurent series over any coefficient field, and
//!   expansion of zeta quotients at rational points.
//! * [`numeric`]: a high-precision binding for `F = Q`, `E = Q(i)`.
//! * [`eisenstein`]: constant terms, extraction, rewrites and the derivations
//!   of every first and second term constant.
//! * [`constants`]: closed forms of the same constants.
//! * [`intertwining`]: root sets and rank-one factors of the intertwining
//!   operators.
//! * [`verify`]: check registry, script language and reports.

#![allow(clippy::int_plus_one)]

pub mod algebra;
pub mod constants;
pub mod eisenstein;
mod error;
pub mod intertwining;
pub mod laurent;
pub mod numeric;
pub mod rational;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
