//! Constant-term calculus for spherical Eisenstein series.
//!
//! Symbols `E^{(m,t)}_d(s0)` are formal Laurent coefficients. The
//! [`Engine`] expands their constant terms, extracts fixed `||a||`-powers,
//! rewrites with the first term identities and the Siegel functional
//! equation, and re-derives every constant from those moves.

mod derive;
mod engine;
mod factors;
mod poles;
mod symbol;

pub use derive::{Derived, SecondTermStage};
pub use engine::{ConstKey, ConstMode, Engine, Rules, Window};
pub use factors::{middle, quotient, reflected, siegel_fe_factor, siegel_reflected, Quotient};
pub use poles::*;
pub use symbol::{Basis, ConstantTermExpr, EisSymbol, LinComb};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum EisError {
    #[error("no pole fact for E({m},{t}) at {s0}; known families: {known}")]
    UnknownPole { m: u32, t: u32, s0: String, known: String },
    #[error("{step}: expected {expected}, found {found}")]
    Unexpected { step: String, expected: String, found: String },
}
