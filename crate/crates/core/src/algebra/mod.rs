//! Exact coefficient field over formal completed-zeta data.
//!
//! Generators are the Laurent data of `xi_F` and of the twisted `xi_F(., eta)` at
//! rational points `q >= 1/2`, the residue `ResF` of `xi_F` at 1, and the
//! discriminant symbols `DE`, `DF` with their formal logarithms. Both
//! completed functions are taken self-dual, `xi(s) = xi(1 - s)`; for the
//! twisted one this follows from `xi_E = xi_F * xi_F(., eta)` and the two
//! self-dual equations. `xi_E` is never a generator: it is always expanded into
//! the product.

mod field;
mod gen;
mod poly;

pub use field::FieldElem;
pub use gen::{canonicalize, Gen, XiKind};
pub use poly::{Monomial, Poly};

use crate::rational::Q;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AlgebraError {
    #[error("xi_F(., eta) has no pole at {0}")]
    NoPole(Q),
    #[error("order {order} is not admissible for {kind:?} at {q}")]
    BadOrder { kind: XiKind, q: Q, order: i32 },
    #[error("division by zero")]
    DivisionByZero,
}
