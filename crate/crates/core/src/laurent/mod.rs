//! Truncated Laurent series and expansion of formal zeta products.

mod expand;
mod series;
mod zexpr;

pub use expand::{expand_expr, expand_symbol, expr_coeff, expr_order, symbol_pole, SymbolKind};
pub use series::Laurent;
pub use zexpr::{AffineArg, AffineExp, ZetaExpr};

use crate::rational::Q;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LaurentError {
    #[error("expansion points differ: {0} vs {1}")]
    PointMismatch(Q, Q),
    #[error("coefficient of order {d} requested beyond the certified window (known through {hi})")]
    BeyondTruncation { d: i32, hi: i32 },
    #[error("series with no known nonzero coefficient through order {hi} cannot be inverted")]
    NotInvertible { hi: i32 },
    #[error("window too narrow: need coefficients through {needed}, have {available}")]
    WindowUnderflow { needed: i32, available: i32 },
}
