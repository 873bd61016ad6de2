//! Numeric binding for `F = Q`, `E = Q(i)` and `eta` the character of
//! conductor 4.

mod binding;
mod real;
mod special;

pub use binding::{bind_eval, working_bits, Binding, Bound};
pub use real::Real;
pub use special::Evaluator;

use crate::algebra::Gen;
use crate::rational::Q;

#[derive(Debug, Clone, thiserror::Error)]
pub enum NumericError {
    #[error("numeric backend: {0}")]
    Backend(String),
    #[error("evaluation at the pole s = {0}")]
    Pole(Q),
    #[error("precision underflow in {what} (estimated error {estimate:e})")]
    Underflow { what: String, estimate: f64 },
    #[error("precision of {0} digits is below the supported minimum of 15")]
    Precision(u32),
    #[error("generator {0} raised to a fractional power")]
    FractionalPower(Gen),
    #[error("denominator of {0} is numerically indistinguishable from zero")]
    SingularDenominator(String),
}
