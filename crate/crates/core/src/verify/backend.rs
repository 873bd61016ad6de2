use crate::numeric::{Binding, Real};
use crate::scalar::{Coeffs, Scalar, Symbolic};

/// Numeric comparison tolerance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Tol {
    Abs(f64),
    Rel(f64),
}

/// Absolute tolerance on quantities of size about one.
pub const ABS: Tol = Tol::Abs(1e-10);
/// Relative tolerance on constants.
pub const REL: Tol = Tol::Rel(1e-8);

/// A coefficient context that can decide equality and render values.
pub trait Backend: Coeffs {
    /// Whether `a` and `b` agree, with the absolute difference when numeric.
    fn agree(&self, a: &Self::Elem, b: &Self::Elem, tol: Tol) -> (bool, Option<f64>);
    fn render(&self, x: &Self::Elem) -> String;
}

impl Backend for Symbolic {
    fn agree(&self, a: &Self::Elem, b: &Self::Elem, _tol: Tol) -> (bool, Option<f64>) {
        (a == b, None)
    }

    fn render(&self, x: &Self::Elem) -> String {
        x.to_string()
    }
}

impl Backend for Binding {
    fn agree(&self, a: &Real, b: &Real, tol: Tol) -> (bool, Option<f64>) {
        let d = a.sub(b).abs().to_f64();
        let ok = match tol {
            Tol::Abs(t) => d <= t,
            Tol::Rel(t) => d <= t * b.abs().to_f64(),
        };
        (ok && d.is_finite(), Some(d))
    }

    fn render(&self, x: &Real) -> String {
        x.to_sci(20)
    }
}
