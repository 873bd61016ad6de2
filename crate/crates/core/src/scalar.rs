//! The coefficient-field abstraction shared by symbolic and numeric runs.

use std::fmt::{Debug, Display};

use num_rational::BigRational;

use crate::algebra::{AlgebraError, FieldElem, Gen};
use crate::rational::Q;
use crate::Error;

/// Field operations needed by series arithmetic.
pub trait Scalar: Clone + Debug + Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, AlgebraError>;
    fn scale(&self, c: &BigRational) -> Self;
    fn is_zero(&self) -> bool;
}

/// Supplies values of the free generators in some coefficient field.
pub trait Coeffs: Sync {
    type Elem: Scalar;

    fn gen(&self, g: &Gen) -> Result<Self::Elem, Error>;

    fn gen_pow(&self, g: &Gen, e: Q) -> Result<Self::Elem, Error>;

    fn rational(&self, c: &BigRational) -> Self::Elem {
        Self::Elem::one().scale(c)
    }

    /// Image of an exact element.
    fn embed(&self, x: &FieldElem) -> Result<Self::Elem, Error>;
}

impl Scalar for FieldElem {
    fn zero() -> Self {
        FieldElem::zero()
    }
    fn one() -> Self {
        FieldElem::one()
    }
    fn add(&self, o: &Self) -> Self {
        FieldElem::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        FieldElem::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        FieldElem::mul(self, o)
    }
    fn neg(&self) -> Self {
        FieldElem::neg(self)
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        FieldElem::inv(self)
    }
    fn scale(&self, c: &BigRational) -> Self {
        FieldElem::scale(self, c)
    }
    fn is_zero(&self) -> bool {
        FieldElem::is_zero(self)
    }
}

/// Exact context: generators stay formal.
#[derive(Clone, Copy, Debug, Default)]
pub struct Symbolic;

impl Coeffs for Symbolic {
    type Elem = FieldElem;

    fn gen(&self, g: &Gen) -> Result<FieldElem, Error> {
        Ok(FieldElem::gen(*g))
    }

    fn gen_pow(&self, g: &Gen, e: Q) -> Result<FieldElem, Error> {
        Ok(FieldElem::gen_pow(*g, e))
    }

    fn embed(&self, x: &FieldElem) -> Result<FieldElem, Error> {
        Ok(x.clone())
    }
}
