use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{canonicalize, AlgebraError, Gen, Monomial, Poly, XiKind};
use crate::rational::{big, Q};

/// Quotient of two polynomials in the generators.
///
/// Monomial denominators are folded into the numerator, so most values are
/// Laurent polynomials with denominator 1. Equality is cross-multiplication.
#[derive(Clone, Debug)]
pub struct FieldElem {
    num: Poly,
    den: Poly,
}

impl FieldElem {
    pub fn new(num: Poly, den: Poly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (m, c) = den.leading().map(|(m, c)| (m.inv(), c.recip())).unwrap();
        if den.len() == 1 {
            FieldElem { num: num.mul_term(&c, &m), den: Poly::one() }
        } else {
            FieldElem { num: num.mul_term(&c, &m), den: den.mul_term(&c, &m) }
        }
    }

    pub fn zero() -> Self {
        FieldElem { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Self {
        Self::rational(BigRational::one())
    }

    pub fn rational(c: BigRational) -> Self {
        FieldElem { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_q(c: Q) -> Self {
        Self::rational(big(c))
    }

    pub fn int(n: i64) -> Self {
        Self::from_q(Q::from_integer(n))
    }

    pub fn gen(g: Gen) -> Self {
        Self::gen_pow(g, Q::from_integer(1))
    }

    pub fn gen_pow(g: Gen, e: Q) -> Self {
        if g.vanishes() && e > Q::zero() {
            return Self::zero();
        }
        FieldElem { num: Poly::term(BigRational::one(), Monomial::pow_of(g, e)), den: Poly::one() }
    }

    /// A generator reached through [`canonicalize`], carrying its sign.
    pub fn xi_data(kind: XiKind, at: Q, k: i32) -> Result<Self, AlgebraError> {
        let (g, s) = canonicalize(kind, at, k)?;
        Ok(Self::gen(g).scale(&BigRational::from_integer(s.into())))
    }

    /// Value of `xi` at `at`, with `xi_F(0)`, `xi_F(1)` read as residues.
    pub fn xi(kind: XiKind, at: Q) -> Self {
        let pole = kind == XiKind::F && (at.is_zero() || at == Q::from_integer(1));
        Self::xi_data(kind, at, if pole { -1 } else { 0 }).expect("order 0 or residue is always admissible")
    }

    pub fn xi_f(at: Q) -> Self {
        Self::xi(XiKind::F, at)
    }

    pub fn xi_feta(at: Q) -> Self {
        Self::xi(XiKind::Feta, at)
    }

    /// `xi_F(at, eta^p)`.
    pub fn xi_eta(at: Q, p: i64) -> Self {
        Self::xi(XiKind::from_eta_power(p), at)
    }

    pub fn xi_e(at: Q) -> Self {
        Self::xi_f(at).mul(&Self::xi_feta(at))
    }

    pub fn disc_e(e: Q) -> Self {
        Self::gen_pow(Gen::DiscE, e)
    }

    pub fn numer(&self) -> &Poly {
        &self.num
    }

    pub fn denom(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::normalized(self.num.add(&o.num), self.den.clone());
        }
        Self::normalized(self.num.mul(&o.den).add(&o.num.mul(&self.den)), self.den.mul(&o.den))
    }

    pub fn neg(&self) -> Self {
        FieldElem { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::normalized(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    pub fn inv(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, o: &Self) -> Result<Self, AlgebraError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FieldElem { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn powi(&self, e: i64) -> Result<Self, AlgebraError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::one();
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base);
        }
        Ok(out)
    }

    /// Every generator occurring in numerator or denominator.
    pub fn gens(&self) -> Vec<Gen> {
        let mut v: Vec<Gen> = self.num.gens().chain(self.den.gens()).copied().collect();
        v.sort();
        v.dedup();
        v
    }
}

impl PartialEq for FieldElem {
    fn eq(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
