use std::fmt;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::algebra::AlgebraError;
use crate::rational::Q;
use crate::scalar::Scalar;

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;
const EXACT_FALLBACK_BITS: usize = 512;

/// Floating value together with the precision (bits) it was computed at.
#[derive(Clone, Debug)]
pub struct Real {
    v: BigFloat,
    p: usize,
}

impl Real {
    pub(crate) fn wrap(v: BigFloat, p: usize) -> Self {
        Real { v, p }
    }

    /// A raw evaluator output computed at `p` bits.
    pub fn from_raw(v: BigFloat, p: usize) -> Self {
        Real { v, p }
    }

    pub fn raw(&self) -> &BigFloat {
        &self.v
    }

    pub fn precision(&self) -> usize {
        self.p
    }

    pub fn int(n: i64, p: usize) -> Self {
        Real { v: BigFloat::from_i64(n, p.max(64)), p }
    }

    pub fn from_q(x: Q, p: usize) -> Self {
        let n = BigFloat::from_i64(*x.numer(), p.max(64));
        let d = BigFloat::from_i64(*x.denom(), p.max(64));
        Real { v: n.div(&d, p, RM), p }
    }

    pub fn from_bigint(n: &BigInt, p: usize) -> Self {
        if let Some(i) = n.to_i64() {
            return Self::int(i, p);
        }
        let q = p.max(n.bits() as usize + 64);
        let radix = BigFloat::from_u64(1u64 << 32, 64);
        let mut acc = BigFloat::from_i64(0, 64);
        for d in n.magnitude().to_u32_digits().iter().rev() {
            acc = acc.mul(&radix, q, RM).add(&BigFloat::from_u64(*d as u64, 64), q, RM);
        }
        if n.is_negative() {
            acc = acc.neg();
        }
        acc.set_precision(p, RM).ok();
        Real { v: acc, p }
    }

    pub fn from_big_rational(c: &BigRational, p: usize) -> Self {
        let n = Self::from_bigint(c.numer(), p);
        let d = Self::from_bigint(c.denom(), p);
        Real { v: n.v.div(&d.v, p, RM), p }
    }

    fn prec(&self, o: &Self) -> usize {
        self.p.max(o.p)
    }

    pub fn abs(&self) -> Self {
        Real { v: self.v.abs(), p: self.p }
    }

    pub fn is_negative(&self) -> bool {
        self.v.is_negative()
    }

    pub fn to_f64(&self) -> f64 {
        match self.v.as_raw_parts() {
            Some((m, _, s, e, _)) if !self.v.is_zero() => {
                let top = *m.last().unwrap() as f64 / 2f64.powi(64);
                let x = top * 2f64.powi(e.clamp(-1060, 1060));
                if s == astro_float::Sign::Neg {
                    -x
                } else {
                    x
                }
            }
            _ => 0.0,
        }
    }

    /// Base-2 exponent, `None` for zero.
    pub fn exponent(&self) -> Option<i32> {
        if self.v.is_zero() {
            None
        } else {
            self.v.exponent()
        }
    }

    pub fn exp(&self, cc: &mut Consts) -> Self {
        Real { v: self.v.exp(self.p, RM, cc), p: self.p }
    }

    pub fn ln(&self, cc: &mut Consts) -> Self {
        Real { v: self.v.ln(self.p, RM, cc), p: self.p }
    }

    pub fn sin(&self, cc: &mut Consts) -> Self {
        Real { v: self.v.sin(self.p, RM, cc), p: self.p }
    }

    /// Scientific rendering with `digits` significant digits.
    pub fn to_sci(&self, digits: usize) -> String {
        if self.v.is_zero() {
            return "0".into();
        }
        let mut cc = Consts::new().expect("constants cache");
        let s = self.v.format(Radix::Dec, RM, &mut cc).unwrap_or_else(|_| "nan".into());
        let (mant, exp) = s.split_once('e').unwrap_or((&s, "+0"));
        let (sign, mant) = mant.strip_prefix('-').map(|m| ("-", m)).unwrap_or(("", mant));
        let digs: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
        let lead = mant.find('.').unwrap_or(mant.len());
        let shown: String = digs.chars().take(digits.max(1)).collect();
        let e: i64 = exp.trim_start_matches('+').parse().unwrap_or(0) + lead as i64 - 1;
        let (a, b) = shown.split_at(1);
        if b.is_empty() {
            format!("{sign}{a}e{e}")
        } else {
            format!("{sign}{a}.{b}e{e}")
        }
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_sci(25))
    }
}

impl Scalar for Real {
    fn zero() -> Self {
        Real::int(0, 64)
    }
    fn one() -> Self {
        Real::int(1, 64)
    }
    fn add(&self, o: &Self) -> Self {
        let p = self.prec(o);
        Real { v: self.v.add(&o.v, p, RM), p }
    }
    fn sub(&self, o: &Self) -> Self {
        let p = self.prec(o);
        Real { v: self.v.sub(&o.v, p, RM), p }
    }
    fn mul(&self, o: &Self) -> Self {
        let p = self.prec(o);
        Real { v: self.v.mul(&o.v, p, RM), p }
    }
    fn neg(&self) -> Self {
        Real { v: self.v.neg(), p: self.p }
    }
    fn inv(&self) -> Result<Self, AlgebraError> {
        if self.v.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Real { v: self.v.reciprocal(self.p, RM), p: self.p })
    }
    fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Real::int(0, self.p);
        }
        // exact small constants (zero/one) are widened before a lossy scale
        let p = if self.p <= 64 && !c.is_integer() { EXACT_FALLBACK_BITS } else { self.p };
        let n = Real::from_bigint(c.numer(), p);
        let d = Real::from_bigint(c.denom(), p);
        Real { v: self.v.mul(&n.v, p, RM).div(&d.v, p, RM), p }
    }
    fn is_zero(&self) -> bool {
        self.v.is_zero()
    }
}
