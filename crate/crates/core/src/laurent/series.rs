use std::fmt;

use num_rational::BigRational;

use super::LaurentError;
use crate::rational::{fmt_q, Q};
use crate::scalar::Scalar;

/// Truncated Laurent series in `u = s - point`.
///
/// Coefficients below `order()` are known to vanish; coefficients in
/// `order()..=hi()` are stored; anything above `hi()` is unknown.
#[derive(Clone, Debug)]
pub struct Laurent<T> {
    point: Q,
    val: i32,
    hi: i32,
    coeffs: Vec<T>,
}

impl<T: Scalar> Laurent<T> {
    /// Series with `coeffs[i]` the coefficient of `u^(start + i)`, known through
    /// `start + len - 1`.
    pub fn from_coeffs(point: Q, start: i32, coeffs: Vec<T>) -> Self {
        let hi = start + coeffs.len() as i32 - 1;
        Self::with_hi(point, start, coeffs, hi)
    }

    fn with_hi(point: Q, start: i32, mut coeffs: Vec<T>, hi: i32) -> Self {
        coeffs.truncate((hi - start + 1).max(0) as usize);
        let lead = coeffs.iter().position(|c| !c.is_zero()).unwrap_or(coeffs.len());
        coeffs.drain(..lead);
        let val = if coeffs.is_empty() { hi + 1 } else { start + lead as i32 };
        Laurent { point, val, hi, coeffs }
    }

    /// The zero series, certified through `hi`.
    pub fn zero(point: Q, hi: i32) -> Self {
        Laurent { point, val: hi + 1, hi, coeffs: Vec::new() }
    }

    pub fn constant(point: Q, c: T, hi: i32) -> Self {
        let mut v = vec![c];
        v.resize((hi + 1).max(1) as usize, T::zero());
        Self::with_hi(point, 0, v, hi)
    }

    pub fn point(&self) -> Q {
        self.point
    }

    /// Valuation; `hi() + 1` when the series is zero through its window.
    pub fn order(&self) -> i32 {
        self.val
    }

    pub fn hi(&self) -> i32 {
        self.hi
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, d: i32) -> Result<T, LaurentError> {
        if d > self.hi {
            return Err(LaurentError::BeyondTruncation { d, hi: self.hi });
        }
        if d < self.val {
            return Ok(T::zero());
        }
        Ok(self.coeffs[(d - self.val) as usize].clone())
    }

    /// Leading coefficient, if any is known to be nonzero.
    pub fn leading(&self) -> Option<&T> {
        self.coeffs.first()
    }

    fn check_point(&self, o: &Self) -> Result<(), LaurentError> {
        if self.point != o.point {
            return Err(LaurentError::PointMismatch(self.point, o.point));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self, LaurentError> {
        self.check_point(o)?;
        let hi = self.hi.min(o.hi);
        let start = self.val.min(o.val);
        let v = (start..=hi)
            .map(|d| {
                let a = if d >= self.val { self.coeffs[(d - self.val) as usize].clone() } else { T::zero() };
                if d >= o.val {
                    a.add(&o.coeffs[(d - o.val) as usize])
                } else {
                    a
                }
            })
            .collect();
        Ok(Self::with_hi(self.point, start, v, hi))
    }

    pub fn neg(&self) -> Self {
        Laurent { coeffs: self.coeffs.iter().map(T::neg).collect(), ..self.clone() }
    }

    pub fn sub(&self, o: &Self) -> Result<Self, LaurentError> {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let v = self.coeffs.iter().map(|x| x.scale(c)).collect();
        Self::with_hi(self.point, self.val, v, self.hi)
    }

    pub fn mul_scalar(&self, c: &T) -> Self {
        let v = self.coeffs.iter().map(|x| x.mul(c)).collect();
        Self::with_hi(self.point, self.val, v, self.hi)
    }

    pub fn mul(&self, o: &Self) -> Result<Self, LaurentError> {
        self.check_point(o)?;
        let hi = (self.hi + o.val).min(o.hi + self.val);
        let start = self.val + o.val;
        let n = (hi - start + 1).max(0) as usize;
        let mut v = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                if i + j < n {
                    v[i + j] = v[i + j].add(&a.mul(b));
                }
            }
        }
        Ok(Self::with_hi(self.point, start, v, hi))
    }

    /// Reciprocal; needs a known nonzero leading coefficient.
    pub fn inv(&self) -> Result<Self, LaurentError> {
        let lead = self.leading().ok_or(LaurentError::NotInvertible { hi: self.hi })?;
        let l = lead.inv().map_err(|_| LaurentError::NotInvertible { hi: self.hi })?;
        let p = (self.hi - self.val) as usize;
        let mut w: Vec<T> = Vec::with_capacity(p + 1);
        w.push(l.clone());
        for k in 1..=p {
            let mut acc = T::zero();
            for i in 1..=k {
                acc = acc.add(&self.coeffs[i].mul(&w[k - i]));
            }
            w.push(acc.mul(&l).neg());
        }
        Ok(Self::with_hi(self.point, -self.val, w, -self.val + p as i32))
    }

    pub fn div(&self, o: &Self) -> Result<Self, LaurentError> {
        self.mul(&o.inv()?)
    }

    pub fn powi(&self, e: i32) -> Result<Self, LaurentError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let mut out = Self::constant(self.point, T::one(), self.hi - self.val);
        for _ in 0..e.unsigned_abs() {
            out = out.mul(&base)?;
        }
        Ok(out)
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: i32) -> Self {
        Laurent { val: self.val + k, hi: self.hi + k, ..self.clone() }
    }

    /// The same function of `-s`: point negated, odd coefficients flip sign.
    pub fn reflect(&self) -> Self {
        let v = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (self.val + i as i32) % 2 == 0 { c.clone() } else { c.neg() })
            .collect();
        Self::with_hi(-self.point, self.val, v, self.hi)
    }

    /// Forget coefficients above `hi`.
    pub fn truncate(&self, hi: i32) -> Self {
        Self::with_hi(self.point, self.val, self.coeffs.clone(), hi.min(self.hi))
    }
}

impl<T: Scalar> fmt::Display for Laurent<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at s = {}:", fmt_q(self.point))?;
        for (i, c) in self.coeffs.iter().enumerate() {
            write!(f, "\n  [{}] {}", self.val + i as i32, c)?;
        }
        write!(f, "\n  + O(u^{})", self.hi + 1)
    }
}
