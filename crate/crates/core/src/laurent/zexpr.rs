use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::algebra::{FieldElem, XiKind};
use crate::rational::{big, fmt_q, Q};

/// Argument `a + b*s` with `b != 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AffineArg {
    pub a: Q,
    pub b: i64,
}

impl AffineArg {
    pub fn new(a: Q, b: i64) -> Self {
        assert!(b != 0, "affine argument needs a nonzero slope");
        AffineArg { a, b }
    }

    /// `s + a`.
    pub fn s_plus(a: Q) -> Self {
        Self::new(a, 1)
    }

    /// `2s + a`.
    pub fn two_s_plus(a: Q) -> Self {
        Self::new(a, 2)
    }

    pub fn at(&self, s: Q) -> Q {
        self.a + Q::from_integer(self.b) * s
    }

    /// `1 - (a + b s)`.
    pub fn mirror(&self) -> Self {
        AffineArg { a: Q::one() - self.a, b: -self.b }
    }
}

impl fmt::Display for AffineArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.b {
            1 => write!(f, "s")?,
            -1 => write!(f, "-s")?,
            b => write!(f, "{b}s")?,
        }
        if self.a.is_positive() {
            write!(f, "+{}", fmt_q(self.a))?;
        } else if self.a.is_negative() {
            write!(f, "-{}", fmt_q(-self.a))?;
        }
        Ok(())
    }
}

/// Exponent `a + b*s` of a discriminant power; `b` may vanish.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct AffineExp {
    pub a: Q,
    pub b: Q,
}

impl AffineExp {
    pub fn constant(a: Q) -> Self {
        AffineExp { a, b: Q::zero() }
    }

    pub fn at(&self, s: Q) -> Q {
        self.a + self.b * s
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn add(self, o: Self) -> Self {
        AffineExp { a: self.a + o.a, b: self.b + o.b }
    }

    fn scale(self, k: i64) -> Self {
        let k = Q::from_integer(k);
        AffineExp { a: self.a * k, b: self.b * k }
    }
}

impl fmt::Display for AffineExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a, self.b);
        match (a.is_zero(), b.is_zero()) {
            (_, true) => write!(f, "{}", fmt_q(a)),
            (true, false) => write!(f, "{}*s", fmt_q(b)),
            (false, false) => write!(f, "{}*s{}{}", fmt_q(b), if a.is_negative() { "-" } else { "+" }, fmt_q(a.abs())),
        }
    }
}

/// Formal product `c * prod xi_kind(a + b s)^e * DE^(..) * DF^(..)` with `c` a
/// constant field element.
///
/// Factors are stored in a normal form: `xi_E` is split into its two parts,
/// each argument is replaced by its mirror when that makes the slope positive,
/// and equal factors are merged. Two expressions equal as functions of `s`
/// under the functional equations compare equal structurally.
#[derive(Clone, Debug, PartialEq)]
pub struct ZetaExpr {
    factors: BTreeMap<(XiKind, AffineArg), i32>,
    constant: FieldElem,
    de: AffineExp,
    df: AffineExp,
}

impl Default for ZetaExpr {
    fn default() -> Self {
        Self::one()
    }
}

impl ZetaExpr {
    pub fn one() -> Self {
        ZetaExpr { factors: BTreeMap::new(), constant: FieldElem::one(), de: AffineExp::default(), df: AffineExp::default() }
    }

    pub fn rational(c: BigRational) -> Self {
        Self::constant(FieldElem::rational(c))
    }

    pub fn constant(c: FieldElem) -> Self {
        ZetaExpr { constant: c, ..Self::one() }
    }

    pub fn xi(kind: XiKind, arg: AffineArg, e: i32) -> Self {
        Self::one().with(kind, arg, e)
    }

    pub fn xi_e(arg: AffineArg, e: i32) -> Self {
        Self::one().with_e(arg, e)
    }

    pub fn with(mut self, kind: XiKind, arg: AffineArg, e: i32) -> Self {
        let arg = if arg.b < 0 { arg.mirror() } else { arg };
        let slot = self.factors.entry((kind, arg)).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(&(kind, arg));
        }
        self
    }

    /// Multiply by `xi_E(arg)^e`.
    pub fn with_e(self, arg: AffineArg, e: i32) -> Self {
        self.with(XiKind::F, arg, e).with(XiKind::Feta, arg, e)
    }

    /// Multiply by `xi_E(num) / xi_E(den)`.
    pub fn ratio_e(self, num: AffineArg, den: AffineArg) -> Self {
        self.with_e(num, 1).with_e(den, -1)
    }

    pub fn ratio(self, kind: XiKind, num: AffineArg, den: AffineArg) -> Self {
        self.with(kind, num, 1).with(kind, den, -1)
    }

    pub fn with_de(mut self, e: AffineExp) -> Self {
        self.de = self.de.add(e);
        self
    }

    pub fn with_df(mut self, e: AffineExp) -> Self {
        self.df = self.df.add(e);
        self
    }

    pub fn scaled(mut self, c: &BigRational) -> Self {
        self.constant = self.constant.scale(c);
        self
    }

    pub fn times(mut self, c: &FieldElem) -> Self {
        self.constant = self.constant.mul(c);
        self
    }

    pub fn factors(&self) -> impl Iterator<Item = (XiKind, AffineArg, i32)> + '_ {
        self.factors.iter().map(|(&(k, a), &e)| (k, a, e))
    }

    pub fn constant_part(&self) -> &FieldElem {
        &self.constant
    }

    /// True when no factor depends on `s`.
    pub fn is_constant(&self) -> bool {
        self.factors.is_empty() && self.de.b.is_zero() && self.df.b.is_zero()
    }

    pub fn de(&self) -> AffineExp {
        self.de
    }

    pub fn df(&self) -> AffineExp {
        self.df
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (k, a, e) in o.factors() {
            out = out.with(k, a, e);
        }
        out.constant = out.constant.mul(&o.constant);
        out.de = out.de.add(o.de);
        out.df = out.df.add(o.df);
        out
    }

    pub fn powi(&self, n: i32) -> Result<Self, crate::algebra::AlgebraError> {
        let mut out = Self::one();
        for (k, a, e) in self.factors() {
            out = out.with(k, a, e * n);
        }
        out.constant = self.constant.powi(n as i64)?;
        out.de = self.de.scale(n as i64);
        out.df = self.df.scale(n as i64);
        Ok(out)
    }

    pub fn inv(&self) -> Result<Self, crate::algebra::AlgebraError> {
        self.powi(-1)
    }

    pub fn div(&self, o: &Self) -> Result<Self, crate::algebra::AlgebraError> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    pub fn scale_q(self, c: Q) -> Self {
        self.scaled(&big(c))
    }
}

fn fmt_pow(f: &mut fmt::Formatter<'_>, e: i32) -> fmt::Result {
    match e {
        1 => Ok(()),
        e if e > 1 => write!(f, "^{e}"),
        e => write!(f, "^({e})"),
    }
}

impl fmt::Display for ZetaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = 0;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            parts += 1;
            if parts > 1 {
                write!(f, "*")
            } else {
                Ok(())
            }
        };
        if !self.constant.is_one() || self.factors.is_empty() && self.de.is_zero() && self.df.is_zero() {
            sep(f)?;
            write!(f, "({})", self.constant)?;
        }
        for (&(kind, arg), &e) in &self.factors {
            let partner = match kind {
                XiKind::F => self.factors.get(&(XiKind::Feta, arg)),
                XiKind::Feta => self.factors.get(&(XiKind::F, arg)),
            };
            if partner == Some(&e) {
                if kind == XiKind::Feta {
                    continue;
                }
                sep(f)?;
                write!(f, "xiE({arg})")?;
            } else {
                sep(f)?;
                write!(f, "{}({arg})", kind.name())?;
            }
            fmt_pow(f, e)?;
        }
        for (name, d) in [("DE", self.de), ("DF", self.df)] {
            if !d.is_zero() {
                sep(f)?;
                write!(f, "{name}^({d})")?;
            }
        }
        Ok(())
    }
}
