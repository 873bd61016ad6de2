use std::collections::BTreeMap;
use std::fmt;

use crate::rational::{fmt_q, Q};
use crate::scalar::Scalar;

/// `E^{(m,t)}_d(s0)`: the coefficient of `(s - s0)^d` of the spherical
/// Eisenstein series on `U(m,m)` induced from the parabolic with index `t`.
/// `One` is the constant function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EisSymbol {
    One,
    E { m: u32, t: u32, d: i32, s0: Q },
}

impl EisSymbol {
    pub fn e(m: u32, t: u32, d: i32, s0: Q) -> Self {
        EisSymbol::E { m, t, d, s0 }
    }

    pub fn is_siegel(&self) -> bool {
        matches!(self, EisSymbol::E { m, t, .. } if m == t)
    }
}

impl fmt::Display for EisSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EisSymbol::One => write!(f, "1"),
            EisSymbol::E { m, t, d, s0 } => write!(f, "E({m},{t};{d}@{})", fmt_q(*s0)),
        }
    }
}

/// Finite linear combination of symbols; zero coefficients are dropped.
#[derive(Clone, Debug)]
pub struct LinComb<T> {
    terms: BTreeMap<EisSymbol, T>,
}

impl<T: Scalar> Default for LinComb<T> {
    fn default() -> Self {
        LinComb { terms: BTreeMap::new() }
    }
}

impl<T: Scalar> LinComb<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(sym: EisSymbol, c: T) -> Self {
        let mut l = Self::new();
        l.add_term(sym, c);
        l
    }

    pub fn add_term(&mut self, sym: EisSymbol, c: T) {
        let v = match self.terms.remove(&sym) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(sym, v);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (s, c) in &o.terms {
            out.add_term(*s, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::new();
        for (s, x) in &self.terms {
            out.add_term(*s, x.mul(c));
        }
        out
    }

    pub fn coeff(&self, sym: &EisSymbol) -> T {
        self.terms.get(sym).cloned().unwrap_or_else(T::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&EisSymbol, &T)> {
        self.terms.iter()
    }

    pub fn symbols(&self) -> impl Iterator<Item = &EisSymbol> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<T: Scalar> fmt::Display for LinComb<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (s, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{s}")?;
        }
        Ok(())
    }
}

/// Key of a constant-term summand: the power of `||a||` and of `log||a||`.
pub type Basis = (Q, u32);

/// Sum of `||a||^e (log||a||)^k * coeff * symbol` terms.
#[derive(Clone, Debug)]
pub struct ConstantTermExpr<T> {
    terms: BTreeMap<(Q, u32, EisSymbol), T>,
}

impl<T: Scalar> Default for ConstantTermExpr<T> {
    fn default() -> Self {
        ConstantTermExpr { terms: BTreeMap::new() }
    }
}

impl<T: Scalar> ConstantTermExpr<T> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, e: Q, k: u32, sym: EisSymbol, c: T) {
        let key = (e, k, sym);
        let v = match self.terms.remove(&key) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !v.is_zero() {
            self.terms.insert(key, v);
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for ((e, k, s), c) in &o.terms {
            out.add_term(*e, *k, *s, c.clone());
        }
        out
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::new();
        for ((e, k, s), x) in &self.terms {
            out.add_term(*e, *k, *s, x.mul(c));
        }
        out
    }

    /// Every `(exponent, log power)` pair that occurs.
    pub fn basis(&self) -> Vec<Basis> {
        let mut v: Vec<Basis> = self.terms.keys().map(|(e, k, _)| (*e, *k)).collect();
        v.dedup();
        v
    }

    pub fn iter(&self) -> impl Iterator<Item = (Q, u32, &EisSymbol, &T)> {
        self.terms.iter().map(|((e, k, s), c)| (*e, *k, s, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The part with exponent `e` and log power `k`.
    pub fn extract(&self, e: Q, k: u32) -> LinComb<T> {
        let mut out = LinComb::new();
        for ((e2, k2, s), c) in &self.terms {
            if *e2 == e && *k2 == k {
                out.add_term(*s, c.clone());
            }
        }
        out
    }

    /// Rebuild an expression from extracted pieces.
    pub fn from_parts(parts: impl IntoIterator<Item = (Basis, LinComb<T>)>) -> Self {
        let mut out = Self::new();
        for ((e, k), l) in parts {
            for (s, c) in l.iter() {
                out.add_term(e, k, *s, c.clone());
            }
        }
        out
    }
}

impl<T: Scalar> fmt::Display for ConstantTermExpr<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((e, k, s), c)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f, " +")?;
            }
            write!(f, "||a||^{} log^{k} · ({c}) · {s}", fmt_q(*e))?;
        }
        Ok(())
    }
}
