use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use num_rational::BigRational;
use num_traits::Zero;

use super::factors::{middle, reflected, siegel_fe_factor, siegel_reflected};
use super::poles::{pole_order, PoleFact};
use super::{ConstantTermExpr, EisSymbol, LinComb};
use crate::laurent::{expand_expr, LaurentError, ZetaExpr};
use crate::rational::{fact, q, qi, Q};
use crate::scalar::{Coeffs, Scalar};
use crate::{Error, Result};

/// Range of Laurent orders the engine may use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: i32,
    pub hi: i32,
}

impl Default for Window {
    fn default() -> Self {
        Window { lo: -2, hi: 2 }
    }
}

/// Which rewrite rules [`Engine::rewrite_with`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rules {
    /// `E^{(m,t)}_{-1}(t/2) -> c_{m,t} E^{(m,m)}_{-1}((m-2t)/2)`, `m >= 2t+1`.
    pub first_term: bool,
    /// `E^{(2t,t)}_{-1}(t/2) -> c_t E^{(2t,2t)}_0(0)`.
    pub boundary: bool,
    /// `E^{(m,t)}_{-2}(t/2) -> d_{m,t} E^{(m,m)}_{-1}((2t-m)/2)`.
    pub second_range: bool,
    /// `E^{(m,t)}_{-1}((t+2)/2) -> 0`, `m >= 2t+1`.
    pub vanishing: bool,
    /// `E^{(m,m)}_{-1}(m/2) -> residue * 1`.
    pub siegel_residue: bool,
}

impl Default for Rules {
    fn default() -> Self {
        Rules { first_term: true, boundary: true, second_range: true, vanishing: true, siegel_residue: false }
    }
}

impl Rules {
    pub const NONE: Rules =
        Rules { first_term: false, boundary: false, second_range: false, vanishing: false, siegel_residue: false };

    pub fn first_term_only() -> Self {
        Rules { first_term: true, vanishing: true, ..Self::NONE }
    }
}

/// Where rewrite rules take their constants from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum ConstMode {
    /// Re-derived from constant terms.
    #[default]
    Derived,
    /// Closed product formulas.
    Closed,
}

/// Keys of the constants used by rewrite rules.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConstKey {
    /// First term constant for `n >= 2r + 1`.
    FirstTerm { n: u32, r: u32 },
    /// First term constant on the boundary `n = 2r`.
    Boundary { r: u32 },
    /// Second term range constant for `r + 1 <= n <= 2r - 1`.
    SecondRange { n: u32, r: u32 },
    /// Residue of the Siegel series at `n/2`.
    SiegelResidue { n: u32 },
}

/// One branch of the constant-term formula.
struct Branch {
    slope: i64,
    exponent: Q,
    child: Option<(u32, u32, Q)>,
    factor: Option<ZetaExpr>,
}

fn branches(m: u32, t: u32, s0: Q) -> Result<Vec<Branch>> {
    if m < 2 || t == 0 || t > m {
        return Err(Error::Range(format!("constant term needs m >= 2 and 1 <= t <= m, got ({m},{t})")));
    }
    let (mq, tq) = (qi(m as i64), qi(t as i64));
    let half = q(1, 2);
    Ok(if t == m {
        vec![
            Branch { slope: 1, exponent: s0 + mq / 2, child: Some((m - 1, m - 1, half)), factor: None },
            Branch { slope: -1, exponent: -s0 + mq / 2, child: Some((m - 1, m - 1, -half)), factor: Some(siegel_reflected(m)?) },
        ]
    } else if t == 1 {
        vec![
            Branch { slope: 1, exponent: s0 + mq - half, child: None, factor: None },
            Branch { slope: 0, exponent: qi(1), child: Some((m - 1, 1, qi(0))), factor: Some(middle(m, 1)?) },
            Branch { slope: -1, exponent: -s0 + mq - half, child: None, factor: Some(reflected(m, 1)?) },
        ]
    } else {
        vec![
            Branch { slope: 1, exponent: s0 + mq - tq / 2, child: Some((m - 1, t - 1, half)), factor: None },
            Branch { slope: 0, exponent: tq, child: Some((m - 1, t, qi(0))), factor: Some(middle(m, t)?) },
            Branch { slope: -1, exponent: -s0 + mq - tq / 2, child: Some((m - 1, t - 1, -half)), factor: Some(reflected(m, t)?) },
        ]
    })
}

/// The constant-term calculus over a coefficient context `K`.
///
/// Records every pole fact it consults and memoizes derived constants.
pub struct Engine<'a, K: Coeffs> {
    ctx: &'a K,
    window: Window,
    mode: ConstMode,
    facts: Mutex<BTreeSet<&'static str>>,
    memo: Mutex<HashMap<ConstKey, K::Elem>>,
}

impl<'a, K: Coeffs> Engine<'a, K> {
    pub fn new(ctx: &'a K) -> Self {
        Engine {
            ctx,
            window: Window::default(),
            mode: ConstMode::default(),
            facts: Mutex::new(BTreeSet::new()),
            memo: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_window(mut self, w: Window) -> Self {
        self.window = w;
        self
    }

    pub fn with_mode(mut self, m: ConstMode) -> Self {
        self.mode = m;
        self
    }

    pub fn ctx(&self) -> &'a K {
        self.ctx
    }

    pub fn window(&self) -> Window {
        self.window
    }

    pub fn mode(&self) -> ConstMode {
        self.mode
    }

    /// Pole facts consulted so far.
    pub fn facts_used(&self) -> Vec<String> {
        self.facts.lock().unwrap().iter().map(|s| s.to_string()).collect()
    }

    pub fn pole(&self, m: u32, t: u32, s0: Q) -> Result<PoleFact> {
        let f = pole_order(m, t, s0)?;
        self.facts.lock().unwrap().insert(f.provenance);
        Ok(f)
    }

    /// Laurent coefficients of `expr` at `s0` through `hi`, within the window.
    pub fn factor_series(&self, expr: &ZetaExpr, s0: Q, hi: i32) -> Result<crate::laurent::Laurent<K::Elem>> {
        if hi > self.window.hi {
            return Err(LaurentError::WindowUnderflow { needed: hi, available: self.window.hi }.into());
        }
        expand_expr(self.ctx, expr, s0, hi)
    }

    pub fn factor_coeff(&self, expr: &ZetaExpr, s0: Q, d: i32) -> Result<K::Elem> {
        Ok(self.factor_series(expr, s0, d)?.coefficient(d)?)
    }

    /// Coefficient of `(s - s0)^d` in the constant term of `E^{(m,t)}`; empty
    /// below the pole order of the parent.
    pub fn constant_term(&self, m: u32, t: u32, d: i32, s0: Q) -> Result<ConstantTermExpr<K::Elem>> {
        let p = self.pole(m, t, s0)?;
        if d < -(p.order as i32) {
            return Ok(ConstantTermExpr::new());
        }
        self.constant_term_formal(m, t, d, s0)
    }

    /// The same coefficient without consulting the parent's pole order.
    pub fn constant_term_formal(&self, m: u32, t: u32, d: i32, s0: Q) -> Result<ConstantTermExpr<K::Elem>> {
        let mut out = ConstantTermExpr::new();
        for br in branches(m, t, s0)? {
            let child_pole = match br.child {
                Some((cm, ct, shift)) => self.pole(cm, ct, s0 + shift)?.order as i32,
                None => 0,
            };
            let x = match &br.factor {
                Some(f) => Some(self.factor_series(f, s0, d + child_pole)?),
                None => None,
            };
            let x_ord = x.as_ref().map_or(0, |s| s.order().min(d + child_pole + 1));
            let e0 = br.exponent;
            let a_max = if br.child.is_some() { d - x_ord } else { 0 };
            for a in -child_pole..=a_max {
                let sym = match br.child {
                    Some((cm, ct, shift)) => EisSymbol::e(cm, ct, a, s0 + shift),
                    None => EisSymbol::One,
                };
                let k_max = if br.slope == 0 { 0 } else { d - a - x_ord };
                for k in 0..=k_max.max(0) {
                    let b = d - a - k;
                    let xb = match &x {
                        Some(s) => s.coefficient(b)?,
                        None if b == 0 => K::Elem::one(),
                        None => continue,
                    };
                    if xb.is_zero() {
                        continue;
                    }
                    let mut c = BigRational::from_integer(br.slope.pow(k as u32).into());
                    c /= fact(k as u32);
                    out.add_term(e0, k as u32, sym, xb.scale(&c));
                }
            }
        }
        Ok(out)
    }

    /// Constant term of a linear combination of symbols.
    pub fn constant_term_of(&self, l: &LinComb<K::Elem>) -> Result<ConstantTermExpr<K::Elem>> {
        let mut out = ConstantTermExpr::new();
        for (sym, c) in l.iter() {
            match *sym {
                EisSymbol::One => out.add_term(qi(0), 0, EisSymbol::One, c.clone()),
                EisSymbol::E { m, t, d, s0 } => out = out.add(&self.constant_term(m, t, d, s0)?.scale(c)),
            }
        }
        Ok(out)
    }

    /// `E^{(m,m)}_d(at)` for `at < 0`, written through the functional
    /// equation in terms of coefficients at `-at`.
    pub fn siegel_fe_rewrite(&self, m: u32, d: i32, at: Q) -> Result<LinComb<K::Elem>> {
        let here = self.pole(m, m, at)?;
        let there = self.pole(m, m, -at)?.order as i32;
        let mut out = LinComb::new();
        if d < -(here.order as i32) {
            return Ok(out);
        }
        let beta = self.factor_series(&siegel_fe_factor(m), at, d + there)?;
        for l in -there..=d - beta.order() {
            let k = d - l;
            let c = beta.coefficient(k)?;
            let c = if l % 2 == 0 { c } else { c.neg() };
            out.add_term(EisSymbol::e(m, m, l, -at), c);
        }
        Ok(out)
    }

    /// Replace every Siegel symbol at a negative point.
    pub fn fe_normalize(&self, l: &LinComb<K::Elem>) -> Result<LinComb<K::Elem>> {
        let mut out = LinComb::new();
        for (sym, c) in l.iter() {
            match *sym {
                EisSymbol::E { m, t, d, s0 } if m == t && s0 < Q::zero() => {
                    out = out.add(&self.siegel_fe_rewrite(m, d, s0)?.scale(c));
                }
                _ => out.add_term(*sym, c.clone()),
            }
        }
        Ok(out)
    }

    /// First term identities and the known vanishing coefficients.
    pub fn rewrite(&self, l: &LinComb<K::Elem>) -> Result<LinComb<K::Elem>> {
        self.rewrite_with(l, Rules::default())
    }

    pub fn rewrite_with(&self, l: &LinComb<K::Elem>, rules: Rules) -> Result<LinComb<K::Elem>> {
        let mut out = LinComb::new();
        for (sym, c) in l.iter() {
            let (m, t, d, s0) = match *sym {
                EisSymbol::E { m, t, d, s0 } => (m, t, d, s0),
                EisSymbol::One => {
                    out.add_term(*sym, c.clone());
                    continue;
                }
            };
            let (mi, ti) = (m as i64, t as i64);
            let half_t = q(ti, 2);
            let replaced = if rules.first_term && m != t && d == -1 && s0 == half_t && mi >= 2 * ti + 1 {
                let k = self.constant(ConstKey::FirstTerm { n: m, r: t })?;
                Some(LinComb::single(EisSymbol::e(m, m, -1, q(mi - 2 * ti, 2)), k))
            } else if rules.boundary && m != t && d == -1 && s0 == half_t && mi == 2 * ti {
                let k = self.constant(ConstKey::Boundary { r: t })?;
                Some(LinComb::single(EisSymbol::e(m, m, 0, qi(0)), k))
            } else if rules.second_range && m != t && d == -2 && s0 == half_t && mi >= ti + 1 && mi <= 2 * ti - 1 {
                let k = self.constant(ConstKey::SecondRange { n: m, r: t })?;
                Some(LinComb::single(EisSymbol::e(m, m, -1, q(2 * ti - mi, 2)), k))
            } else if rules.vanishing && m != t && d == -1 && s0 == q(ti + 2, 2) && mi >= 2 * ti + 1 {
                Some(LinComb::new())
            } else if rules.siegel_residue && m == t && d == -1 && s0 == q(mi, 2) {
                let k = self.constant(ConstKey::SiegelResidue { n: m })?;
                Some(LinComb::single(EisSymbol::One, k))
            } else {
                None
            };
            match replaced {
                Some(r) => out = out.add(&r.scale(c)),
                None => out.add_term(*sym, c.clone()),
            }
        }
        Ok(out)
    }

    /// Constant used by the rewrite rules, memoized.
    pub fn constant(&self, key: ConstKey) -> Result<K::Elem> {
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = match (self.mode, key) {
            (_, ConstKey::SiegelResidue { n }) => self.ctx.embed(&crate::constants::siegel_residue(n))?,
            (ConstMode::Closed, k) => self.ctx.embed(&crate::constants::closed(k)?)?,
            (ConstMode::Derived, ConstKey::FirstTerm { n, r }) => self.derive_first_term(n, r)?.value,
            (ConstMode::Derived, ConstKey::Boundary { r }) => self.derive_boundary(r)?.value,
            (ConstMode::Derived, ConstKey::SecondRange { n, r }) => self.derive_second_range(n, r)?.value,
        };
        self.memo.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }
}
