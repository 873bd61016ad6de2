use std::collections::HashMap;
use std::sync::Mutex;

use astro_float::BigFloat;
use num_traits::{One, Zero};

use super::real::{Real, RM};
use super::special::Evaluator;
use super::NumericError;
use crate::algebra::{FieldElem, Gen, Poly, XiKind};
use crate::rational::{fact, q, Q};
use crate::scalar::{Coeffs, Scalar};
use crate::Error;

/// First differencing step of the Richardson tables.
const H0: (i64, i64) = (1, 8);
const MAX_LEVELS: usize = 16;

/// Bits used for evaluation at a target of `digits` decimal digits.
pub fn working_bits(digits: u32) -> usize {
    ((2 * digits + 20) as f64 / std::f64::consts::LOG10_2).ceil() as usize + 32
}

/// Taylor coefficients `t_k` of the entire helper at a point, with absolute
/// error estimates.
#[derive(Clone, Debug)]
struct Taylor {
    t: Vec<BigFloat>,
    err: Vec<f64>,
}

struct Inner {
    ev: Evaluator,
    samples: HashMap<(XiKind, Q), BigFloat>,
    taylor: HashMap<(XiKind, Q), Taylor>,
    gens: HashMap<Gen, (Real, f64)>,
}

impl Inner {
    /// The entire helper: `s (s - 1) xi_F(s)` for `F`, `xi_F(s, eta)` itself
    /// for `Feta`.
    fn sample(&mut self, kind: XiKind, s: Q) -> Result<BigFloat, NumericError> {
        if let Some(v) = self.samples.get(&(kind, s)) {
            return Ok(v.clone());
        }
        let v = match kind {
            XiKind::F => self.ev.xi_f_entire(s)?,
            XiKind::Feta => self.ev.xi_feta(s)?,
        };
        self.samples.insert((kind, s), v.clone());
        Ok(v)
    }

    fn taylor(&mut self, kind: XiKind, at: Q, kmax: usize, digits: u32) -> Result<Taylor, NumericError> {
        if let Some(t) = self.taylor.get(&(kind, at)) {
            if t.t.len() > kmax {
                return Ok(t.clone());
            }
        }
        let bits = self.ev.bits();
        let t0 = self.sample(kind, at)?;
        let mut out = Taylor { t: vec![t0], err: vec![0.0] };
        let tol = 10f64.powi(-(digits as i32) - 3);
        for k in 1..=kmax {
            let mut rows: Vec<Vec<BigFloat>> = Vec::new();
            let mut done = None;
            for level in 0..MAX_LEVELS {
                let h = q(H0.0, H0.1) / Q::from_integer(1 << level);
                let mut acc = BigFloat::from_i64(0, bits);
                for j in 0..=k {
                    let off = (Q::new(k as i64, 2) - Q::from_integer(j as i64)) * h;
                    let f = self.sample(kind, at + off)?;
                    let c =
                        BigFloat::from_i64(crate::rational::binom(k as u32, j as u32) * crate::rational::sign_pow(j as i64), 64);
                    acc = acc.add(&f.mul(&c, bits, RM), bits, RM);
                }
                let hk = Real::from_q(h, bits).raw().powi(k, bits, RM);
                let mut row = vec![acc.div(&hk, bits, RM)];
                let mut four = BigFloat::from_i64(1, 64);
                for j in 1..=level {
                    four = four.mul(&BigFloat::from_i64(4, 64), 64, RM);
                    let prev = &rows[level - 1][j - 1];
                    let cur = &row[j - 1];
                    let d = cur.sub(prev, bits, RM).div(&four.sub(&BigFloat::from_i64(1, 64), 64, RM), bits, RM);
                    row.push(cur.add(&d, bits, RM));
                }
                if level >= 2 {
                    let a = &row[level];
                    let b = &rows[level - 1][level - 1];
                    let diff = Real::wrap(a.sub(b, bits, RM), bits).to_f64().abs();
                    let scale = Real::wrap(a.clone(), bits).to_f64().abs().max(1.0);
                    if diff <= tol * scale {
                        done = Some((a.clone(), diff));
                    }
                }
                rows.push(row);
                if done.is_some() {
                    break;
                }
            }
            let (d, e) = done.ok_or_else(|| NumericError::Underflow {
                what: format!("derivative of order {k} at {at}"),
                estimate: f64::NAN,
            })?;
            let kf = Real::from_big_rational(&fact(k as u32), bits);
            out.t.push(d.div(kf.raw(), bits, RM));
            out.err.push(e / kf.to_f64());
        }
        self.taylor.insert((kind, at), out.clone());
        Ok(out)
    }
}

/// Numeric values of every generator for `F = Q`, `E = Q(i)`:
/// `DE = 4`, `DF = 1`, `logDE = log 4`, `logDF = 0`.
///
/// Values are computed on demand and memoized; the binding can be shared
/// across threads.
pub struct Binding {
    digits: u32,
    bits: usize,
    inner: Mutex<Inner>,
}

impl Binding {
    pub fn new(digits: u32) -> Result<Self, NumericError> {
        if digits < 15 {
            return Err(NumericError::Precision(digits));
        }
        let bits = working_bits(digits);
        let inner = Inner { ev: Evaluator::new(bits)?, samples: HashMap::new(), taylor: HashMap::new(), gens: HashMap::new() };
        Ok(Binding { digits, bits, inner: Mutex::new(inner) })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    /// Run `f` with exclusive access to the evaluator.
    pub fn with_evaluator<T>(&self, f: impl FnOnce(&mut Evaluator) -> T) -> T {
        let mut g = self.inner.lock().unwrap_or_else(|e| e.into_inner());
        f(&mut g.ev)
    }

    /// Laurent coefficients `c_0..c_kmax` (from `c_{-1}` at the pole) of `xi`
    /// at `at`.
    pub fn xi_laurent(&self, kind: XiKind, at: Q, kmax: i32) -> Result<Vec<Real>, Error> {
        let start = if kind == XiKind::F && (at == Q::one() || at.is_zero()) { -1 } else { 0 };
        (start..=kmax)
            .map(|k| {
                let (g, s) = crate::algebra::canonicalize(kind, at, k)?;
                let v = if g.vanishes() { Real::int(0, self.bits) } else { self.gen(&g)? };
                let v = if s < 0 { v.neg() } else { v };
                Ok(if start == 0 { v.scale(&fact(k as u32).recip()) } else { v })
            })
            .collect()
    }

    /// Value of a generator and an absolute error estimate.
    pub fn gen_value(&self, g: &Gen) -> Result<(Real, f64), Error> {
        let mut inner = self.inner.lock().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = inner.gens.get(g) {
            return Ok(v.clone());
        }
        let bits = self.bits;
        let eps = 2f64.powi(-(bits as i32) + 8);
        let v = match *g {
            Gen::DiscE => (Real::int(4, bits), 0.0),
            Gen::DiscF => (Real::int(1, bits), 0.0),
            Gen::LogDiscE => (inner.ev.ln2().scale(&num_rational::BigRational::from_integer(2.into())), eps),
            Gen::LogDiscF => (Real::int(0, bits), 0.0),
            Gen::Xi { kind, arg, order } => {
                let pole = kind == XiKind::F && arg == Q::one();
                let need = if pole { (order + 1) as usize } else { order as usize };
                let tay = inner.taylor(kind, arg, need, self.digits)?;
                let mut acc = Real::int(0, bits);
                let mut err = 0.0;
                if pole {
                    // xi(1 + u) = g(1 + u) / (u (1 + u))
                    for i in 0..=need {
                        let sgn = crate::rational::sign_pow((need - i) as i64);
                        let t = Real::wrap(tay.t[i].clone(), bits);
                        acc = if sgn > 0 { acc.add(&t) } else { acc.sub(&t) };
                        err += tay.err[i];
                    }
                } else if kind == XiKind::F {
                    // xi = g * (1/(s-1) - 1/s), expanded at `arg`
                    for i in 0..=need {
                        let m = (need - i) as i32;
                        let r = pow_recip(arg - Q::one(), m + 1) - pow_recip(arg, m + 1);
                        let r = r * Q::from_integer(crate::rational::sign_pow(m as i64));
                        let t = Real::wrap(tay.t[i].clone(), bits);
                        acc = acc.add(&t.scale(&crate::rational::big(r)));
                        err += tay.err[i] * crate::rational::big(r).abs().to_f64();
                    }
                    acc = acc.scale(&fact(need as u32));
                    err *= fact(need as u32).to_f64();
                } else {
                    acc = Real::wrap(tay.t[need].clone(), bits).scale(&fact(need as u32));
                    err = tay.err[need] * fact(need as u32).to_f64();
                }
                (acc, err.max(eps))
            }
        };
        inner.gens.insert(*g, v.clone());
        Ok(v)
    }
}

trait ToF64 {
    fn to_f64(&self) -> f64;
}

impl ToF64 for num_rational::BigRational {
    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::INFINITY)
    }
}

use num_traits::Signed;

fn pow_recip(x: Q, n: i32) -> Q {
    let mut p = Q::one();
    for _ in 0..n {
        p /= x;
    }
    p
}

impl Coeffs for Binding {
    type Elem = Real;

    fn gen(&self, g: &Gen) -> Result<Real, Error> {
        Ok(self.gen_value(g)?.0)
    }

    fn gen_pow(&self, g: &Gen, e: Q) -> Result<Real, Error> {
        match g {
            Gen::DiscF => Ok(Real::int(1, self.bits)),
            Gen::DiscE => {
                let x = self.with_evaluator(|ev| {
                    let l = ev.ln2().scale(&crate::rational::big(e * Q::from_integer(2)));
                    l.exp(ev.consts())
                });
                Ok(x)
            }
            _ => {
                let n = crate::rational::as_int(e).ok_or(NumericError::FractionalPower(*g))?;
                let v = self.gen(g)?;
                let base = if n < 0 { v.inv()? } else { v };
                let mut out = Real::int(1, self.bits);
                for _ in 0..n.unsigned_abs() {
                    out = out.mul(&base);
                }
                Ok(out)
            }
        }
    }

    fn rational(&self, c: &num_rational::BigRational) -> Real {
        Real::from_big_rational(c, self.bits)
    }

    fn embed(&self, x: &FieldElem) -> Result<Real, Error> {
        Ok(bind_eval(x, self)?.value)
    }
}

/// A bound value with its estimated relative error.
#[derive(Clone, Debug)]
pub struct Bound {
    pub value: Real,
    pub rel_err: f64,
}

fn eval_poly(p: &Poly, b: &Binding) -> Result<(Real, f64, f64), Error> {
    let bits = b.bits();
    let eps = 2f64.powi(-(bits as i32) + 8);
    let mut acc = Real::int(0, bits);
    let mut abs_err = 0.0;
    let mut mag = 0.0;
    for (m, c) in p.terms() {
        let mut v = Real::from_big_rational(c, bits);
        let mut rel = eps;
        for (g, e) in m.factors() {
            v = v.mul(&b.gen_pow(g, *e)?);
            let (gv, ge) = b.gen_value(g)?;
            let gm = gv.to_f64().abs();
            if gm > 0.0 {
                rel += num_traits::ToPrimitive::to_f64(e).unwrap_or(0.0).abs() * ge / gm;
            }
        }
        let vm = v.to_f64().abs();
        abs_err += vm * rel;
        mag += vm;
        acc = acc.add(&v);
    }
    Ok((acc, abs_err, mag))
}

/// Evaluate an exact element under a binding.
pub fn bind_eval(x: &FieldElem, b: &Binding) -> Result<Bound, Error> {
    let (n, ne, _) = eval_poly(x.numer(), b)?;
    let (d, de, dmag) = eval_poly(x.denom(), b)?;
    let dm = d.to_f64().abs();
    let floor = dmag * 2f64.powi(-(b.bits() as i32) / 2);
    if d.is_zero() || dm <= de.max(floor) {
        return Err(NumericError::SingularDenominator(format!("{x}")).into());
    }
    let value = n.mul(&d.inv()?);
    let nm = n.to_f64().abs();
    let rel_err = if nm > 0.0 { ne / nm + de / dm } else { ne / dm };
    Ok(Bound { value, rel_err })
}
