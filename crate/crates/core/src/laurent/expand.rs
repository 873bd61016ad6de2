use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{AffineArg, Laurent, ZetaExpr};
use crate::algebra::{canonicalize, Gen, XiKind};
use crate::rational::{big, fact, Q};
use crate::scalar::{Coeffs, Scalar};
use crate::Result;

/// Kinds accepted by [`expand_symbol`]; `E` is the product of the other two.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SymbolKind {
    F,
    Feta,
    E,
}

/// Pole order (0 or 1) of `xi_kind(arg)` at `s0`.
pub fn symbol_pole(kind: XiKind, arg: AffineArg, s0: Q) -> i32 {
    let x = arg.at(s0);
    i32::from(kind == XiKind::F && (x.is_zero() || x == Q::one()))
}

fn expand_xi<K: Coeffs>(ctx: &K, kind: XiKind, arg: AffineArg, s0: Q, hi: i32) -> Result<Laurent<K::Elem>> {
    let x0 = arg.at(s0);
    let ord = -symbol_pole(kind, arg, s0);
    let b = big(Q::from_integer(arg.b));
    let mut coeffs = Vec::new();
    let mut bk = if ord < 0 { b.recip() } else { BigRational::one() };
    for k in ord..=hi {
        let (g, sign) = canonicalize(kind, x0, k)?;
        let mut c = bk.clone() * BigRational::from_integer(sign.into());
        if ord == 0 {
            c /= fact(k as u32);
        }
        let v = if g.vanishes() { K::Elem::zero() } else { ctx.gen(&g)?.scale(&c) };
        coeffs.push(v);
        bk *= &b;
    }
    Ok(Laurent::from_coeffs(s0, ord, coeffs))
}

/// Laurent expansion of one completed zeta factor at `s0`, through `u^hi`.
pub fn expand_symbol<K: Coeffs>(ctx: &K, kind: SymbolKind, arg: AffineArg, s0: Q, hi: i32) -> Result<Laurent<K::Elem>> {
    match kind {
        SymbolKind::F => expand_xi(ctx, XiKind::F, arg, s0, hi),
        SymbolKind::Feta => expand_xi(ctx, XiKind::Feta, arg, s0, hi),
        SymbolKind::E => {
            let f = expand_xi(ctx, XiKind::F, arg, s0, hi)?;
            let fe = expand_xi(ctx, XiKind::Feta, arg, s0, hi - f.order().min(0))?;
            Ok(f.mul(&fe)?)
        }
    }
}

/// Order of `expr` at `s0`, counting each pole of a factor.
pub fn expr_order(expr: &ZetaExpr, s0: Q) -> i32 {
    expr.factors().map(|(k, a, e)| -symbol_pole(k, a, s0) * e).sum()
}

fn disc_series<K: Coeffs>(ctx: &K, g: Gen, log: Gen, e: super::AffineExp, s0: Q, p: i32) -> Result<Laurent<K::Elem>> {
    let base = ctx.gen_pow(&g, e.at(s0))?;
    if e.b.is_zero() {
        return Ok(Laurent::constant(s0, base, p));
    }
    let l = ctx.gen(&log)?.scale(&big(e.b));
    let mut coeffs = Vec::new();
    let mut term = base;
    for k in 0..=p {
        coeffs.push(term.clone());
        term = term.mul(&l).scale(&big(Q::new(1, k as i64 + 1)));
    }
    Ok(Laurent::from_coeffs(s0, 0, coeffs))
}

/// Laurent expansion of a zeta product at `s0`, certified through `u^hi`.
///
/// Each factor is expanded only as far as the product needs, so the result
/// starts at the exact total order and stops at `hi`.
pub fn expand_expr<K: Coeffs>(ctx: &K, expr: &ZetaExpr, s0: Q, hi: i32) -> Result<Laurent<K::Elem>> {
    let total = expr_order(expr, s0);
    let p = hi - total;
    if p < 0 {
        return Ok(Laurent::zero(s0, hi));
    }
    let mut out = Laurent::constant(s0, ctx.embed(expr.constant_part())?, p);
    for (kind, arg, e) in expr.factors() {
        let ord = -symbol_pole(kind, arg, s0);
        let s = expand_xi(ctx, kind, arg, s0, ord + p)?;
        out = out.mul(&s.powi(e)?)?;
    }
    if !expr.de().is_zero() {
        out = out.mul(&disc_series(ctx, Gen::DiscE, Gen::LogDiscE, expr.de(), s0, p)?)?;
    }
    if !expr.df().is_zero() {
        out = out.mul(&disc_series(ctx, Gen::DiscF, Gen::LogDiscF, expr.df(), s0, p)?)?;
    }
    Ok(out.truncate(hi))
}

/// Single coefficient of `u^d` in the expansion of `expr` at `s0`.
pub fn expr_coeff<K: Coeffs>(ctx: &K, expr: &ZetaExpr, s0: Q, d: i32) -> Result<K::Elem> {
    Ok(expand_expr(ctx, expr, s0, d)?.coefficient(d)?)
}
