//! Closed forms of the first and second term constants, their recursions,
//! and the auxiliary normalizations.
//!
//! Closed forms are exact [`FieldElem`]s. The recursions are generic over the
//! coefficient context so the same code runs symbolically and numerically.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::FieldElem;
use crate::eisenstein::{middle, reflected, siegel_fe_factor, ConstKey};
use crate::laurent::{expr_coeff, AffineArg, AffineExp, ZetaExpr};
use crate::rational::{big, q, qi, Q};
use crate::scalar::{Coeffs, Scalar};
use crate::{Error, Result};

fn xe(at: i64) -> FieldElem {
    FieldElem::xi_e(qi(at))
}

fn xeta(at: i64, p: i64) -> FieldElem {
    FieldElem::xi_eta(qi(at), p)
}

fn ratio(num: FieldElem, den: FieldElem) -> FieldElem {
    num.div(&den).expect("completed zeta values are nonzero generators")
}

fn prod(it: impl IntoIterator<Item = FieldElem>) -> FieldElem {
    it.into_iter().fold(FieldElem::one(), |acc, x| acc.mul(&x))
}

fn half() -> BigRational {
    big(q(1, 2))
}

pub fn check_first_term(n: u32, r: u32) -> Result<()> {
    if r >= 1 && n >= 2 * r + 1 {
        Ok(())
    } else {
        Err(Error::Range(format!("need r >= 1 and n >= 2r+1, got (n,r) = ({n},{r})")))
    }
}

pub fn check_second_range(n: u32, r: u32) -> Result<()> {
    if r >= 2 && n > r && n < 2 * r {
        Ok(())
    } else {
        Err(Error::Range(format!("need r+1 <= n <= 2r-1, got (n,r) = ({n},{r})")))
    }
}

/// Residue of the Siegel series on `U(n,n)` at `n/2`.
pub fn siegel_residue(n: u32) -> FieldElem {
    let n = n as i64;
    prod((0..n).map(|i| ratio(xeta(i + 1, i), xeta(2 * n - i, i)))).scale(&half())
}

/// First term constant for `n >= 2r+1`.
pub fn c_nr(n: u32, r: u32) -> Result<FieldElem> {
    check_first_term(n, r)?;
    let (n, r) = (n as i64, r as i64);
    let a = prod((1..=r).map(|i| ratio(xeta(i, i - 1), xeta(r + i, r + i))));
    let b = prod((1..=r).map(|i| ratio(xe(n - 2 * r + i), xe(n - i + 1))));
    let c = prod((0..n - r).map(|i| ratio(xeta(2 * n - 2 * r - i, i), xeta(i + 1, i))));
    Ok(a.mul(&b).mul(&c))
}

/// First term constant on the boundary `n = 2r`.
pub fn c_r(r: u32) -> Result<FieldElem> {
    if r == 0 {
        return Err(Error::Range("need r >= 1".into()));
    }
    let r = r as i64;
    Ok(prod((1..=r).map(|i| ratio(xe(i), xe(r + i)))).scale(&half()))
}

/// Constant of the leading identity in the second term range, unrolled.
pub fn d_nr(n: u32, r: u32) -> Result<FieldElem> {
    check_second_range(n, r)?;
    let (ni, ri) = (n as i64, r as i64);
    let base = c_nr(2 * r - 1, r - 1)?.mul(&ratio(xe(1).mul(&xeta(2 * ri - 1, 0)), xe(2 * ri - 1).mul(&xeta(2 * ri, 0))));
    Ok(base.mul(&prod((ni + 1..2 * ri).map(|m| ratio(xe(m), xe(m - ri))))))
}

/// `prod_{i=1}^r xi_E(i) / xi_E(n-i+1)`.
pub fn xi_e_window(n: u32, r: u32) -> FieldElem {
    let (n, r) = (n as i64, r as i64);
    prod((1..=r).map(|i| ratio(xe(i), xe(n - i + 1))))
}

pub fn a_nr(n: u32, r: u32) -> Result<FieldElem> {
    check_first_term(n, r)?;
    let (n, r) = (n as i64, r as i64);
    let p = prod((0..n).map(|i| ratio(xeta(i + 1 - 2 * r, i), xeta(2 * n - 2 * r - i, i))));
    Ok(FieldElem::disc_e(q(n * (2 * r - n), 2)).mul(&p))
}

pub fn b_nr(n: u32, r: u32) -> Result<FieldElem> {
    Ok(xi_e_window(n, r).div(&d_nr(n, r)?)?)
}

/// Coefficient of the complementary term in the weak second term identity.
pub fn weak2(n: u32, r: u32) -> Result<FieldElem> {
    check_second_range(n, r)?;
    let (n, r) = (n as i64, r as i64);
    let p = prod((0..2 * r - n).map(|i| ratio(xe(-i), xeta(2 * r - 2 * i - 1, 1).mul(&xeta(2 * r - 2 * i, 0)))));
    Ok(FieldElem::disc_e(q(n * (n - 2 * r), 2)).mul(&p))
}

/// `lambda_{n,r}(s) = DE^{-r(s+n-r/2)/2} prod_{i=1}^r xi_E(s+n-r/2-i+1) / xi_E(i)`.
pub fn lambda(n: u32, r: u32) -> ZetaExpr {
    let (nq, rq) = (qi(n as i64), qi(r as i64));
    let shift = nq - rq / 2;
    let mut e = ZetaExpr::one().with_de(AffineExp { a: -rq * shift / 2, b: -rq / 2 });
    for i in 1..=r as i64 {
        e = e.with_e(AffineArg::s_plus(shift - i + 1), 1);
    }
    let c = prod((1..=r as i64).map(xe));
    e.times(&FieldElem::one().div(&c).expect("nonzero"))
}

/// Order zero value of `lambda_{n,r}` at `r/2`.
pub fn lambda_value(n: u32, r: u32) -> FieldElem {
    let (ni, ri) = (n as i64, r as i64);
    FieldElem::disc_e(q(-ri * ni, 2)).mul(&prod((1..=ri).map(|i| ratio(xe(ni - i + 1), xe(i)))))
}

/// Value at 0 of the spherical Schwartz function on `V^n` with `dim V = 2r`.
pub fn phi0(n: u32, r: u32) -> FieldElem {
    FieldElem::disc_e(q(-(r as i64) * n as i64, 2))
}

/// The same on the complementary space of dimension `2(n-r)`.
pub fn phi0_c(n: u32, r: u32) -> FieldElem {
    phi0(n, n - r)
}

/// Siegel functional equation factor.
pub fn beta(n: u32) -> ZetaExpr {
    siegel_fe_factor(n)
}

/// `prod_{i=n-r+1}^{r} xi_E(i) / xi_E(n-i+1)`, which telescopes to 1.
pub fn telescope(n: u32, r: u32) -> Result<FieldElem> {
    if !(r >= 1 && n > r && n < 2 * r) {
        return Err(Error::Range(format!("need 1 <= r < n <= 2r-1, got (n,r) = ({n},{r})")));
    }
    let (n, r) = (n as i64, r as i64);
    Ok(prod((n - r + 1..=r).map(|i| ratio(xe(i), xe(n - i + 1)))))
}

/// Closed form behind a rewrite key.
pub fn closed(key: ConstKey) -> Result<FieldElem> {
    match key {
        ConstKey::FirstTerm { n, r } => c_nr(n, r),
        ConstKey::Boundary { r } => c_r(r),
        ConstKey::SecondRange { n, r } => d_nr(n, r),
        ConstKey::SiegelResidue { n } => Ok(siegel_residue(n)),
    }
}

/// `c_{n,r}` by descending `c_{n,r} = c_{n-1,r-1} G_0` down to
/// `c_{n,1} = G_{-1} / residue`.
pub fn c_nr_recursive<K: Coeffs>(ctx: &K, n: u32, r: u32) -> Result<K::Elem> {
    check_first_term(n, r)?;
    if r == 1 {
        let g = expr_coeff(ctx, &reflected(n, 1)?, q(1, 2), -1)?;
        let res = ctx.embed(&siegel_residue(n - 1))?;
        return Ok(g.mul(&res.inv()?));
    }
    let g = expr_coeff(ctx, &reflected(n, r)?, q(r as i64, 2), 0)?;
    Ok(c_nr_recursive(ctx, n - 1, r - 1)?.mul(&g))
}

/// `c_r` through `(c_{2r+1,r}/2) xi_E(1) xi_F(2r+1) / (xi_E(r+1) xi_F(2r+2))`.
pub fn c_r_recursive<K: Coeffs>(ctx: &K, r: u32) -> Result<K::Elem> {
    let ri = r as i64;
    let c = c_nr_recursive(ctx, 2 * r + 1, r)?;
    let f = ratio(xe(1).mul(&xeta(2 * ri + 1, 0)), xe(ri + 1).mul(&xeta(2 * ri + 2, 0))).scale(&half());
    Ok(c.mul(&ctx.embed(&f)?))
}

/// `d_{n,r}` from the base `-c_{2r-1,r-1} G_{-1} / F_0` and the step
/// `d_{n-1,r} = d_{n,r} / F_0`, with every factor expanded.
pub fn d_nr_recursive<K: Coeffs>(ctx: &K, n: u32, r: u32) -> Result<K::Elem> {
    check_second_range(n, r)?;
    let at = q(r as i64, 2);
    let f0 = |m: u32| -> Result<K::Elem> { expr_coeff(ctx, &middle(m, r)?, at, 0) };
    let g = expr_coeff(ctx, &reflected(2 * r, r)?, at, -1)?;
    let c = c_nr_recursive(ctx, 2 * r - 1, r - 1)?;
    let mut d = c.mul(&g).mul(&f0(2 * r)?.inv()?).neg();
    for m in (n + 1..2 * r).rev() {
        d = d.mul(&f0(m)?.inv()?);
    }
    Ok(d)
}

/// Value of the unramified local factor.
#[derive(Clone, Debug, PartialEq)]
pub enum LocalValue {
    /// Every exponent is an integer.
    Exact(BigRational),
    Approx(f64),
}

/// `prod_{i=0}^{n-1} (1 - eps^i q^{-(2s+n-i)})^{-1}`, `eps = 1` split, `-1` inert.
pub fn d_local(n: u32, s: Q, qv: u64, split: bool) -> Result<LocalValue> {
    if qv < 2 {
        return Err(Error::Range(format!("residue field size must be at least 2, got {qv}")));
    }
    let two_s = s * 2;
    let one = BigRational::one();
    let mut exact = two_s.is_integer().then(BigRational::one);
    let mut approx = 1.0f64;
    for i in 0..n as i64 {
        let eps: i64 = if split || i % 2 == 0 { 1 } else { -1 };
        let e = two_s + (n as i64 - i);
        if e.is_zero() && eps == 1 {
            return Err(Error::Range(format!("local factor {i} has a pole at s = {s}")));
        }
        approx /= 1.0 - eps as f64 * (qv as f64).powf(-(*e.numer() as f64 / *e.denom() as f64));
        if let Some(x) = exact.as_mut() {
            let k = e.to_integer();
            let base = BigRational::from_integer(qv.into());
            let p = if k >= 0 { base.pow(k as i32).recip() } else { base.pow((-k) as i32) };
            *x = &*x / (&one - BigRational::from_integer(eps.into()) * p);
        }
    }
    Ok(match exact {
        Some(x) => LocalValue::Exact(x),
        None => LocalValue::Approx(approx),
    })
}
