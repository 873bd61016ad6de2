use crate::algebra::XiKind;
use crate::laurent::{AffineArg, ZetaExpr};
use crate::rational::{q, qi, Q};
use crate::Error;

/// Which zeta quotient of the constant-term formula.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Quotient {
    /// Coefficient of the middle (`||a||^t`) term.
    Middle,
    /// Coefficient of the reflected (`-s`) term, `1 <= t < m`.
    Reflected,
    /// Coefficient of the reflected term in the Siegel case.
    SiegelReflected,
}

fn s_plus(a: Q) -> AffineArg {
    AffineArg::s_plus(a)
}

fn two_s_plus(a: Q) -> AffineArg {
    AffineArg::two_s_plus(a)
}

/// `xi_E(s + n - 3r/2) / xi_E(s + n - r/2)`, for `1 <= r < n`.
pub fn middle(n: u32, r: u32) -> Result<ZetaExpr, Error> {
    if r == 0 || r >= n {
        return Err(Error::Range(format!("middle quotient needs 1 <= r < n, got ({n},{r})")));
    }
    let (n, r) = (qi(n as i64), qi(r as i64));
    Ok(ZetaExpr::one().ratio_e(s_plus(n - r * q(3, 2)), s_plus(n - r / 2)))
}

/// `xi_E(2s)/xi_E(2s+r-1) * xi_F(2s+r-1)/xi_F(2s+r) * xi_E(s-n+3r/2)/xi_E(s+n-r/2)`,
/// for `1 <= r <= n`; at `r = n` this is the Siegel quotient.
pub fn reflected(n: u32, r: u32) -> Result<ZetaExpr, Error> {
    if r == 0 || r > n {
        return Err(Error::Range(format!("reflected quotient needs 1 <= r <= n, got ({n},{r})")));
    }
    let (n, r) = (qi(n as i64), qi(r as i64));
    Ok(ZetaExpr::one()
        .ratio_e(two_s_plus(qi(0)), two_s_plus(r - 1))
        .ratio(XiKind::F, two_s_plus(r - 1), two_s_plus(r))
        .ratio_e(s_plus(r * q(3, 2) - n), s_plus(n - r / 2)))
}

/// `xi_E(2s)/xi_E(2s+n-1) * xi_F(2s+n-1)/xi_F(2s+n)`, for `n >= 2`.
pub fn siegel_reflected(n: u32) -> Result<ZetaExpr, Error> {
    if n < 2 {
        return Err(Error::Range(format!("Siegel quotient needs n >= 2, got {n}")));
    }
    let n = qi(n as i64);
    Ok(ZetaExpr::one().ratio_e(two_s_plus(qi(0)), two_s_plus(n - 1)).ratio(XiKind::F, two_s_plus(n - 1), two_s_plus(n)))
}

pub fn quotient(which: Quotient, n: u32, r: u32) -> Result<ZetaExpr, Error> {
    match which {
        Quotient::Middle => middle(n, r),
        Quotient::Reflected => reflected(n, r),
        Quotient::SiegelReflected => siegel_reflected(n),
    }
}

/// Factor of the Siegel functional equation `E(s) = beta_n(s) E(-s)`:
/// `prod_{i=1}^n xi_F(2s-n+i, eta^{i-1}) / xi_F(2s+n+1-i, eta^{i-1})`.
pub fn siegel_fe_factor(n: u32) -> ZetaExpr {
    let ni = n as i64;
    (1..=ni).fold(ZetaExpr::one(), |acc, i| {
        let kind = XiKind::from_eta_power(i - 1);
        acc.ratio(kind, two_s_plus(qi(i - ni)), two_s_plus(qi(ni + 1 - i)))
    })
}
