use std::fmt;

use super::AlgebraError;
use crate::rational::{fmt_q, q, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum XiKind {
    /// `xi_F`
    F,
    /// `xi_F(., eta)`
    Feta,
}

impl XiKind {
    pub fn name(self) -> &'static str {
        match self {
            XiKind::F => "xiF",
            XiKind::Feta => "xiFeta",
        }
    }

    /// Kind selected by the parity of a power of `eta`.
    pub fn from_eta_power(p: i64) -> Self {
        if p.rem_euclid(2) == 0 {
            XiKind::F
        } else {
            XiKind::Feta
        }
    }
}

/// A free generator of the coefficient field.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Gen {
    /// Order `-1` is the residue at the pole, only for `F` at 1. At the pole,
    /// order `k >= 0` is the k-th Laurent coefficient; elsewhere it is the k-th
    /// derivative.
    Xi {
        kind: XiKind,
        arg: Q,
        order: i32,
    },
    DiscE,
    DiscF,
    LogDiscE,
    LogDiscF,
}

impl Gen {
    pub fn residue() -> Gen {
        Gen::Xi { kind: XiKind::F, arg: q(1, 1), order: -1 }
    }

    pub fn is_pole_data(&self) -> bool {
        matches!(self, Gen::Xi { kind: XiKind::F, arg, .. } if *arg == q(1, 1))
    }

    /// Odd derivatives at the centre of symmetry vanish identically.
    pub fn vanishes(&self) -> bool {
        matches!(self, Gen::Xi { arg, order, .. } if *arg == q(1, 2) && order % 2 != 0)
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::Xi { kind, arg, order } if kind == XiKind::F && arg == q(1, 1) => {
                if order == -1 {
                    write!(f, "ResF")
                } else {
                    write!(f, "polF({order})")
                }
            }
            Gen::Xi { kind, arg, order } => {
                write!(f, "{}{}({})", kind.name(), "'".repeat(order as usize), fmt_q(arg))
            }
            Gen::DiscE => write!(f, "DE"),
            Gen::DiscF => write!(f, "DF"),
            Gen::LogDiscE => write!(f, "logDE"),
            Gen::LogDiscF => write!(f, "logDF"),
        }
    }
}

/// Move `(kind, q, k)` to the representative `max(q, 1 - q)`.
///
/// Returns the generator and the sign `(-1)^k` picked up under `s -> 1 - s`
/// when the point is reflected. At `q = 1/2` odd orders report `-1`: the point
/// is its own mirror, so such a generator equals its own negative.
pub fn canonicalize(kind: XiKind, at: Q, k: i32) -> Result<(Gen, i64), AlgebraError> {
    let mirror = q(1, 1) - at;
    let reflect = at < mirror || (at == mirror && k % 2 != 0);
    let arg = if at < mirror { mirror } else { at };
    let pole = kind == XiKind::F && arg == q(1, 1);
    if k == -1 && kind == XiKind::Feta {
        return Err(AlgebraError::NoPole(at));
    }
    if k < -1 || (k == -1 && !pole) {
        return Err(AlgebraError::BadOrder { kind, q: at, order: k });
    }
    let scale = if reflect && k % 2 != 0 { -1 } else { 1 };
    Ok((Gen::Xi { kind, arg, order: k }, scale))
}
