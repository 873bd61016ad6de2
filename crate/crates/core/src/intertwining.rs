//! Roots of `U(n,n)`, the two Weyl elements behind the constant-term
//! formula, and the rank-one assembly of their spherical intertwining
//! constants.
//!
//! Weyl elements act on the characters `x_1..x_n` through signed
//! permutations of the `2n` standard basis positions; position `k` carries
//! `x_k` and position `n+k` carries `-x_k`. The matrices themselves are
//! never stored.
//!
//! Split-place conventions such as `zeta_{E_v} = zeta_{F_v}^2` are folded into
//! the global completed functions and do not appear here.

use std::collections::BTreeSet;
use std::fmt;

use crate::algebra::XiKind;
use crate::eisenstein::{middle, reflected, siegel_reflected};
use crate::laurent::{AffineArg, AffineExp, ZetaExpr};
use crate::rational::{q, qi, Q};
use crate::{Error, Result};

/// A positive root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Root {
    /// `x_i - x_j`, `i < j`.
    Minus(u32, u32),
    /// `x_i + x_j`, `i < j`.
    Plus(u32, u32),
    /// `2 x_k`.
    Double(u32),
}

impl Root {
    /// Coordinates in the basis `x_1..x_n`.
    pub fn vector(&self, n: u32) -> Vec<i64> {
        let mut v = vec![0; n as usize];
        match *self {
            Root::Minus(i, j) => {
                v[i as usize - 1] = 1;
                v[j as usize - 1] = -1;
            }
            Root::Plus(i, j) => {
                v[i as usize - 1] = 1;
                v[j as usize - 1] = 1;
            }
            Root::Double(k) => v[k as usize - 1] = 2,
        }
        v
    }

    /// `x_a + sign * x_b` in normal form, for `a != b`.
    pub fn pair(a: u32, b: u32, sign: i64) -> Root {
        match (sign > 0, a < b) {
            (true, true) => Root::Plus(a, b),
            (true, false) => Root::Plus(b, a),
            (false, _) => Root::Minus(a.min(b), a.max(b)),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Minus(i, j) => write!(f, "x{i}-x{j}"),
            Root::Plus(i, j) => write!(f, "x{i}+x{j}"),
            Root::Double(k) => write!(f, "2x{k}"),
        }
    }
}

/// All positive roots of type `C_n`.
pub fn positive_roots(n: u32) -> Vec<Root> {
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            out.push(Root::Minus(i, j));
            out.push(Root::Plus(i, j));
        }
        out.push(Root::Double(i));
    }
    out
}

fn is_positive(v: &[i64]) -> bool {
    v.iter().find(|&&c| c != 0).is_some_and(|&c| c > 0)
}

/// A permutation of the `2n` basis positions commuting with `k <-> n+k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedPerm {
    n: u32,
    /// `image[k]` is where position `k` goes (0-based).
    image: Vec<usize>,
}

impl SignedPerm {
    pub fn identity(n: u32) -> Self {
        SignedPerm { n, image: (0..2 * n as usize).collect() }
    }

    fn from_images(n: u32, image: Vec<usize>) -> Result<Self> {
        let nn = n as usize;
        let p = SignedPerm { n, image };
        let bijective = p.image.iter().collect::<BTreeSet<_>>().len() == 2 * nn;
        let paired = (0..nn).all(|k| (p.image[k] + nn) % (2 * nn) == p.image[k + nn]);
        if bijective && paired {
            Ok(p)
        } else {
            Err(Error::Range(format!("not a signed permutation of rank {n}: {:?}", p.image)))
        }
    }

    fn swapping(n: u32, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut image: Vec<usize> = (0..2 * n as usize).collect();
        for &(a, b) in pairs {
            image.swap(a, b);
        }
        Self::from_images(n, image)
    }

    /// Swaps positions `1 <-> r+1` in both blocks.
    pub fn w1(n: u32, r: u32) -> Result<Self> {
        if r == 0 || r >= n {
            return Err(Error::Range(format!("w1 needs 1 <= r < n, got (n,r) = ({n},{r})")));
        }
        let (nn, rr) = (n as usize, r as usize);
        Self::swapping(n, &[(0, rr), (nn, nn + rr)])
    }

    /// Swaps positions `1 <-> n+1`.
    pub fn w2(n: u32, r: u32) -> Result<Self> {
        if r == 0 || r > n {
            return Err(Error::Range(format!("w2 needs 1 <= r <= n, got (n,r) = ({n},{r})")));
        }
        Self::swapping(n, &[(0, n as usize)])
    }

    /// Sends `e_1 -> e_r` and `e_j -> e_{j-1}` for `2 <= j <= r`, in both blocks.
    pub fn cycle(n: u32, r: u32) -> Result<Self> {
        let (nn, rr) = (n as usize, r as usize);
        let mut image: Vec<usize> = (0..2 * nn).collect();
        for block in [0, nn] {
            image[block] = block + rr - 1;
            for j in 1..rr {
                image[block + j] = block + j - 1;
            }
        }
        Self::from_images(n, image)
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &Self) -> Self {
        SignedPerm { n: self.n, image: first.image.iter().map(|&k| self.image[k]).collect() }
    }

    /// `w^{-1} x_i` for every `i`, as signed indices.
    fn inverse_on_characters(&self) -> Vec<(u32, i64)> {
        let nn = self.n as usize;
        let mut pre = vec![0; 2 * nn];
        for (k, &img) in self.image.iter().enumerate() {
            pre[img] = k;
        }
        (0..nn).map(|i| if pre[i] < nn { (pre[i] as u32, 1) } else { ((pre[i] - nn) as u32, -1) }).collect()
    }

    /// `w^{-1}` applied to a character vector.
    pub fn inverse_apply(&self, v: &[i64]) -> Vec<i64> {
        let mut out = vec![0; v.len()];
        for (i, (k, sign)) in self.inverse_on_characters().into_iter().enumerate() {
            out[k as usize] += sign * v[i];
        }
        out
    }
}

/// Which Weyl element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WeylElem {
    W1,
    W2,
}

pub fn weyl_element(w: WeylElem, n: u32, r: u32) -> Result<SignedPerm> {
    let base = match w {
        WeylElem::W1 => SignedPerm::w1(n, r)?,
        WeylElem::W2 => SignedPerm::w2(n, r)?,
    };
    Ok(SignedPerm::cycle(n, r)?.compose(&base))
}

/// `{alpha > 0 : w^{-1} alpha < 0}` by enumeration.
pub fn sigma_plus_enumerated(w: WeylElem, n: u32, r: u32) -> Result<BTreeSet<Root>> {
    let p = weyl_element(w, n, r)?;
    Ok(positive_roots(n).into_iter().filter(|a| !is_positive(&p.inverse_apply(&a.vector(n)))).collect())
}

/// The same set from its closed description.
pub fn sigma_plus(w: WeylElem, n: u32, r: u32) -> Result<BTreeSet<Root>> {
    if r == 0 || r > n || (w == WeylElem::W1 && r == n) {
        return Err(Error::Range(format!("no Weyl element {w:?} for (n,r) = ({n},{r})")));
    }
    let mut out = BTreeSet::new();
    match w {
        WeylElem::W1 => out.extend((1..=r).map(|i| Root::Minus(i, r + 1))),
        WeylElem::W2 => {
            out.extend((1..r).map(|i| Root::Plus(i, r)));
            out.insert(Root::Double(r));
            for j in r + 1..=n {
                out.insert(Root::Plus(r, j));
                out.insert(Root::Minus(r, j));
            }
        }
    }
    Ok(out)
}

/// Exponent of the inducing character at index `i`:
/// `s + i - (r+1)/2` for `i <= r`, `-n + i - 1/2` beyond.
pub fn torus_exponent(n: u32, r: u32, i: u32) -> AffineExp {
    let (ni, ri, ii) = (n as i64, r as i64, i as i64);
    if i <= r {
        AffineExp { a: qi(ii) - q(ri + 1, 2), b: qi(1) }
    } else {
        AffineExp { a: qi(ii - ni) - q(1, 2), b: qi(0) }
    }
}

/// Field of a rank-one factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LocalField {
    E,
    F,
}

/// `vol * zeta_K(num) / zeta_K(num + 1)` with unnormalized `zeta`, the volume
/// being `D_K^{-1/2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankOne {
    pub field: LocalField,
    pub num: AffineArg,
}

impl RankOne {
    pub fn den(&self) -> AffineArg {
        AffineArg::new(self.num.a + 1, self.num.b)
    }

    /// The factor in completed form, `zeta_K(w) = D_K^{-w/2} xi_K(w)`.
    pub fn to_expr(&self) -> ZetaExpr {
        let (num, den) = (self.num, self.den());
        let half = q(1, 2);
        let disc = AffineExp { a: -half - q(1, 2) * num.a + q(1, 2) * den.a, b: -q(num.b, 2) + q(den.b, 2) };
        match self.field {
            LocalField::E => ZetaExpr::one().ratio_e(num, den).with_de(disc),
            LocalField::F => ZetaExpr::one().ratio(XiKind::F, num, den).with_df(disc),
        }
    }
}

fn to_arg(e: AffineExp) -> Result<AffineArg> {
    if !e.b.is_integer() || e.b == Q::from_integer(0) {
        return Err(Error::Range(format!("pairing {e} does not depend on s")));
    }
    Ok(AffineArg::new(e.a, e.b.to_integer()))
}

/// Rank-one factor of `alpha`, read off the pairing of the inducing
/// character with the coroot.
pub fn rank_one_factor(alpha: Root, n: u32, r: u32) -> Result<RankOne> {
    let in_sets = [WeylElem::W1, WeylElem::W2].into_iter().any(|w| sigma_plus(w, n, r).is_ok_and(|s| s.contains(&alpha)));
    if !in_sets {
        return Err(Error::Range(format!("root {alpha} is not inverted by either Weyl element at ({n},{r})")));
    }
    let e = |i: u32| torus_exponent(n, r, i);
    let sum = |a: AffineExp, b: AffineExp, sign: i64| AffineExp { a: a.a + b.a * sign, b: a.b + b.b * sign };
    Ok(match alpha {
        Root::Minus(i, j) => RankOne { field: LocalField::E, num: to_arg(sum(e(i), e(j), -1))? },
        Root::Plus(i, j) => RankOne { field: LocalField::E, num: to_arg(sum(e(i), e(j), 1))? },
        Root::Double(k) => RankOne { field: LocalField::F, num: to_arg(sum(e(k), e(k), 1))? },
    })
}

/// Product of the rank-one factors of `Sigma^+(w)` in completed form.
pub fn assemble(w: WeylElem, n: u32, r: u32) -> Result<ZetaExpr> {
    let mut out = ZetaExpr::one();
    for a in sigma_plus(w, n, r)? {
        out = out.mul(&rank_one_factor(a, n, r)?.to_expr());
    }
    Ok(out)
}

/// `(c_1, c_2)`; `c_1` is absent when `r = n`.
pub fn assemble_c1_c2(n: u32, r: u32) -> Result<(Option<ZetaExpr>, ZetaExpr)> {
    let c1 = if r < n { Some(assemble(WeylElem::W1, n, r)?) } else { None };
    Ok((c1, assemble(WeylElem::W2, n, r)?))
}

/// The quotients the constant-term formula uses for the same `(n, r)`.
pub fn expected_c1_c2(n: u32, r: u32) -> Result<(Option<ZetaExpr>, ZetaExpr)> {
    let c1 = if r < n { Some(middle(n, r)?) } else { None };
    let c2 = if r == n && n >= 2 { siegel_reflected(n)? } else { reflected(n, r)? };
    Ok((c1, c2))
}
