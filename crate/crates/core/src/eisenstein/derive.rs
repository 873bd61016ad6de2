use super::engine::{ConstKey, Engine, Rules};
use super::factors::{reflected, siegel_fe_factor, siegel_reflected};
use super::{EisError, EisSymbol, LinComb};
use crate::constants::{check_first_term, check_second_range};
use crate::rational::{q, qi};
use crate::scalar::{Coeffs, Scalar};
use crate::Result;

/// A constant together with the two sides it was read off from.
#[derive(Clone, Debug)]
pub struct Derived<T> {
    pub value: T,
    pub lhs: LinComb<T>,
    pub rhs: LinComb<T>,
}

/// One stage of the second term induction, as a relation `relation = 0`
/// among symbols of rank `n = 2r - j - 1`.
#[derive(Clone, Debug)]
pub struct SecondTermStage<T> {
    pub r: u32,
    pub j: u32,
    pub n: u32,
    pub relation: LinComb<T>,
    /// Every log-weighted part at exponent `r`, after the same rewrites.
    pub log_parts: Vec<(u32, LinComb<T>)>,
    /// Coefficients of `E^{(n,r)}_{-1}(r/2)`, `E^{(n,r-j-1)}_0((r-j-1)/2)`,
    /// `E^{(n,n)}_0((j+1)/2)` and `E^{(n,n)}_{-1}((j+1)/2)`.
    pub coef_a: T,
    pub coef_b: T,
    pub coef_c: T,
    pub coef_d: T,
    /// Terms outside those four symbols.
    pub rest: LinComb<T>,
}

impl<T: Scalar> SecondTermStage<T> {
    pub fn symbols(r: u32, j: u32) -> [EisSymbol; 4] {
        let n = 2 * r - j - 1;
        let t = r - j - 1;
        let at = q(j as i64 + 1, 2);
        [
            EisSymbol::e(n, r, -1, q(r as i64, 2)),
            EisSymbol::e(n, t, 0, q(t as i64, 2)),
            EisSymbol::e(n, n, 0, at),
            EisSymbol::e(n, n, -1, at),
        ]
    }

    /// `gamma_j`: the `E_{-1}` coefficient moved to the right-hand side.
    pub fn gamma(&self) -> T {
        self.coef_d.neg()
    }
}

fn only<T: Scalar>(l: &LinComb<T>, sym: EisSymbol, step: &str) -> Result<T> {
    if l.len() == 1 && l.symbols().next() == Some(&sym) {
        return Ok(l.coeff(&sym));
    }
    Err(EisError::Unexpected { step: step.to_string(), expected: sym.to_string(), found: l.to_string() }.into())
}

/// Main relation and its log-weighted parts.
type Step<T> = (LinComb<T>, Vec<(u32, LinComb<T>)>);

fn div<T: Scalar>(a: &T, b: &T) -> Result<T> {
    Ok(a.mul(&b.inv()?))
}

impl<K: Coeffs> Engine<'_, K> {
    /// `c_{n,r}` from the constant terms of `E^{(n,r)}_{-1}(r/2)` and
    /// `E^{(n,n)}_{-1}((n-2r)/2)` at the exponent `n-r`.
    pub fn derive_first_term(&self, n: u32, r: u32) -> Result<Derived<K::Elem>> {
        check_first_term(n, r)?;
        let (ni, ri) = (n as i64, r as i64);
        let lhs = self.constant_term(n, r, -1, q(ri, 2))?.extract(qi(ni - ri), 0);
        let rhs = self.constant_term(n, n, -1, q(ni - 2 * ri, 2))?.extract(qi(ni - ri), 0);
        let (lhs, rhs, sym) = if r == 1 {
            let res = Rules { siegel_residue: true, ..Rules::NONE };
            (lhs, self.rewrite_with(&rhs, res)?, EisSymbol::One)
        } else {
            let sym = EisSymbol::e(n - 1, n - 1, -1, q(ni - 2 * ri + 1, 2));
            (self.rewrite_with(&lhs, Rules::first_term_only())?, rhs, sym)
        };
        let x = only(&lhs, sym, "first term constant, left side")?;
        let y = only(&rhs, sym, "first term constant, right side")?;
        Ok(Derived { value: div(&x, &y)?, lhs, rhs })
    }

    /// `c_r` from the first term identity for `(2r+1, r)` at the exponent `r`.
    pub fn derive_boundary(&self, r: u32) -> Result<Derived<K::Elem>> {
        if r == 0 {
            return Err(crate::Error::Range("need r >= 1".into()));
        }
        let ri = r as i64;
        let lhs = self.constant_term(2 * r + 1, r, -1, q(ri, 2))?.extract(qi(ri), 0);
        let rhs = self.constant_term(2 * r + 1, 2 * r + 1, -1, q(1, 2))?.extract(qi(ri), 0);
        let x = only(&lhs, EisSymbol::e(2 * r, r, -1, q(ri, 2)), "boundary constant, left side")?;
        let y = only(&rhs, EisSymbol::e(2 * r, 2 * r, 0, qi(0)), "boundary constant, right side")?;
        let c = self.constant(ConstKey::FirstTerm { n: 2 * r + 1, r })?;
        Ok(Derived { value: c.mul(&div(&y, &x)?), lhs, rhs })
    }

    /// `d_{n,r}`: at `n = 2r-1` from the vanishing `E^{(2r,r)}_{-2}(r/2) = 0`,
    /// below that from the identity for `(n+1, r)`.
    pub fn derive_second_range(&self, n: u32, r: u32) -> Result<Derived<K::Elem>> {
        check_second_range(n, r)?;
        let (ni, ri) = (n as i64, r as i64);
        let half_r = q(ri, 2);
        let target = EisSymbol::e(n, n, -1, q(2 * ri - ni, 2));
        let unknown = EisSymbol::e(n, r, -2, half_r);
        if n == 2 * r - 1 {
            let raw = self.constant_term_formal(2 * r, r, -2, half_r)?.extract(qi(ri), 0);
            let rel = self.rewrite_with(&raw, Rules::first_term_only())?;
            if rel.len() != 2 {
                return Err(EisError::Unexpected {
                    step: "second range base".into(),
                    expected: format!("{unknown} and {target}"),
                    found: rel.to_string(),
                }
                .into());
            }
            let a = rel.coeff(&unknown);
            let b = rel.coeff(&target);
            return Ok(Derived { value: div(&b, &a)?.neg(), lhs: rel, rhs: LinComb::new() });
        }
        let lhs = self.constant_term(n + 1, r, -2, half_r)?.extract(qi(ri), 0);
        let rhs = self.constant_term(n + 1, n + 1, -1, q(2 * ri - ni - 1, 2))?.extract(qi(ri), 0);
        let x = only(&lhs, unknown, "second range step, left side")?;
        let y = only(&rhs, target, "second range step, right side")?;
        let d = self.constant(ConstKey::SecondRange { n: n + 1, r })?;
        Ok(Derived { value: d.mul(&div(&y, &x)?), lhs, rhs })
    }

    /// One induction step: constant term, extraction at `||a||^r`, the Siegel
    /// functional equation and the first term rewrites.
    fn induction_step(&self, rel: &LinComb<K::Elem>, r: u32) -> Result<Step<K::Elem>> {
        let ct = self.constant_term_of(rel)?;
        let e = qi(r as i64);
        let main = self.rewrite(&self.fe_normalize(&ct.extract(e, 0))?)?;
        let mut logs = Vec::new();
        for (e2, k) in ct.basis() {
            if e2 == e && k > 0 {
                logs.push((k, self.rewrite(&self.fe_normalize(&ct.extract(e, k))?)?));
            }
        }
        Ok((main, logs))
    }

    /// The second term induction from the boundary identity, through `j_max`.
    pub fn second_term_chain(&self, r: u32, j_max: u32) -> Result<Vec<SecondTermStage<K::Elem>>> {
        if r < 2 || j_max > r - 2 {
            return Err(crate::Error::Range(format!("need r >= 2 and 0 <= j <= r-2, got r = {r}, j = {j_max}")));
        }
        let ri = r as i64;
        let c_r = self.constant(ConstKey::Boundary { r })?;
        let mut rel = LinComb::single(EisSymbol::e(2 * r, r, -1, q(ri, 2)), K::Elem::one());
        rel.add_term(EisSymbol::e(2 * r, 2 * r, 0, qi(0)), c_r.neg());
        let mut out = Vec::new();
        for j in 0..=j_max {
            let (next, log_parts) = self.induction_step(&rel, r)?;
            let syms = SecondTermStage::<K::Elem>::symbols(r, j);
            let mut rest = next.clone();
            for s in &syms {
                rest.add_term(*s, next.coeff(s).neg());
            }
            out.push(SecondTermStage {
                r,
                j,
                n: 2 * r - j - 1,
                coef_a: next.coeff(&syms[0]),
                coef_b: next.coeff(&syms[1]),
                coef_c: next.coeff(&syms[2]),
                coef_d: next.coeff(&syms[3]),
                relation: next.clone(),
                log_parts,
                rest,
            });
            rel = next;
        }
        Ok(out)
    }

    /// `1 + beta_{2r-1,1}(-1/2) H^{(2r)}_{-1}(0)`.
    pub fn boundary_two(&self, r: u32) -> Result<K::Elem> {
        if r < 2 {
            return Err(crate::Error::Range(format!("need r >= 2, got {r}")));
        }
        let b = self.factor_coeff(&siegel_fe_factor(2 * r - 1), q(-1, 2), 1)?;
        let h = self.factor_coeff(&siegel_reflected(2 * r)?, qi(0), -1)?;
        Ok(K::Elem::one().add(&b.mul(&h)))
    }

    /// `prod_{i=0}^{j} F^{(2r-i,r)}_0(r/2)`.
    pub fn middle_product(&self, r: u32, j: u32) -> Result<K::Elem> {
        let mut acc = K::Elem::one();
        for i in 0..=j {
            acc = acc.mul(&self.factor_coeff(&super::factors::middle(2 * r - i, r)?, q(r as i64, 2), 0)?);
        }
        Ok(acc)
    }

    /// `prod_{i=0}^{j} G^{(2r-i,r-i)}((r-i)/2)`, the `i = 0` factor read at order `-1`.
    pub fn reflected_product(&self, r: u32, j: u32) -> Result<K::Elem> {
        let mut acc = K::Elem::one();
        for i in 0..=j {
            let d = if i == 0 { -1 } else { 0 };
            acc = acc.mul(&self.factor_coeff(&reflected(2 * r - i, r - i)?, q((r - i) as i64, 2), d)?);
        }
        Ok(acc)
    }
}
