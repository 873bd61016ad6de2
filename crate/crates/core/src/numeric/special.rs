//! Real special functions at a fixed working precision.

use std::collections::HashMap;
use std::sync::OnceLock;

use astro_float::{BigFloat, Consts};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::real::{Real, RM};
use super::NumericError;
use crate::rational::Q;

const BERNOULLI_MAX: usize = 90;

/// Exact `B_0 .. B_{2*BERNOULLI_MAX}`.
fn bernoulli() -> &'static [BigRational] {
    static B: OnceLock<Vec<BigRational>> = OnceLock::new();
    B.get_or_init(|| {
        let m_max = 2 * BERNOULLI_MAX;
        let mut b: Vec<BigRational> = Vec::with_capacity(m_max + 1);
        b.push(BigRational::one());
        // binomial row C(m+1, j), updated in place
        let mut row: Vec<BigInt> = vec![BigInt::one(), BigInt::one()];
        for m in 1..=m_max {
            let mut next = vec![BigInt::one(); m + 2];
            for j in 1..=m {
                next[j] = &row[j - 1] + &row[j];
            }
            row = next;
            if m > 1 && m % 2 == 1 {
                b.push(BigRational::zero());
                continue;
            }
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    acc += bj * BigRational::from_integer(row[j].clone());
                }
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m as i64 + 1)));
        }
        b
    })
}

/// Evaluator for `zeta`, Hurwitz zeta, `Gamma` and the completed functions
/// of `Q` and of the character of conductor 4.
pub struct Evaluator {
    bits: usize,
    digits: usize,
    cc: Consts,
    ln_int: HashMap<u64, BigFloat>,
    pi: BigFloat,
    ln_pi: BigFloat,
    ln2: BigFloat,
    /// `B_{2k} / (2k)!`
    em: Vec<BigFloat>,
    /// `B_{2k} / (2k (2k - 1))`
    stirling: Vec<BigFloat>,
}

impl Evaluator {
    pub fn new(bits: usize) -> Result<Self, NumericError> {
        let mut cc = Consts::new().map_err(|e| NumericError::Backend(format!("{e:?}")))?;
        let pi = cc.pi(bits, RM);
        let ln_pi = pi.ln(bits, RM, &mut cc);
        let ln2 = cc.ln_2(bits, RM);
        let b = bernoulli();
        let mut em = Vec::new();
        let mut stirling = Vec::new();
        let mut fact = BigInt::one();
        for k in 1..=BERNOULLI_MAX {
            let n = 2 * k as i64;
            fact *= BigInt::from(n - 1) * BigInt::from(n);
            let b2k = &b[2 * k];
            em.push(Real::from_big_rational(&(b2k / BigRational::from_integer(fact.clone())), bits).raw().clone());
            let st = b2k / BigRational::from_integer(BigInt::from(n * (n - 1)));
            stirling.push(Real::from_big_rational(&st, bits).raw().clone());
        }
        let digits = (bits as f64 * std::f64::consts::LOG10_2) as usize;
        Ok(Evaluator { bits, digits, cc, ln_int: HashMap::new(), pi, ln_pi, ln2, em, stirling })
    }

    pub fn bits(&self) -> usize {
        self.bits
    }

    fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, self.bits)
    }

    pub fn q(&self, x: Q) -> BigFloat {
        Real::from_q(x, self.bits).raw().clone()
    }

    fn ln_u(&mut self, n: u64) -> BigFloat {
        if let Some(v) = self.ln_int.get(&n) {
            return v.clone();
        }
        let v = BigFloat::from_u64(n, self.bits).ln(self.bits, RM, &mut self.cc);
        self.ln_int.insert(n, v.clone());
        v
    }

    fn ln_q(&mut self, x: Q) -> BigFloat {
        let a = self.ln_u(*x.numer() as u64);
        let b = self.ln_u(*x.denom() as u64);
        a.sub(&b, self.bits, RM)
    }

    fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(self.bits, RM, &mut self.cc)
    }

    fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.bits, RM)
    }

    fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.bits, RM)
    }

    fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.bits, RM)
    }

    fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.bits, RM)
    }

    fn negligible(&self, term: &BigFloat, against: &BigFloat) -> bool {
        if term.is_zero() {
            return true;
        }
        let te = term.exponent().unwrap_or(0) as i64;
        let ae = if against.is_zero() { 0 } else { against.exponent().unwrap_or(0) as i64 };
        te < ae.max(0) - self.bits as i64 - 4
    }

    /// Euler-Maclaurin pieces for `zeta(s, a)`: returns `(S, P)` with
    /// `zeta(s, a) = S + P / (s - 1)`, and the cut-off point `N + a`.
    fn em_parts(&mut self, s: Q, a: Q) -> Result<(BigFloat, BigFloat, Q), NumericError> {
        let sabs = s.numer().unsigned_abs() / s.denom().unsigned_abs() + 1;
        let n_terms = self.digits as u64 + sabs + 10;
        let sf = self.q(s);
        let mut sum = BigFloat::from_i64(0, self.bits);
        let den = *a.denom();
        for n in 0..n_terms {
            let x = Q::new(n as i64 * den + a.numer(), den);
            let l = self.ln_q(x);
            let t = self.exp(&self.mul(&sf, &l).neg());
            sum = self.add(&sum, &t);
        }
        let big_n = Q::new(n_terms as i64 * den + a.numer(), den);
        let ln_n = self.ln_q(big_n);
        let n_pow_s = self.exp(&self.mul(&sf, &ln_n).neg());
        let n_f = self.q(big_n);
        let p = self.mul(&n_pow_s, &n_f);
        sum = self.add(&sum, &self.div(&n_pow_s, &self.int(2)));
        let inv_n2 = self.div(&self.int(1), &self.mul(&n_f, &n_f));
        let mut pw = self.div(&n_pow_s, &n_f);
        let mut poch = sf.clone();
        for k in 1..=BERNOULLI_MAX {
            if k > 1 {
                let a1 = self.add(&sf, &self.int(2 * k as i64 - 3));
                let a2 = self.add(&sf, &self.int(2 * k as i64 - 2));
                poch = self.mul(&poch, &self.mul(&a1, &a2));
                pw = self.mul(&pw, &inv_n2);
            }
            let term = self.mul(&self.em[k - 1], &self.mul(&poch, &pw));
            sum = self.add(&sum, &term);
            if self.negligible(&term, &sum) {
                return Ok((sum, p, big_n));
            }
        }
        Err(NumericError::Underflow { what: format!("Euler-Maclaurin tail at s = {s}"), estimate: f64::NAN })
    }

    /// `(s - 1) zeta(s)`, entire.
    pub fn zeta_times_pole(&mut self, s: Q) -> Result<BigFloat, NumericError> {
        let (sum, p, _) = self.em_parts(s, Q::one())?;
        let sm1 = self.q(s - Q::one());
        Ok(self.add(&self.mul(&sm1, &sum), &p))
    }

    pub fn zeta(&mut self, s: Q) -> Result<BigFloat, NumericError> {
        if s == Q::one() {
            return Err(NumericError::Pole(s));
        }
        let z = self.zeta_times_pole(s)?;
        Ok(self.div(&z, &self.q(s - Q::one())))
    }

    /// `zeta(s, a)` for `s != 1`.
    pub fn hurwitz(&mut self, s: Q, a: Q) -> Result<BigFloat, NumericError> {
        if s == Q::one() {
            return Err(NumericError::Pole(s));
        }
        let (sum, p, _) = self.em_parts(s, a)?;
        Ok(self.add(&sum, &self.div(&p, &self.q(s - Q::one()))))
    }

    /// `L(s, chi_{-4}) = 4^{-s} (zeta(s, 1/4) - zeta(s, 3/4))`, entire.
    pub fn l_chi4(&mut self, s: Q) -> Result<BigFloat, NumericError> {
        let (s1, p1, n1) = self.em_parts(s, Q::new(1, 4))?;
        let (s3, p3, n3) = self.em_parts(s, Q::new(3, 4))?;
        let tail = if s == Q::one() {
            let a = self.ln_q(n3);
            let b = self.ln_q(n1);
            self.sub(&a, &b)
        } else {
            self.div(&self.sub(&p1, &p3), &self.q(s - Q::one()))
        };
        let diff = self.add(&self.sub(&s1, &s3), &tail);
        let four_s = self.exp(&self.mul(&self.q(-s), &self.mul(&self.ln2, &self.int(2))));
        Ok(self.mul(&four_s, &diff))
    }

    /// `ln Gamma(z)` by Stirling, `z` large and positive.
    fn ln_gamma_large(&mut self, z: &BigFloat) -> Result<BigFloat, NumericError> {
        let bits = self.bits;
        let half = self.div(&self.int(1), &self.int(2));
        let lnz = z.ln(bits, RM, &mut self.cc);
        let two_pi = self.mul(&self.pi, &self.int(2));
        let ln2pi = two_pi.ln(bits, RM, &mut self.cc);
        let mut acc = self.sub(&self.mul(&self.sub(z, &half), &lnz), z);
        acc = self.add(&acc, &self.mul(&ln2pi, &half));
        let inv_z2 = self.div(&self.int(1), &self.mul(z, z));
        let mut pw = self.div(&self.int(1), z);
        for k in 0..BERNOULLI_MAX {
            let term = self.mul(&self.stirling[k], &pw);
            acc = self.add(&acc, &term);
            if self.negligible(&term, &acc) {
                return Ok(acc);
            }
            pw = self.mul(&pw, &inv_z2);
        }
        Err(NumericError::Underflow { what: "Stirling series".into(), estimate: f64::NAN })
    }

    /// `Gamma(x)` for rational `x` off the non-positive integers.
    pub fn gamma(&mut self, x: Q) -> Result<BigFloat, NumericError> {
        if x.is_integer() && *x.numer() <= 0 {
            return Err(NumericError::Pole(x));
        }
        let target = Q::from_integer(self.digits as i64 + 10);
        let mut shift = 0i64;
        while x + Q::from_integer(shift) < target {
            shift += 1;
        }
        let z = self.q(x + Q::from_integer(shift));
        let lg = self.ln_gamma_large(&z)?;
        let mut g = self.exp(&lg);
        let mut prod = self.int(1);
        for i in 0..shift {
            prod = self.mul(&prod, &self.q(x + Q::from_integer(i)));
        }
        g = self.div(&g, &prod);
        Ok(g)
    }

    fn pi_pow(&mut self, e: Q) -> BigFloat {
        let x = self.mul(&self.ln_pi, &self.q(e));
        self.exp(&x)
    }

    fn two_pow(&mut self, e: Q) -> BigFloat {
        let x = self.mul(&self.ln2, &self.q(e));
        self.exp(&x)
    }

    /// `s (s - 1) xi_Q(s) = pi^{-s/2} 2 Gamma(s/2 + 1) (s - 1) zeta(s)`, entire.
    pub fn xi_f_entire(&mut self, s: Q) -> Result<BigFloat, NumericError> {
        let a = self.pi_pow(-s / 2);
        let g = self.gamma(s / 2 + Q::one())?;
        let z = self.zeta_times_pole(s)?;
        Ok(self.mul(&self.mul(&a, &g), &self.mul(&z, &self.int(2))))
    }

    /// Completed twisted function `4^{s/2} pi^{-(s+1)/2} Gamma((s+1)/2) L(s)`.
    pub fn xi_feta(&mut self, s: Q) -> Result<BigFloat, NumericError> {
        let a = self.two_pow(s);
        let b = self.pi_pow(-(s + Q::one()) / 2);
        let g = self.gamma((s + Q::one()) / 2)?;
        let l = self.l_chi4(s)?;
        Ok(self.mul(&self.mul(&a, &b), &self.mul(&g, &l)))
    }

    /// `pi^{-s/2} Gamma(s/2) zeta(s)` straight from the definition.
    pub fn xi_f_raw(&mut self, s: Q) -> Result<BigFloat, NumericError> {
        let a = self.pi_pow(-s / 2);
        let g = self.gamma(s / 2)?;
        let z = self.zeta(s)?;
        Ok(self.mul(&self.mul(&a, &g), &z))
    }

    /// `4^{s/2} 2 (2 pi)^{-s} Gamma(s) zeta(s) L(s)`, the Dedekind side.
    pub fn xi_e_direct(&mut self, s: Q) -> Result<BigFloat, NumericError> {
        let a = self.two_pow(s);
        let two_pi = self.two_pow(-s);
        let pis = self.pi_pow(-s);
        let g = self.gamma(s)?;
        let z = self.zeta(s)?;
        let l = self.l_chi4(s)?;
        let front = self.mul(&self.mul(&a, &self.int(2)), &self.mul(&two_pi, &pis));
        Ok(self.mul(&self.mul(&front, &g), &self.mul(&z, &l)))
    }

    pub fn pi(&self) -> Real {
        Real::wrap(self.pi.clone(), self.bits)
    }

    pub fn ln2(&self) -> Real {
        Real::wrap(self.ln2.clone(), self.bits)
    }

    pub fn consts(&mut self) -> &mut Consts {
        &mut self.cc
    }
}
