//! Small helpers around exact rationals.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Signed, Zero};

/// Machine-sized rational used for points, arguments and exponents.
pub type Q = Ratio<i64>;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn qi(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn big(x: Q) -> BigRational {
    BigRational::new(BigInt::from(*x.numer()), BigInt::from(*x.denom()))
}

pub fn big_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// `x` as an integer if it is one.
pub fn as_int(x: Q) -> Option<i64> {
    x.is_integer().then(|| *x.numer())
}

pub fn fact(k: u32) -> BigRational {
    let mut f = BigInt::one();
    for i in 2..=k {
        f *= BigInt::from(i);
    }
    BigRational::from_integer(f)
}

pub fn binom(n: u32, k: u32) -> i64 {
    let mut c: i64 = 1;
    for i in 0..k as i64 {
        c = c * (n as i64 - i) / (i + 1);
    }
    c
}

/// Render a rational as `n` or `n/d`.
pub fn fmt_q(x: Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn fmt_big(x: &BigRational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `n`, `-n`, `n/d`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((a, b)) => {
            let n: i64 = a.trim().parse().ok()?;
            let d: i64 = b.trim().parse().ok()?;
            (d != 0).then(|| Q::new(n, d))
        }
        None => s.parse().ok().map(Q::from_integer),
    }
}

pub fn sign_pow(k: i64) -> i64 {
    if k.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

pub fn is_neg(x: &BigRational) -> bool {
    x.is_negative()
}

pub fn is_zero_q(x: &BigRational) -> bool {
    x.is_zero()
}
