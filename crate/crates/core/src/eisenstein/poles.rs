use num_traits::{Signed, Zero};

use super::EisError;
use crate::rational::{fmt_q, Q};

/// Pole order of `E^{(m,t)}` at a point, as an exact value or an upper bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PoleFact {
    pub order: u32,
    pub exact: bool,
    pub provenance: &'static str,
}

pub const SIEGEL_RIGHT: &str = "siegel: holomorphic on s >= 0 except at most simple poles at m/2 - k";
pub const SIEGEL_HALF: &str = "siegel: holomorphic at s = -1/2 in odd rank";
pub const SECOND_RANGE: &str = "second term range: double pole at t/2";
pub const FIRST_RANGE: &str = "first term range: simple pole at t/2";
pub const FIRST_RANGE_SHIFT: &str = "first term range: holomorphic at (t+2)/2";
pub const ABOVE_CENTRE: &str = "above (t+1)/2: pole bounded by the vanishing order of the regularizing polynomial";

const FAMILIES: &str =
    "siegel (m,m,s0>=0); siegel (odd m,m,-1/2); (m,t,t/2) for m>=t+1; (m,t,(t+2)/2) for m>=2t+1; (m,t,s0>=(t+1)/2)";

fn half(x: i64) -> Q {
    Q::new(x, 2)
}

/// Order of vanishing at `s0` of the regularizing polynomial for `(n, r)`:
/// the number of `j` in `1..=r` with `|s0 - (r+1)/2 + j| = n - r + 1/2`.
pub fn pz_vanishing_order(n: u32, r: u32, s0: Q) -> u32 {
    let (n, r) = (n as i64, r as i64);
    let target = Q::from_integer(n - r) + half(1);
    (1..=r).filter(|&j| (s0 - half(r + 1) + Q::from_integer(j)).abs() == target).count() as u32
}

/// Closed-world table of pole orders; anything not listed is an error.
pub fn pole_order(m: u32, t: u32, s0: Q) -> Result<PoleFact, EisError> {
    let miss = || EisError::UnknownPole { m, t, s0: fmt_q(s0), known: FAMILIES.into() };
    if t == 0 || t > m {
        return Err(miss());
    }
    let (mi, ti) = (m as i64, t as i64);
    if m == t {
        if !s0.is_negative() {
            let k = half(mi) - s0;
            let pole = k.is_integer() && !k.is_negative() && k < half(mi);
            return Ok(PoleFact { order: u32::from(pole), exact: !pole, provenance: SIEGEL_RIGHT });
        }
        if s0 == -half(1) && m % 2 == 1 {
            return Ok(PoleFact { order: 0, exact: true, provenance: SIEGEL_HALF });
        }
        return Err(miss());
    }
    if s0 == half(ti) {
        if mi <= 2 * ti - 1 {
            return Ok(PoleFact { order: 2, exact: true, provenance: SECOND_RANGE });
        }
        return Ok(PoleFact { order: 1, exact: true, provenance: FIRST_RANGE });
    }
    if s0 == half(ti + 2) && mi >= 2 * ti + 1 {
        return Ok(PoleFact { order: 0, exact: true, provenance: FIRST_RANGE_SHIFT });
    }
    if s0 >= half(ti + 1) {
        let z = pz_vanishing_order(m, t, s0).min(1);
        return Ok(PoleFact { order: z, exact: z.is_zero(), provenance: ABOVE_CENTRE });
    }
    Err(miss())
}
