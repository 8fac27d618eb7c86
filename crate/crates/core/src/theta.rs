//! Type bookkeeping for the `E6` dual pair inside split `E7`.
//!
//! The minimal representation splits as a sum of lowest weight modules
//! `Pi[m-2]'`, and `Pi[m-2]'` contains `V_{a lambda + b mu}` with `h'`-weight
//! `3n + m + 16` for every `a + b + c = n` with `c - a = m`. Here `lambda`
//! and `mu` are the minuscule weights of the 10- and 16-dimensional
//! representations of `D5`.

use crate::error::{Error, Result};
use crate::weight::{int, Rational, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ThetaType {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    /// `a + b + c`
    pub n: u32,
    /// `3n + m + 16`
    pub hprime_weight: i64,
}

impl ThetaType {
    fn new(a: u32, b: u32, c: u32) -> Self {
        let n = a + b + c;
        let m = i64::from(c) - i64::from(a);
        ThetaType {
            a,
            b,
            c,
            n,
            hprime_weight: 3 * i64::from(n) + m + 16,
        }
    }

    /// `c - a`
    pub fn m(&self) -> i64 {
        i64::from(self.c) - i64::from(self.a)
    }
}

/// Every type of `Pi[m-2]'` up to level `max_level`, ordered by `(n, a)`.
pub fn pi_types(m: i64, max_level: u32) -> Vec<ThetaType> {
    let mut out = Vec::new();
    for n in 0..=max_level {
        for a in 0..=n {
            let c = i64::from(a) + m;
            if c < 0 {
                continue;
            }
            let c = c as u32;
            if a + c > n {
                break;
            }
            out.push(ThetaType::new(a, n - a - c, c));
        }
    }
    out
}

/// The type of lowest `h'`-weight in `Pi[m-2]'`: `C(4m + 16)'` for `m >= 0`,
/// `V_{|m| lambda}(2|m| + 16)'` for `m <= 0`.
pub fn minimal_type(m: i64) -> ThetaType {
    let k = m.unsigned_abs() as u32;
    if m >= 0 {
        ThetaType::new(0, 0, k)
    } else {
        ThetaType::new(k, 0, 0)
    }
}

/// An `E6` highest weight `chi = (0, 0, 0, 0, k, l, l, -l)` with `3l - k = 8`,
/// matched with `Pi[-k-2]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgePoint {
    pub k: u32,
    pub l: Rational,
    pub chi: Weight,
    /// Index of the matched module `Pi[m-2]`; equals `-k`.
    pub m: i64,
    /// `chi(h)` for `h = 2(e8 - e7 - e6)`.
    pub chi_h: Rational,
}

/// `chi(h)` for `h = 2(e8 - e7 - e6)`.
pub fn h_weight(chi: &Weight) -> Rational {
    let c = chi.coords();
    (c[7] - c[6] - c[5]) * int(2)
}

pub fn discrete_point_bridge(k: u32) -> Result<BridgePoint> {
    let l = Rational::new(i64::from(k) + 8, 3);
    if !crate::weight::is_half_integral(&l) {
        return Err(Error::BridgeIntegrality {
            k: i64::from(k),
            l: l.to_string(),
        });
    }
    let mut coords = vec![int(0); 8];
    coords[4] = int(i64::from(k));
    coords[5] = l;
    coords[6] = l;
    coords[7] = -l;
    let chi = Weight::new(coords);
    let chi_h = h_weight(&chi);
    Ok(BridgePoint {
        k,
        l,
        m: -i64::from(k),
        chi,
        chi_h,
    })
}
