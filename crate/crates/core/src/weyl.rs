//! Reflections, `W_k`-descent and enumeration of the `k`-dominant-regular
//! members of a `W_g`-orbit.

use std::collections::HashSet;

use num_traits::{CheckedMul, Zero};

use crate::error::{Error, Result};
use crate::root_system::RootSystemSpec;
use crate::weight::{int, Rational, Weight};

/// The `k`-dominant-regular points of the `W_g`-orbit of a `g`-dominant weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitEnumeration {
    pub source: Weight,
    /// Sorted lexicographically, no duplicates.
    pub conjugates: Vec<Weight>,
    /// Number of distinct orbit points visited.
    pub orbit_size: usize,
}

/// `s_alpha(w) = w - (2<w, alpha> / <alpha, alpha>) alpha`.
pub fn reflect(spec: &RootSystemSpec, alpha: &Weight, w: &Weight) -> Result<Weight> {
    spec.inner(alpha, w)?;
    if !spec.is_root(alpha) {
        return Err(Error::NotARoot(alpha.to_string()));
    }
    Ok(reflect_unchecked(alpha, w))
}

fn reflect_unchecked(alpha: &Weight, w: &Weight) -> Weight {
    let c = w.dot(alpha) * int(2) / alpha.norm2();
    w - &alpha.scale(c)
}

/// The unique `W_k`-conjugate of `w` in the closed `k`-dominant chamber.
pub fn k_dominant_representative(spec: &RootSystemSpec, w: &Weight) -> Result<Weight> {
    spec.check(w)?;
    let mut cur = w.clone();
    while let Some(alpha) = spec
        .simple_roots_k()
        .iter()
        .find(|a| cur.dot(a) < Rational::zero())
    {
        cur = reflect_unchecked(alpha, &cur);
    }
    Ok(cur)
}

/// Integer image of the orbit: every point is stored as `scale * w`, and the
/// simple roots as `2 * alpha`, so a reflection is
/// `W' = W - (2 (W.A) / (A.A)) A` with an exact integer quotient.
struct ScaledOrbit {
    scale: i64,
    simple_g: Vec<Vec<i64>>,
    simple_g_norm: Vec<i64>,
    simple_k: Vec<Vec<i64>>,
}

type Key = Box<[i64]>;

impl ScaledOrbit {
    fn new(spec: &RootSystemSpec, source: &Weight) -> Result<Self> {
        let lcm = source.denominator_lcm();
        let scale = lcm
            .checked_mul(4)
            .ok_or_else(|| Error::Overflow(source.to_string()))?;
        let doubled = |a: &Weight| -> Vec<i64> {
            a.coords()
                .iter()
                .map(|c| {
                    let d = c * int(2);
                    debug_assert!(d.is_integer());
                    d.to_integer()
                })
                .collect()
        };
        let simple_g: Vec<Vec<i64>> = spec.simple_roots_g().iter().map(doubled).collect();
        let simple_g_norm = simple_g.iter().map(|a| dot(a, a)).collect();
        let simple_k = spec.simple_roots_k().iter().map(doubled).collect();
        Ok(ScaledOrbit {
            scale,
            simple_g,
            simple_g_norm,
            simple_k,
        })
    }

    fn encode(&self, w: &Weight) -> Option<Key> {
        w.coords()
            .iter()
            .map(|c| {
                let s = c.checked_mul(&int(self.scale))?;
                s.is_integer().then(|| s.to_integer())
            })
            .collect()
    }

    fn decode(&self, key: &[i64]) -> Weight {
        Weight::new(key.iter().map(|&x| Rational::new(x, self.scale)).collect())
    }

    fn reflect(&self, i: usize, w: &[i64]) -> Option<Key> {
        let a = &self.simple_g[i];
        let num = 2 * checked_dot(w, a)?;
        let den = self.simple_g_norm[i];
        assert_eq!(num % den, 0, "reflection left the scaled lattice");
        let c = num / den;
        if c == 0 {
            return Some(w.into());
        }
        w.iter()
            .zip(a)
            .map(|(&x, &y)| x.checked_sub(i64::checked_mul(c, y)?))
            .collect()
    }

    fn k_dominant_regular(&self, w: &[i64]) -> bool {
        self.simple_k.iter().all(|a| dot(w, a) > 0)
    }
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn checked_dot(a: &[i64], b: &[i64]) -> Option<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| {
        acc.checked_add(i64::checked_mul(*x, *y)?)
    })
}

/// Walks the `W_g`-orbit of `dominant` by simple reflections and keeps the
/// `k`-dominant-regular points.
///
/// The walk is breadth-first by distance from the source. A simple reflection
/// moves a point at most one layer, so only the previous, current and next
/// layers are held for deduplication; memory is bounded by the widest three
/// layers rather than the whole orbit.
pub fn k_dominant_conjugates(spec: &RootSystemSpec, dominant: &Weight) -> Result<OrbitEnumeration> {
    if !spec.is_g_dominant(dominant)? {
        return Err(Error::NotGDominant(dominant.to_string()));
    }
    let orbit = ScaledOrbit::new(spec, dominant)?;
    let overflow = || Error::Overflow(dominant.to_string());
    let start = orbit.encode(dominant).ok_or_else(overflow)?;

    let mut prev: HashSet<Key> = HashSet::new();
    let mut cur: HashSet<Key> = HashSet::from([start]);
    let mut conjugates = Vec::new();
    let mut orbit_size = 0usize;
    while !cur.is_empty() {
        orbit_size += cur.len();
        conjugates.extend(
            cur.iter()
                .filter(|w| orbit.k_dominant_regular(w))
                .map(|w| orbit.decode(w)),
        );
        let mut next: HashSet<Key> = HashSet::new();
        for w in &cur {
            for i in 0..orbit.simple_g.len() {
                let r = orbit.reflect(i, w).ok_or_else(overflow)?;
                if !prev.contains(&r) && !cur.contains(&r) {
                    next.insert(r);
                }
            }
        }
        prev = std::mem::replace(&mut cur, next);
    }
    conjugates.sort();
    Ok(OrbitEnumeration {
        source: dominant.clone(),
        conjugates,
        orbit_size,
    })
}
