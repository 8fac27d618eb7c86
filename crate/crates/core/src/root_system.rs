//! Root data of the four Hermitian families in their ambient coordinates.
//!
//! `so(2, 2n-2)` and `so(2, 2n-1)` use the standard `D_n` / `B_n` coordinates
//! of length `n`, with the first coordinate carrying the noncompact
//! direction. `e6(-14)` and `e7(-25)` live in an 8-dimensional space: an E6
//! weight has equal sixth and seventh coordinates and eighth coordinate equal
//! to minus the sixth, an E7 weight has eighth coordinate equal to minus the
//! seventh.

use std::fmt;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::weight::{half, int, is_half_odd, is_integer, Rational, Weight};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// `so(2, 2n-2)`, `n >= 3`; `g = so(2n)`.
    SoEven(usize),
    /// `so(2, 2n-1)`, `n >= 2`; `g = so(2n+1)`.
    SoOdd(usize),
    /// `e6(-14)`.
    E6,
    /// `e7(-25)`.
    E7,
}

impl Family {
    /// Length of the coordinate vectors.
    pub fn dim(self) -> usize {
        match self {
            Family::SoEven(n) | Family::SoOdd(n) => n,
            Family::E6 | Family::E7 => 8,
        }
    }

    /// Rank parameter of the so families.
    pub fn rank(self) -> Option<usize> {
        match self {
            Family::SoEven(n) | Family::SoOdd(n) => Some(n),
            Family::E6 | Family::E7 => None,
        }
    }

    /// Short name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            Family::SoEven(_) => "so-even",
            Family::SoOdd(_) => "so-odd",
            Family::E6 => "e6",
            Family::E7 => "e7",
        }
    }

    pub fn validate(self) -> Result<Self> {
        match self {
            Family::SoEven(n) if n < 3 => Err(Error::Rank {
                family: "so-even",
                n,
                min: 3,
            }),
            Family::SoOdd(n) if n < 2 => Err(Error::Rank {
                family: "so-odd",
                n,
                min: 2,
            }),
            f => Ok(f),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::SoEven(n) => write!(f, "so(2,{})", 2 * n - 2),
            Family::SoOdd(n) => write!(f, "so(2,{})", 2 * n - 1),
            Family::E6 => f.write_str("e6(-14)"),
            Family::E7 => f.write_str("e7(-25)"),
        }
    }
}

/// Positive roots, simple roots, `rho` and basic Schmid weights of one family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemSpec {
    family: Family,
    positive_compact: Vec<Weight>,
    positive_noncompact: Vec<Weight>,
    simple_roots_g: Vec<Weight>,
    simple_roots_k: Vec<Weight>,
    rho: Weight,
    schmid: Vec<Weight>,
}

/// `e_i + sign * e_j` in dimension `dim` (zero-based indices).
fn pair_root(dim: usize, i: usize, j: usize, sign: i64) -> Weight {
    let mut c = vec![Rational::zero(); dim];
    c[i] = int(1);
    c[j] += int(sign);
    Weight::new(c)
}

/// `1/2 (e8 - e7 + tail6 * e6 + sum_{i<=5} (-1)^{n(i)} e_i)` with the parity of
/// the number of minus signs among the first five coordinates fixed.
fn half_spin_roots(tail6: i64, odd_minus: bool) -> Vec<Weight> {
    let mut out = Vec::with_capacity(16);
    for mask in 0u32..32 {
        if (mask.count_ones() % 2 == 1) != odd_minus {
            continue;
        }
        let mut c = [0i64; 8];
        for (i, slot) in c.iter_mut().enumerate().take(5) {
            *slot = if mask & (1 << i) != 0 { -1 } else { 1 };
        }
        c[5] = tail6;
        c[6] = -1;
        c[7] = 1;
        out.push(Weight::from_halves(&c));
    }
    out
}

/// Elements of a positive system that are not a sum of two of its members.
pub fn indecomposable(positive: &[Weight]) -> Vec<Weight> {
    positive
        .iter()
        .filter(|r| {
            !positive
                .iter()
                .any(|a| positive.iter().any(|b| &(a + b) == *r))
        })
        .cloned()
        .collect()
}

impl RootSystemSpec {
    pub fn build(family: Family) -> Result<Self> {
        let family = family.validate()?;
        let dim = family.dim();
        let (positive_compact, positive_noncompact, simple_roots_g, rho, schmid) = match family {
            Family::SoEven(n) => {
                let mut compact = Vec::new();
                for i in 1..n {
                    for j in i + 1..n {
                        compact.push(pair_root(n, i, j, -1));
                        compact.push(pair_root(n, i, j, 1));
                    }
                }
                let mut noncompact = Vec::new();
                for j in 1..n {
                    noncompact.push(pair_root(n, 0, j, -1));
                    noncompact.push(pair_root(n, 0, j, 1));
                }
                let mut simple: Vec<Weight> =
                    (0..n - 1).map(|i| pair_root(n, i, i + 1, -1)).collect();
                simple.push(pair_root(n, n - 2, n - 1, 1));
                let rho = Weight::from_ints(&(0..n as i64).rev().collect::<Vec<_>>());
                let schmid = vec![pair_root(n, 0, 1, 1), Weight::unit(n, 0).scale(int(2))];
                (compact, noncompact, simple, rho, schmid)
            }
            Family::SoOdd(n) => {
                let mut compact = Vec::new();
                for i in 1..n {
                    for j in i + 1..n {
                        compact.push(pair_root(n, i, j, -1));
                        compact.push(pair_root(n, i, j, 1));
                    }
                }
                compact.extend((1..n).map(|i| Weight::unit(n, i)));
                let mut noncompact = Vec::new();
                for j in 1..n {
                    noncompact.push(pair_root(n, 0, j, -1));
                    noncompact.push(pair_root(n, 0, j, 1));
                }
                noncompact.push(Weight::unit(n, 0));
                let mut simple: Vec<Weight> =
                    (0..n - 1).map(|i| pair_root(n, i, i + 1, -1)).collect();
                simple.push(Weight::unit(n, n - 1));
                let rho = Weight::from_halves(
                    &(0..n as i64).rev().map(|k| 2 * k + 1).collect::<Vec<_>>(),
                );
                let schmid = vec![pair_root(n, 0, 1, 1), Weight::unit(n, 0).scale(int(2))];
                (compact, noncompact, simple, rho, schmid)
            }
            Family::E6 => {
                let mut compact = Vec::new();
                for i in 0..5 {
                    for j in 0..i {
                        compact.push(pair_root(8, i, j, -1));
                        compact.push(pair_root(8, i, j, 1));
                    }
                }
                let noncompact = half_spin_roots(-1, false);
                let simple = vec![
                    Weight::from_halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
                    Weight::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
                    Weight::from_ints(&[-1, 1, 0, 0, 0, 0, 0, 0]),
                    Weight::from_ints(&[0, -1, 1, 0, 0, 0, 0, 0]),
                    Weight::from_ints(&[0, 0, -1, 1, 0, 0, 0, 0]),
                    Weight::from_ints(&[0, 0, 0, -1, 1, 0, 0, 0]),
                ];
                let rho = Weight::from_ints(&[0, 1, 2, 3, 4, -4, -4, 4]);
                let schmid = vec![
                    Weight::from_halves(&[1, 1, 1, 1, 1, -1, -1, 1]),
                    Weight::from_ints(&[0, 0, 0, 0, 1, -1, -1, 1]),
                ];
                (compact, noncompact, simple, rho, schmid)
            }
            Family::E7 => {
                let mut compact = Vec::new();
                for i in 0..5 {
                    for j in 0..i {
                        compact.push(pair_root(8, i, j, -1));
                        compact.push(pair_root(8, i, j, 1));
                    }
                }
                compact.extend(half_spin_roots(-1, false));
                let mut noncompact = Vec::new();
                for i in 0..5 {
                    noncompact.push(pair_root(8, 5, i, -1));
                    noncompact.push(pair_root(8, 5, i, 1));
                }
                noncompact.push(Weight::from_ints(&[0, 0, 0, 0, 0, 0, -1, 1]));
                noncompact.extend(half_spin_roots(1, true));
                let simple = vec![
                    Weight::from_halves(&[1, -1, -1, -1, -1, -1, -1, 1]),
                    Weight::from_ints(&[1, 1, 0, 0, 0, 0, 0, 0]),
                    Weight::from_ints(&[-1, 1, 0, 0, 0, 0, 0, 0]),
                    Weight::from_ints(&[0, -1, 1, 0, 0, 0, 0, 0]),
                    Weight::from_ints(&[0, 0, -1, 1, 0, 0, 0, 0]),
                    Weight::from_ints(&[0, 0, 0, -1, 1, 0, 0, 0]),
                    Weight::from_ints(&[0, 0, 0, 0, -1, 1, 0, 0]),
                ];
                let rho = Weight::new(vec![
                    int(0),
                    int(1),
                    int(2),
                    int(3),
                    int(4),
                    int(5),
                    half(-17),
                    half(17),
                ]);
                let schmid = vec![
                    Weight::from_ints(&[0, 0, 0, 0, 0, 0, -1, 1]),
                    Weight::from_ints(&[0, 0, 0, 0, 1, 1, -1, 1]),
                    Weight::from_ints(&[0, 0, 0, 0, 0, 2, -1, 1]),
                ];
                (compact, noncompact, simple, rho, schmid)
            }
        };
        debug_assert!(positive_compact.iter().all(|r| r.dim() == dim));
        let simple_roots_k = indecomposable(&positive_compact);
        Ok(RootSystemSpec {
            family,
            positive_compact,
            positive_noncompact,
            simple_roots_g,
            simple_roots_k,
            rho,
            schmid,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn dim(&self) -> usize {
        self.family.dim()
    }

    pub fn positive_compact(&self) -> &[Weight] {
        &self.positive_compact
    }

    pub fn positive_noncompact(&self) -> &[Weight] {
        &self.positive_noncompact
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &Weight> {
        self.positive_compact
            .iter()
            .chain(&self.positive_noncompact)
    }

    pub fn simple_roots_g(&self) -> &[Weight] {
        &self.simple_roots_g
    }

    pub fn simple_roots_k(&self) -> &[Weight] {
        &self.simple_roots_k
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Basic Schmid weights `s_i`, ordered by level.
    pub fn schmid(&self) -> &[Weight] {
        &self.schmid
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        w.dim() == self.dim() && self.positive_roots().any(|r| r == w || &-r == w)
    }

    /// Checks the coordinate count and, for E6/E7, the linear constraints
    /// cutting out the ambient subspace.
    pub fn check(&self, w: &Weight) -> Result<()> {
        if w.dim() != self.dim() {
            return Err(Error::Dimension {
                family: self.family,
                expected: self.dim(),
                got: w.dim(),
            });
        }
        let c = w.coords();
        let violated = match self.family {
            Family::E6 if c[5] != c[6] || c[7] != -c[5] => Some("x6 = x7 = -x8"),
            Family::E7 if c[7] != -c[6] => Some("x7 = -x8"),
            _ => None,
        };
        match violated {
            Some(constraint) => Err(Error::Ambient {
                family: self.family,
                weight: w.to_string(),
                constraint,
            }),
            None => Ok(()),
        }
    }

    /// Coordinate dot product.
    pub fn inner(&self, a: &Weight, b: &Weight) -> Result<Rational> {
        for w in [a, b] {
            if w.dim() != self.dim() {
                return Err(Error::Dimension {
                    family: self.family,
                    expected: self.dim(),
                    got: w.dim(),
                });
            }
        }
        Ok(a.dot(b))
    }

    pub fn is_k_dominant(&self, w: &Weight) -> Result<bool> {
        self.check(w)?;
        Ok(chamber_test(
            self.family,
            w.coords(),
            Strictness::Weak,
            Chamber::Compact,
        ))
    }

    pub fn is_k_dominant_regular(&self, w: &Weight) -> Result<bool> {
        self.check(w)?;
        Ok(chamber_test(
            self.family,
            w.coords(),
            Strictness::Strict,
            Chamber::Compact,
        ))
    }

    pub fn is_g_dominant(&self, w: &Weight) -> Result<bool> {
        self.check(w)?;
        Ok(chamber_test(
            self.family,
            w.coords(),
            Strictness::Weak,
            Chamber::Full,
        ))
    }

    /// Congruence conditions for the weight to exponentiate to `K`; the center
    /// direction (first coordinate for so, `x6`/`x7` for E) is unconstrained.
    pub fn is_k_integral(&self, w: &Weight) -> Result<bool> {
        self.check(w)?;
        let c = w.coords();
        Ok(match self.family {
            Family::SoEven(_) | Family::SoOdd(_) => uniform_congruence(&c[1..]),
            Family::E6 => uniform_congruence(&c[..5]),
            Family::E7 => uniform_congruence(&c[..5]) && is_integer(&e7_g(c)),
        })
    }
}

/// `g(x) = 1/2 (x1 - x2 - x3 - x4 - x5 - x6 - 2 x7)`, the pairing of an E7
/// weight with the compact simple root `alpha_1`.
pub fn e7_g(c: &[Rational]) -> Rational {
    (c[0] - c[1] - c[2] - c[3] - c[4] - c[5] - c[6] * int(2)) * half(1)
}

/// `f(x) = 3 x6 - (x1 + ... + x5)` on E6 weights.
pub fn e6_f(c: &[Rational]) -> Rational {
    c[5] * int(3) - c[..5].iter().sum::<Rational>()
}

/// All entries in `Z`, or all in `1/2 + Z`.
pub fn uniform_congruence(c: &[Rational]) -> bool {
    c.iter().all(is_integer) || c.iter().all(is_half_odd)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Strictness {
    Weak,
    Strict,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Chamber {
    Compact,
    Full,
}

fn chamber_test(family: Family, c: &[Rational], strictness: Strictness, chamber: Chamber) -> bool {
    let le = |a: &Rational, b: &Rational| match strictness {
        Strictness::Weak => a <= b,
        Strictness::Strict => a < b,
    };
    // `c[start] >= c[start+1] >= ... >= c[last-1]`, then compared against `c[last]`.
    let descending = |from: usize| c[from..].windows(2).all(|p| le(&p[1], &p[0]));
    match (family, chamber) {
        (Family::SoEven(n), _) => {
            let from = if chamber == Chamber::Compact { 1 } else { 0 };
            descending_abs_tail(&c[from..n], le)
        }
        (Family::SoOdd(n), _) => {
            let from = if chamber == Chamber::Compact { 1 } else { 0 };
            descending(from) && le(&Rational::zero(), &c[n - 1])
        }
        (Family::E6, _) => {
            let chain = ascending_abs_head(&c[..5], le);
            match chamber {
                Chamber::Compact => chain,
                Chamber::Full => {
                    chain
                        && le(
                            &Rational::zero(),
                            &(c[0] - c[1] - c[2] - c[3] - c[4] - c[5] * int(3)),
                        )
                }
            }
        }
        (Family::E7, _) => {
            let len = if chamber == Chamber::Compact { 5 } else { 6 };
            ascending_abs_head(&c[..len], le) && le(&Rational::zero(), &e7_g(c))
        }
    }
}

/// `v[0] >= v[1] >= ... >= v[m-2] >= |v[m-1]|` under `le`.
fn descending_abs_tail(v: &[Rational], le: impl Fn(&Rational, &Rational) -> bool) -> bool {
    match v.split_last() {
        None => true,
        Some((last, head)) => {
            head.windows(2).all(|p| le(&p[1], &p[0]))
                && head.last().is_none_or(|h| le(&last.abs(), h))
        }
    }
}

/// `|v[0]| <= v[1] <= ... <= v[m-1]` under `le`.
fn ascending_abs_head(v: &[Rational], le: impl Fn(&Rational, &Rational) -> bool) -> bool {
    le(&v[0].abs(), &v[1]) && v[1..].windows(2).all(|p| le(&p[0], &p[1]))
}
