//! Exact weight vectors in the ambient coordinate realizations.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Exact rational scalar used for every coordinate and pairing.
///
/// Parameters of interest are integers or half-integers, but reflections of an
/// arbitrary input can leave that lattice and pairings of half-integral
/// vectors are quarter-integral, so the scalar is a general rational.
pub type Rational = num_rational::Rational64;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(n)
}

/// `n / 2`.
pub fn half(n: i64) -> Rational {
    Rational::new(n, 2)
}

pub fn is_integer(q: &Rational) -> bool {
    q.is_integer()
}

/// True when `q` lies in `1/2 + Z`.
pub fn is_half_odd(q: &Rational) -> bool {
    *q.denom() == 2
}

/// True when `2q` is an integer.
pub fn is_half_integral(q: &Rational) -> bool {
    Integer::is_multiple_of(&2, q.denom())
}

/// A weight in the ambient space of one of the root data.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn zero(dim: usize) -> Self {
        Weight(vec![Rational::zero(); dim])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| int(c)).collect())
    }

    /// Builds a weight from numerators over 2: `from_halves(&[1, 2])` is `(1/2, 1)`.
    pub fn from_halves(numerators: &[i64]) -> Self {
        Weight(numerators.iter().map(|&c| half(c)).collect())
    }

    /// Unit vector `e_i` (zero-based `i`).
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut w = Self::zero(dim);
        w.0[i] = int(1);
        w
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    /// Zero-based coordinate access.
    pub fn at(&self, i: usize) -> Rational {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Plain coordinate dot product; callers check dimensions.
    pub fn dot(&self, other: &Weight) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn norm2(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, k: Rational) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    /// Least common multiple of the coordinate denominators.
    pub fn denominator_lcm(&self) -> i64 {
        self.0.iter().fold(1, |acc, c| acc.lcm(c.denom()))
    }

    /// Largest absolute coordinate.
    pub fn max_abs(&self) -> Rational {
        self.0
            .iter()
            .map(Signed::abs)
            .max()
            .unwrap_or_else(Rational::zero)
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.dim(), rhs.dim());
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl From<Vec<Rational>> for Weight {
    fn from(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }
}

/// Prints the tuple the way the reports do: `(0, 1, 3/2, -17/2)`.
impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_uses_lowest_terms() {
        let w = Weight::new(vec![int(0), half(3), half(-17), half(4)]);
        assert_eq!(w.to_string(), "(0, 3/2, -17/2, 2)");
    }

    #[test]
    fn ordering_is_lexicographic() {
        let a = Weight::from_halves(&[-1, 5]);
        let b = Weight::from_ints(&[0, 1]);
        let c = Weight::from_ints(&[0, 2]);
        let mut v = vec![c.clone(), a.clone(), b.clone()];
        v.sort();
        assert_eq!(v, vec![a, b, c]);
    }

    #[test]
    fn half_integrality_predicates() {
        assert!(is_half_odd(&half(3)));
        assert!(!is_half_odd(&int(3)));
        assert!(is_half_integral(&half(-7)));
        assert!(!is_half_integral(&Rational::new(1, 4)));
    }

    #[test]
    fn denominator_lcm_mixes_halves_and_quarters() {
        let w = Weight::new(vec![half(1), Rational::new(3, 4), int(2)]);
        assert_eq!(w.denominator_lcm(), 4);
    }
}
