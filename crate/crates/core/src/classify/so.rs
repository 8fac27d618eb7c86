use num_traits::{Signed, Zero};

use super::{Clause, UnitarityRule, UnitarityVerdict};
use crate::error::Result;
use crate::root_system::{Family, RootSystemSpec};
use crate::weight::{half, int, Rational, Weight};

/// `so(2, 2n-2)` and `so(2, 2n-1)`.
pub struct SoRule {
    spec: RootSystemSpec,
    n: i64,
    odd: bool,
}

impl SoRule {
    pub fn new(family: Family) -> Result<Self> {
        let spec = RootSystemSpec::build(family)?;
        let (n, odd) = match family {
            Family::SoOdd(n) => (n, true),
            Family::SoEven(n) => (n, false),
            Family::E6 | Family::E7 => return Err(crate::error::Error::NotOrthogonal(family)),
        };
        Ok(SoRule {
            spec,
            n: n as i64,
            odd,
        })
    }

    fn is_parameter(&self, w: &Weight, regular: bool) -> Result<bool> {
        let dominant = if regular {
            self.spec.is_k_dominant_regular(w)?
        } else {
            self.spec.is_k_dominant(w)?
        };
        Ok(dominant && self.spec.is_k_integral(w)?)
    }
}

/// `(x_1, ..., x_{n-1}, |x_n|)`.
pub(crate) fn fold_last(x: &[Rational]) -> Vec<Rational> {
    let mut v = x.to_vec();
    if let Some(last) = v.last_mut() {
        *last = last.abs();
    }
    v
}

impl UnitarityRule for SoRule {
    fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    fn classify_lambda(&self, lambda: &Weight) -> Result<UnitarityVerdict> {
        if !self.is_parameter(lambda, false)? {
            return Ok(UnitarityVerdict::NOT_PARAMETER);
        }
        let n = self.n;
        let l = lambda.coords();
        let l1 = l[0];
        if l[1..].iter().all(Zero::is_zero) {
            let wallach = if self.odd {
                half(3 - 2 * n)
            } else {
                int(2 - n)
            };
            return Ok(UnitarityVerdict::decide(
                Clause::Scalar,
                l1.is_zero() || l1 <= wallach,
                l1 < wallach,
            ));
        }
        if l[1] == half(1) {
            let bound = if self.odd {
                int(1 - n)
            } else {
                half(3 - 2 * n)
            };
            return Ok(UnitarityVerdict::decide(
                Clause::Spinor,
                l1 <= bound,
                l1 < bound,
            ));
        }
        // The sign of the last coordinate is irrelevant for so-even: flipping
        // it is an automorphism fixing the compact and noncompact positive roots.
        let folded = fold_last(l);
        let mut p = 2;
        while p < l.len() && folded[p] == l[1] {
            p += 1;
        }
        let base = if self.odd { 1 } else { 2 };
        let bound = int(base + p as i64 - 2 * n);
        let sum = l1 + l[1];
        Ok(UnitarityVerdict::decide(
            Clause::General { p },
            sum <= bound,
            sum < bound,
        ))
    }

    fn classify_inf_char(&self, big_lambda: &Weight) -> Result<UnitarityVerdict> {
        if !self.is_parameter(big_lambda, true)? {
            return Ok(UnitarityVerdict::NOT_PARAMETER);
        }
        let n = self.n as usize;
        let c = big_lambda.coords();
        let x = c[0];
        // Tail of the scalar and spinor shapes, coordinates 2..n.
        let scalar_tail: Vec<Rational> = if self.odd {
            (0..n - 1).rev().map(|k| half(2 * k as i64 + 1)).collect()
        } else {
            (0..n - 1).rev().map(|k| int(k as i64)).collect()
        };
        let spinor_tail: Vec<Rational> = if self.odd {
            (1..n).rev().map(|k| int(k as i64)).collect()
        } else {
            (0..n - 1).rev().map(|k| half(2 * k as i64 + 1)).collect()
        };
        let tail = &c[1..];
        if tail == scalar_tail.as_slice() {
            let top = if self.odd {
                half(2 * n as i64 - 1)
            } else {
                int(n as i64 - 1)
            };
            return Ok(UnitarityVerdict::decide(
                Clause::Scalar,
                x == top || x <= int(1),
                x < int(1),
            ));
        }
        let spinor = tail[..n - 2] == spinor_tail[..n - 2]
            && (tail[n - 2] == spinor_tail[n - 2]
                || (!self.odd && tail[n - 2] == -spinor_tail[n - 2]));
        if spinor {
            return Ok(UnitarityVerdict::decide(
                Clause::Spinor,
                x <= half(1),
                x < half(1),
            ));
        }
        // Run of consecutive differences 1 starting at the second coordinate.
        let folded = fold_last(c);
        let mut p = 2;
        while p < n && folded[p] == folded[p - 1] - int(1) {
            p += 1;
        }
        let bound = int(p as i64 - 1);
        let sum = x + c[1];
        Ok(UnitarityVerdict::decide(
            Clause::General { p },
            sum <= bound,
            sum < bound,
        ))
    }
}
