use num_traits::Zero;

use super::{Clause, UnitarityRule, UnitarityVerdict};
use crate::error::Result;
use crate::root_system::{e7_g, Family, RootSystemSpec};
use crate::weight::{half, int, Rational, Weight};

/// `e7(-25)`.
pub struct E7Rule {
    spec: RootSystemSpec,
}

impl E7Rule {
    pub fn new() -> Self {
        E7Rule {
            spec: RootSystemSpec::build(Family::E7).expect("e7 has no rank parameter"),
        }
    }
}

impl Default for E7Rule {
    fn default() -> Self {
        Self::new()
    }
}

/// `x_1 = x_2 - 1 = ... = x_k - (k - 1)`.
fn staircase(x: &[Rational], k: usize) -> bool {
    (1..k).all(|i| x[i] - int(i as i64) == x[0])
}

impl UnitarityRule for E7Rule {
    fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    fn classify_lambda(&self, lambda: &Weight) -> Result<UnitarityVerdict> {
        if !(self.spec.is_k_dominant(lambda)? && self.spec.is_k_integral(lambda)?) {
            return Ok(UnitarityVerdict::NOT_PARAMETER);
        }
        let l = lambda.coords();
        let f = l[6];
        let g = e7_g(l);
        let at_least =
            |case: u8, t: Rational| UnitarityVerdict::decide(Clause::Case(case), f >= t, f > t);
        if g >= int(1) {
            return Ok(at_least(1, int(8)));
        }
        // g = 0 from here on. `equal` counts the leading coordinates equal to lambda_1.
        let equal = 1 + l[1..5].iter().take_while(|&&c| c == l[0]).count();
        let zero = l[0].is_zero();
        let v = match (equal, zero) {
            (1, _) => at_least(2, half(15)),
            (2, _) => at_least(3, int(7)),
            (3, false) => at_least(4, half(13)),
            (3, true) | (4, false) => at_least(if zero { 5 } else { 6 }, int(6)),
            (4, true) => {
                UnitarityVerdict::decide(Clause::Case(7), f >= int(6) || f == int(4), f > int(6))
            }
            (5, false) => at_least(8, half(11)),
            _ => UnitarityVerdict::decide(
                Clause::Case(9),
                f >= int(4) || f == int(2) || f.is_zero(),
                f > int(4),
            ),
        };
        Ok(v)
    }

    fn classify_inf_char(&self, big_lambda: &Weight) -> Result<UnitarityVerdict> {
        if !(self.spec.is_k_dominant_regular(big_lambda)? && self.spec.is_k_integral(big_lambda)?) {
            return Ok(UnitarityVerdict::NOT_PARAMETER);
        }
        let x = big_lambda.coords();
        let f = x[6];
        let g = e7_g(x);
        let one = g == int(1);
        let i = |k: i64| int(k);
        let case_1 = g >= i(2);
        let case_2 = one && x[0] < x[1] - i(1);
        let case_3 = one && staircase(x, 2) && x[0] < x[2] - i(2);
        let case_4 = one && x[0] > i(0) && staircase(x, 3) && x[0] < x[3] - i(3);
        let case_5 = one && x[0].is_zero() && staircase(x, 3) && x[3] > i(3);
        let case_6 = one && x[0] > i(0) && staircase(x, 4) && x[0] < x[4] - i(4);
        let case_7 = one && x[0].is_zero() && staircase(x, 4) && x[4] > i(4);
        let case_8 = one && x[0] > i(0) && staircase(x, 5);
        let case_9 = one && x[0].is_zero() && staircase(x, 5);
        let ray =
            |case: u8, t: Rational| UnitarityVerdict::decide(Clause::Case(case), f >= t, f > t);
        let v = if case_1 {
            ray(1, half(-1))
        } else if case_2 {
            ray(2, i(-1))
        } else if case_3 {
            ray(3, half(-3))
        } else if case_4 {
            ray(4, i(-2))
        } else if case_5 {
            ray(5, half(-5))
        } else if case_6 {
            ray(6, half(-5))
        } else if case_7 {
            UnitarityVerdict::decide(
                Clause::Case(7),
                f >= half(-5) || f == half(-9),
                f > half(-5),
            )
        } else if case_8 {
            ray(8, i(-3))
        } else if case_9 {
            UnitarityVerdict::decide(
                Clause::Case(9),
                f >= half(-9) || f == half(-13) || f == half(-17),
                f > half(-9),
            )
        } else {
            unreachable!(
                "the nine cases cover every k-dominant-regular integral parameter: {big_lambda}"
            )
        };
        Ok(v)
    }
}
