use num_traits::Zero;

use super::{Clause, UnitarityRule, UnitarityVerdict};
use crate::error::Result;
use crate::root_system::{e6_f, Family, RootSystemSpec};
use crate::weight::{int, Weight};

/// `e6(-14)`.
pub struct E6Rule {
    spec: RootSystemSpec,
}

impl E6Rule {
    pub fn new() -> Self {
        E6Rule {
            spec: RootSystemSpec::build(Family::E6).expect("e6 has no rank parameter"),
        }
    }
}

impl Default for E6Rule {
    fn default() -> Self {
        Self::new()
    }
}

impl UnitarityRule for E6Rule {
    fn spec(&self) -> &RootSystemSpec {
        &self.spec
    }

    fn classify_lambda(&self, lambda: &Weight) -> Result<UnitarityVerdict> {
        if !(self.spec.is_k_dominant(lambda)? && self.spec.is_k_integral(lambda)?) {
            return Ok(UnitarityVerdict::NOT_PARAMETER);
        }
        let l = lambda.coords();
        let f = e6_f(l);
        let zero = |i: usize| l[i].is_zero();
        // Threshold cases: unitary iff f >= t, Verma iff f > t.
        let at_least = |case: u8, t: i64| {
            UnitarityVerdict::decide(Clause::Case(case), f >= int(t), f > int(t))
        };
        let v = if (0..5).all(zero) {
            UnitarityVerdict::decide(Clause::Case(1), f.is_zero() || f >= int(6), f > int(6))
        } else if (0..4).all(zero) {
            UnitarityVerdict::decide(Clause::Case(2), f == int(8) || f >= int(14), f > int(14))
        } else if l[0] + l[1] >= int(1) {
            at_least(3, 20)
        } else if l[2] - l[1] >= int(1) {
            at_least(4, 18)
        } else if l[1].is_zero() {
            // (0, 0, 0, lambda_4 >= 1, lambda_5)
            at_least(6, 14)
        } else if l[3] - l[1] >= int(1) {
            at_least(5, 16)
        } else if l[4] - l[1] >= int(1) {
            at_least(7, 14)
        } else {
            at_least(8, 12)
        };
        Ok(v)
    }

    fn classify_inf_char(&self, big_lambda: &Weight) -> Result<UnitarityVerdict> {
        if !(self.spec.is_k_dominant_regular(big_lambda)? && self.spec.is_k_integral(big_lambda)?) {
            return Ok(UnitarityVerdict::NOT_PARAMETER);
        }
        let x = big_lambda.coords();
        let f = e6_f(x);
        let i = |k: i64| int(k);
        let case_1 = x[..5] == [i(0), i(1), i(2), i(3), i(4)];
        let case_2 = x[..4] == [i(0), i(1), i(2), i(3)] && x[4] > i(4);
        let case_3 = x[0] + x[1] >= i(2);
        let case_4 = x[1] == -x[0] + i(1) && x[2] - x[1] >= i(2);
        let case_5 = x[2] == x[1] + i(1)
            && x[1] + i(1) == -x[0] + i(2)
            && x[1] > i(1)
            && x[3] - x[1] >= i(3);
        let case_6 = x[..3] == [i(0), i(1), i(2)] && x[3] >= i(4);
        let case_7 = x[3] == x[2] + i(1)
            && x[2] + i(1) == x[1] + i(2)
            && x[1] + i(2) == -x[0] + i(3)
            && x[1] > i(1)
            && x[4] - x[1] >= i(4);
        let case_8 = x[4] == x[3] + i(1)
            && x[3] + i(1) == x[2] + i(2)
            && x[2] + i(2) == x[1] + i(3)
            && x[1] + i(3) == -x[0] + i(4)
            && x[1] > i(1);
        let ray =
            |case: u8, t: i64| UnitarityVerdict::decide(Clause::Case(case), f >= i(t), f > i(t));
        let v = if case_1 {
            UnitarityVerdict::decide(Clause::Case(1), f == i(-22) || f >= i(-16), f > i(-16))
        } else if case_2 {
            UnitarityVerdict::decide(Clause::Case(2), f == i(-14) || f >= i(-8), f > i(-8))
        } else if case_3 {
            ray(3, -2)
        } else if case_4 {
            ray(4, -4)
        } else if case_5 {
            ray(5, -6)
        } else if case_6 {
            ray(6, -8)
        } else if case_7 {
            ray(7, -8)
        } else if case_8 {
            ray(8, -10)
        } else {
            unreachable!(
                "the eight cases cover every k-dominant-regular integral parameter: {big_lambda}"
            )
        };
        Ok(v)
    }
}
