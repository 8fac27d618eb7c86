//! The basic Dirac inequality `||(lambda - s)^+ + rho||^2 >= ||lambda + rho||^2`.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystemSpec};
use crate::weight::{half, int, Rational, Weight};
use crate::weyl::k_dominant_representative;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiracStatus {
    StrictHolds,
    Equality,
    Fails,
}

impl DiracStatus {
    fn compare(lhs: &Rational, rhs: &Rational) -> Self {
        match lhs.cmp(rhs) {
            Ordering::Greater => DiracStatus::StrictHolds,
            Ordering::Equal => DiracStatus::Equality,
            Ordering::Less => DiracStatus::Fails,
        }
    }

    pub fn holds(self) -> bool {
        self != DiracStatus::Fails
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiracOutcome {
    pub status: DiracStatus,
    /// `||(lambda - s)^+ + rho||^2`
    pub lhs: Rational,
    /// `||lambda + rho||^2`
    pub rhs: Rational,
}

/// Evaluates the inequality for the basic Schmid weight `s_index` (zero-based).
pub fn basic_dirac(spec: &RootSystemSpec, lambda: &Weight, s_index: usize) -> Result<DiracOutcome> {
    let s = spec.schmid().get(s_index).ok_or(Error::SchmidIndex {
        index: s_index,
        count: spec.schmid().len(),
    })?;
    if !spec.is_k_dominant(lambda)? {
        return Err(Error::NotKDominant(lambda.to_string()));
    }
    if !spec.is_k_integral(lambda)? {
        return Err(Error::NotKIntegral(lambda.to_string()));
    }
    let shifted = k_dominant_representative(spec, &(lambda - s))?;
    let lhs = (&shifted + spec.rho()).norm2();
    let rhs = (lambda + spec.rho()).norm2();
    Ok(DiracOutcome {
        status: DiracStatus::compare(&lhs, &rhs),
        lhs,
        rhs,
    })
}

/// True when the inequality is strict for every basic Schmid weight.
pub fn strict_for_all_schmid(spec: &RootSystemSpec, lambda: &Weight) -> Result<bool> {
    for i in 0..spec.schmid().len() {
        if basic_dirac(spec, lambda, i)?.status != DiracStatus::StrictHolds {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The three shapes of a `k`-dominant integral weight of an so family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SoShape {
    /// `(lambda_1, 0, ..., 0)`
    Scalar,
    /// `(lambda_1, 1/2, ..., +-1/2)`
    Spinor,
    /// `lambda_2 >= 1`
    General,
}

/// The inequality for `s = beta` in closed form: `value <= bound`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScalarForm {
    pub shape: SoShape,
    /// Largest index (one-based) with `lambda_2 = ... = lambda_p`; general shape only.
    pub p: Option<usize>,
    /// `lambda_1` for the scalar and spinor shapes, `lambda_1 + lambda_2` otherwise.
    pub value: Rational,
    pub bound: Rational,
    pub holds: bool,
    pub strict: bool,
}

impl ScalarForm {
    pub fn status(&self) -> DiracStatus {
        match (self.holds, self.strict) {
            (true, true) => DiracStatus::StrictHolds,
            (true, false) => DiracStatus::Equality,
            _ => DiracStatus::Fails,
        }
    }
}

/// Shape of a `k`-dominant integral so weight and the index `p`.
pub fn so_shape(lambda: &Weight) -> (SoShape, Option<usize>) {
    let c = lambda.coords();
    let n = c.len();
    if c[1..].iter().all(Zero::is_zero) {
        return (SoShape::Scalar, None);
    }
    if c[1] == half(1) {
        return (SoShape::Spinor, None);
    }
    let p = (2..=n)
        .take_while(|&i| c[i - 1].abs() == c[1])
        .last()
        .unwrap_or(2);
    (SoShape::General, Some(p))
}

pub fn dirac_scalar_form(spec: &RootSystemSpec, lambda: &Weight) -> Result<ScalarForm> {
    let (n, odd) = match spec.family() {
        Family::SoEven(n) => (n as i64, false),
        Family::SoOdd(n) => (n as i64, true),
        f => return Err(Error::NotOrthogonal(f)),
    };
    if !spec.is_k_dominant(lambda)? {
        return Err(Error::NotKDominant(lambda.to_string()));
    }
    if !spec.is_k_integral(lambda)? {
        return Err(Error::NotKIntegral(lambda.to_string()));
    }
    let c = lambda.coords();
    let (shape, p) = so_shape(lambda);
    let (value, bound) = match shape {
        SoShape::Scalar => (c[0], int(0)),
        SoShape::Spinor if odd => (c[0], int(1 - n)),
        SoShape::Spinor => (c[0], half(3 - 2 * n)),
        SoShape::General => {
            let p = p.expect("general shape carries p") as i64;
            let base = if odd { 1 } else { 2 };
            (c[0] + c[1], int(base + p - 2 * n))
        }
    };
    Ok(ScalarForm {
        shape,
        p,
        holds: value <= bound,
        strict: value < bound,
        value,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(f: Family) -> RootSystemSpec {
        RootSystemSpec::build(f).unwrap()
    }

    #[test]
    fn e6_trivial_weight_sits_on_equality() {
        let e6 = spec(Family::E6);
        let o = basic_dirac(&e6, &Weight::zero(8), 0).unwrap();
        assert_eq!(o.lhs, int(78));
        assert_eq!(o.rhs, int(78));
        assert_eq!(o.status, DiracStatus::Equality);
    }

    #[test]
    fn so_even_scalar_examples() {
        for n in 3..=6 {
            let s = spec(Family::SoEven(n));
            assert_eq!(
                basic_dirac(&s, &Weight::zero(n), 0).unwrap().status,
                DiracStatus::Equality
            );
        }
        let d3 = spec(Family::SoEven(3));
        assert_eq!(
            basic_dirac(&d3, &Weight::from_ints(&[-5, 0, 0]), 0)
                .unwrap()
                .status,
            DiracStatus::StrictHolds
        );
        assert_eq!(
            basic_dirac(&d3, &Weight::from_ints(&[1, 0, 0]), 0)
                .unwrap()
                .status,
            DiracStatus::Fails
        );
    }

    #[test]
    fn scalar_form_examples() {
        let d4 = spec(Family::SoEven(4));
        let f = dirac_scalar_form(&d4, &Weight::from_ints(&[-7, 2, 2, 1])).unwrap();
        assert_eq!((f.shape, f.p), (SoShape::General, Some(3)));
        assert_eq!(f.value, int(-5));
        assert_eq!(f.bound, int(-3));
        assert!(f.strict);
        assert_eq!(
            basic_dirac(&d4, &Weight::from_ints(&[-7, 2, 2, 1]), 0)
                .unwrap()
                .status,
            DiracStatus::StrictHolds
        );

        let f = dirac_scalar_form(&d4, &Weight::from_halves(&[-5, 1, 1, -1])).unwrap();
        assert_eq!(f.shape, SoShape::Spinor);
        assert_eq!(f.bound, half(-5));
        assert_eq!(f.status(), DiracStatus::Equality);

        let f = dirac_scalar_form(&d4, &Weight::from_ints(&[3, 0, 0, 0])).unwrap();
        assert_eq!(f.shape, SoShape::Scalar);
        assert_eq!(f.bound, int(0));
        assert!(!f.holds);

        // The sign of the last coordinate does not break the run.
        let f = dirac_scalar_form(&d4, &Weight::from_ints(&[0, 2, 2, -2])).unwrap();
        assert_eq!(f.p, Some(4));
        let f = dirac_scalar_form(&d4, &Weight::from_ints(&[0, 2, 2, 2])).unwrap();
        assert_eq!(f.p, Some(4));
    }

    #[test]
    fn errors() {
        let e6 = spec(Family::E6);
        assert!(matches!(
            basic_dirac(&e6, &Weight::zero(8), 2),
            Err(Error::SchmidIndex { index: 2, count: 2 })
        ));
        assert!(matches!(
            dirac_scalar_form(&e6, &Weight::zero(8)),
            Err(Error::NotOrthogonal(_))
        ));
        let d3 = spec(Family::SoEven(3));
        assert!(matches!(
            basic_dirac(&d3, &Weight::from_ints(&[0, 1, 2]), 0),
            Err(Error::NotKDominant(_))
        ));
        assert!(matches!(
            basic_dirac(&d3, &Weight::from_halves(&[0, 2, 1]), 0),
            Err(Error::NotKIntegral(_))
        ));
    }

    /// A `k`-dominant integral so weight built from a sorted tail.
    fn so_weight(odd: bool) -> impl Strategy<Value = (usize, Weight)> {
        (if odd { 2usize..=6 } else { 3usize..=6 }).prop_flat_map(move |n| {
            (
                -40i64..10,
                proptest::collection::vec(0i64..5, n - 1),
                any::<bool>(),
                any::<bool>(),
            )
                .prop_map(move |(l1, mut tail, halves, flip)| {
                    tail.sort_unstable_by(|a, b| b.cmp(a));
                    let mut c = vec![l1];
                    c.extend(tail.iter().map(|t| 2 * t + i64::from(halves)));
                    if flip && !odd {
                        c[n - 1] = -c[n - 1];
                    }
                    (n, Weight::from_halves(&c))
                })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(400))]

        #[test]
        fn so_even_scalar_form_matches_norms((n, w) in so_weight(false)) {
            let s = spec(Family::SoEven(n));
            let f = dirac_scalar_form(&s, &w).unwrap();
            prop_assert_eq!(f.status(), basic_dirac(&s, &w, 0).unwrap().status, "{}", w);
        }

        #[test]
        fn so_odd_scalar_form_matches_norms((n, w) in so_weight(true)) {
            let s = spec(Family::SoOdd(n));
            let f = dirac_scalar_form(&s, &w).unwrap();
            prop_assert_eq!(f.status(), basic_dirac(&s, &w, 0).unwrap().status, "{}", w);
        }
    }
}
