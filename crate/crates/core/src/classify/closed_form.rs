//! Unitary conjugates of a fixed infinitesimal character for the so families,
//! read off from the closed-form theorems instead of an orbit walk.
//!
//! A `g`-dominant `Lambda^dom` with any `k`-dominant-regular integral
//! conjugate falls in one of two cases. In Case 1 one coordinate `x` is set
//! aside and the remaining `n - 1` form a congruent strict chain; the only
//! conjugates are `(x | rest)` and `(-x | rest')`. In Case 2 all coordinates
//! are congruent and strictly decreasing, and the `2n` conjugates are
//! `A_j = (Lambda_j | rest_j)` and `B_j = (-Lambda_j | rest_j')`. Here `rest'`
//! negates the last coordinate for `so(2, 2n-2)` and is `rest` for
//! `so(2, 2n-1)`.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};

use super::so::fold_last;
use super::InfCharReport;
use crate::error::{Error, Result};
use crate::root_system::{uniform_congruence, Family, RootSystemSpec};
use crate::weight::{half, int, is_integer, Rational, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosedFormCase {
    /// `x` is the coordinate set aside, `rest` the congruent strict chain.
    One {
        x: Rational,
        rest: Vec<Rational>,
    },
    Two,
}

fn strict_chain(v: &[Rational], odd: bool) -> bool {
    let (last, head) = v.split_last().expect("rank >= 2");
    let floor = if odd { *last } else { last.abs() };
    head.windows(2).all(|p| p[0] > p[1])
        && head.last().is_none_or(|h| *h > floor)
        && (!odd || *last > Rational::zero())
}

fn without(v: &[Rational], k: usize) -> Vec<Rational> {
    v.iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, c)| *c)
        .collect()
}

fn negate_last(mut v: Vec<Rational>) -> Vec<Rational> {
    let last = v.len() - 1;
    v[last] = -v[last];
    v
}

fn prepend(x: Rational, rest: &[Rational]) -> Weight {
    Weight::new(std::iter::once(x).chain(rest.iter().copied()).collect())
}

/// Length of the leading run `v_1, v_1 - 1, v_1 - 2, ...`.
fn run(v: &[Rational]) -> usize {
    1 + v.windows(2).take_while(|p| p[1] == p[0] - int(1)).count()
}

/// `(top, top - 1, ..., top - len + 1)`.
fn descending(top: Rational, len: usize) -> Vec<Rational> {
    (0..len).map(|k| top - int(k as i64)).collect()
}

fn family_kind(spec: &RootSystemSpec) -> Result<(usize, bool)> {
    match spec.family() {
        Family::SoEven(n) => Ok((n, false)),
        Family::SoOdd(n) => Ok((n, true)),
        f => Err(Error::NotOrthogonal(f)),
    }
}

/// Decides whether `dominant` is in Case 1 or Case 2.
pub fn closed_form_case(spec: &RootSystemSpec, dominant: &Weight) -> Result<ClosedFormCase> {
    let (_, odd) = family_kind(spec)?;
    if !spec.is_g_dominant(dominant)? {
        return Err(Error::NotGDominant(dominant.to_string()));
    }
    let c = dominant.coords();
    for k in 0..c.len() {
        let rest = without(c, k);
        if !(uniform_congruence(&rest) && strict_chain(&rest, odd)) {
            continue;
        }
        let x = c[k];
        let (last, head) = rest.split_last().expect("rank >= 2");
        let set_aside = !is_integer(&(x - rest[0]))
            || head.contains(&x)
            || x == *last
            || (!odd && x == -*last)
            || (odd && x.is_zero());
        if set_aside {
            return Ok(ClosedFormCase::One { x, rest });
        }
    }
    if uniform_congruence(c) && strict_chain(c, odd) {
        return Ok(ClosedFormCase::Two);
    }
    Err(Error::NotCovered(dominant.to_string()))
}

/// The unitary and nonunitary conjugates of `dominant` per the closed-form
/// theorems. `not_parameter` is left empty.
pub fn closed_form_conjugates_so(
    spec: &RootSystemSpec,
    dominant: &Weight,
) -> Result<InfCharReport> {
    let (n, odd) = family_kind(spec)?;
    let mut unitary = BTreeSet::new();
    let mut nonunitary = BTreeSet::new();
    let mut put = |w: Weight, u: bool| {
        if !unitary.contains(&w) && !nonunitary.contains(&w) {
            if u {
                unitary.insert(w);
            } else {
                nonunitary.insert(w);
            }
        }
    };
    match closed_form_case(spec, dominant)? {
        ClosedFormCase::One { x, rest } => {
            let rest_tilde = if odd {
                rest.clone()
            } else {
                negate_last(rest.clone())
            };
            let (u, u_tilde) = if odd {
                case_one_odd(n, x, &rest)
            } else {
                case_one_even(n, x, &rest, &rest_tilde)
            };
            put(prepend(x, &rest), u);
            put(prepend(-x, &rest_tilde), u_tilde);
        }
        ClosedFormCase::Two => {
            let c = dominant.coords();
            let unitary_idx = if odd {
                case_two_odd(n, c)
            } else {
                case_two_even(n, c)
            };
            for (j, &cj) in c.iter().enumerate() {
                let rest = without(c, j);
                let rest_b = if odd {
                    rest.clone()
                } else {
                    negate_last(rest.clone())
                };
                put(prepend(cj, &rest), unitary_idx.a.contains(&(j + 1)));
                put(prepend(-cj, &rest_b), unitary_idx.b.contains(&(j + 1)));
            }
        }
    }
    Ok(InfCharReport {
        dominant: dominant.clone(),
        unitary: unitary.into_iter().collect(),
        nonunitary: nonunitary.into_iter().collect(),
        not_parameter: Vec::new(),
    })
}

/// Verdicts for `(x | rest)` and `(-x | rest')`, `so(2, 2n-2)`.
fn case_one_even(
    n: usize,
    x: Rational,
    rest: &[Rational],
    rest_tilde: &[Rational],
) -> (bool, bool) {
    let scalar = descending(int(n as i64 - 2), n - 1);
    let spinor_plus = descending(half(2 * n as i64 - 3), n - 1);
    let spinor_minus = negate_last(spinor_plus.clone());
    let h = half(1);
    if rest == scalar.as_slice() {
        (x >= int(0) && x <= int(1), x >= int(0))
    } else if rest == spinor_plus.as_slice() {
        (x >= -h && x <= h, x >= -h)
    } else if rest == spinor_minus.as_slice() {
        (x == h, x >= h)
    } else {
        let p = run(&fold_last(rest)) + 1;
        let p_tilde = run(&fold_last(rest_tilde)) + 1;
        if x > Rational::zero() {
            (false, -x + rest[0] <= int(p_tilde as i64 - 1))
        } else if x < Rational::zero() {
            (x + rest[0] <= int(p as i64 - 1), false)
        } else {
            (false, false)
        }
    }
}

/// Verdicts for `(x | rest)` and `(-x | rest)`, `so(2, 2n-1)`.
fn case_one_odd(n: usize, x: Rational, rest: &[Rational]) -> (bool, bool) {
    let scalar = descending(half(2 * n as i64 - 3), n - 1);
    let spinor = descending(int(n as i64 - 1), n - 1);
    if rest == scalar.as_slice() {
        (x <= int(1), true)
    } else if rest == spinor.as_slice() {
        (x <= half(1), true)
    } else {
        let p_tilde = run(rest) + 1;
        (
            false,
            x > half(1) && -x + rest[0] <= int(p_tilde as i64 - 1),
        )
    }
}

/// One-based indices `j` of the unitary `A_j` and `B_j`.
struct UnitaryIndices {
    a: Vec<usize>,
    b: Vec<usize>,
}

fn case_two_even(n: usize, c: &[Rational]) -> UnitaryIndices {
    let tail = &c[1..];
    let top = c[0];
    let last = c[n - 1];
    let scalar = descending(int(n as i64 - 2), n - 1);
    let spinor_head = descending(half(2 * n as i64 - 3), n - 2);
    // When the whole chain is a staircase, both A_n and B_n may be unitary;
    // which one depends on the sign of the last coordinate, and both are
    // when it is 0. The two lists for `last` and `-last` are swapped by the
    // sign change of the last coordinate.
    let staircase = || UnitaryIndices {
        a: if last <= Rational::zero() {
            vec![n]
        } else {
            vec![]
        },
        b: (1..n)
            .chain((last >= Rational::zero()).then_some(n))
            .collect(),
    };
    if tail == scalar.as_slice() {
        return if top == int(n as i64 - 1) {
            let mut idx = staircase();
            idx.a.insert(0, 1);
            idx
        } else {
            UnitaryIndices {
                a: vec![],
                b: vec![1],
            }
        };
    }
    if tail[..n - 2] == spinor_head[..] && tail[n - 2].abs() == half(1) {
        return if top >= half(2 * n as i64 + 1) {
            UnitaryIndices {
                a: vec![],
                b: vec![1],
            }
        } else {
            staircase()
        };
    }
    // Run a, a-1, ..., measured with |Lambda_n| in the last place.
    let q = run(&fold_last(c));
    if q == n {
        staircase()
    } else {
        UnitaryIndices {
            a: vec![],
            b: (1..=q).collect(),
        }
    }
}

fn case_two_odd(n: usize, c: &[Rational]) -> UnitaryIndices {
    let tail = &c[1..];
    let top = c[0];
    let scalar = descending(half(2 * n as i64 - 3), n - 1);
    let spinor = descending(int(n as i64 - 1), n - 1);
    if tail == scalar.as_slice() {
        return if top == half(2 * n as i64 - 1) {
            UnitaryIndices {
                a: vec![1],
                b: (1..=n).collect(),
            }
        } else {
            UnitaryIndices {
                a: vec![],
                b: vec![1],
            }
        };
    }
    if tail == spinor.as_slice() {
        return if top == int(n as i64) {
            UnitaryIndices {
                a: vec![],
                b: (1..=n).collect(),
            }
        } else {
            UnitaryIndices {
                a: vec![],
                b: vec![1],
            }
        };
    }
    UnitaryIndices {
        a: vec![],
        b: (1..=run(c)).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(f: Family) -> RootSystemSpec {
        RootSystemSpec::build(f).unwrap()
    }

    #[test]
    fn so_even_rho() {
        for n in 3..=6 {
            let s = spec(Family::SoEven(n));
            let r = closed_form_conjugates_so(&s, s.rho()).unwrap();
            assert_eq!(r.unitary.len() + r.nonunitary.len(), 2 * n);
            assert!(r.unitary.contains(s.rho()));
            for i in 1..=n as i64 {
                let removed = n as i64 - i;
                let mut c = vec![-(n as i64) + i];
                c.extend((0..n as i64).rev().filter(|&k| k != removed));
                assert!(r.unitary.contains(&Weight::from_ints(&c)), "{c:?}");
            }
        }
    }

    #[test]
    fn so_odd_spinor_top() {
        for n in 2..=5usize {
            let s = spec(Family::SoOdd(n));
            let dom = Weight::from_ints(&(1..=n as i64).rev().collect::<Vec<_>>());
            let r = closed_form_conjugates_so(&s, &dom).unwrap();
            assert_eq!(r.unitary.len(), n);
            for i in 0..n as i64 {
                let mut c = vec![-(n as i64) + i];
                c.extend((1..=n as i64).rev().filter(|&k| k != n as i64 - i));
                assert!(r.unitary.contains(&Weight::from_ints(&c)));
            }
        }
    }

    #[test]
    fn so_even_5210() {
        let s = spec(Family::SoEven(4));
        let dom = Weight::from_ints(&[5, 2, 1, 0]);
        assert_eq!(closed_form_case(&s, &dom).unwrap(), ClosedFormCase::Two);
        let r = closed_form_conjugates_so(&s, &dom).unwrap();
        assert_eq!(r.unitary, vec![Weight::from_ints(&[-5, 2, 1, 0])]);
        assert!(r.nonunitary.contains(&dom));
    }

    #[test]
    fn case_one_detection() {
        let s = spec(Family::SoEven(4));
        let dom = Weight::new(vec![half(5), int(2), int(1), int(0)]);
        assert_eq!(
            closed_form_case(&s, &dom).unwrap(),
            ClosedFormCase::One {
                x: half(5),
                rest: vec![int(2), int(1), int(0)]
            }
        );
        let dom = Weight::from_ints(&[3, 2, 2, 0]);
        assert!(matches!(
            closed_form_case(&s, &dom).unwrap(),
            ClosedFormCase::One { .. }
        ));
        let dom = Weight::from_ints(&[3, 3, 1, 1]);
        assert!(matches!(
            closed_form_case(&s, &dom),
            Err(Error::NotCovered(_))
        ));
        let e6 = spec(Family::E6);
        assert!(matches!(
            closed_form_case(&e6, e6.rho()),
            Err(Error::NotOrthogonal(Family::E6))
        ));
    }
}
