//! Text form of weights: comma separated exact rationals.
//!
//! Accepts integers, `p/q` and finite decimals (`1.5`, `-.5`); always prints
//! `p/q` in lowest terms.

use num_traits::One;

use crate::error::{Error, Result};
use crate::root_system::{Family, RootSystemSpec};
use crate::weight::{Rational, Weight};

pub fn parse_rational(s: &str) -> Result<Rational> {
    let err = || Error::Parse(s.to_string());
    let t = s.trim();
    if t.is_empty() {
        return Err(err());
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: i64 = p.trim().parse().map_err(|_| err())?;
        let q: i64 = q.trim().parse().map_err(|_| err())?;
        if q == 0 {
            return Err(err());
        }
        return Ok(Rational::new(p, q));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let (neg, whole) = match whole.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, whole.strip_prefix('+').unwrap_or(whole)),
        };
        let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
        if !digits_ok(whole)
            || !digits_ok(frac)
            || (whole.is_empty() && frac.is_empty())
            || frac.len() > 18
        {
            return Err(err());
        }
        let w: i64 = if whole.is_empty() {
            0
        } else {
            whole.parse().map_err(|_| err())?
        };
        let f: i64 = if frac.is_empty() {
            0
        } else {
            frac.parse().map_err(|_| err())?
        };
        let den = 10i64.checked_pow(frac.len() as u32).ok_or_else(err)?;
        let num = w
            .checked_mul(den)
            .and_then(|x| x.checked_add(f))
            .ok_or_else(err)?;
        let q = Rational::new(num, den);
        return Ok(if neg { -q } else { q });
    }
    t.parse::<i64>()
        .map(Rational::from_integer)
        .map_err(|_| err())
}

pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses a comma separated list; surrounding parentheses or brackets are ignored.
pub fn parse_coords(s: &str) -> Result<Vec<Rational>> {
    let t = s
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    if t.trim().is_empty() {
        return Ok(Vec::new());
    }
    t.split(',').map(parse_rational).collect()
}

pub fn format_coords(w: &Weight) -> Vec<String> {
    w.coords().iter().map(format_rational).collect()
}

/// `(a, b, c)`, the layout used for printed tuples.
pub fn format_tuple(w: &Weight) -> String {
    format!("({})", format_coords(w).join(", "))
}

/// Fills in the constrained coordinates of the exceptional families:
/// six values `x1..x6` for `e6` become `(x1..x5, x6, x6, -x6)`, seven values
/// for `e7` become `(x1..x6, x7, -x7)`. Other inputs pass through unchanged
/// and are then checked against the family.
pub fn complete(family: Family, coords: Vec<Rational>) -> Result<Weight> {
    let mut c = coords;
    match (family, c.len()) {
        (Family::E6, 6) => {
            let x = c[5];
            c.extend([x, -x]);
        }
        (Family::E7, 7) => {
            let x = c[6];
            c.push(-x);
        }
        _ => {}
    }
    if c.len() != family.dim() {
        return Err(Error::Dimension {
            family,
            expected: family.dim(),
            got: c.len(),
        });
    }
    Ok(Weight::new(c))
}

/// Parses a weight for `family`, completing and validating it.
pub fn parse_weight(family: Family, s: &str) -> Result<Weight> {
    let w = complete(family, parse_coords(s)?)?;
    RootSystemSpec::build(family)?.check(&w)?;
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::{half, int};
    use proptest::prelude::*;

    #[test]
    fn parses_all_spellings() {
        assert_eq!(parse_rational("3/2").unwrap(), half(3));
        assert_eq!(parse_rational("1.5").unwrap(), half(3));
        assert_eq!(parse_rational("-.5").unwrap(), half(-1));
        assert_eq!(parse_rational(" -17/2 ").unwrap(), half(-17));
        assert_eq!(parse_rational("6/4").unwrap(), half(3));
        assert_eq!(parse_rational("-4").unwrap(), int(-4));
        for bad in ["", "x", "1/0", "1.2.3", ".", "--1", "1/2/3"] {
            assert!(matches!(parse_rational(bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn completes_exceptional_weights() {
        let w = parse_weight(Family::E6, "0,1,2,3,4,-4").unwrap();
        assert_eq!(w, Weight::from_ints(&[0, 1, 2, 3, 4, -4, -4, 4]));
        let w = parse_weight(Family::E7, "0,0,0,0,0,-4,2").unwrap();
        assert_eq!(w, Weight::from_ints(&[0, 0, 0, 0, 0, -4, 2, -2]));
        assert!(parse_weight(Family::E7, "0,0,0,0,0,-4,2,-2").is_ok());
        assert!(matches!(
            parse_weight(Family::E7, "0,0,0,0,0,-4,2,2"),
            Err(Error::Ambient { .. })
        ));
        assert!(matches!(
            parse_weight(Family::SoEven(3), "1,2"),
            Err(Error::Dimension { got: 2, .. })
        ));
        assert_eq!(
            format_tuple(&parse_weight(Family::SoOdd(2), "(1.5, -1/2)").unwrap()),
            "(3/2, -1/2)"
        );
    }

    proptest! {
        #[test]
        fn print_then_parse_is_identity(p in -10_000i64..10_000, q in 1i64..500) {
            let x = Rational::new(p, q);
            let s = format_rational(&x);
            prop_assert_eq!(parse_rational(&s).unwrap(), x);
            prop_assert_eq!(format_rational(&parse_rational(&s).unwrap()), s);
        }

        #[test]
        fn decimal_halves_match_fractions(p in -10_000i64..10_000) {
            let x = half(2 * p + 1);
            let dec = format!("{}{}.5", if p < 0 { "-" } else { "" }, if p < 0 { -p - 1 } else { p });
            prop_assert_eq!(parse_rational(&dec).unwrap(), x);
        }
    }
}
