//! Exact rational scalars.
//!
//! All quantities in this crate (spectral numbers, weights, thresholds) are
//! arbitrary-precision rationals kept in lowest terms with a positive
//! denominator. `num_rational::BigRational` already guarantees both, so we
//! use it directly and only add the handful of helpers the rest of the crate
//! needs.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub type Rat = num_rational::BigRational;

/// Rational from an integer numerator and denominator. Panics on zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Render as `p/q`, or just `p` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `p` or `p/q`. Accepts an optional leading minus on the numerator.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rat::new(n, d))
            }
        }
        None => {
            let n: BigInt = s.parse().ok()?;
            Some(Rat::from_integer(n))
        }
    }
}

/// Fractional part `r - floor(r)`, always in `[0, 1)`.
pub fn frac_part(r: &Rat) -> Rat {
    r - r.floor()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn format_and_parse_round_trip() {
        for (n, d) in [(5, 6), (7, 1), (-3, 4), (0, 1), (22, 7)] {
            let r = rat(n, d);
            assert_eq!(parse_rat(&format_rat(&r)).unwrap(), r);
        }
    }

    #[test]
    fn format_hides_unit_denominator() {
        assert_eq!(format_rat(&rat(7, 1)), "7");
        assert_eq!(format_rat(&rat(5, 6)), "5/6");
        assert_eq!(format_rat(&rat(-5, 6)), "-5/6");
    }

    #[test]
    fn frac_part_is_in_unit_interval() {
        assert_eq!(frac_part(&rat(7, 6)), rat(1, 6));
        assert_eq!(frac_part(&rat(-1, 6)), rat(5, 6));
        assert_eq!(frac_part(&rat(2, 1)), rat(0, 1));
    }

    #[test]
    fn parse_rejects_zero_denominator() {
        assert!(parse_rat("1/0").is_none());
    }
}
