//! Exact rational scalars.
//!
//! Every decisive computation in this crate runs over arbitrary-precision
//! rationals in canonical form: positive denominator, numerator and
//! denominator coprime. Floating point appears only in the demo module.
//!
//! The textual form is `p/q` with the sign on the numerator, or just `p`
//! when the denominator is one; that is exactly what `Display` produces.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary-precision rational, kept in canonical form by construction.
pub type Rational = BigRational;

/// Rational from a numerator/denominator pair.
///
/// Panics when `denom` is zero; use [`parse_rational`] for untrusted input.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p/q` or `p`, rejecting zero denominators.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational {s:?}"));
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let numer: BigInt = numer.trim().parse().map_err(|_| bad())?;
    let denom: BigInt = match denom {
        Some(d) => d.trim().parse().map_err(|_| bad())?,
        None => BigInt::from(1),
    };
    if denom.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(numer, denom))
}

/// Parses a whole coordinate vector of rational strings.
pub fn parse_vector(strings: &[String]) -> Result<Vec<Rational>> {
    strings.iter().map(|s| parse_rational(s)).collect()
}

/// Renders a coordinate vector as `(a, b, ...)`.
pub fn format_vector(coords: &[Rational]) -> String {
    let inner: Vec<String> = coords.iter().map(|c| c.to_string()).collect();
    format!("({})", inner.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(3, -6), rat(-1, 2));
        assert_eq!(rat(-3, -6), rat(1, 2));
        assert_eq!(rat(0, 5), rat_int(0));
    }

    #[test]
    fn display_is_p_over_q_with_sign_on_numerator() {
        assert_eq!(rat(1, 2).to_string(), "1/2");
        assert_eq!(rat(-1, 2).to_string(), "-1/2");
        assert_eq!(rat(3, -6).to_string(), "-1/2");
        assert_eq!(rat_int(7).to_string(), "7");
        assert_eq!(rat_int(-7).to_string(), "-7");
        assert_eq!(rat(8, 4).to_string(), "2");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "5", "-5", "1/2", "-3/7", "22/7"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(r.to_string(), s);
        }
        // non-canonical input parses to canonical form
        assert_eq!(parse_rational("2/4").unwrap().to_string(), "1/2");
        assert_eq!(parse_rational("3/-6").unwrap().to_string(), "-1/2");
        assert_eq!(parse_rational(" 4 / 6 ").unwrap().to_string(), "2/3");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("1/2/3").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn exact_arithmetic() {
        let third = rat(1, 3);
        let sum = &third + &third + &third;
        assert_eq!(sum, rat_int(1));
        assert_eq!(&rat(1, 2) + &rat(1, 3), rat(5, 6));
    }
}
