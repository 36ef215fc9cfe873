//! Text grammar for exact rationals.
//!
//! Accepted forms are integers (`-3`), fractions (`p/q`, `q != 0`) and finite
//! decimals (`0.25`). Decimals are converted digit by digit, never through a
//! binary float. Rendering is `p` for integers and `p/q` otherwise, which is
//! exactly what `Display` on [`Rational`] produces.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}")]
    Invalid(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let s = text.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let invalid = || ParseRationalError::Invalid(s.to_string());

    if let Some((num, den)) = s.split_once('/') {
        let numer = parse_integer(num.trim()).ok_or_else(invalid)?;
        let den = den.trim();
        if !den.bytes().all(|b| b.is_ascii_digit()) {
            return Err(invalid());
        }
        let denom = parse_integer(den).ok_or_else(invalid)?;
        if denom.is_zero() {
            return Err(ParseRationalError::ZeroDenominator(s.to_string()));
        }
        return Ok(Rational::new(numer, denom));
    }

    if let Some((int_part, frac_part)) = s.split_once('.') {
        let (negative, int_digits) = split_sign(int_part);
        let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
        if !digits_ok(int_digits)
            || !digits_ok(frac_part)
            || (int_digits.is_empty() && frac_part.is_empty())
        {
            return Err(invalid());
        }
        let mut all_digits = String::with_capacity(int_digits.len() + frac_part.len());
        all_digits.push_str(int_digits);
        all_digits.push_str(frac_part);
        let mut numer: BigInt = all_digits.parse().map_err(|_| invalid())?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10u8), frac_part.len());
        return Ok(Rational::new(numer, denom));
    }

    let numer = parse_integer(s).ok_or_else(invalid)?;
    Ok(Rational::new(numer, BigInt::one()))
}

/// Canonical text form: `p` when the denominator is one, else `p/q`.
pub fn render_rational(r: &Rational) -> String {
    r.to_string()
}

fn split_sign(s: &str) -> (bool, &str) {
    match s.as_bytes().first() {
        Some(b'-') => (true, &s[1..]),
        Some(b'+') => (false, &s[1..]),
        _ => (false, s),
    }
}

fn parse_integer(s: &str) -> Option<BigInt> {
    let (negative, digits) = split_sign(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let magnitude: BigInt = digits.parse().ok()?;
    Some(if negative { -magnitude } else { magnitude })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn parses_the_three_forms() {
        assert_eq!(parse_rational("2/7").unwrap(), q(2, 7));
        assert_eq!(parse_rational("-0.5").unwrap(), q(-1, 2));
        assert_eq!(parse_rational("6/4").unwrap(), q(3, 2));
        assert_eq!(parse_rational("-3").unwrap(), q(-3, 1));
        assert_eq!(parse_rational("0.25").unwrap(), q(1, 4));
        assert_eq!(parse_rational(" +12 ").unwrap(), q(12, 1));
        assert_eq!(parse_rational(".5").unwrap(), q(1, 2));
        assert_eq!(parse_rational("-4/6").unwrap(), q(-2, 3));
    }

    #[test]
    fn canonical_form_after_parse() {
        let r = parse_rational("-10/-1");
        assert!(r.is_err());
        let r = parse_rational("10/4").unwrap();
        assert_eq!(r.numer(), &BigInt::from(5));
        assert_eq!(r.denom(), &BigInt::from(2));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(parse_rational(""), Err(ParseRationalError::Empty));
        assert!(matches!(
            parse_rational("abc"),
            Err(ParseRationalError::Invalid(_))
        ));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator(_))
        ));
        assert!(matches!(
            parse_rational("1.2.3"),
            Err(ParseRationalError::Invalid(_))
        ));
        assert!(matches!(
            parse_rational("."),
            Err(ParseRationalError::Invalid(_))
        ));
        assert!(matches!(
            parse_rational("1e5"),
            Err(ParseRationalError::Invalid(_))
        ));
        assert!(matches!(
            parse_rational("--1"),
            Err(ParseRationalError::Invalid(_))
        ));
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(q(-5, 13).abs(), q(5, 13));
        assert_eq!(q(1, 3) + q(1, 6), q(1, 2));
        assert!(q(2, 7) < q(1, 3));
    }

    #[test]
    fn renders_integers_without_denominator() {
        assert_eq!(render_rational(&q(4, 2)), "2");
        assert_eq!(render_rational(&q(-2, 7)), "-2/7");
        assert_eq!(render_rational(&q(0, 5)), "0");
    }
}
