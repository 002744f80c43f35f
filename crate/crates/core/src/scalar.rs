//! Exact scalar fields.
//!
//! Everything in this crate is generic over [`Field`], which is only
//! implemented for exact rationals. There is no floating-point instance: every
//! identity checked here is an exact algebraic equality.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

use crate::error::{Error, Result};

pub trait Field:
    Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(n: i64) -> Self;

    fn checked_inv(&self) -> Result<Self> {
        if self.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(Self::one() / self.clone())
        }
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(self.clone() / rhs.clone())
        }
    }

    fn from_frac(numer: i64, denom: i64) -> Result<Self> {
        Self::from_int(numer).checked_div(&Self::from_int(denom))
    }
}

impl<I> Field for Ratio<I>
where
    I: Clone + Integer + Signed + Debug + Display + Send + Sync + 'static,
    Ratio<I>: FromPrimitive,
{
    fn from_int(n: i64) -> Self {
        Ratio::from_i64(n).expect("integer does not fit the rational's backing type")
    }
}

/// Parses the repo-wide rational text form: `"3"`, `"-2"`, or `"p/q"` with `q > 0`.
/// Non-canonical fractions such as `"2/4"` are accepted and reduced.
pub fn parse_rational<T: Field>(text: &str) -> Result<T> {
    let bad = || Error::Parse(format!("invalid rational {text:?}"));
    let (numer, denom) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let digits = numer.strip_prefix('-').unwrap_or(numer);
    if digits.is_empty() || !digits.bytes().all(|c| c.is_ascii_digit()) {
        return Err(bad());
    }
    if let Some(d) = denom {
        if d.is_empty() || !d.bytes().all(|c| c.is_ascii_digit()) {
            return Err(bad());
        }
        if d.bytes().all(|c| c == b'0') {
            return Err(Error::Parse(format!("zero denominator in {text:?}")));
        }
    }
    let numer = T::from_str_radix(&format!("{numer}/1"), 10).map_err(|_| bad())?;
    let denom = T::from_str_radix(&format!("{}/1", denom.unwrap_or("1")), 10).map_err(|_| bad())?;
    numer.checked_div(&denom)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    fn q(text: &str) -> Rational {
        parse_rational(text).unwrap()
    }

    #[test]
    fn fraction_arithmetic_is_exact() {
        assert_eq!(q("1/2") + q("1/3"), q("5/6"));
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(*q("2/4").denom(), 2.into());
    }

    #[test]
    fn inverse_keeps_denominator_positive() {
        let inv = q("-3/7").checked_inv().unwrap();
        assert_eq!(inv, q("-7/3"));
        assert_eq!(inv.to_string(), "-7/3");
        assert!(inv.denom() > &0.into());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(q("0").checked_inv(), Err(Error::DivisionByZero));
        assert_eq!(q("5").checked_div(&q("0")), Err(Error::DivisionByZero));
    }

    #[test]
    fn parser_grammar() {
        assert_eq!(q("-2"), Rational::from_int(-2));
        for bad in ["", "-", "1/0", "1/00", "1/-2", "+3", "1.5", "a/b", "1/", "/2", " 1"] {
            assert!(parse_rational::<Rational>(bad).is_err(), "{bad:?} accepted");
        }
        assert_eq!(q("-10/4").to_string(), "-5/2");
        assert_eq!(q("8/4").to_string(), "2");
    }

    #[test]
    fn small_ratio_instance() {
        let x: Ratio<i64> = parse_rational("3/9").unwrap();
        assert_eq!(x, Ratio::new(1, 3));
    }
}
