//! Exact rational arithmetic helpers.
//!
//! All quasi-polynomial coefficients live in `Rational` (arbitrary-precision,
//! always reduced, positive denominator — the invariants `num_rational`
//! maintains by construction).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Zero};

use crate::error::Error;

/// Arbitrary-precision reduced rational number.
pub type Rational = BigRational;

/// Rational zero.
pub fn zero() -> Rational {
    Rational::zero()
}

/// Rational one.
pub fn one() -> Rational {
    Rational::one()
}

/// `n` as a rational.
pub fn from_i64(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num / den` as a reduced rational.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for k in 2..=n {
        acc *= BigInt::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Render as `num/den` with a mandatory denominator (so `1` prints as `1/1`).
pub fn format_ratio(x: &Rational) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parse a `num/den` string, rejecting non-reduced or non-normalized forms.
///
/// The document format requires reduced entries with a positive denominator;
/// anything else is treated as a corrupt document rather than silently
/// normalized.
pub fn parse_ratio_strict(text: &str) -> Result<Rational, Error> {
    let (num_text, den_text) = text
        .split_once('/')
        .ok_or_else(|| Error::Document(format!("rational `{text}` is missing `/`")))?;
    let num: BigInt = num_text
        .trim()
        .parse()
        .map_err(|_| Error::Document(format!("bad numerator in `{text}`")))?;
    let den: BigInt = den_text
        .trim()
        .parse()
        .map_err(|_| Error::Document(format!("bad denominator in `{text}`")))?;
    if den <= BigInt::zero() {
        return Err(Error::Document(format!(
            "denominator must be positive in `{text}`"
        )));
    }
    let value = Rational::new(num.clone(), den.clone());
    if value.numer() != &num || value.denom() != &den {
        return Err(Error::Document(format!("rational `{text}` is not reduced")));
    }
    Ok(value)
}

/// True if the rational is an exact integer.
pub fn is_integer(x: &Rational) -> bool {
    x.denom().is_one()
}

/// Mean of a slice of rationals.
pub fn mean(values: &[Rational]) -> Rational {
    let mut acc = Rational::zero();
    for v in values {
        acc += v;
    }
    acc / Rational::from_integer(BigInt::from(values.len() as u64))
}

/// Convert to `f64`; exact values in this crate comfortably fit.
pub fn to_f64(x: &Rational) -> f64 {
    num::ToPrimitive::to_f64(x).expect("rational convertible to f64")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_pascal_row() {
        let row: Vec<u64> = (0..=6).map(|k| binomial(6, k).try_into().unwrap()).collect();
        assert_eq!(row, vec![1, 6, 15, 20, 15, 6, 1]);
        assert!(binomial(4, 7).is_zero());
    }

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), BigInt::one());
        assert_eq!(factorial(5), BigInt::from(120));
    }

    #[test]
    fn strict_parse_rejects_unreduced() {
        assert!(parse_ratio_strict("2/4").is_err());
        assert!(parse_ratio_strict("1/-2").is_err());
        assert!(parse_ratio_strict("7").is_err());
        assert_eq!(parse_ratio_strict("-3/4").unwrap(), ratio(-3, 4));
    }

    #[test]
    fn format_always_carries_denominator() {
        assert_eq!(format_ratio(&one()), "1/1");
        assert_eq!(format_ratio(&ratio(-1, 12)), "-1/12");
    }

    #[test]
    fn f64_conversion_handles_large_values() {
        let big = Rational::from_integer(BigInt::from(10u64).pow(40));
        let approx = to_f64(&big);
        assert!((approx / 1e40 - 1.0).abs() < 1e-12);
    }
}
