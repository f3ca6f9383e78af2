//! Exact rational arithmetic for average weights, thickness values, and alpha.
//!
//! Every verdict-affecting comparison in this crate goes through [`Rational`],
//! which reduces by gcd on construction and compares by exact
//! cross-multiplication on arbitrary-precision integers. No floating point
//! appears anywhere on a decision path.

use num_bigint::BigInt;

use crate::error::{Error, Result};

/// Reduced fraction with arbitrary-precision numerator and denominator.
pub type Rational = num_rational::BigRational;

/// Shorthand for building a rational from machine integers.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Parses the CLI/report literal form: `p/q` or a bare integer `p`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = |msg: &str| Error::InvalidArgument(format!("cannot parse rational {text:?}: {msg}"));
    let (numer_text, denom_text) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt = numer_text
        .trim()
        .parse()
        .map_err(|_| bad("numerator is not an integer"))?;
    let denom: BigInt = denom_text
        .trim()
        .parse()
        .map_err(|_| bad("denominator is not an integer"))?;
    if denom == BigInt::from(0) {
        return Err(bad("denominator is zero"));
    }
    Ok(Rational::new(numer, denom))
}

/// Renders `p/q`, or a bare `p` when the reduced denominator is 1.
pub fn format_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
